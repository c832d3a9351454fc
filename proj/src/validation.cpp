#include "ertbp/validation.hpp"

#include <algorithm>
#include <cmath>

namespace ertbp {

State6 ertbp_rhs(const State6& s, double f, double mu, double e) {
    const double X = s[0], Y = s[1], Z = s[2];
    const double dx1 = X - mu;        // to the larger primary at (mu, 0, 0)
    const double dx2 = X + 1.0 - mu;  // to the smaller primary at (mu-1, 0, 0)
    const double r1sq = dx1 * dx1 + Y * Y + Z * Z;
    const double r2sq = dx2 * dx2 + Y * Y + Z * Z;
    if (r1sq < 1e-16 || r2sq < 1e-16)
        throw SingularityError("trajectory reached a primary (r < 1e-8)");
    const double ir13 = 1.0 / (r1sq * std::sqrt(r1sq));
    const double ir23 = 1.0 / (r2sq * std::sqrt(r2sq));
    const double eps = 1.0 / (1.0 + e * std::cos(f));
    const double gx = eps * (X - (1.0 - mu) * dx1 * ir13 - mu * dx2 * ir23);
    const double gy = eps * (Y - (1.0 - mu) * Y * ir13 - mu * Y * ir23);
    const double gz = eps * (Z - (1.0 - mu) * Z * ir13 - mu * Z * ir23);
    return State6{s[3], s[4], s[5],
                  2.0 * s[4] + gx,
                  -2.0 * s[3] + gy,
                  -Z + gz};
}

namespace {

// Dormand-Prince 5(4) tableau
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0, e3 = 500.0 / 1113.0 - 7571.0 / 16695.0,
                 e4 = 125.0 / 192.0 - 393.0 / 640.0, e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0,
                 e6 = 11.0 / 84.0 - 187.0 / 2100.0, e7 = -1.0 / 40.0;

State6 axpy(const State6& y, double h, const State6& k) {
    State6 r;
    for (int i = 0; i < 6; ++i) r[i] = y[i] + h * k[i];
    return r;
}

// One trial step; fills ynew and the scaled error estimate.
double dp54_step(const State6& y, double f, double h, double mu, double e,
                 double rel_tol, double abs_tol, State6& ynew) {
    State6 k1 = ertbp_rhs(y, f, mu, e);
    State6 s;
    for (int i = 0; i < 6; ++i) s[i] = y[i] + h * a21 * k1[i];
    State6 k2 = ertbp_rhs(s, f + h / 5.0, mu, e);
    for (int i = 0; i < 6; ++i) s[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    State6 k3 = ertbp_rhs(s, f + 3.0 * h / 10.0, mu, e);
    for (int i = 0; i < 6; ++i) s[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    State6 k4 = ertbp_rhs(s, f + 4.0 * h / 5.0, mu, e);
    for (int i = 0; i < 6; ++i)
        s[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    State6 k5 = ertbp_rhs(s, f + 8.0 * h / 9.0, mu, e);
    for (int i = 0; i < 6; ++i)
        s[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    State6 k6 = ertbp_rhs(s, f + h, mu, e);
    for (int i = 0; i < 6; ++i)
        ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    State6 k7 = ertbp_rhs(ynew, f + h, mu, e);

    double err = 0.0;
    for (int i = 0; i < 6; ++i) {
        double est = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * k7[i]);
        double scale = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        double q = est / scale;
        err += q * q;
    }
    return std::sqrt(err / 6.0);
}

State6 advance(State6 y, double f0, double f1, double mu, double e,
               const IntegratorConfig& cfg) {
    if (f1 == f0) return y;
    const double dir = (f1 > f0) ? 1.0 : -1.0;
    const double span = std::abs(f1 - f0);
    double h = dir * std::min(cfg.max_step, span);
    double f = f0;
    while (dir * (f1 - f) > 0.0) {
        if (std::abs(h) > std::abs(f1 - f)) h = f1 - f;
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(f)))
            throw StiffnessError("step size underflow in DP5(4) integration");
        State6 ynew;
        double err = dp54_step(y, f, h, mu, e, cfg.rel_tol, cfg.abs_tol, ynew);
        if (err <= 1.0) {
            f += h;
            y = ynew;
        }
        double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        factor = std::clamp(factor, 0.2, 5.0);
        h *= factor;
        if (std::abs(h) > cfg.max_step) h = dir * cfg.max_step;
    }
    return y;
}

}  // namespace

std::vector<State6> integrate(const State6& s0, const std::vector<double>& nodes, double mu,
                              double e, const IntegratorConfig& cfg) {
    if (nodes.size() < 2) throw DomainError("integrate requires at least two nodes");
    std::vector<State6> out;
    out.reserve(nodes.size());
    out.push_back(s0);
    State6 y = s0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        y = advance(y, nodes[i - 1], nodes[i], mu, e, cfg);
        out.push_back(y);
    }
    return out;
}

State6 local_to_global(const State6& s, const LibrationContext& ctx) {
    const double g = ctx.gamma;
    const double mu = ctx.mu;
    switch (ctx.point) {
        case CollinearPoint::L1: {
            const double a = -1.0 + g;
            return State6{-g * s[0] + mu + a, -g * s[1], g * s[2],
                          -g * s[3], -g * s[4], g * s[5]};
        }
        case CollinearPoint::L2: {
            const double a = -1.0 - g;
            return State6{-g * s[0] + mu + a, -g * s[1], g * s[2],
                          -g * s[3], -g * s[4], g * s[5]};
        }
        default:
            return State6{g * s[0] + mu + g, g * s[1], g * s[2],
                          g * s[3], g * s[4], g * s[5]};
    }
}

State6 global_to_local(const State6& s, const LibrationContext& ctx) {
    const double g = ctx.gamma;
    const double mu = ctx.mu;
    switch (ctx.point) {
        case CollinearPoint::L1: {
            const double a = -1.0 + g;
            return State6{-(s[0] - mu - a) / g, -s[1] / g, s[2] / g,
                          -s[3] / g, -s[4] / g, s[5] / g};
        }
        case CollinearPoint::L2: {
            const double a = -1.0 - g;
            return State6{-(s[0] - mu - a) / g, -s[1] / g, s[2] / g,
                          -s[3] / g, -s[4] / g, s[5] / g};
        }
        default:
            return State6{(s[0] - mu - g) / g, s[1] / g, s[2] / g,
                          s[3] / g, s[4] / g, s[5] / g};
    }
}

State6 to_state6(const StateVector& s) {
    return State6{s.x, s.y, s.z, s.xp, s.yp, s.zp};
}

double crtbp_energy(const State6& s, double mu) {
    const double dx1 = s[0] - mu;
    const double dx2 = s[0] + 1.0 - mu;
    const double r1 = std::sqrt(dx1 * dx1 + s[1] * s[1] + s[2] * s[2]);
    const double r2 = std::sqrt(dx2 * dx2 + s[1] * s[1] + s[2] * s[2]);
    const double v2 = s[3] * s[3] + s[4] * s[4] + s[5] * s[5];
    return 0.5 * v2 - 0.5 * (s[0] * s[0] + s[1] * s[1]) - (1.0 - mu) / r1 - mu / r2;
}

double residual_check(const SolutionSet& sol, const OrbitParams& op,
                      const std::vector<double>& f_grid) {
    EvalParams p = make_eval_params(sol, op);
    const LibrationContext& ctx = sol.ctx;
    const double c2 = ctx.c2();
    const int n_poly = ctx.n_poly_max() - 1;
    const int order = sol.order;
    const double eta = op.eta;
    const double dval = [&] {
        Complex d = sol.delta.eval(p);
        return d.real();
    }();

    auto real_of = [](Complex v) { return v.real(); };

    double worst = 0.0;
    for (double f : f_grid) {
        const double xv = real_of(ts_eval(sol.x, p, f));
        const double yv = real_of(ts_eval(sol.y, p, f));
        const double zv = real_of(ts_eval(sol.z, p, f));
        const double xp = real_of(ts_eval_df(sol.x, p, f));
        const double yp = real_of(ts_eval_df(sol.y, p, f));
        const double xpp = real_of(ts_eval_df2(sol.x, p, f));
        const double ypp = real_of(ts_eval_df2(sol.y, p, f));
        const double zpp = real_of(ts_eval_df2(sol.z, p, f));

        // e-factor sums truncated at the series order in e
        const double ec = -op.e * std::cos(f);
        double esum1 = 0.0, term = 1.0;
        for (int i = 1; i <= order; ++i) {
            term *= ec;
            esum1 += term;
        }
        const double esum0 = 1.0 + esum1;

        // Legendre-type recurrences at the numeric point
        const double rho2 = xv * xv + yv * yv + zv * zv;
        std::vector<double> T(n_poly + 1), R(n_poly + 1);
        T[0] = 1.0;
        T[1] = xv;
        R[0] = -1.0;
        R[1] = -3.0 * xv;
        for (int n = 2; n <= n_poly; ++n) {
            T[n] = (double(2 * n - 1) / n) * xv * T[n - 1] -
                   (double(n - 1) / n) * rho2 * T[n - 2];
            R[n] = (double(2 * n + 3) / (n + 2)) * xv * R[n - 1] -
                   (double(2 * n + 2) / (n + 2)) * T[n] -
                   (double(n + 1) / (n + 2)) * rho2 * R[n - 2];
        }
        double sum_t = 0.0, sum_r = 0.0;
        for (int n = 2; n <= n_poly; ++n) {
            sum_t += ctx.cn(n + 1) * double(n + 1) * T[n];
            sum_r += ctx.cn(n + 1) * R[n - 1];
        }

        double rx = xpp - 2.0 * yp - (1.0 + 2.0 * c2) * xv -
                    ((1.0 + 2.0 * c2) * xv * esum1 + esum0 * sum_t);
        double ry = ypp + 2.0 * xp + (c2 - 1.0) * yv -
                    ((1.0 - c2) * yv * esum1 + esum0 * yv * sum_r);
        double rz = zpp + c2 * zv - (-c2 * zv * esum1 + esum0 * zv * sum_r);
        switch (sol.kase) {
            case CouplingCase::XtoZ: rz -= eta * dval * xv; break;
            case CouplingCase::YtoZ: rz -= eta * dval * yv; break;
            case CouplingCase::ZtoY: ry -= eta * dval * zv; break;
        }
        worst = std::max({worst, std::abs(rx), std::abs(ry), std::abs(rz)});
    }
    return worst;
}

double series_vs_integration(const SolutionSet& sol, const OrbitParams& op, double f0,
                             double f1, int n_nodes, const IntegratorConfig& cfg) {
    if (n_nodes < 2) throw DomainError("series_vs_integration requires n_nodes >= 2");
    EvalParams p = make_eval_params(sol, op);
    std::vector<double> nodes(n_nodes);
    for (int i = 0; i < n_nodes; ++i)
        nodes[i] = f0 + (f1 - f0) * double(i) / double(n_nodes - 1);

    State6 start = local_to_global(to_state6(evaluate_state_at(sol, p, f0)), sol.ctx);
    std::vector<State6> traj = integrate(start, nodes, sol.ctx.mu, op.e, cfg);

    double worst = 0.0;
    for (int i = 0; i < n_nodes; ++i) {
        StateVector sv = evaluate_state_at(sol, p, nodes[i]);
        State6 il = global_to_local(traj[i], sol.ctx);
        double dx = sv.x - il[0], dy = sv.y - il[1], dz = sv.z - il[2];
        worst = std::max(worst, std::sqrt(dx * dx + dy * dy + dz * dz));
    }
    return worst;
}

State6 symmetry_image(const State6& s, SymmetryType type) {
    switch (type) {
        case SymmetryType::S1:
            return State6{s[0], s[1], -s[2], s[3], s[4], -s[5]};
        case SymmetryType::S2:
            return State6{s[0], -s[1], s[2], -s[3], s[4], -s[5]};
        default:  // S3
            return State6{s[0], -s[1], -s[2], -s[3], s[4], s[5]};
    }
}

double symmetry_check(const State6& s0, double f0, double f1, int n_nodes, double mu,
                      double e, SymmetryType type, const IntegratorConfig& cfg) {
    if (n_nodes < 2) throw DomainError("symmetry_check requires n_nodes >= 2");
    std::vector<double> nodes(n_nodes);
    for (int i = 0; i < n_nodes; ++i)
        nodes[i] = f0 + (f1 - f0) * double(i) / double(n_nodes - 1);
    std::vector<State6> base = integrate(s0, nodes, mu, e, cfg);

    double worst = 0.0;
    if (type == SymmetryType::S1) {
        std::vector<State6> img = integrate(symmetry_image(base[0], type), nodes, mu, e, cfg);
        for (int i = 0; i < n_nodes; ++i) {
            State6 expect = symmetry_image(base[i], type);
            for (int c = 0; c < 6; ++c)
                worst = std::max(worst, std::abs(img[i][c] - expect[c]));
        }
    } else {
        // time reversal: the image trajectory runs over g = -f
        std::vector<double> gnodes(n_nodes);
        for (int i = 0; i < n_nodes; ++i) gnodes[i] = -nodes[n_nodes - 1 - i];
        std::vector<State6> img =
            integrate(symmetry_image(base[n_nodes - 1], type), gnodes, mu, e, cfg);
        for (int i = 0; i < n_nodes; ++i) {
            State6 expect = symmetry_image(base[n_nodes - 1 - i], type);
            for (int c = 0; c < 6; ++c)
                worst = std::max(worst, std::abs(img[i][c] - expect[c]));
        }
    }
    return worst;
}

}  // namespace ertbp
