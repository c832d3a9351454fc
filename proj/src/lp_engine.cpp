#include "ertbp/lp_engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ertbp {

namespace {

const Complex kI(0.0, 1.0);

TrigSeries constant_series(Complex v, Parity par, SeriesTrunc tr) {
    TrigSeries s(par, tr);
    s.add_term(AmpKey{}, AngleKey{}, EtaPoly(v));
    return s;
}

TrigSeries retrunc(const TrigSeries& a, SeriesTrunc tr) {
    TrigSeries r(a.parity(), tr);
    for (const auto& [key, c] : a.terms()) r.add_term(key.amp, key.ang, c);
    return r;
}

FreqSeries freq_retrunc(const FreqSeries& a, SeriesTrunc tr, int keep_order) {
    FreqSeries r(tr);
    for (const auto& [key, c] : a.terms())
        if (key.order() <= keep_order) r.add_term(key, c);
    return r;
}

// Multiplication of a coefficient by the coupling coefficient: a degree shift
// in symbolic mode, a scalar multiply in numeric mode.
EtaPoly mul_eta_poly(const EtaPoly& p, const SolutionSet& sol) {
    if (sol.mode == EtaMode::Numeric) return p * Complex(sol.eta_value);
    return p.shifted_up(sol.trunc().eta_degree);
}

EtaPoly div_eta_poly(const EtaPoly& p, const SolutionSet& sol) {
    if (sol.mode == EtaMode::Symbolic) return p.divided_by_eta();
    if (sol.eta_value != 0.0) return p * Complex(1.0 / sol.eta_value);
    if (p.max_abs() > 1e-12) throw RingError("eta-division of nonzero term at eta = 0");
    return EtaPoly();
}

TrigSeries mul_eta_series(const TrigSeries& a, const SolutionSet& sol) {
    if (sol.mode == EtaMode::Numeric) return ts_scale(a, Complex(sol.eta_value));
    TrigSeries r(a.parity(), a.trunc());
    for (const auto& [key, c] : a.terms())
        r.add_term(key.amp, key.ang, c.shifted_up(a.trunc().eta_degree));
    return r;
}

struct FreqSet {
    FreqSeries w, v, l;
};

// x' = omega dx/dth1 + nu dx/dth2 + sqrt(-1) lambda dx/dth3 + dx/df
TrigSeries apply_derivative(const TrigSeries& a, const FreqSet& fs) {
    TrigSeries r = freq_mul(fs.w, partial_angle(a, 0));
    r = ts_add(r, freq_mul(fs.v, partial_angle(a, 1)));
    r = ts_add(r, ts_scale(freq_mul(fs.l, partial_angle(a, 2)), kI));
    r = ts_add(r, partial_angle(a, 3));
    return r;
}

std::string key_string(const TermKey& key) {
    std::ostringstream os;
    os << "amp(" << int(key.amp.i) << "," << int(key.amp.j) << "," << int(key.amp.k) << ","
       << int(key.amp.m) << ") angle(" << int(key.ang.s) << "," << int(key.ang.t) << ","
       << int(key.ang.u) << "," << int(key.ang.r) << ")";
    return os.str();
}

struct Lin2 {
    Complex m11, m12, m21, m22;
};

std::pair<EtaPoly, EtaPoly> solve2(const Lin2& M, const EtaPoly& r1, const EtaPoly& r2,
                                   const TermKey& key, const char* what) {
    Complex det = M.m11 * M.m22 - M.m12 * M.m21;
    if (std::abs(det) < 1e-9)
        throw NearResonanceError(std::string("vanishing determinant in ") + what + " at " +
                                 key_string(key));
    Complex inv = 1.0 / det;
    EtaPoly a = (r1 * M.m22 - r2 * M.m12) * inv;
    EtaPoly b = (r2 * M.m11 - r1 * M.m21) * inv;
    return {a, b};
}

}  // namespace

std::pair<TrigSeries, TrigSeries> legendre_terms(const TrigSeries& x, const TrigSeries& y,
                                                 const TrigSeries& z,
                                                 const std::vector<double>& c, int n_poly) {
    if (!(x.trunc() == y.trunc()) || !(x.trunc() == z.trunc()))
        throw ConfigError("mixed truncation configs in legendre_terms");
    if (n_poly + 1 >= static_cast<int>(c.size()))
        throw ConfigError("c-coefficient table too short for requested n_poly");
    SeriesTrunc tr = x.trunc();

    TrigSeries rho2 = ts_add(ts_add(ts_mul(x, x), ts_mul(y, y)), ts_mul(z, z));

    TrigSeries t_prev2 = constant_series(Complex(1.0), Parity::Cos, tr);  // T_0
    TrigSeries t_prev1 = x;                                               // T_1
    TrigSeries r_prev2 = constant_series(Complex(-1.0), Parity::Cos, tr); // R_0
    TrigSeries r_prev1 = ts_scale(x, Complex(-3.0));                      // R_1

    TrigSeries tt(Parity::Cos, tr);
    TrigSeries rr(Parity::Cos, tr);
    rr.add_scaled(r_prev1, Complex(c[3]));  // n = 2 term c_3 R_1

    for (int n = 2; n <= n_poly; ++n) {
        TrigSeries tn = ts_sub(ts_scale(ts_mul(x, t_prev1), Complex(double(2 * n - 1) / n)),
                               ts_scale(ts_mul(rho2, t_prev2), Complex(double(n - 1) / n)));
        tt.add_scaled(tn, Complex(c[n + 1] * double(n + 1)));
        if (n + 2 <= n_poly + 1) {
            // R_n feeds the sum term c_{n+2} R_n at the next n
            TrigSeries rn = ts_sub(
                ts_sub(ts_scale(ts_mul(x, r_prev1), Complex(double(2 * n + 3) / (n + 2))),
                       ts_scale(tn, Complex(double(2 * n + 2) / (n + 2)))),
                ts_scale(ts_mul(rho2, r_prev2), Complex(double(n + 1) / (n + 2))));
            rr.add_scaled(rn, Complex(c[n + 2]));
            r_prev2 = std::move(r_prev1);
            r_prev1 = std::move(rn);
        }
        t_prev2 = std::move(t_prev1);
        t_prev1 = std::move(tn);
    }
    return {tt, rr};
}

EquationDefect equation_defect(const SolutionSet& sol, int freq_trunc_order, int max_order) {
    const LibrationContext& ctx = sol.ctx;
    const double c2 = ctx.c2();
    SeriesTrunc tr{max_order, sol.trunc().eta_degree};

    TrigSeries x = retrunc(sol.x, tr);
    TrigSeries y = retrunc(sol.y, tr);
    TrigSeries z = retrunc(sol.z, tr);
    FreqSet fs{freq_retrunc(sol.omega, tr, freq_trunc_order),
               freq_retrunc(sol.nu, tr, freq_trunc_order),
               freq_retrunc(sol.lambda, tr, freq_trunc_order)};
    FreqSeries delta = freq_retrunc(sol.delta, tr, freq_trunc_order);

    TrigSeries dx = apply_derivative(x, fs);
    TrigSeries dy = apply_derivative(y, fs);
    TrigSeries dz = apply_derivative(z, fs);

    EquationDefect d;
    d.x = ts_add(ts_sub(apply_derivative(dx, fs), ts_scale(dy, Complex(2.0))),
                 ts_scale(x, Complex(-(1.0 + 2.0 * c2))));
    d.y = ts_add(ts_add(apply_derivative(dy, fs), ts_scale(dx, Complex(2.0))),
                 ts_scale(y, Complex(c2 - 1.0)));
    d.z = ts_add(apply_derivative(dz, fs), ts_scale(z, Complex(c2)));

    // sum_{i>=1} (-e)^i cos^i f, the e-power carried by the m-index
    TrigSeries e1(Parity::Cos, tr);
    for (int i = 1; i <= max_order; ++i) {
        TrigSeries ci = reduce_cos_power(i, tr);
        double sgn = (i % 2 != 0) ? -1.0 : 1.0;
        for (const auto& [key, c] : ci.terms())
            e1.add_term(AmpKey{0, 0, 0, std::uint8_t(i)}, key.ang, c * Complex(sgn));
    }
    TrigSeries e0 = ts_add(e1, constant_series(Complex(1.0), Parity::Cos, tr));

    int n_poly = std::min(ctx.n_poly_max() - 1, max_order);
    auto [tt, rr] = legendre_terms(x, y, z, ctx.c, n_poly);

    TrigSeries rhs_x =
        ts_add(ts_scale(ts_mul(x, e1), Complex(1.0 + 2.0 * c2)), ts_mul(e0, tt));
    TrigSeries rhs_y =
        ts_add(ts_scale(ts_mul(y, e1), Complex(1.0 - c2)), ts_mul(e0, ts_mul(y, rr)));
    TrigSeries rhs_z =
        ts_add(ts_scale(ts_mul(z, e1), Complex(-c2)), ts_mul(e0, ts_mul(z, rr)));

    switch (sol.kase) {
        case CouplingCase::XtoZ:
            rhs_z = ts_add(rhs_z, mul_eta_series(freq_mul(delta, x), sol));
            break;
        case CouplingCase::YtoZ:
            rhs_z = ts_add(rhs_z, mul_eta_series(freq_mul(delta, y), sol));
            break;
        case CouplingCase::ZtoY:
            rhs_y = ts_add(rhs_y, mul_eta_series(freq_mul(delta, z), sol));
            break;
    }

    d.x = ts_sub(d.x, rhs_x);
    d.y = ts_sub(d.y, rhs_y);
    d.z = ts_sub(d.z, rhs_z);
    return d;
}

RhsTriple assemble_rhs(const SolutionSet& sol, int n) {
    if (n < 2) throw ContractError("assemble_rhs requires n >= 2");
    if (sol.order < n - 1) throw ContractError("solution incomplete below order n");
    EquationDefect d = equation_defect(sol, n - 2, n);
    RhsTriple r;
    r.p = ts_scale(d.x.restricted_to_order(n), Complex(-1.0));
    r.q = ts_scale(d.y.restricted_to_order(n), Complex(-1.0));
    r.tau = ts_scale(d.z.restricted_to_order(n), Complex(-1.0));
    return r;
}

namespace {

struct RhsEntry {
    EtaPoly p, q, tau;
};

}  // namespace

void solve_order_n(const RhsTriple& rhs, SolutionSet& sol, int n) {
    if (!(rhs.p.trunc() == sol.trunc())) throw ConfigError("rhs truncation mismatch");
    if (sol.order < n - 1) throw ContractError("solution incomplete below order n");

    const LibrationContext& ctx = sol.ctx;
    const double c2 = ctx.c2();
    const double w0 = ctx.omega0, v0 = ctx.nu0, l0 = ctx.lambda0;
    const double k1 = ctx.kappa1, k2 = ctx.kappa2, k3 = sol.coupling.kappa3;
    const double d0 = sol.coupling.d0000;
    const bool numeric_eta0 = (sol.mode == EtaMode::Numeric && sol.eta_value == 0.0);

    std::map<TermKey, RhsEntry> gathered;
    for (const auto& [key, c] : rhs.p.terms()) gathered[key].p = c;
    for (const auto& [key, c] : rhs.q.terms()) gathered[key].q = c;
    for (const auto& [key, c] : rhs.tau.terms()) gathered[key].tau = c;

    const AngleKey kTheta1{1, 0, 0, 0}, kTheta2{0, 1, 0, 0}, kTheta3{0, 0, 1, 0};

    // Reduced system for (y, omega-correction) at the theta1 key.
    const Lin2 m_red1{Complex(-2.0 * w0), Complex(-2.0 * (k1 + w0)),
                      Complex(c2 - 1.0 - w0 * w0), Complex(-2.0 * (1.0 + k1 * w0))};
    // Reduced system for (y, lambda-correction) at the theta3 key.
    const Lin2 m_red3{-2.0 * kI * l0, Complex(2.0 * (l0 + k2)),
                      Complex(l0 * l0 + c2 - 1.0), 2.0 * kI * Complex(k2 * l0 - 1.0)};

    // Pass 1: theta1 and theta2 resonant keys. These fix the order n-1
    // frequency corrections and (at theta1 for the z-coupled cases, theta2
    // for ZtoY) the order n-1 Delta corrections consumed by pass 2.
    for (auto& [key, entry] : gathered) {
        if (key.ang == kTheta1) {
            if (key.amp.i < 1) throw Error("internal: theta1-resonant key without alpha1 power");
            AmpKey acorr{std::uint8_t(key.amp.i - 1), key.amp.j, key.amp.k, key.amp.m};
            if (sol.kase == CouplingCase::ZtoY) {
                EtaPoly zc = entry.tau * Complex(1.0 / (c2 - w0 * w0));
                sol.z.add_term(key.amp, key.ang, zc);
                EtaPoly qeff = entry.q + mul_eta_poly(zc * Complex(d0), sol);
                auto [yc, wcorr] = solve2(m_red1, entry.p, qeff, key, "theta1 reduced solve");
                sol.y.add_term(key.amp, key.ang, yc);
                sol.omega.add_term(acorr, wcorr);
            } else {
                auto [yc, wcorr] = solve2(m_red1, entry.p, entry.q, key, "theta1 reduced solve");
                sol.y.add_term(key.amp, key.ang, yc);
                sol.omega.add_term(acorr, wcorr);
                if (!numeric_eta0) {
                    EtaPoly dd;
                    if (sol.kase == CouplingCase::XtoZ) {
                        dd = wcorr * Complex(-2.0 * w0) - div_eta_poly(entry.tau, sol);
                    } else {  // YtoZ: the Delta coupling rides on y = kappa1 sin theta1
                        dd = (wcorr * Complex(-2.0 * w0) - div_eta_poly(entry.tau, sol) -
                              yc * Complex(d0)) *
                             Complex(1.0 / k1);
                    }
                    sol.delta.add_term(acorr, dd);
                } else if (entry.tau.max_abs() > 1e-12) {
                    throw Error("internal: nonzero theta1 z-forcing at eta = 0");
                }
            }
        } else if (key.ang == kTheta2) {
            if (key.amp.j < 1) throw Error("internal: theta2-resonant key without alpha2 power");
            AmpKey acorr{key.amp.i, std::uint8_t(key.amp.j - 1), key.amp.k, key.amp.m};
            if (sol.kase == CouplingCase::ZtoY) {
                EtaPoly vcorr = entry.tau * Complex(-1.0 / (2.0 * v0));
                sol.nu.add_term(acorr, vcorr);
                // z and y resonant coefficients normalized to zero; the x-row
                // fixes x, the y-row fixes the Delta correction.
                EtaPoly xc = (entry.p + mul_eta_poly(vcorr, sol) * Complex(2.0 * (v0 + k3))) *
                             Complex(1.0 / (-(v0 * v0) - 1.0 - 2.0 * c2));
                sol.x.add_term(key.amp, key.ang, xc);
                if (!numeric_eta0) {
                    EtaPoly dd = div_eta_poly(xc * Complex(-2.0 * v0) - entry.q, sol) -
                                 vcorr * Complex(2.0 * (k3 * v0 + 1.0));
                    sol.delta.add_term(acorr, dd);
                } else if (entry.q.max_abs() > 1e-12 || entry.p.max_abs() > 1e-12) {
                    throw Error("internal: nonzero theta2 xy-forcing at eta = 0 (z2y)");
                }
            } else {
                const Lin2 m{Complex(-(v0 * v0) - 1.0 - 2.0 * c2), Complex(-2.0 * v0),
                             Complex(-2.0 * v0), Complex(-(v0 * v0) + c2 - 1.0)};
                auto [xc, yc] = solve2(m, entry.p, entry.q, key, "theta2 xy solve");
                sol.x.add_term(key.amp, key.ang, xc);
                sol.y.add_term(key.amp, key.ang, yc);
                const EtaPoly& slot = (sol.kase == CouplingCase::XtoZ) ? xc : yc;
                EtaPoly vcorr = (entry.tau + mul_eta_poly(slot * Complex(d0), sol)) *
                                Complex(-1.0 / (2.0 * v0));
                sol.nu.add_term(acorr, vcorr);
            }
        }
    }

    // Pass 2: theta3 resonant key (consumes pass-1 Delta corrections), then
    // the general keys.
    for (auto& [key, entry] : gathered) {
        if (key.ang == kTheta1 || key.ang == kTheta2) continue;
        if (key.ang == kTheta3) {
            if (key.amp.k < 1) throw Error("internal: theta3-resonant key without alpha3 power");
            AmpKey acorr{key.amp.i, key.amp.j, std::uint8_t(key.amp.k - 1), key.amp.m};
            if (sol.kase == CouplingCase::ZtoY) {
                EtaPoly zc = entry.tau * Complex(1.0 / (c2 + l0 * l0));
                sol.z.add_term(key.amp, key.ang, zc);
                EtaPoly qeff = entry.q + mul_eta_poly(zc * Complex(d0), sol);
                auto [yc, lcorr] = solve2(m_red3, entry.p, qeff, key, "theta3 reduced solve");
                sol.y.add_term(key.amp, key.ang, yc);
                sol.lambda.add_term(acorr, lcorr);
            } else {
                auto [yc, lcorr] = solve2(m_red3, entry.p, entry.q, key, "theta3 reduced solve");
                sol.y.add_term(key.amp, key.ang, yc);
                sol.lambda.add_term(acorr, lcorr);
                EtaPoly dprev = sol.delta.coeff(acorr);
                EtaPoly zc;
                if (sol.kase == CouplingCase::XtoZ) {
                    zc = (entry.tau + mul_eta_poly(dprev, sol) -
                          mul_eta_poly(lcorr, sol) * Complex(2.0 * k3 * l0)) *
                         Complex(1.0 / (c2 + l0 * l0));
                } else {  // YtoZ
                    zc = (entry.tau + mul_eta_poly(yc * Complex(d0), sol) +
                          mul_eta_poly(dprev, sol) * (kI * k2) -
                          mul_eta_poly(lcorr, sol) * (2.0 * kI * Complex(k3 * l0))) *
                         Complex(1.0 / (c2 + l0 * l0));
                }
                sol.z.add_term(key.amp, key.ang, zc);
            }
        } else {
            Complex wt = Complex(double(key.ang.s) * w0 + double(key.ang.t) * v0 +
                                 double(key.ang.r)) +
                         kI * (double(key.ang.u) * l0);
            const Lin2 m{-wt * wt - (1.0 + 2.0 * c2), -2.0 * wt, -2.0 * wt,
                         -wt * wt + (c2 - 1.0)};
            Complex dz = Complex(c2) - wt * wt;
            if (std::abs(dz) < 1e-9)
                throw NearResonanceError("vanishing z-equation factor at " + key_string(key));
            if (sol.kase == CouplingCase::ZtoY) {
                EtaPoly zc = entry.tau * (1.0 / dz);
                sol.z.add_term(key.amp, key.ang, zc);
                EtaPoly qeff = entry.q + mul_eta_poly(zc * Complex(d0), sol);
                auto [xc, yc] = solve2(m, entry.p, qeff, key, "general xy solve");
                sol.x.add_term(key.amp, key.ang, xc);
                sol.y.add_term(key.amp, key.ang, yc);
            } else {
                auto [xc, yc] = solve2(m, entry.p, entry.q, key, "general xy solve");
                sol.x.add_term(key.amp, key.ang, xc);
                sol.y.add_term(key.amp, key.ang, yc);
                const EtaPoly& slot = (sol.kase == CouplingCase::XtoZ) ? xc : yc;
                EtaPoly zc = (entry.tau + mul_eta_poly(slot * Complex(d0), sol)) * (1.0 / dz);
                sol.z.add_term(key.amp, key.ang, zc);
            }
        }
    }

    sol.order = n;
}

SolutionSet build_solution(const LibrationContext& ctx, CouplingCase kase,
                           const BuildOptions& opt) {
    if (opt.order < 1) throw DomainError("order must be >= 1");
    int deg = 0;
    if (opt.mode == EtaMode::Symbolic)
        deg = (opt.eta_degree >= 0) ? opt.eta_degree : std::max(2, 2 * (opt.order - 1));

    SolutionSet sol;
    sol.kase = kase;
    sol.mode = opt.mode;
    sol.eta_value = (opt.mode == EtaMode::Numeric) ? opt.eta_value : 0.0;
    sol.ctx = ctx;

    // the recurrent expansion needs c_{n+1} up to n = order
    int needed = std::max(opt.n_poly_max, opt.order + 1);
    if (sol.ctx.n_poly_max() < needed)
        sol.ctx.c = c_coeffs(ctx.mu, ctx.point, ctx.gamma, needed);

    sol.coupling = coupling_constants(sol.ctx, kase);

    SeriesTrunc tr{opt.order, deg};
    Parity zpar = (kase == CouplingCase::XtoZ) ? Parity::Cos : Parity::Sin;
    sol.x = TrigSeries(Parity::Cos, tr);
    sol.y = TrigSeries(Parity::Sin, tr);
    sol.z = TrigSeries(zpar, tr);
    sol.omega = FreqSeries(tr);
    sol.nu = FreqSeries(tr);
    sol.lambda = FreqSeries(tr);
    sol.delta = FreqSeries(tr);

    EtaPoly one(Complex(1.0));
    EtaPoly eta = (opt.mode == EtaMode::Symbolic) ? EtaPoly::eta()
                                                  : EtaPoly(Complex(opt.eta_value));
    const double k1 = sol.ctx.kappa1, k2 = sol.ctx.kappa2, k3 = sol.coupling.kappa3;
    const AmpKey a1{1, 0, 0, 0}, a2{0, 1, 0, 0}, a3{0, 0, 1, 0};
    const AngleKey g1{1, 0, 0, 0}, g2{0, 1, 0, 0}, g3{0, 0, 1, 0};

    switch (kase) {
        case CouplingCase::XtoZ:
            sol.x.set_term(a1, g1, one);
            sol.x.set_term(a3, g3, one);
            sol.y.set_term(a1, g1, one * Complex(k1));
            sol.y.set_term(a3, g3, one * (kI * k2));
            sol.z.set_term(a2, g2, one);
            sol.z.set_term(a1, g1, eta);
            sol.z.set_term(a3, g3, eta * Complex(k3));
            break;
        case CouplingCase::YtoZ:
            sol.x.set_term(a1, g1, one);
            sol.x.set_term(a3, g3, one);
            sol.y.set_term(a1, g1, one * Complex(k1));
            sol.y.set_term(a3, g3, one * (kI * k2));
            sol.z.set_term(a2, g2, one);
            sol.z.set_term(a1, g1, eta);
            sol.z.set_term(a3, g3, eta * (kI * k3));
            break;
        case CouplingCase::ZtoY:
            sol.x.set_term(a1, g1, one);
            sol.x.set_term(a2, g2, eta);
            sol.x.set_term(a3, g3, one);
            sol.y.set_term(a1, g1, one * Complex(k1));
            sol.y.set_term(a2, g2, eta * Complex(k3));
            sol.y.set_term(a3, g3, one * (kI * k2));
            sol.z.set_term(a2, g2, one);
            break;
    }
    sol.omega.set_term(AmpKey{}, EtaPoly(Complex(sol.ctx.omega0)));
    sol.nu.set_term(AmpKey{}, EtaPoly(Complex(sol.ctx.nu0)));
    sol.lambda.set_term(AmpKey{}, EtaPoly(Complex(sol.ctx.lambda0)));
    sol.delta.set_term(AmpKey{}, EtaPoly(Complex(sol.coupling.d0000)));
    sol.order = 1;

    for (int n = 2; n <= opt.order; ++n) {
        RhsTriple rhs = assemble_rhs(sol, n);
        solve_order_n(rhs, sol, n);
    }
    return sol;
}

BifurcationForm extract_bifurcation_coeffs(const SolutionSet& sol) {
    if (sol.mode != EtaMode::Symbolic)
        throw ContractError("bifurcation extraction requires a symbolic build");
    if (sol.order < 3) throw ContractError("bifurcation extraction requires order >= 3");

    double scale = 0.0;
    for (const auto& [key, c] : sol.delta.terms()) scale = std::max(scale, c.max_abs());
    for (const auto& [key, c] : sol.delta.terms()) {
        for (int d = 1; d <= c.degree(); d += 2)
            if (std::abs(c.coeff(d)) > 1e-10 * std::max(1.0, scale))
                throw Error("consistency: odd eta-degree content in Delta");
    }

    auto read = [&](AmpKey a, int deg) -> double {
        Complex v = sol.delta.coeff(a).coeff(deg);
        if (std::abs(v.imag()) > 1e-12 * std::max(1.0, scale))
            throw Error("consistency: imaginary Delta coefficient");
        return v.real();
    };

    const AmpKey i2000{2, 0, 0, 0}, i0200{0, 2, 0, 0}, i0020{0, 0, 2, 0}, i0002{0, 0, 0, 2};
    BifurcationForm f;
    f.kase = sol.kase;
    f.const_term = read(AmpKey{}, 0);
    f.a_a1 = read(i2000, 4);
    f.a_a3 = read(i0020, 4);
    f.b_a1 = read(i2000, 2);
    f.b_a2 = read(i0200, 2);
    f.b_a3 = read(i0020, 2);
    f.c_a1 = read(i2000, 0);
    f.c_a2 = read(i0200, 0);
    f.c_a3 = read(i0020, 0);
    f.c_e2 = read(i0002, 0);

    double expect;
    switch (sol.kase) {
        case CouplingCase::XtoZ:
            expect = sol.ctx.nu0 * sol.ctx.nu0 - sol.ctx.omega0 * sol.ctx.omega0;
            break;
        case CouplingCase::YtoZ:
            expect = (sol.ctx.nu0 * sol.ctx.nu0 - sol.ctx.omega0 * sol.ctx.omega0) /
                     sol.ctx.kappa1;
            break;
        default:
            expect = 1.0 / (2.0 * sol.ctx.nu0) - sol.ctx.nu0 / 2.0;
            break;
    }
    if (std::abs(f.const_term - expect) > 1e-12 * std::max(1.0, std::abs(expect)))
        throw Error("consistency: Delta constant term does not match the case formula");
    return f;
}

}  // namespace ertbp
