#include "ertbp/model_params.hpp"

#include <cmath>

namespace ertbp {

std::string to_string(CollinearPoint p) {
    switch (p) {
        case CollinearPoint::L1: return "L1";
        case CollinearPoint::L2: return "L2";
        default: return "L3";
    }
}

CollinearPoint point_from_string(const std::string& s) {
    if (s == "L1" || s == "l1") return CollinearPoint::L1;
    if (s == "L2" || s == "l2") return CollinearPoint::L2;
    if (s == "L3" || s == "l3") return CollinearPoint::L3;
    throw DomainError("unknown collinear point: " + s);
}

std::string to_string(CouplingCase c) {
    switch (c) {
        case CouplingCase::XtoZ: return "x2z";
        case CouplingCase::YtoZ: return "y2z";
        default: return "z2y";
    }
}

CouplingCase case_from_string(const std::string& s) {
    if (s == "x2z") return CouplingCase::XtoZ;
    if (s == "y2z") return CouplingCase::YtoZ;
    if (s == "z2y") return CouplingCase::ZtoY;
    throw DomainError("unknown coupling case: " + s);
}

namespace {

// Quintic coefficients, highest degree first.
void quintic_coeffs(double mu, CollinearPoint point, double c[6]) {
    switch (point) {
        case CollinearPoint::L1:
            c[0] = 1.0; c[1] = -(3.0 - mu); c[2] = 3.0 - 2.0 * mu;
            c[3] = -mu; c[4] = 2.0 * mu; c[5] = -mu;
            break;
        case CollinearPoint::L2:
            c[0] = 1.0; c[1] = 3.0 - mu; c[2] = 3.0 - 2.0 * mu;
            c[3] = -mu; c[4] = -2.0 * mu; c[5] = -mu;
            break;
        default:  // L3
            c[0] = 1.0; c[1] = 2.0 + mu; c[2] = 1.0 + 2.0 * mu;
            c[3] = -(1.0 - mu); c[4] = -2.0 * (1.0 - mu); c[5] = -(1.0 - mu);
            break;
    }
}

double quintic_value(const double c[6], double g) {
    return ((((c[0] * g + c[1]) * g + c[2]) * g + c[3]) * g + c[4]) * g + c[5];
}

double quintic_deriv(const double c[6], double g) {
    return (((5.0 * c[0] * g + 4.0 * c[1]) * g + 3.0 * c[2]) * g + 2.0 * c[3]) * g + c[4];
}

}  // namespace

double quintic_residual(double mu, CollinearPoint point, double gamma) {
    double c[6];
    quintic_coeffs(mu, point, c);
    return quintic_value(c, gamma);
}

double solve_gamma(double mu, CollinearPoint point) {
    if (!(mu > 0.0 && mu < 0.5)) throw DomainError("mass ratio must lie in (0, 0.5)");
    double c[6];
    quintic_coeffs(mu, point, c);

    double lo = (point == CollinearPoint::L3) ? 0.5 : 1e-8;
    double hi = (point == CollinearPoint::L3) ? 1.5 : 0.5;
    double flo = quintic_value(c, lo);
    double fhi = quintic_value(c, hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw Error("no sign change in gamma bracket");

    double g = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        double fg = quintic_value(c, g);
        if (fg == 0.0) break;
        if (fg * flo < 0.0) {
            hi = g;
        } else {
            lo = g;
            flo = fg;
        }
        double dg = quintic_deriv(c, g);
        double step = (dg != 0.0) ? fg / dg : 0.0;
        double next = g - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
        if (std::abs(next - g) <= 1e-17 * std::abs(g)) {
            g = next;
            break;
        }
        g = next;
    }
    return g;
}

std::vector<double> c_coeffs(double mu, CollinearPoint point, double gamma, int n_max) {
    if (n_max < 2) throw DomainError("c_coeffs requires n_max >= 2");
    std::vector<double> c(n_max + 1, 0.0);
    const double g3 = gamma * gamma * gamma;
    for (int n = 2; n <= n_max; ++n) {
        double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
        double value;
        switch (point) {
            case CollinearPoint::L1:
                value = (mu + sign_n * (1.0 - mu) * std::pow(gamma / (1.0 - gamma), n + 1)) / g3;
                break;
            case CollinearPoint::L2:
                value = (sign_n * mu +
                         sign_n * (1.0 - mu) * std::pow(gamma / (1.0 + gamma), n + 1)) / g3;
                break;
            default:  // L3
                value = sign_n * (1.0 - mu + mu * std::pow(gamma / (1.0 + gamma), n + 1)) / g3;
                break;
        }
        c[n] = value;
    }
    return c;
}

LinearConstants linear_constants(double c2) {
    if (c2 <= 0.0) throw DomainError("c2 must be positive");
    double disc = 9.0 * c2 * c2 - 8.0 * c2;
    if (disc <= 0.0) throw DomainError("9*c2^2 - 8*c2 must be positive");
    double root = std::sqrt(disc);
    LinearConstants k{};
    k.omega0 = std::sqrt((2.0 - c2 + root) / 2.0);
    k.nu0 = std::sqrt(c2);
    k.lambda0 = std::sqrt((c2 - 2.0 + root) / 2.0);
    k.kappa1 = -(k.omega0 * k.omega0 + 2.0 * c2 + 1.0) / (2.0 * k.omega0);
    k.kappa2 = -(k.lambda0 * k.lambda0 - 2.0 * c2 - 1.0) / (2.0 * k.lambda0);
    return k;
}

LibrationContext make_context(double mu, CollinearPoint point, int n_poly_max) {
    LibrationContext ctx;
    ctx.mu = mu;
    ctx.point = point;
    ctx.gamma = solve_gamma(mu, point);
    ctx.c = c_coeffs(mu, point, ctx.gamma, n_poly_max);
    LinearConstants k = linear_constants(ctx.c[2]);
    ctx.omega0 = k.omega0;
    ctx.nu0 = k.nu0;
    ctx.lambda0 = k.lambda0;
    ctx.kappa1 = k.kappa1;
    ctx.kappa2 = k.kappa2;
    return ctx;
}

CouplingCaseConstants coupling_constants(const LibrationContext& ctx, CouplingCase kase) {
    CouplingCaseConstants cc;
    cc.kase = kase;
    const double w2 = ctx.omega0 * ctx.omega0;
    const double v2 = ctx.nu0 * ctx.nu0;
    const double l2 = ctx.lambda0 * ctx.lambda0;
    switch (kase) {
        case CouplingCase::XtoZ:
            cc.d0000 = v2 - w2;
            cc.kappa3 = (v2 - w2) / (v2 + l2);
            break;
        case CouplingCase::YtoZ:
            cc.d0000 = (v2 - w2) / ctx.kappa1;
            cc.kappa3 = (ctx.kappa2 / ctx.kappa1) * (v2 - w2) / (v2 + l2);
            break;
        default:  // ZtoY
            cc.d0000 = 1.0 / (2.0 * ctx.nu0) - ctx.nu0 / 2.0;
            cc.kappa3 = -1.0 / (2.0 * ctx.nu0) - 3.0 * ctx.nu0 / 2.0;
            break;
    }
    return cc;
}

}  // namespace ertbp
