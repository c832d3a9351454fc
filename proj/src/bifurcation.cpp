#include "ertbp/bifurcation.hpp"

#include <algorithm>
#include <cmath>

namespace ertbp {

namespace {

constexpr double kTieTol = 1e-12;  // on-surface classification tolerance

int sign_at(double v, double tol) {
    if (v > tol) return 1;
    if (v < -tol) return -1;
    return 0;
}

}  // namespace

double BifurcationForm::l(int i) const {
    switch (i) {
        case 1: return a_a1;
        case 2: return a_a3;
        case 3: return b_a1;
        case 4: return b_a2;
        case 5: return b_a3;
        case 6: return c_a1;
        case 7: return c_a2;
        case 8: return c_a3;
        case 9: return c_e2;
        default: throw DomainError("l-index out of range");
    }
}

double BifurcationForm::h(int i) const {
    switch (i) {
        case 1: return b_a2;
        case 2: return c_a1;
        case 3: return c_a2;
        case 4: return c_a3;
        case 5: return c_e2;
        default: throw DomainError("h-index out of range");
    }
}

QuarticCoeffs quartic_at(const BifurcationForm& form, const EvalPoint& pt) {
    const double s1 = pt.alpha1 * pt.alpha1;
    const double s2 = pt.alpha2 * pt.alpha2;
    const double s3 = pt.alpha3_sq;  // signed: transit branch is negative
    const double se = pt.e * pt.e;
    QuarticCoeffs q;
    q.a = form.a_a1 * s1 + form.a_a3 * s3;
    q.b = form.b_a1 * s1 + form.b_a2 * s2 + form.b_a3 * s3;
    q.c = form.c_a1 * s1 + form.c_a2 * s2 + form.c_a3 * s3 + form.c_e2 * se + form.const_term;
    return q;
}

std::vector<EtaRoot> solve_eta(const BifurcationForm& form, const EvalPoint& pt) {
    QuarticCoeffs q = quartic_at(form, pt);
    std::vector<EtaRoot> roots;

    auto push_pair = [&roots](double eta_sq, EtaBranch branch) {
        if (eta_sq <= kTieTol) return;  // eta = 0 and negative squares are not bifurcations
        double eta = std::sqrt(eta_sq);
        roots.push_back({-eta, branch});
        roots.push_back({eta, branch});
    };

    if (std::abs(q.a) <= kTieTol) {
        if (std::abs(q.b) <= kTieTol) return roots;  // no nonzero solution (possibly degenerate)
        push_pair(-q.c / q.b, EtaBranch::Small);
    } else {
        double disc = q.disc();
        if (disc < 0.0) return roots;
        double sq = std::sqrt(disc);
        // stable quadratic roots in X = eta^2
        double qq = -0.5 * (q.b + (q.b >= 0.0 ? sq : -sq));
        double x_plus, x_minus;  // roots from the +/- discriminant signs
        if (q.b >= 0.0) {
            x_minus = qq / q.a;                          // (-b - sq) / 2a
            x_plus = (qq != 0.0) ? q.c / qq : 0.0;       // (-b + sq) / 2a
        } else {
            x_plus = qq / q.a;                           // (-b + sq) / 2a
            x_minus = (qq != 0.0) ? q.c / qq : 0.0;      // (-b - sq) / 2a
        }
        if (std::abs(x_plus - x_minus) <=
            1e-12 * std::max({1.0, std::abs(x_plus), std::abs(x_minus)})) {
            push_pair(x_minus, EtaBranch::Small);  // double root on the disc = 0 surface
        } else {
            push_pair(x_minus, EtaBranch::Small);
            push_pair(x_plus, EtaBranch::Large);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const EtaRoot& a, const EtaRoot& b) { return a.eta < b.eta; });
    return roots;
}

RegionClass classify_region(const BifurcationForm& form, const EvalPoint& pt) {
    RegionClass rc;
    rc.q = quartic_at(form, pt);
    rc.disc = rc.q.disc();
    rc.count = static_cast<int>(solve_eta(form, pt).size());
    rc.sign_a = sign_at(rc.q.a, kTieTol);
    rc.sign_c = sign_at(rc.q.c, kTieTol);
    rc.sign_disc = sign_at(rc.disc, kTieTol);
    rc.degenerate = rc.sign_a == 0 && std::abs(rc.q.b) <= kTieTol && rc.sign_c == 0;

    auto sgn = [](int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); };
    rc.label = std::string("a") + sgn(rc.sign_a) + " c" + sgn(rc.sign_c) + " disc" +
               sgn(rc.sign_disc);
    if (rc.degenerate) rc.label += " degenerate";
    return rc;
}

std::optional<double> halo_threshold(const BifurcationForm& form, double e) {
    // critical points (+-sqrt((omega0^2 - nu0^2 - l9 e^2)/l6), 0) on the alpha1-axis
    double radicand = (-form.const_term - form.c_e2 * e * e) / form.c_a1;
    if (!(radicand > 0.0)) return std::nullopt;
    return std::sqrt(radicand);
}

AxialThresholds axial_thresholds(const BifurcationForm& form_z2y,
                                 const BifurcationForm& form_y2z, double e) {
    if (form_z2y.kase != CouplingCase::ZtoY || form_y2z.kase != CouplingCase::YtoZ)
        throw ContractError("axial_thresholds wants the (z2y, y2z) form pair");
    AxialThresholds th;
    double r2 = -(form_z2y.h(5) * e * e + form_z2y.const_term) / form_z2y.h(3);
    if (r2 > 0.0) th.alpha2_max = std::sqrt(r2);
    double r1 = -(form_y2z.l(9) * e * e + form_y2z.const_term) / form_y2z.l(6);
    if (r1 > 0.0) th.alpha1_cri = std::sqrt(r1);
    return th;
}

std::string to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::CZero: return "c=0";
        case SurfaceKind::AZero: return "a=0";
        default: return "disc=0";
    }
}

std::string to_string(Alpha3Branch b) {
    return b == Alpha3Branch::Transit ? "transit" : "non-transit";
}

SurfaceMesh critical_surface_mesh(const BifurcationForm& form, SurfaceKind kind,
                                  Alpha3Branch branch, double e, const SurfaceMeshSpec& spec) {
    if (!(spec.alpha1_max > 0.0 && spec.alpha2_max > 0.0 && spec.alpha3_max > 0.0))
        throw DomainError("mesh bounds must be positive");
    if (spec.n < 2) throw DomainError("mesh resolution must be >= 2");

    SurfaceMesh mesh;
    mesh.kind = kind;
    mesh.branch = branch;
    const double sgn3 = (branch == Alpha3Branch::Transit) ? -1.0 : 1.0;

    auto surface_fn = [&](double a1, double a2, double a3) {
        EvalPoint pt{a1, a2, sgn3 * a3 * a3, e};
        QuarticCoeffs q = quartic_at(form, pt);
        switch (kind) {
            case SurfaceKind::CZero: return q.c;
            case SurfaceKind::AZero: return q.a;
            default: return q.disc();
        }
    };

    for (int ia = 0; ia < spec.n; ++ia) {
        double a1 = -spec.alpha1_max + 2.0 * spec.alpha1_max * double(ia) / double(spec.n - 1);
        for (int ja = 0; ja < spec.n; ++ja) {
            double a2 =
                -spec.alpha2_max + 2.0 * spec.alpha2_max * double(ja) / double(spec.n - 1);
            // march along the alpha3 >= 0 ray and bracket sign changes
            double prev = surface_fn(a1, a2, 0.0);
            double a3_prev = 0.0;
            for (int kaxis = 1; kaxis < spec.n; ++kaxis) {
                double a3 = spec.alpha3_max * double(kaxis) / double(spec.n - 1);
                double cur = surface_fn(a1, a2, a3);
                if (prev == 0.0 || prev * cur < 0.0) {
                    double lo = a3_prev, hi = a3, flo = prev;
                    for (int it = 0; it < 80; ++it) {
                        double mid = 0.5 * (lo + hi);
                        double fm = surface_fn(a1, a2, mid);
                        if (fm == 0.0 || hi - lo < 1e-12) {
                            lo = hi = mid;
                            break;
                        }
                        if ((flo < 0.0) == (fm < 0.0)) {
                            lo = mid;
                            flo = fm;
                        } else {
                            hi = mid;
                        }
                    }
                    double root = 0.5 * (lo + hi);
                    mesh.points.push_back({a1, a2, root});
                    if (root > 0.0) mesh.points.push_back({a1, a2, -root});
                }
                prev = cur;
                a3_prev = a3;
            }
        }
    }
    if (mesh.points.empty()) mesh.diagnostic = "no surface found inside the sampling box";
    return mesh;
}

}  // namespace ertbp
