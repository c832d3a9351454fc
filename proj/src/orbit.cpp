#include "ertbp/orbit.hpp"

#include <cmath>

namespace ertbp {

namespace {

constexpr double kPi = 3.14159265358979323846;

double require_real(Complex v, const char* what) {
    if (std::abs(v.imag()) > 1e-8 * (1.0 + std::abs(v.real())))
        throw Error(std::string("imaginary residue in ") + what +
                    " evaluation; check the alpha3/phi3 convention");
    return v.real();
}

}  // namespace

std::string to_string(OrbitLabel label) {
    switch (label) {
        case OrbitLabel::PlanarLyapunov: return "planar-lyapunov";
        case OrbitLabel::VerticalLyapunov: return "vertical-lyapunov";
        case OrbitLabel::Lissajous: return "lissajous";
        case OrbitLabel::Halo: return "halo";
        case OrbitLabel::QuasiHalo: return "quasi-halo";
        case OrbitLabel::Axial: return "axial";
        case OrbitLabel::QuasiAxial: return "quasi-axial";
        case OrbitLabel::PlanarHyperbolic: return "planar-hyperbolic";
        case OrbitLabel::BifurcatedHyperbolic: return "bifurcated-hyperbolic";
        case OrbitLabel::Transit: return "transit";
        default: return "non-transit";
    }
}

EvalParams make_eval_params(const SolutionSet& sol, const OrbitParams& op) {
    if (sol.mode == EtaMode::Numeric && op.eta != sol.eta_value)
        throw ContractError("numeric-mode solution is bound to its build eta");

    EvalParams p;
    p.alpha1 = Complex(op.alpha1);
    p.alpha2 = Complex(op.alpha2);
    if (op.alpha3_sq >= 0.0) {
        p.alpha3 = Complex(std::sqrt(op.alpha3_sq));
        p.phi3 = op.phi3.value_or(0.0);
    } else {
        p.alpha3 = Complex(0.0, std::sqrt(-op.alpha3_sq));
        p.phi3 = op.phi3.value_or(kPi / 2.0);
    }
    p.e = op.e;
    p.eta = op.eta;
    p.phi1 = op.phi1;
    p.phi2 = op.phi2;

    p.omega = require_real(sol.omega.eval(p), "omega");
    p.nu = require_real(sol.nu.eval(p), "nu");
    p.lambda = require_real(sol.lambda.eval(p), "lambda");

    if (op.eta != 0.0) {
        Complex delta = sol.delta.eval(p);
        if (std::abs(delta) > 1e-8)
            throw ConstraintError("eta*Delta = 0 violated: |Delta(eta)| = " +
                                  std::to_string(std::abs(delta)));
    }
    return p;
}

StateVector evaluate_state_at(const SolutionSet& sol, const EvalParams& p, double f) {
    StateVector s;
    s.f = f;
    s.x = require_real(ts_eval(sol.x, p, f), "x");
    s.y = require_real(ts_eval(sol.y, p, f), "y");
    s.z = require_real(ts_eval(sol.z, p, f), "z");
    s.xp = require_real(ts_eval_df(sol.x, p, f), "x'");
    s.yp = require_real(ts_eval_df(sol.y, p, f), "y'");
    s.zp = require_real(ts_eval_df(sol.z, p, f), "z'");
    return s;
}

StateVector evaluate_state(const SolutionSet& sol, const OrbitParams& op, double f) {
    return evaluate_state_at(sol, make_eval_params(sol, op), f);
}

std::vector<StateVector> sample_trajectory(const SolutionSet& sol, const OrbitParams& op,
                                           double f0, double f1, int n_samples) {
    if (n_samples < 2) throw DomainError("sample_trajectory requires n_samples >= 2");
    if (!(f1 > f0)) throw DomainError("sample_trajectory requires f1 > f0");
    EvalParams p = make_eval_params(sol, op);
    std::vector<StateVector> out;
    out.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        double f = f0 + (f1 - f0) * double(i) / double(n_samples - 1);
        out.push_back(evaluate_state_at(sol, p, f));
    }
    return out;
}

OrbitLabel classify_orbit(const OrbitParams& op, CouplingCase kase) {
    const bool a1 = op.alpha1 != 0.0;
    const bool a2 = op.alpha2 != 0.0;
    const bool hyp = op.alpha3_sq != 0.0;
    const bool coupled = op.eta != 0.0;

    if (!a1 && !a2 && !hyp) {
        if (coupled)
            throw ClassificationError("eta != 0 with all amplitudes zero has no Delta-root");
        throw ClassificationError("all amplitudes zero: degenerate equilibrium");
    }
    if (hyp) {
        if (!a1 && !a2)
            return coupled ? OrbitLabel::BifurcatedHyperbolic : OrbitLabel::PlanarHyperbolic;
        return op.alpha3_sq < 0.0 ? OrbitLabel::Transit : OrbitLabel::NonTransit;
    }
    if (!coupled) {
        if (a1 && !a2) return OrbitLabel::PlanarLyapunov;
        if (!a1 && a2) return OrbitLabel::VerticalLyapunov;
        return OrbitLabel::Lissajous;
    }
    switch (kase) {
        case CouplingCase::XtoZ:
            return a2 ? OrbitLabel::QuasiHalo : OrbitLabel::Halo;
        case CouplingCase::YtoZ:
            // bifurcates from planar Lyapunov / Lissajous orbits
            return a2 ? OrbitLabel::QuasiAxial : OrbitLabel::Axial;
        default:
            // ZtoY bifurcates from vertical Lyapunov orbits
            if (!a2)
                throw ClassificationError("z2y coupling requires alpha2 != 0 when eta != 0");
            return a1 ? OrbitLabel::QuasiAxial : OrbitLabel::Axial;
    }
}

}  // namespace ertbp
