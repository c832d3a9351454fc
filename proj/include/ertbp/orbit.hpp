#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ertbp/lp_engine.hpp"

namespace ertbp {

/// Six-state in the gamma-scaled local frame of the libration point.
struct StateVector {
    double f = 0.0;
    double x = 0.0, y = 0.0, z = 0.0;
    double xp = 0.0, yp = 0.0, zp = 0.0;
};

enum class OrbitLabel {
    PlanarLyapunov,
    VerticalLyapunov,
    Lissajous,
    Halo,
    QuasiHalo,
    Axial,
    QuasiAxial,
    PlanarHyperbolic,
    BifurcatedHyperbolic,
    Transit,
    NonTransit,
};

std::string to_string(OrbitLabel label);

/// Concrete parameter choice for evaluating a SolutionSet. alpha3_sq is
/// signed: negative selects the transit branch (imaginary alpha3). phi3
/// defaults to the canonical realness phase, 0 for non-transit and pi/2 for
/// transit.
struct OrbitParams {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3_sq = 0.0;
    double e = 0.0;
    double eta = 0.0;
    double phi1 = 0.0, phi2 = 0.0;
    std::optional<double> phi3;
};

/// Evaluates the frequency series at the given parameters and enforces the
/// eta*Delta = 0 constraint: nonzero eta requires |Delta(eta)| <= 1e-8.
EvalParams make_eval_params(const SolutionSet& sol, const OrbitParams& op);

StateVector evaluate_state(const SolutionSet& sol, const OrbitParams& op, double f);

/// Internal worker when the EvalParams are already prepared.
StateVector evaluate_state_at(const SolutionSet& sol, const EvalParams& p, double f);

std::vector<StateVector> sample_trajectory(const SolutionSet& sol, const OrbitParams& op,
                                           double f0, double f1, int n_samples);

OrbitLabel classify_orbit(const OrbitParams& op, CouplingCase kase);

}  // namespace ertbp
