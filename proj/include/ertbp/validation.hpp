#pragma once

#include <array>
#include <vector>

#include "ertbp/lp_engine.hpp"
#include "ertbp/orbit.hpp"

namespace ertbp {

/// (X, Y, Z, X', Y', Z') in the primary-centered pulsating frame.
using State6 = std::array<double, 6>;

struct IntegratorConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    double max_step = 0.1;
};

/// Exact right-hand side of the equations of motion; no series truncation.
State6 ertbp_rhs(const State6& s, double f, double mu, double e);

/// Adaptive embedded Dormand-Prince 5(4) propagation landing exactly on the
/// requested nodes; nodes[0] is the initial time and must be strictly
/// monotone (either direction). Returns one state per node.
std::vector<State6> integrate(const State6& s0, const std::vector<double>& nodes, double mu,
                              double e, const IntegratorConfig& cfg);

/// Constant linear map between the gamma-scaled local frame and the
/// primary-centered pulsating frame.
State6 local_to_global(const State6& s, const LibrationContext& ctx);
State6 global_to_local(const State6& s, const LibrationContext& ctx);

State6 to_state6(const StateVector& s);

/// Jacobi-like integral of the e = 0 limit; constant along exact solutions.
double crtbp_energy(const State6& s, double mu);

/// Max over the grid of the norm of (LHS - RHS) of the case-modified
/// recurrent-form equations, everything evaluated numerically.
double residual_check(const SolutionSet& sol, const OrbitParams& op,
                      const std::vector<double>& f_grid);

/// Max position deviation (local-frame units) between the series states and
/// direct numerical integration started from the series state at f0.
double series_vs_integration(const SolutionSet& sol, const OrbitParams& op, double f0,
                             double f1, int n_nodes, const IntegratorConfig& cfg);

enum class SymmetryType { S1, S2, S3 };

State6 symmetry_image(const State6& s, SymmetryType type);

/// Integrates the symmetry image of a trajectory's matching endpoint (time
/// reversed for S2/S3) and returns the max state mismatch against the imaged
/// trajectory.
double symmetry_check(const State6& s0, double f0, double f1, int n_nodes, double mu,
                      double e, SymmetryType type, const IntegratorConfig& cfg);

}  // namespace ertbp
