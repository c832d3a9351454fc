#pragma once

#include <utility>
#include <vector>

#include "ertbp/bifurcation.hpp"
#include "ertbp/model_params.hpp"
#include "ertbp/trig_series.hpp"

namespace ertbp {

enum class EtaMode { Symbolic, Numeric };

struct BuildOptions {
    int order = 7;
    EtaMode mode = EtaMode::Symbolic;
    /// Max eta power kept in symbolic coefficients; -1 selects the default
    /// max(2, 2*(order-1)), which keeps x, y and all frequency/Delta
    /// coefficients exact. Ignored in numeric mode.
    int eta_degree = -1;
    double eta_value = 0.0;  // numeric-mode substitution
    int n_poly_max = 20;     // recurrent-expansion depth for the c_n table
};

/// Accumulated Lindstedt-Poincare solution through a given order.
struct SolutionSet {
    CouplingCase kase = CouplingCase::XtoZ;
    int order = 0;
    EtaMode mode = EtaMode::Symbolic;
    double eta_value = 0.0;
    LibrationContext ctx;
    CouplingCaseConstants coupling;
    TrigSeries x, y, z;
    FreqSeries omega, nu, lambda, delta;

    SeriesTrunc trunc() const { return x.trunc(); }
};

/// Known terms of homogeneous order n, one series per equation.
struct RhsTriple {
    TrigSeries p, q, tau;
};

/// The sums sum c_{n+1}(n+1) T_n and sum c_{n+1} R_{n-1} over n = 2..n_poly,
/// built by the polynomial recurrences with rho^2 = x^2+y^2+z^2.
std::pair<TrigSeries, TrigSeries> legendre_terms(const TrigSeries& x, const TrigSeries& y,
                                                 const TrigSeries& z,
                                                 const std::vector<double>& c, int n_poly);

/// LHS - RHS of the case-modified equations evaluated on the stored series,
/// with frequency and Delta series truncated to freq_trunc_order and products
/// truncated at max_order. Orders already solved come out (numerically) zero.
struct EquationDefect {
    TrigSeries x, y, z;
};
EquationDefect equation_defect(const SolutionSet& sol, int freq_trunc_order, int max_order);

/// All order-n known terms of the three equations, signs arranged so the
/// undetermined coefficients satisfy M [x y]^T = [p q]^T etc.
RhsTriple assemble_rhs(const SolutionSet& sol, int n);

/// Solves the per-angle-key linear systems of order n and merges the new
/// coefficients (and the order n-1 frequency/Delta corrections) into sol.
void solve_order_n(const RhsTriple& rhs, SolutionSet& sol, int n);

SolutionSet build_solution(const LibrationContext& ctx, CouplingCase kase,
                           const BuildOptions& opt);

/// Reads the eta-degree 0/2/4 parts of the second-order Delta coefficients
/// into the quadratic-form slots. Requires a symbolic build of order >= 3.
BifurcationForm extract_bifurcation_coeffs(const SolutionSet& sol);

}  // namespace ertbp
