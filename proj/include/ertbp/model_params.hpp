#pragma once

#include <string>
#include <vector>

#include "ertbp/errors.hpp"

namespace ertbp {

enum class CollinearPoint { L1, L2, L3 };

std::string to_string(CollinearPoint p);
CollinearPoint point_from_string(const std::string& s);

/// Mass-ratio dependent constants of a collinear libration point; the ground
/// truth every other module reads. Immutable after construction.
struct LibrationContext {
    double mu = 0.0;
    CollinearPoint point = CollinearPoint::L1;
    double gamma = 0.0;
    std::vector<double> c;  // c[n] at index n, valid for n = 2..n_poly_max
    double omega0 = 0.0, nu0 = 0.0, lambda0 = 0.0;
    double kappa1 = 0.0, kappa2 = 0.0;

    double c2() const { return c[2]; }
    double cn(int n) const { return c[static_cast<std::size_t>(n)]; }
    int n_poly_max() const { return static_cast<int>(c.size()) - 1; }
};

enum class CouplingCase { XtoZ, YtoZ, ZtoY };

std::string to_string(CouplingCase c);
CouplingCase case_from_string(const std::string& s);

/// Constants of the modified linear solution for one coupling direction.
struct CouplingCaseConstants {
    CouplingCase kase = CouplingCase::XtoZ;
    double kappa3 = 0.0;
    double d0000 = 0.0;
};

/// Value of Euler's quintic at gamma.
double quintic_residual(double mu, CollinearPoint point, double gamma);

/// Unique positive root of Euler's quintic equation: in (0,1) for L1/L2 and
/// the positive root for L3. Bracketed Newton with bisection fallback.
double solve_gamma(double mu, CollinearPoint point);

/// c_n(mu) for n = 2..n_max; returned vector indexed by n (entries 0,1 unused).
std::vector<double> c_coeffs(double mu, CollinearPoint point, double gamma, int n_max);

struct LinearConstants {
    double omega0, nu0, lambda0, kappa1, kappa2;
};

/// Closed-form linear frequencies and couplings from c2.
LinearConstants linear_constants(double c2);

/// Full context: gamma, c-table and linear constants for (mu, point).
LibrationContext make_context(double mu, CollinearPoint point, int n_poly_max = 20);

CouplingCaseConstants coupling_constants(const LibrationContext& ctx, CouplingCase kase);

}  // namespace ertbp
