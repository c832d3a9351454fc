#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ertbp/model_params.hpp"

namespace ertbp {

/// Quadratic-form coefficients of the third-order bifurcation equation
///   Delta = a(pt) eta^4 + b(pt) eta^2 + c(pt) = 0,
/// with a = a_a1 a1^2 + a_a3 a3^2, b = b_a1 a1^2 + b_a2 a2^2 + b_a3 a3^2,
/// c = c_a1 a1^2 + c_a2 a2^2 + c_a3 a3^2 + c_e2 e^2 + const_term.
///
/// Slot naming per coupling case: XtoZ l1..l9, YtoZ k1..k9 (same layout),
/// ZtoY h1..h5 with a identically zero and b = h1 a2^2.
struct BifurcationForm {
    CouplingCase kase = CouplingCase::XtoZ;
    double a_a1 = 0.0, a_a3 = 0.0;
    double b_a1 = 0.0, b_a2 = 0.0, b_a3 = 0.0;
    double c_a1 = 0.0, c_a2 = 0.0, c_a3 = 0.0, c_e2 = 0.0;
    double const_term = 0.0;

    // l-name accessors (XtoZ); the YtoZ k_i occupy the same slots.
    double l(int i) const;
    // h-name accessors (ZtoY).
    double h(int i) const;
};

/// Amplitude/eccentricity evaluation point. alpha3_sq is signed: negative
/// values select the transit branch (imaginary alpha3), positive non-transit.
struct EvalPoint {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3_sq = 0.0;
    double e = 0.0;
};

struct QuarticCoeffs {
    double a = 0.0, b = 0.0, c = 0.0;
    double disc() const { return b * b - 4.0 * a * c; }
};

QuarticCoeffs quartic_at(const BifurcationForm& form, const EvalPoint& pt);

/// Root-branch identity: Small is the -sqrt(disc) quadratic root in eta^2
/// (the pair emerging at the pitchfork), Large the +sqrt(disc) root. When the
/// quartic degenerates to a quadratic (a = 0) the single pair is labeled Small.
enum class EtaBranch { Small, Large };

struct EtaRoot {
    double eta = 0.0;
    EtaBranch branch = EtaBranch::Small;
};

/// All real nonzero solutions of a eta^4 + b eta^2 + c = 0, sorted ascending.
/// Closed under negation. Empty when none exist.
std::vector<EtaRoot> solve_eta(const BifurcationForm& form, const EvalPoint& pt);

struct RegionClass {
    int count = 0;  // 0, 2, or 4 real nonzero roots
    QuarticCoeffs q;
    double disc = 0.0;
    int sign_a = 0, sign_c = 0, sign_disc = 0;  // -1 / 0 / +1 at tie tolerance
    bool degenerate = false;                    // a = b = c = 0
    std::string label;
};

RegionClass classify_region(const BifurcationForm& form, const EvalPoint& pt);

/// Critical planar amplitude on the alpha1-axis (alpha2 = alpha3 = 0) above
/// which the halo pair exists. Empty when the radicand is nonpositive at
/// this eccentricity.
std::optional<double> halo_threshold(const BifurcationForm& form, double e);

struct AxialThresholds {
    std::optional<double> alpha2_max;  // vertical-Lyapunov bound (ZtoY form)
    std::optional<double> alpha1_cri;  // planar-Lyapunov bound (YtoZ form)
};

AxialThresholds axial_thresholds(const BifurcationForm& form_z2y,
                                 const BifurcationForm& form_y2z, double e);

enum class SurfaceKind { CZero, AZero, DiscZero };
enum class Alpha3Branch { Transit, NonTransit };

std::string to_string(SurfaceKind k);
std::string to_string(Alpha3Branch b);

struct SurfaceMeshSpec {
    double alpha1_max = 0.5;
    double alpha2_max = 0.5;
    double alpha3_max = 0.05;
    int n = 101;  // samples per axis
};

struct SurfacePoint {
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;
};

struct SurfaceMesh {
    SurfaceKind kind = SurfaceKind::CZero;
    Alpha3Branch branch = Alpha3Branch::Transit;
    std::vector<SurfacePoint> points;
    std::string diagnostic;  // set when the mesh came out empty
};

/// Implicit-surface samples found by bracketing sign changes along alpha3
/// rays over an (alpha1, alpha2) grid.
SurfaceMesh critical_surface_mesh(const BifurcationForm& form, SurfaceKind kind,
                                  Alpha3Branch branch, double e, const SurfaceMeshSpec& spec);

}  // namespace ertbp
