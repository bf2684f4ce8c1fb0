#ifndef SIRS_STABILITY_HPP
#define SIRS_STABILITY_HPP

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sirs/equilibria.hpp"

namespace sirs {

enum class StabilityLabel {
    StableNode,
    StableFocus,
    UnstableNode,
    UnstableFocus,
    Saddle,
    SaddleNodeAttracting,
    SaddleNodeRepelling,
    DegenerateUnresolved
};
std::string to_string(StabilityLabel l);

// Quadratic Taylor data at a degenerate equilibrium, in the convention of the
// fold analysis: a10, a01, b10, b01 are the Jacobian entries; a20, a11 the
// second partials d2F1/dx2 and d2F1/dxdy (F2 is linear, so b2* vanish).
// c20 and d01 are the reduced coefficients
//   c20 = (a20 + b10*a11)/(1 - a10), d01 = b10/(1 - a10),
// except at the degenerate disease-free point, where c20 holds the
// center-manifold drift coefficient 2(Bm-1) - q and d01 the hyperbolic
// eigenvalue -1. epsilon is the nondegeneracy quantity
//   ((q+1)^2 - Bm) x + (e-B)(q+2) - (q+1)
// evaluated at the point (for Sub folds), or the trace otherwise.
struct NormalForm {
    double a10 = 0, a01 = 0, a20 = 0, a11 = 0, b10 = 0, b01 = 0;
    double c20 = 0, d01 = 0;
    double epsilon = 0;
};

struct StabilityReport {
    Equilibrium equilibrium;
    double trace = 0, determinant = 0;
    std::complex<double> eig1, eig2;
    StabilityLabel label = StabilityLabel::DegenerateUnresolved;
    std::optional<NormalForm> normal_form; // present iff the point is degenerate

    // Recorded diagnostics, never used for decisions.
    std::optional<double> note1_p;         // x(2m(1+q)x + 1+q-Bm), sign proxy for det
    std::optional<double> note2_q;         // ((q+1)^2-Bm)x + (e-B)(q+2) - (q+1), sign proxy for tr
    std::optional<double> paper_criterion; // Bm-1 at the degenerate disease-free point
};

/// Eigenvalues of a 2x2 matrix. Triangular matrices return their diagonal
/// entries exactly.
std::pair<std::complex<double>, std::complex<double>> eigenvalues(const Mat2& J);

/// Planar classification by (sign det, sign tr, sign tr^2-4det); any point
/// with |det| below tolerance is routed to the degenerate analyzers and is
/// never given a generic label.
StabilityReport classify(const Equilibrium& eq, const ScaledSub& sub, const ScaledSat& sat);

/// Degenerate disease-free point (B = e): one zero eigenvalue, classified by
/// the sign of the reduced drift coefficient c = 2(Bm-1) - q on x > 0.
/// Requires |B - e| < 1e-9. |c| < 1e-9 yields DegenerateUnresolved.
StabilityReport analyze_disease_free_degenerate(const ScaledSub& p);

/// Fold point E* (double endemic root of the Sub regime). Computes the Taylor
/// data, verifies the degeneracy identity a10 + q*a01 = 0, and labels by the
/// sign pair (a10-1, c20): repelling for a10 > 1, c20 < 0; attracting for
/// a10 < 1, c20 > 0; anything else DegenerateUnresolved.
StabilityReport analyze_double_point(const Equilibrium& eq_star, const ScaledSub& p);

/// Vector field of the fold in transformed coordinates: u = u1 - a01*v1,
/// v = b10*u1 + v1, time rescaled by dt = -(a10+1) dtau. Its linearization
/// at the origin must have eigenvalues {0, -(a10+1)*tr(J)}.
State double_point_transformed_field(const State& uv1, const Equilibrium& eq_star,
                                     const ScaledSub& p);

enum class DulacCondition { Cond1, Cond2 };
std::string to_string(DulacCondition c);

// A certificate of global disease-free stability (no limit cycles).
//   Cond1: e - B > 0 and m <= (1+q)/B   (no endemic points, E0 locally stable)
//   Cond2: B < 1 < g and mB < 1         (weighted-divergence argument)
struct DulacCertificate {
    DulacCondition condition = DulacCondition::Cond1;
    bool holds = false;
    std::vector<std::pair<std::string, double>> witness;
};

std::vector<DulacCertificate> dulac_certificates(const ScaledSub& sub, const ScaledSat& sat);

/// Weighted divergence div(D*F) for D = 1/(xy) in the Sub regime:
/// (1/y^2) * (-m y^2 + (mB-1-2mx) y - q).
double dulac_divergence_sub(double x, double y, const ScaledSub& p);
/// Same for D = 1/(x0*y) in the Sat regime.
double dulac_divergence_sat(double x, double y, const ScaledSat& p);

struct GridCheck {
    bool all_negative = true;
    double max_value = 0;
    double at_x = 0, at_y = 0;
    int points = 0;
};
/// Evaluates the Sub-regime divergence on an nx-by-ny grid over (0,x_max] x (0,y_max].
GridCheck dulac_grid_check_sub(const ScaledSub& p, double x_max, double y_max, int nx, int ny);
GridCheck dulac_grid_check_sat(const ScaledSat& p, double x_max, double y_max, int nx, int ny);

} // namespace sirs

#endif
