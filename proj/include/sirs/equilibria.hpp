#ifndef SIRS_EQUILIBRIA_HPP
#define SIRS_EQUILIBRIA_HPP

#include <string>
#include <vector>

#include "sirs/model.hpp"
#include "sirs/roots.hpp"

namespace sirs {

enum class Multiplicity { Simple, Double };

struct Equilibrium {
    double x = 0, y = 0;
    Regime regime = Regime::Sub;
    Multiplicity multiplicity = Multiplicity::Simple;
    // Sub points are admissible for 0 < x <= x0 (the disease-free point always),
    // Sat points for x > x0.
    bool admissible = false;
};

// Endemic-count cases of the sub-capacity regime, assigned from the primitive
// sign triple (e-B, Bm-q-1, disc) of the endemic quadratic h.
enum class SubCase {
    NoPositiveSmallM, // h(0) >= 0 and non-positive axis of symmetry
    TwoPositive,      // e > B, positive axis, disc > 0
    DoublePositive,   // e > B, positive axis, disc = 0
    NoPositiveLargeE, // e > B, positive axis, disc < 0
    OnePositive       // B > e (or B = e with positive axis)
};
std::string to_string(SubCase c);

struct EquilibriumCatalog {
    Equilibrium disease_free;
    std::vector<Equilibrium> endemic; // both regimes, sorted by x ascending
    SubCase sub_case = SubCase::NoPositiveSmallM;
    double r0 = 0;
};

/// Basic reproduction number in scaled variables, B/e.
double r0(const ScaledSub& p);

/// Coefficients of the sub-regime endemic quadratic
///   h(x) = m(1+q) x^2 + (1+q-Bm) x + (e-B).
void sub_quadratic_coeffs(const ScaledSub& p, double& a, double& b, double& c);
double sub_h(const ScaledSub& p, double x);
double sub_h_deriv(const ScaledSub& p, double x);
double sub_discriminant(const ScaledSub& p);

/// Coefficients of the saturated-regime endemic cubic
///   F(x) = m(1+p) x^3 + (1+p+mf-Bm) x^2 + (g+f-B) x + f.
void sat_cubic_coeffs(const ScaledSat& p, double& c3, double& c2, double& c1, double& c0);
double sat_F(const ScaledSat& p, double x);
double sat_F_deriv(const ScaledSat& p, double x);

/// Positive roots of h, ascending. m = 0 degenerates to the linear equation
/// (1+q)x = B-e and yields at most one root.
std::vector<PolyRoot> solve_sub_endemic(const ScaledSub& p);

/// Positive roots of F, ascending. m = 0 degenerates to a quadratic.
std::vector<PolyRoot> solve_sat_endemic(const ScaledSat& p);

/// All non-negative equilibria of both regimes with admissibility decided by
/// direct comparison against x0. Requires sub and sat to share m, B, x0.
EquilibriumCatalog catalog(const ScaledSub& sub, const ScaledSat& sat);

// Reporting thresholds for the position of the endemic roots relative to x0.
// Admissibility is always decided by direct comparison; these are exposed
// for diagnostics only (see thresholds_p1_p2).
struct Thresholds {
    double p1_hat = 0; // (q+1)/(m e) + 2 x0 (1+q)/e
    double p2_hat = 0; // 1/(1+m x0) + m(1+q)x0^2/(e(1+m x0)) + (q+1)x0/(1+m x0)
};
Thresholds thresholds_p1_p2(const ScaledSub& p);

// Depressed-cubic quantities of the saturated regime when the x^2 coefficient
// vanishes (p = Bm - mf - 1): F/(m(1+p)) = x^3 + s x + t.
struct DepressedSat {
    bool applies = false; // |1+p+mf-Bm| small enough
    double s = 0, t = 0;
    double disc = 0;        // t^2/4 + s^3/27
    double double_root = 0; // cbrt(t/2), the positive double root when disc = 0
};
DepressedSat sat_depressed(const ScaledSat& p);

} // namespace sirs

#endif
