#ifndef SIRS_BIFURCATION_HPP
#define SIRS_BIFURCATION_HPP

#include <string>
#include <vector>

#include "sirs/stability.hpp"

namespace sirs {

/// Critical value of e at which the two endemic roots of the Sub regime
/// collide: e_sn = B + (1+q-Bm)^2 / (4m(1+q)). Requires m > (1+q)/B so the
/// fold sits at positive x; throws std::invalid_argument otherwise.
double e_sn(const ScaledSub& p);

/// Fold abscissa x* = (Bm-q-1) / (2m(1+q)).
double fold_x(const ScaledSub& p);

// Transversality data of the fold with respect to the parameter e.
// v is the right null vector (1, q) of J(E*); w is the numeric left null
// vector normalized to w1 = q. wFe = w.F_e with F_e = (-x*, 0); wD2F is
// w.D2F(v,v) from the exact second partials. The printed reference values
// -q x* and (2Bmq - 3q^2 - 2q - q^3)/(1+q) are recorded for comparison,
// as is the second component of the reference left vector (q, x*+m x*^2),
// which is not a null vector of J^T; w_ref_cross measures its misalignment.
struct SotomayorReport {
    double e_star = 0, x_star = 0, y_star = 0;
    double v1 = 0, v2 = 0;
    double w1 = 0, w2 = 0;
    double wFe = 0, wD2F = 0;
    double ref_wFe = 0, ref_wD2F = 0;
    double ref_w2 = 0;
    double w_ref_cross = 0; // normalized cross product of w and the reference w
    bool verdict = false;   // |wFe| > 1e-8 and |wD2F| > 1e-8
};

/// Requires |e - e_sn| within 1e-10 (scale-aware) and a fold at positive x.
SotomayorReport sotomayor(const ScaledSub& p);

struct ScanSample {
    double value = 0;
    ScaledSub sub;
    ScaledSat sat;
    EquilibriumCatalog cat;
    std::vector<StabilityReport> reports; // disease-free first, then endemic in x order
};

struct ScanResult {
    std::string parameter;
    std::vector<ScanSample> samples; // ascending in value
};

/// One-parameter sweep over a RawParams field, one of "r", "A", "nu", "n",
/// "I0" (r moves e, A moves B, nu moves m). steps >= 2, endpoints included.
ScanResult scan(const RawParams& base, const std::string& parameter, double lo, double hi,
                int steps);

} // namespace sirs

#endif
