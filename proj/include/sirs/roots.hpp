#ifndef SIRS_ROOTS_HPP
#define SIRS_ROOTS_HPP

#include <vector>

namespace sirs {

struct PolyRoot {
    double x = 0;
    int multiplicity = 1;
};

/// Real roots of a*x^2 + b*x + c, ascending. Accepts a == 0 (linear case).
/// A root pair is merged to multiplicity 2 when |disc| < 1e-12 * max(1, b^2).
std::vector<PolyRoot> quadratic_real_roots(double a, double b, double c);

/// Real roots of c3*x^3 + c2*x^2 + c1*x + c0 (c3 != 0), ascending, via
/// eigenvalues of the companion matrix followed by Newton polishing.
/// Eigenvalues closer than 1e-7 in relative terms are merged into a
/// multiple root, which is re-polished on the derivative.
std::vector<PolyRoot> cubic_real_roots(double c3, double c2, double c1, double c0);

} // namespace sirs

#endif
