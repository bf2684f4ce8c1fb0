#ifndef SIRS_MODEL_HPP
#define SIRS_MODEL_HPP

#include <utility>

#include "sirs/params.hpp"

namespace sirs {

// Scaled planar state: x = lambda*I/k (infected), y = lambda*R/k (recovered).
struct State {
    double x = 0, y = 0;
};

enum class Regime { Sub, Sat };

/// Regime of a state under the closed-left switching convention:
/// Sub for x <= x0, Sat for x > x0; ties within 1e-12 of x0 count as Sub.
Regime regime_of(double x, double x0);

/// Sub-capacity vector field: ( x(1+mx)(B-x-y) - ex, qx - y ).
State rhs(const State& s, const ScaledSub& p);
/// Saturated vector field: ( x(1+mx)(B-x-y) - gx - f, px - y + f ).
State rhs(const State& s, const ScaledSat& p);
State rhs(const State& s, const ScaledSub& sub, const ScaledSat& sat, Regime regime);

struct Mat2 {
    double a00 = 0, a01 = 0, a10 = 0, a11 = 0;
    double trace() const { return a00 + a11; }
    double det() const { return a00 * a11 - a01 * a10; }
};

/// Exact partial-derivative matrix of rhs at s.
Mat2 jacobian(const State& s, const ScaledSub& p);
Mat2 jacobian(const State& s, const ScaledSat& p);
Mat2 jacobian(const State& s, const ScaledSub& sub, const ScaledSat& sat, Regime regime);

// Dimensional (I, R) system with S eliminated through S = A/d - I - R,
// used to cross-check the scaling against the original equations.
struct RawState {
    double I = 0, R = 0;
};

/// Treatment term: r*I for I <= I0, n beyond the capacity threshold.
double treatment(double I, const RawParams& raw);
RawState raw_rhs(const RawState& s, const RawParams& raw);
/// dS/dt evaluated on the invariant plane S = A/d - I - R.
double raw_dSdt(const RawState& s, const RawParams& raw);

} // namespace sirs

#endif
