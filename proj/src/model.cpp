#include "sirs/model.hpp"

#include <cmath>
#include <stdexcept>

namespace sirs {

namespace {

void check_state(const State& s) {
    if (!std::isfinite(s.x) || !std::isfinite(s.y))
        throw std::invalid_argument("non-finite state");
}

} // namespace

Regime regime_of(double x, double x0) {
    if (std::abs(x - x0) < 1e-12) return Regime::Sub;
    return x <= x0 ? Regime::Sub : Regime::Sat;
}

State rhs(const State& s, const ScaledSub& p) {
    check_state(s);
    const double incidence = s.x * (1.0 + p.m * s.x) * (p.B - s.x - s.y);
    return {incidence - p.e * s.x, p.q * s.x - s.y};
}

State rhs(const State& s, const ScaledSat& p) {
    check_state(s);
    const double incidence = s.x * (1.0 + p.m * s.x) * (p.B - s.x - s.y);
    return {incidence - p.g * s.x - p.f, p.p * s.x - s.y + p.f};
}

State rhs(const State& s, const ScaledSub& sub, const ScaledSat& sat, Regime regime) {
    return regime == Regime::Sub ? rhs(s, sub) : rhs(s, sat);
}

namespace {

// d/dx and d/dy of x(1+mx)(B-x-y), shared by both regimes.
void incidence_partials(double x, double y, double m, double B, double& fx, double& fy) {
    fx = B - 2.0 * x - y + 2.0 * B * m * x - 3.0 * m * x * x - 2.0 * m * x * y;
    fy = -x - m * x * x;
}

} // namespace

Mat2 jacobian(const State& s, const ScaledSub& p) {
    check_state(s);
    Mat2 J;
    incidence_partials(s.x, s.y, p.m, p.B, J.a00, J.a01);
    J.a00 -= p.e;
    J.a10 = p.q;
    J.a11 = -1.0;
    return J;
}

Mat2 jacobian(const State& s, const ScaledSat& p) {
    check_state(s);
    Mat2 J;
    incidence_partials(s.x, s.y, p.m, p.B, J.a00, J.a01);
    J.a00 -= p.g;
    J.a10 = p.p;
    J.a11 = -1.0;
    return J;
}

Mat2 jacobian(const State& s, const ScaledSub& sub, const ScaledSat& sat, Regime regime) {
    return regime == Regime::Sub ? jacobian(s, sub) : jacobian(s, sat);
}

double treatment(double I, const RawParams& raw) {
    return I <= raw.I0 ? raw.r * I : raw.n;
}

RawState raw_rhs(const RawState& s, const RawParams& raw) {
    if (!std::isfinite(s.I) || !std::isfinite(s.R))
        throw std::invalid_argument("non-finite state");
    const double S = raw.A / raw.d - s.I - s.R;
    const double incidence = raw.lambda * s.I * (1.0 + raw.nu * s.I) * S;
    const double T = treatment(s.I, raw);
    return {incidence - (raw.d + raw.mu) * s.I - T,
            raw.mu * s.I - raw.d * s.R + T - raw.theta * s.R};
}

double raw_dSdt(const RawState& s, const RawParams& raw) {
    const double S = raw.A / raw.d - s.I - s.R;
    const double incidence = raw.lambda * s.I * (1.0 + raw.nu * s.I) * S;
    return raw.A - raw.d * S - incidence + raw.theta * s.R;
}

} // namespace sirs
