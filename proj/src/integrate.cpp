// Adaptive Dormand-Prince 4(5) integration of the piecewise planar system,
// with switching-surface events located on the cubic Hermite dense output.

#include "sirs/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace sirs {

namespace {

// Dormand-Prince coefficients (RK5(4)7M)
constexpr double A21 = 1.0 / 5.0;
constexpr double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0;
constexpr double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0;
constexpr double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0, A53 = 64448.0 / 6561.0,
                 A54 = -212.0 / 729.0;
constexpr double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0, A63 = 46732.0 / 5247.0,
                 A64 = 49.0 / 176.0, A65 = -5103.0 / 18656.0;
constexpr double B1 = 35.0 / 384.0, B3 = 500.0 / 1113.0, B4 = 125.0 / 192.0,
                 B5 = -2187.0 / 6784.0, B6 = 11.0 / 84.0;
constexpr double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0, E4 = 71.0 / 1920.0,
                 E5 = -17253.0 / 339200.0, E6 = 22.0 / 525.0, E7 = -1.0 / 40.0;

State axpy(const State& y, double h, const State& d) { return {y.x + h * d.x, y.y + h * d.y}; }

struct StepResult {
    State y5;  // 5th-order solution
    State f5;  // field at y5 (FSAL stage)
    double err_norm = 0;
};

// one embedded step; err_norm <= 1 means the local error fits the tolerance
StepResult rk45_step(const Field& f, const State& y, const State& f0, double h, double tol) {
    const State k1 = f0;
    const State k2 = f(axpy(y, h * A21, k1));
    const State k3 = f({y.x + h * (A31 * k1.x + A32 * k2.x), y.y + h * (A31 * k1.y + A32 * k2.y)});
    const State k4 = f({y.x + h * (A41 * k1.x + A42 * k2.x + A43 * k3.x),
                        y.y + h * (A41 * k1.y + A42 * k2.y + A43 * k3.y)});
    const State k5 = f({y.x + h * (A51 * k1.x + A52 * k2.x + A53 * k3.x + A54 * k4.x),
                        y.y + h * (A51 * k1.y + A52 * k2.y + A53 * k3.y + A54 * k4.y)});
    const State k6 =
        f({y.x + h * (A61 * k1.x + A62 * k2.x + A63 * k3.x + A64 * k4.x + A65 * k5.x),
           y.y + h * (A61 * k1.y + A62 * k2.y + A63 * k3.y + A64 * k4.y + A65 * k5.y)});
    StepResult out;
    out.y5 = {y.x + h * (B1 * k1.x + B3 * k3.x + B4 * k4.x + B5 * k5.x + B6 * k6.x),
              y.y + h * (B1 * k1.y + B3 * k3.y + B4 * k4.y + B5 * k5.y + B6 * k6.y)};
    out.f5 = f(out.y5);
    const double ex =
        h * (E1 * k1.x + E3 * k3.x + E4 * k4.x + E5 * k5.x + E6 * k6.x + E7 * out.f5.x);
    const double ey =
        h * (E1 * k1.y + E3 * k3.y + E4 * k4.y + E5 * k5.y + E6 * k6.y + E7 * out.f5.y);
    const double sx = tol * (1.0 + std::max(std::abs(y.x), std::abs(out.y5.x)));
    const double sy = tol * (1.0 + std::max(std::abs(y.y), std::abs(out.y5.y)));
    out.err_norm = std::max(std::abs(ex) / sx, std::abs(ey) / sy);
    return out;
}

double step_growth(double err_norm) {
    if (err_norm <= 0.0) return 5.0;
    return std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
}

double initial_step(const State& y, const State& f, double t_end) {
    const double yn = 1.0 + std::max(std::abs(y.x), std::abs(y.y));
    const double fn = 1.0 + std::max(std::abs(f.x), std::abs(f.y));
    return std::clamp(0.01 * yn / fn, 1e-8, std::min(1.0, t_end));
}

} // namespace

State hermite_eval(double t0, const State& y0, const State& f0, double t1, const State& y1,
                   const State& f1, double t) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return {h00 * y0.x + h10 * h * f0.x + h01 * y1.x + h11 * h * f1.x,
            h00 * y0.y + h10 * h * f0.y + h01 * y1.y + h11 * h * f1.y};
}

Trajectory integrate_field(const Field& f, const State& start, double t_end, double tol) {
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw std::invalid_argument("integrate: t_end must be positive and finite");
    if (!(tol >= 1e-12 && tol <= 1e-3))
        throw std::invalid_argument("integrate: tol must lie in [1e-12, 1e-3]");

    Trajectory tr;
    double t = 0.0;
    State y = start;
    State fy = f(y);
    tr.times.push_back(t);
    tr.states.push_back(y);
    tr.regimes.push_back(Regime::Sub);

    const double h_max = std::max(1.0, 0.05 * t_end);
    double h = std::min(initial_step(y, fy, t_end), h_max);
    long steps = 0;
    while (t < t_end) {
        if (++steps > 20'000'000) throw IntegrationError("integrate: step limit exceeded", t);
        h = std::min({h, h_max, t_end - t});
        if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
            throw IntegrationError("integrate: step size underflow", t);
        const StepResult st = rk45_step(f, y, fy, h, tol);
        if (!std::isfinite(st.y5.x) || !std::isfinite(st.y5.y))
            throw IntegrationError("integrate: state became non-finite", t);
        if (st.err_norm > 1.0) {
            h *= std::min(step_growth(st.err_norm), 0.9);
            continue;
        }
        t += h;
        y = st.y5;
        fy = st.f5;
        tr.times.push_back(t);
        tr.states.push_back(y);
        tr.regimes.push_back(Regime::Sub);
        h *= step_growth(st.err_norm);
    }
    return tr;
}

namespace {

struct PiecewiseCtx {
    const ScaledSub& sub;
    const ScaledSat& sat;
    double x0;

    Field field_for(Regime r) const {
        if (r == Regime::Sub) return [this](const State& s) { return rhs(s, sub); };
        return [this](const State& s) { return rhs(s, sat); };
    }
};

bool crossed(Regime active, double x, double x0) {
    return active == Regime::Sub ? x > x0 : x <= x0;
}

} // namespace

Trajectory integrate(const State& start, const ScaledSub& sub, const ScaledSat& sat,
                     double t_end, double tol) {
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw std::invalid_argument("integrate: t_end must be positive and finite");
    if (!(tol >= 1e-12 && tol <= 1e-3))
        throw std::invalid_argument("integrate: tol must lie in [1e-12, 1e-3]");
    if (!std::isfinite(start.x) || !std::isfinite(start.y) || start.x < 0.0 || start.y < 0.0)
        throw std::invalid_argument("integrate: start must lie in the closed first quadrant");
    if (std::abs(sub.x0 - sat.x0) > 1e-12 * std::max(1.0, std::abs(sub.x0)))
        throw std::invalid_argument("integrate: sub/sat disagree on x0");

    const PiecewiseCtx ctx{sub, sat, sub.x0};
    Trajectory tr;
    double t = 0.0;
    State y = start;
    Regime active = regime_of(y.x, ctx.x0);
    Field f = ctx.field_for(active);
    State fy = f(y);
    tr.times.push_back(t);
    tr.states.push_back(y);
    tr.regimes.push_back(regime_of(y.x, ctx.x0));

    const double h_max = std::max(1.0, 0.05 * t_end);
    double h = std::min(initial_step(y, fy, t_end), h_max);
    long steps = 0;
    double last_event_time = -1.0;
    int events_at_same_time = 0;
    // crossing detection is disarmed inside a small band around the surface
    // right after an event, until the transversal flow has carried the state
    // out of the band; prevents re-triggering on the event state itself
    const double band = std::max(1e-9 * (1.0 + std::abs(ctx.x0)), tol * (1.0 + std::abs(ctx.x0)));
    bool armed = std::abs(y.x - ctx.x0) > band;

    auto transversal_flip = [&](double te, const State& ye) {
        const double dx_out = rhs(ye, sub, sat, active == Regime::Sub ? Regime::Sat : Regime::Sub).x;
        const double dx_in = rhs(ye, sub, sat, active).x;
        if (std::abs(dx_in) <= 1e-10 || std::abs(dx_out) <= 1e-10)
            throw IntegrationError("integrate: grazing contact with the switching surface", te);
        if (dx_in * dx_out < 0.0)
            throw IntegrationError("integrate: sliding motion on the switching surface", te);
        if (std::abs(te - last_event_time) < 1e-8) {
            if (++events_at_same_time > 4)
                throw IntegrationError("integrate: chattering at the switching surface", te);
        } else {
            events_at_same_time = 0;
        }
        last_event_time = te;
        tr.events.push_back({te, active == Regime::Sub ? +1 : -1});
        active = active == Regime::Sub ? Regime::Sat : Regime::Sub;
        f = ctx.field_for(active);
        armed = false;
    };

    while (t < t_end) {
        if (++steps > 20'000'000) throw IntegrationError("integrate: step limit exceeded", t);
        h = std::min({h, h_max, t_end - t});
        if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
            throw IntegrationError("integrate: step size underflow", t);

        const StepResult st = rk45_step(f, y, fy, h, tol);
        if (!std::isfinite(st.y5.x) || !std::isfinite(st.y5.y))
            throw IntegrationError("integrate: state became non-finite", t);
        if (st.err_norm > 1.0) {
            h *= std::min(step_growth(st.err_norm), 0.9);
            continue;
        }

        // forward invariance: no clamping, shrink the step instead;
        // probe the dense output for interior dips and surface crossings
        bool invariant_ok = st.y5.x >= -1e-9 && st.y5.y >= -1e-9;
        bool probe_armed = armed;
        double s_cross = -1.0;
        for (int k = 1; k <= 10 && invariant_ok; ++k) {
            const double s = k / 10.0;
            const State yi = (k == 10) ? st.y5
                                       : hermite_eval(t, y, fy, t + h, st.y5, st.f5, t + s * h);
            if (yi.x < -1e-9 || yi.y < -1e-9) {
                invariant_ok = false;
                break;
            }
            if (!probe_armed && std::abs(yi.x - ctx.x0) > band) probe_armed = true;
            if (probe_armed && s_cross < 0.0 && crossed(active, yi.x, ctx.x0)) s_cross = s;
        }
        if (!invariant_ok) {
            h *= 0.5;
            continue;
        }

        if (s_cross >= 0.0) {
            // bisect the event function x(t) - x0 on the Hermite interpolant
            double lo = s_cross - 0.1, hi = s_cross;
            if (lo < 0.0) lo = 0.0;
            while ((hi - lo) * h > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const State ym = hermite_eval(t, y, fy, t + h, st.y5, st.f5, t + mid * h);
                if (crossed(active, ym.x, ctx.x0))
                    hi = mid;
                else
                    lo = mid;
            }
            const double s_ev = hi;
            const double h_ev = s_ev * h;
            if (h_ev <= 1e-13 * std::max(1.0, std::abs(t))) {
                // crossing at the very start of the step: flip and retry
                transversal_flip(t, y);
                fy = f(y);
                continue;
            }
            // split the step at the event: re-take a step of exactly h_ev
            const StepResult ev = rk45_step(f, y, fy, h_ev, tol);
            t += h_ev;
            y = ev.y5;
            tr.times.push_back(t);
            tr.states.push_back(y);
            tr.regimes.push_back(regime_of(y.x, ctx.x0));
            transversal_flip(t, y);
            fy = f(y);
            continue;
        }

        t += h;
        y = st.y5;
        fy = st.f5;
        armed = probe_armed;
        tr.times.push_back(t);
        tr.states.push_back(y);
        tr.regimes.push_back(regime_of(y.x, ctx.x0));
        h *= step_growth(st.err_norm);
    }
    return tr;
}

} // namespace sirs
