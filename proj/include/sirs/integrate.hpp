#ifndef SIRS_INTEGRATE_HPP
#define SIRS_INTEGRATE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "sirs/model.hpp"

namespace sirs {

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double time)
        : std::runtime_error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

struct Event {
    double time = 0;
    int direction = 0; // +1 Sub->Sat (x rising through x0), -1 Sat->Sub
};

struct Trajectory {
    std::vector<double> times;   // strictly increasing
    std::vector<State> states;
    std::vector<Regime> regimes; // closed-left convention, ties flagged Sub
    std::vector<Event> events;

    std::size_t size() const { return times.size(); }
    const State& final_state() const { return states.back(); }
};

/// Integrates the piecewise system with the Dormand-Prince 4(5) pair.
/// Switching times at x = x0 are located by bisection on the cubic Hermite
/// dense output to time accuracy 1e-10 and the step is split there; the
/// vector field on the closed surface x = x0 is the Sub field. States are
/// never clamped: a step that would push a component below -1e-9 is retried
/// with a smaller step, and persistent violation raises IntegrationError.
/// Grazing contact (|dx/dt| <= 1e-10 at an event) raises IntegrationError.
/// tol must lie in [1e-12, 1e-3]; t_end > 0; start in the closed quadrant.
Trajectory integrate(const State& start, const ScaledSub& sub, const ScaledSat& sat,
                     double t_end, double tol);

// Generic single-field adaptive core, exposed for oracle-style use in tests
// (e.g. reverse-time integration). No event handling, no positivity guard.
using Field = std::function<State(const State&)>;
Trajectory integrate_field(const Field& f, const State& start, double t_end, double tol);

/// Cubic Hermite interpolation of a step (t0,y0,f0) -> (t1,y1,f1) at t.
State hermite_eval(double t0, const State& y0, const State& f0, double t1, const State& y1,
                   const State& f1, double t);

} // namespace sirs

#endif
