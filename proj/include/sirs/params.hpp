#ifndef SIRS_PARAMS_HPP
#define SIRS_PARAMS_HPP

#include <iosfwd>
#include <string>
#include <utility>

namespace sirs {

// Dimensional parameters of the S-I-R-S system with nonlinear incidence
// lambda*I*(1+nu*I)*S and a capacity-limited treatment term: proportional
// (r*I) while I <= I0, constant (n) once the capacity is saturated.
struct RawParams {
    double A;      // recruitment rate (population/time)
    double d;      // mortality rate (1/time)
    double lambda; // transmission proportionality (1/(population*time))
    double nu;     // incidence nonlinearity (1/population)
    double mu;     // natural recovery rate (1/time)
    double theta;  // immunity loss rate (1/time)
    double r;      // proportional treatment rate (1/time)
    double n;      // maximal treatment capacity (population/time)
    double I0;     // treatment capacity threshold (population)

    double k() const { return d + theta; }

    /// Throws std::invalid_argument naming the offending field.
    /// A, d, lambda, mu, I0 must be finite and > 0; nu, theta, r, n finite and >= 0.
    void validate() const;
};

// Scaled parameters of the sub-capacity regime:
//   m = nu*k/lambda, B = lambda*A/(d*k), e = (d+mu+r)/k, q = (mu+r)/k,
// with k = d+theta and switching threshold x0 = lambda*I0/k.
struct ScaledSub {
    double m = 0, B = 0, e = 0, q = 0, x0 = 0;
    void validate() const;
};

// Scaled parameters of the saturated regime:
//   g = (d+mu)/k, p = mu/k, f = n*lambda/k^2; m, B, x0 as in ScaledSub.
struct ScaledSat {
    double m = 0, B = 0, g = 0, p = 0, f = 0, x0 = 0;
    void validate() const;
};

/// Both regimes share m, B and x0 exactly.
std::pair<ScaledSub, ScaledSat> nondimensionalize(const RawParams& raw);

/// Parses a flat key/value document ("name = value" lines, '#' comments).
/// Keys must be exactly the RawParams field names; unknown, duplicate or
/// missing keys are an error. The result is validated.
RawParams parse_params(std::istream& in);
RawParams load_params_file(const std::string& path);

} // namespace sirs

#endif
