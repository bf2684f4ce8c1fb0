#include "sirs/params.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sirs {

namespace {

void require(bool ok, const std::string& field, const char* what) {
    if (!ok) throw std::invalid_argument("parameter '" + field + "' " + what);
}

void check_positive(double v, const std::string& field) {
    require(std::isfinite(v), field, "must be finite");
    require(v > 0.0, field, "must be strictly positive");
}

void check_nonnegative(double v, const std::string& field) {
    require(std::isfinite(v), field, "must be finite");
    require(v >= 0.0, field, "must be non-negative");
}

} // namespace

void RawParams::validate() const {
    check_positive(A, "A");
    check_positive(d, "d");
    check_positive(lambda, "lambda");
    check_nonnegative(nu, "nu");
    check_positive(mu, "mu");
    check_nonnegative(theta, "theta");
    check_nonnegative(r, "r");
    check_nonnegative(n, "n");
    check_positive(I0, "I0");
}

void ScaledSub::validate() const {
    check_nonnegative(m, "m");
    check_positive(B, "B");
    check_positive(e, "e");
    check_positive(q, "q");
    require(e > q, "e", "must exceed q (e - q = d/k > 0)");
    check_positive(x0, "x0");
}

void ScaledSat::validate() const {
    check_nonnegative(m, "m");
    check_positive(B, "B");
    check_positive(g, "g");
    check_positive(p, "p");
    require(g > p, "g", "must exceed p (g - p = d/k > 0)");
    check_nonnegative(f, "f");
    check_positive(x0, "x0");
}

std::pair<ScaledSub, ScaledSat> nondimensionalize(const RawParams& raw) {
    raw.validate();
    const double k = raw.k();
    ScaledSub sub;
    sub.m = raw.nu * k / raw.lambda;
    sub.B = raw.lambda * raw.A / (raw.d * k);
    sub.e = (raw.d + raw.mu + raw.r) / k;
    sub.q = (raw.mu + raw.r) / k;
    sub.x0 = raw.lambda * raw.I0 / k;
    ScaledSat sat;
    sat.m = sub.m;
    sat.B = sub.B;
    sat.g = (raw.d + raw.mu) / k;
    sat.p = raw.mu / k;
    sat.f = raw.n * raw.lambda / (k * k);
    sat.x0 = sub.x0;
    sub.validate();
    sat.validate();
    return {sub, sat};
}

RawParams parse_params(std::istream& in) {
    static const char* kFields[] = {"A", "d", "lambda", "nu", "mu", "theta", "r", "n", "I0"};
    std::map<std::string, double> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'name = value'");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        bool known = false;
        for (const char* f : kFields) known = known || key == f;
        if (!known) throw std::invalid_argument("unknown parameter '" + key + "'");
        if (seen.count(key)) throw std::invalid_argument("duplicate parameter '" + key + "'");
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(val, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parameter '" + key + "' has a non-numeric value");
        }
        if (used != val.size())
            throw std::invalid_argument("parameter '" + key + "' has a non-numeric value");
        seen[key] = v;
    }
    for (const char* f : kFields)
        if (!seen.count(f)) throw std::invalid_argument(std::string("missing parameter '") + f + "'");
    RawParams raw{seen["A"], seen["d"], seen["lambda"], seen["nu"], seen["mu"],
                  seen["theta"], seen["r"], seen["n"], seen["I0"]};
    raw.validate();
    return raw;
}

RawParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open parameter file '" + path + "'");
    return parse_params(in);
}

} // namespace sirs
