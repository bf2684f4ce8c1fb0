#include "sirs/bifurcation.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace sirs {

double e_sn(const ScaledSub& p) {
    const double axis_num = p.B * p.m - p.q - 1.0;
    if (axis_num <= 0.0)
        throw std::invalid_argument(
            "e_sn: m <= (1+q)/B, the fold lies at non-positive x and never enters the quadrant");
    const double b = 1.0 + p.q - p.B * p.m;
    return p.B + b * b / (4.0 * p.m * (1.0 + p.q));
}

double fold_x(const ScaledSub& p) {
    return (p.B * p.m - p.q - 1.0) / (2.0 * p.m * (1.0 + p.q));
}

SotomayorReport sotomayor(const ScaledSub& p) {
    SotomayorReport rep;
    rep.e_star = e_sn(p);
    if (std::abs(p.e - rep.e_star) > 1e-10 * std::max(1.0, std::abs(rep.e_star)))
        throw std::invalid_argument("sotomayor: e is not at the fold value e_sn");
    rep.x_star = fold_x(p);
    rep.y_star = p.q * rep.x_star;

    const Mat2 J = jacobian({rep.x_star, rep.y_star}, p);
    const double scale = std::max({1.0, std::abs(J.a00), std::abs(J.a01)});
    if (std::abs(J.det()) > 1e-8 * scale * scale)
        throw std::runtime_error("sotomayor: zero eigenvalue not found at the fold point");

    rep.v1 = 1.0;
    rep.v2 = p.q;

    // left null vector of J: perpendicular to the better-conditioned row of J^T
    double w_raw[2];
    const double n1 = J.a00 * J.a00 + J.a10 * J.a10;
    const double n2 = J.a01 * J.a01 + J.a11 * J.a11;
    if (n1 >= n2) {
        w_raw[0] = J.a10;
        w_raw[1] = -J.a00;
    } else {
        w_raw[0] = J.a11;
        w_raw[1] = -J.a01;
    }
    if (w_raw[0] == 0.0 && w_raw[1] == 0.0)
        throw std::runtime_error("sotomayor: left null vector is degenerate");
    if (std::abs(w_raw[0]) < 1e-12 * std::hypot(w_raw[0], w_raw[1]))
        throw std::runtime_error("sotomayor: left null vector cannot be normalized to w1 = q");
    const double s = p.q / w_raw[0];
    rep.w1 = p.q;
    rep.w2 = w_raw[1] * s;

    // F_e = (-x*, 0)
    rep.wFe = rep.w1 * (-rep.x_star);
    rep.ref_wFe = -p.q * rep.x_star;

    // D2F(v,v): second directional derivative of the field along v (the second
    // component is linear and drops out)
    const double a20 = -2.0 + 2.0 * p.B * p.m - 6.0 * p.m * rep.x_star - 2.0 * p.m * rep.y_star;
    const double a11 = -1.0 - 2.0 * p.m * rep.x_star;
    const double d2 = a20 * rep.v1 * rep.v1 + 2.0 * a11 * rep.v1 * rep.v2; // + 0 * v2^2

    // cross-check against second-order central differences along v
    {
        const double h = 1e-4;
        auto f1 = [&](double t) {
            const State z{rep.x_star + t * rep.v1, rep.y_star + t * rep.v2};
            return rhs(z, p).x;
        };
        const double fd = (f1(h) - 2.0 * f1(0.0) + f1(-h)) / (h * h);
        if (std::abs(fd - d2) > 1e-5 * std::max(1.0, std::abs(d2)))
            throw std::runtime_error("sotomayor: finite-difference check of D2F(v,v) failed");
    }
    rep.wD2F = rep.w1 * d2;
    rep.ref_wD2F =
        (2.0 * p.B * p.m * p.q - 3.0 * p.q * p.q - 2.0 * p.q - p.q * p.q * p.q) / (1.0 + p.q);

    rep.ref_w2 = rep.x_star + p.m * rep.x_star * rep.x_star;
    const double wn = std::hypot(rep.w1, rep.w2);
    const double rn = std::hypot(p.q, rep.ref_w2);
    rep.w_ref_cross = (wn > 0.0 && rn > 0.0)
                          ? (rep.w1 * rep.ref_w2 - rep.w2 * p.q) / (wn * rn)
                          : 0.0;

    rep.verdict = std::abs(rep.wFe) > 1e-8 && std::abs(rep.wD2F) > 1e-8;
    return rep;
}

ScanResult scan(const RawParams& base, const std::string& parameter, double lo, double hi,
                int steps) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::invalid_argument("scan: range must be finite and non-empty");
    if (steps < 2) throw std::invalid_argument("scan: steps must be at least 2");

    double RawParams::* field = nullptr;
    if (parameter == "r")
        field = &RawParams::r;
    else if (parameter == "A")
        field = &RawParams::A;
    else if (parameter == "nu")
        field = &RawParams::nu;
    else if (parameter == "n")
        field = &RawParams::n;
    else if (parameter == "I0")
        field = &RawParams::I0;
    else
        throw std::invalid_argument("scan: parameter must be one of r, A, nu, n, I0");

    ScanResult result;
    result.parameter = parameter;
    result.samples.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        ScanSample sample;
        sample.value = lo + (hi - lo) * i / (steps - 1);
        RawParams raw = base;
        raw.*field = sample.value;
        std::tie(sample.sub, sample.sat) = nondimensionalize(raw);
        sample.cat = catalog(sample.sub, sample.sat);
        sample.reports.push_back(classify(sample.cat.disease_free, sample.sub, sample.sat));
        for (const auto& eq : sample.cat.endemic)
            sample.reports.push_back(classify(eq, sample.sub, sample.sat));
        result.samples.push_back(std::move(sample));
    }
    return result;
}

} // namespace sirs
