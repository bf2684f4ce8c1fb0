#include "sirs/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace sirs {

std::vector<PolyRoot> quadratic_real_roots(double a, double b, double c) {
    std::vector<PolyRoot> out;
    if (a == 0.0) {
        if (b == 0.0) return out; // constant: no isolated roots
        out.push_back({-c / b, 1});
        return out;
    }
    const double disc = b * b - 4.0 * a * c;
    const double merge_tol = 1e-12 * std::max(1.0, b * b);
    if (std::abs(disc) < merge_tol) {
        out.push_back({-b / (2.0 * a), 2});
        return out;
    }
    if (disc < 0.0) return out;
    // cancellation-free form: q = -(b + sign(b) sqrt(disc))/2
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (b + std::copysign(sq, b));
    double r1 = qq / a;
    double r2 = (qq != 0.0) ? c / qq : -b / a - r1;
    if (r1 > r2) std::swap(r1, r2);
    out.push_back({r1, 1});
    out.push_back({r2, 1});
    return out;
}

namespace {

double eval_cubic(double c3, double c2, double c1, double c0, double x) {
    return ((c3 * x + c2) * x + c1) * x + c0;
}

double eval_cubic_d1(double c3, double c2, double c1, double x) {
    return (3.0 * c3 * x + 2.0 * c2) * x + c1;
}

double eval_cubic_d2(double c3, double c2, double x) { return 6.0 * c3 * x + 2.0 * c2; }

// Newton iteration on fn/dfn, bounded step count, returns the refined x.
template <class F, class DF>
double newton(double x, F fn, DF dfn) {
    for (int i = 0; i < 60; ++i) {
        const double f = fn(x);
        const double d = dfn(x);
        if (d == 0.0) break;
        const double step = f / d;
        x -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

} // namespace

std::vector<PolyRoot> cubic_real_roots(double c3, double c2, double c1, double c0) {
    if (c3 == 0.0) throw std::invalid_argument("cubic_real_roots: leading coefficient is zero");
    const double a = c2 / c3, b = c1 / c3, c = c0 / c3;

    Eigen::Matrix3d companion;
    companion << 0, 0, -c,
                 1, 0, -b,
                 0, 1, -a;
    Eigen::EigenSolver<Eigen::Matrix3d> solver(companion);
    const auto lambda = solver.eigenvalues();

    std::vector<double> reals;
    for (int i = 0; i < 3; ++i) {
        const double re = lambda[i].real(), im = lambda[i].imag();
        if (std::abs(im) <= 1e-7 * std::max(1.0, std::abs(re))) reals.push_back(re);
    }
    std::sort(reals.begin(), reals.end());

    // cluster eigenvalues within 1e-7 relative distance into multiple roots
    std::vector<PolyRoot> out;
    std::size_t i = 0;
    while (i < reals.size()) {
        std::size_t j = i + 1;
        while (j < reals.size() &&
               std::abs(reals[j] - reals[j - 1]) <= 1e-7 * std::max(1.0, std::abs(reals[j])))
            ++j;
        const int mult = static_cast<int>(j - i);
        double x = 0;
        for (std::size_t k = i; k < j; ++k) x += reals[k];
        x /= mult;
        if (mult == 1) {
            x = newton(
                x, [&](double t) { return eval_cubic(c3, c2, c1, c0, t); },
                [&](double t) { return eval_cubic_d1(c3, c2, c1, t); });
        } else if (mult == 2) {
            // a double root is a simple zero of the derivative
            x = newton(
                x, [&](double t) { return eval_cubic_d1(c3, c2, c1, t); },
                [&](double t) { return eval_cubic_d2(c3, c2, t); });
        } else {
            x = -a / 3.0;
        }
        out.push_back({x, mult});
        i = j;
    }

    for (const auto& root : out) {
        const double X = std::max(1.0, std::abs(root.x));
        const double scale =
            std::abs(c3) * X * X * X + std::abs(c2) * X * X + std::abs(c1) * X + std::abs(c0);
        if (std::abs(eval_cubic(c3, c2, c1, c0, root.x)) > 1e-9 * std::max(1.0, scale))
            throw std::runtime_error("cubic_real_roots: residual check failed");
    }
    return out;
}

} // namespace sirs
