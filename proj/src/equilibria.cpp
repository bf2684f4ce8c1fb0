#include "sirs/equilibria.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace sirs {

std::string to_string(SubCase c) {
    switch (c) {
        case SubCase::NoPositiveSmallM: return "no_positive_small_m";
        case SubCase::TwoPositive: return "two_positive";
        case SubCase::DoublePositive: return "double_positive";
        case SubCase::NoPositiveLargeE: return "no_positive_large_e";
        case SubCase::OnePositive: return "one_positive";
    }
    return "?";
}

double r0(const ScaledSub& p) { return p.B / p.e; }

void sub_quadratic_coeffs(const ScaledSub& p, double& a, double& b, double& c) {
    a = p.m * (1.0 + p.q);
    b = 1.0 + p.q - p.B * p.m;
    c = p.e - p.B;
}

double sub_h(const ScaledSub& p, double x) {
    double a, b, c;
    sub_quadratic_coeffs(p, a, b, c);
    return (a * x + b) * x + c;
}

double sub_h_deriv(const ScaledSub& p, double x) {
    double a, b, c;
    sub_quadratic_coeffs(p, a, b, c);
    return 2.0 * a * x + b;
}

double sub_discriminant(const ScaledSub& p) {
    double a, b, c;
    sub_quadratic_coeffs(p, a, b, c);
    return b * b - 4.0 * a * c;
}

void sat_cubic_coeffs(const ScaledSat& p, double& c3, double& c2, double& c1, double& c0) {
    c3 = p.m * (1.0 + p.p);
    c2 = 1.0 + p.p + p.m * p.f - p.B * p.m;
    c1 = p.g + p.f - p.B;
    c0 = p.f;
}

double sat_F(const ScaledSat& p, double x) {
    double c3, c2, c1, c0;
    sat_cubic_coeffs(p, c3, c2, c1, c0);
    return ((c3 * x + c2) * x + c1) * x + c0;
}

double sat_F_deriv(const ScaledSat& p, double x) {
    double c3, c2, c1, c0;
    sat_cubic_coeffs(p, c3, c2, c1, c0);
    return (3.0 * c3 * x + 2.0 * c2) * x + c1;
}

std::vector<PolyRoot> solve_sub_endemic(const ScaledSub& p) {
    std::vector<PolyRoot> out;
    if (p.m == 0.0) {
        // h degenerates to (1+q)x + (e-B): one positive root iff B > e
        if (p.B > p.e) out.push_back({(p.B - p.e) / (1.0 + p.q), 1});
        return out;
    }
    double a, b, c;
    sub_quadratic_coeffs(p, a, b, c);
    for (const auto& root : quadratic_real_roots(a, b, c))
        if (root.x > 0.0) out.push_back(root);
    return out;
}

std::vector<PolyRoot> solve_sat_endemic(const ScaledSat& p) {
    std::vector<PolyRoot> out;
    double c3, c2, c1, c0;
    sat_cubic_coeffs(p, c3, c2, c1, c0);
    const auto all = (p.m == 0.0) ? quadratic_real_roots(c2, c1, c0)
                                  : cubic_real_roots(c3, c2, c1, c0);
    for (const auto& root : all)
        if (root.x > 0.0) out.push_back(root);
    return out;
}

DepressedSat sat_depressed(const ScaledSat& p) {
    DepressedSat d;
    double c3, c2, c1, c0;
    sat_cubic_coeffs(p, c3, c2, c1, c0);
    if (c3 == 0.0) return d;
    d.applies = std::abs(c2) <= 1e-9 * std::max(1.0, std::abs(p.B * p.m));
    d.s = c1 / c3;
    d.t = c0 / c3;
    d.disc = d.t * d.t / 4.0 + d.s * d.s * d.s / 27.0;
    d.double_root = std::cbrt(d.t / 2.0);
    return d;
}

namespace {

Multiplicity to_multiplicity(const PolyRoot& r) {
    // positive equilibrium roots are at most double: a triple root of F
    // would force f = -m(1+p) x^3 < 0
    assert(r.multiplicity <= 2);
    return r.multiplicity >= 2 ? Multiplicity::Double : Multiplicity::Simple;
}

} // namespace

EquilibriumCatalog catalog(const ScaledSub& sub, const ScaledSat& sat) {
    auto shared = [](double a, double b) {
        return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    if (!shared(sub.m, sat.m) || !shared(sub.B, sat.B) || !shared(sub.x0, sat.x0))
        throw std::invalid_argument("catalog: sub/sat parameter sets do not share m, B, x0");

    EquilibriumCatalog cat;
    cat.r0 = r0(sub);
    cat.disease_free = Equilibrium{0.0, 0.0, Regime::Sub, Multiplicity::Simple, true};

    const auto sub_roots = solve_sub_endemic(sub);
    for (const auto& root : sub_roots) {
        Equilibrium eq{root.x, sub.q * root.x, Regime::Sub, to_multiplicity(root),
                       root.x > 0.0 && root.x <= sub.x0};
        cat.endemic.push_back(eq);
    }
    for (const auto& root : solve_sat_endemic(sat)) {
        Equilibrium eq{root.x, sat.p * root.x + sat.f, Regime::Sat, to_multiplicity(root),
                       root.x > sat.x0};
        cat.endemic.push_back(eq);
    }
    std::sort(cat.endemic.begin(), cat.endemic.end(),
              [](const Equilibrium& l, const Equilibrium& r) { return l.x < r.x; });

    // case assignment by the primitive signs (h(0) = e-B, axis = Bm-q-1, disc),
    // with the disc branch read off the solved root structure so the tag can
    // never disagree with the returned roots
    const double axis_num = sub.B * sub.m - sub.q - 1.0;
    if (sub.e < sub.B) {
        cat.sub_case = SubCase::OnePositive;
    } else if (sub.e == sub.B) {
        cat.sub_case = axis_num > 0.0 ? SubCase::OnePositive : SubCase::NoPositiveSmallM;
    } else if (axis_num <= 0.0 || sub.m == 0.0) {
        cat.sub_case = SubCase::NoPositiveSmallM;
    } else if (sub_roots.empty()) {
        cat.sub_case = SubCase::NoPositiveLargeE;
    } else if (sub_roots.size() == 1 && sub_roots[0].multiplicity == 2) {
        cat.sub_case = SubCase::DoublePositive;
    } else {
        assert(sub_roots.size() == 2);
        cat.sub_case = SubCase::TwoPositive;
    }
    return cat;
}

Thresholds thresholds_p1_p2(const ScaledSub& p) {
    Thresholds t;
    t.p1_hat = (p.q + 1.0) / (p.m * p.e) + 2.0 * p.x0 * (1.0 + p.q) / p.e;
    const double w = 1.0 + p.m * p.x0;
    t.p2_hat = 1.0 / w + p.m * (1.0 + p.q) * p.x0 * p.x0 / (p.e * w) + (p.q + 1.0) * p.x0 / w;
    return t;
}

} // namespace sirs
