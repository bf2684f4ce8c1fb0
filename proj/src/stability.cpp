#include "sirs/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sirs {

std::string to_string(StabilityLabel l) {
    switch (l) {
        case StabilityLabel::StableNode: return "stable_node";
        case StabilityLabel::StableFocus: return "stable_focus";
        case StabilityLabel::UnstableNode: return "unstable_node";
        case StabilityLabel::UnstableFocus: return "unstable_focus";
        case StabilityLabel::Saddle: return "saddle";
        case StabilityLabel::SaddleNodeAttracting: return "saddle_node_attracting";
        case StabilityLabel::SaddleNodeRepelling: return "saddle_node_repelling";
        case StabilityLabel::DegenerateUnresolved: return "degenerate_unresolved";
    }
    return "?";
}

std::string to_string(DulacCondition c) {
    return c == DulacCondition::Cond1 ? "cond1" : "cond2";
}

std::pair<std::complex<double>, std::complex<double>> eigenvalues(const Mat2& J) {
    if (J.a01 == 0.0 || J.a10 == 0.0) // triangular: diagonal entries, exactly
        return {std::complex<double>(J.a00, 0.0), std::complex<double>(J.a11, 0.0)};
    const double tr = J.trace(), det = J.det();
    const double disc = tr * tr - 4.0 * det;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double l1 = 0.5 * (tr - sq), l2 = 0.5 * (tr + sq);
        return {std::complex<double>(l1, 0.0), std::complex<double>(l2, 0.0)};
    }
    const double im = 0.5 * std::sqrt(-disc);
    return {std::complex<double>(0.5 * tr, -im), std::complex<double>(0.5 * tr, im)};
}

namespace {

double frob2(const Mat2& J) {
    return J.a00 * J.a00 + J.a01 * J.a01 + J.a10 * J.a10 + J.a11 * J.a11;
}

double note1_value(const ScaledSub& p, double x) {
    return x * (2.0 * p.m * (1.0 + p.q) * x + 1.0 + p.q - p.B * p.m);
}

double note2_value(const ScaledSub& p, double x) {
    const double q1 = p.q + 1.0;
    return (q1 * q1 - p.B * p.m) * x + (p.e - p.B) * (p.q + 2.0) - q1;
}

// second partials of the first component, shared by both regimes
double fxx(double x, double y, double m, double B) {
    return -2.0 + 2.0 * B * m - 6.0 * m * x - 2.0 * m * y;
}
double fxy(double x, double m) { return -1.0 - 2.0 * m * x; }

StabilityReport base_report(const Equilibrium& eq, const Mat2& J) {
    StabilityReport rep;
    rep.equilibrium = eq;
    rep.trace = J.trace();
    rep.determinant = J.det();
    std::tie(rep.eig1, rep.eig2) = eigenvalues(J);
    return rep;
}

// generic degenerate point: report the quadratic Taylor data and leave the
// label unresolved
StabilityReport degenerate_generic(const Equilibrium& eq, const Mat2& J, double m, double B) {
    StabilityReport rep = base_report(eq, J);
    rep.label = StabilityLabel::DegenerateUnresolved;
    NormalForm nf;
    nf.a10 = J.a00;
    nf.a01 = J.a01;
    nf.a20 = fxx(eq.x, eq.y, m, B);
    nf.a11 = fxy(eq.x, m);
    nf.b10 = J.a10;
    nf.b01 = J.a11;
    nf.epsilon = rep.trace;
    if (std::abs(1.0 - nf.a10) > 1e-9) {
        nf.c20 = (nf.a20 + nf.b10 * nf.a11) / (1.0 - nf.a10);
        nf.d01 = nf.b10 / (1.0 - nf.a10);
    } else {
        nf.c20 = std::numeric_limits<double>::quiet_NaN();
        nf.d01 = std::numeric_limits<double>::quiet_NaN();
    }
    rep.normal_form = nf;
    return rep;
}

} // namespace

StabilityReport analyze_disease_free_degenerate(const ScaledSub& p) {
    if (std::abs(p.B - p.e) > 1e-9 * std::max(1.0, std::abs(p.B)))
        throw std::invalid_argument("analyze_disease_free_degenerate: requires B = e");
    const Equilibrium e0{0.0, 0.0, Regime::Sub, Multiplicity::Simple, true};
    StabilityReport rep = base_report(e0, jacobian({0.0, 0.0}, p));

    NormalForm nf;
    nf.a10 = 0.0;
    nf.a01 = 0.0;
    nf.a20 = -2.0 + 2.0 * p.B * p.m;
    nf.a11 = -1.0;
    nf.b10 = p.q;
    nf.b01 = -1.0;
    // drift coefficient on the slow manifold y ~ qx of the reduced expansion
    const double c = 2.0 * (p.B * p.m - 1.0) - p.q;
    nf.c20 = c;
    nf.d01 = -1.0; // hyperbolic eigenvalue
    nf.epsilon = -1.0;
    rep.normal_form = nf;
    rep.paper_criterion = p.B * p.m - 1.0;

    if (std::abs(c) < 1e-9)
        rep.label = StabilityLabel::DegenerateUnresolved;
    else if (c < 0.0)
        rep.label = StabilityLabel::SaddleNodeAttracting;
    else
        rep.label = StabilityLabel::SaddleNodeRepelling;
    return rep;
}

StabilityReport analyze_double_point(const Equilibrium& eq_star, const ScaledSub& p) {
    if (eq_star.regime != Regime::Sub || eq_star.multiplicity != Multiplicity::Double)
        throw std::invalid_argument("analyze_double_point: requires a Sub-regime double point");
    const Mat2 J = jacobian({eq_star.x, eq_star.y}, p);
    StabilityReport rep = base_report(eq_star, J);

    NormalForm nf;
    nf.a10 = J.a00;
    nf.a01 = J.a01;
    nf.a20 = fxx(eq_star.x, eq_star.y, p.m, p.B);
    nf.a11 = fxy(eq_star.x, p.m);
    nf.b10 = p.q;
    nf.b01 = -1.0;
    nf.epsilon = note2_value(p, eq_star.x);

    const double degeneracy = -nf.a10 - p.q * nf.a01; // equals -det(J), must vanish
    if (std::abs(degeneracy) > 1e-9 * std::max(1.0, frob2(J)))
        throw std::invalid_argument("analyze_double_point: point is not degenerate");

    if (std::abs(1.0 - nf.a10) < 1e-9) {
        nf.c20 = std::numeric_limits<double>::quiet_NaN();
        nf.d01 = std::numeric_limits<double>::quiet_NaN();
        rep.normal_form = nf;
        rep.label = StabilityLabel::DegenerateUnresolved;
        return rep;
    }
    nf.c20 = (nf.a20 + p.q * nf.a11) / (1.0 - nf.a10);
    nf.d01 = p.q / (1.0 - nf.a10);
    rep.normal_form = nf;
    rep.note1_p = note1_value(p, eq_star.x);
    rep.note2_q = nf.epsilon;

    if (std::abs(nf.c20) < 1e-9)
        rep.label = StabilityLabel::DegenerateUnresolved;
    else if (nf.a10 > 1.0 && nf.c20 < 0.0)
        rep.label = StabilityLabel::SaddleNodeRepelling;
    else if (nf.a10 < 1.0 && nf.c20 > 0.0)
        rep.label = StabilityLabel::SaddleNodeAttracting;
    else
        rep.label = StabilityLabel::DegenerateUnresolved;
    return rep;
}

State double_point_transformed_field(const State& uv1, const Equilibrium& eq_star,
                                     const ScaledSub& p) {
    const Mat2 J = jacobian({eq_star.x, eq_star.y}, p);
    const double a10 = J.a00, a01 = J.a01, b10 = J.a10;
    const double detP = 1.0 + b10 * a01; // det of [[1, -a01], [b10, 1]]
    if (std::abs(detP) < 1e-12)
        throw std::invalid_argument("double_point_transformed_field: singular transformation");
    const double u = uv1.x - a01 * uv1.y;
    const double v = b10 * uv1.x + uv1.y;
    const State w = rhs({eq_star.x + u, eq_star.y + v}, p);
    const double scale = -(a10 + 1.0); // dt = -(a10+1) dtau
    return {scale * (w.x + a01 * w.y) / detP, scale * (-b10 * w.x + w.y) / detP};
}

StabilityReport classify(const Equilibrium& eq, const ScaledSub& sub, const ScaledSat& sat) {
    const Mat2 J = jacobian({eq.x, eq.y}, sub, sat, eq.regime);
    const double tr = J.trace(), det = J.det();
    const double det_tol = 1e-9 * std::max(1.0, frob2(J));
    const double tr_tol = 1e-9 * std::max(1.0, std::sqrt(frob2(J)));

    if (std::abs(det) < det_tol) {
        // degenerate handlers own every near-zero determinant so a fold is
        // never misread as a weak node
        const bool disease_free = eq.regime == Regime::Sub && eq.x == 0.0 && eq.y == 0.0;
        StabilityReport rep;
        if (disease_free && std::abs(sub.B - sub.e) <= 1e-9 * std::max(1.0, std::abs(sub.B)))
            rep = analyze_disease_free_degenerate(sub);
        else if (eq.regime == Regime::Sub && eq.multiplicity == Multiplicity::Double)
            rep = analyze_double_point(eq, sub);
        else
            rep = degenerate_generic(eq, J, sub.m, sub.B);
        if (eq.regime == Regime::Sub && eq.x > 0.0) {
            rep.note1_p = note1_value(sub, eq.x);
            rep.note2_q = note2_value(sub, eq.x);
        }
        return rep;
    }

    StabilityReport rep = base_report(eq, J);
    if (eq.regime == Regime::Sub && eq.x > 0.0) {
        rep.note1_p = note1_value(sub, eq.x);
        rep.note2_q = note2_value(sub, eq.x);
    }
    if (det < 0.0) {
        rep.label = StabilityLabel::Saddle;
        return rep;
    }
    if (std::abs(tr) <= tr_tol) {
        rep.label = StabilityLabel::DegenerateUnresolved; // center-like pair
        return rep;
    }
    const bool node = tr * tr - 4.0 * det >= 0.0;
    if (tr < 0.0)
        rep.label = node ? StabilityLabel::StableNode : StabilityLabel::StableFocus;
    else
        rep.label = node ? StabilityLabel::UnstableNode : StabilityLabel::UnstableFocus;
    return rep;
}

std::vector<DulacCertificate> dulac_certificates(const ScaledSub& sub, const ScaledSat& sat) {
    std::vector<DulacCertificate> out;
    DulacCertificate c1;
    c1.condition = DulacCondition::Cond1;
    const double contact_margin = (1.0 + sub.q) / sub.B - sub.m;
    c1.holds = sub.e - sub.B > 0.0 && contact_margin >= 0.0;
    c1.witness = {{"e_minus_B", sub.e - sub.B}, {"contact_margin", contact_margin}};
    out.push_back(std::move(c1));

    DulacCertificate c2;
    c2.condition = DulacCondition::Cond2;
    c2.holds = sat.B < 1.0 && sat.g > 1.0 && sat.m * sat.B < 1.0;
    c2.witness = {{"one_minus_B", 1.0 - sat.B},
                  {"g_minus_one", sat.g - 1.0},
                  {"one_minus_mB", 1.0 - sat.m * sat.B}};
    out.push_back(std::move(c2));
    return out;
}

double dulac_divergence_sub(double x, double y, const ScaledSub& p) {
    return (-p.m * y * y + (p.m * p.B - 1.0 - 2.0 * p.m * x) * y - p.q) / (y * y);
}

double dulac_divergence_sat(double x, double y, const ScaledSat& p) {
    // div(D*F) for D = 1/(x0*y), from the exact partial derivatives
    const double ycoef = p.B - p.g - 2.0 * x + 2.0 * p.B * p.m * x - 3.0 * p.m * x * x;
    const double num = -(1.0 + 2.0 * p.m * x) * y * y + ycoef * y - p.p * x - p.f;
    return num / (p.x0 * y * y);
}

namespace {

template <class F>
GridCheck grid_check(F divergence, double x_max, double y_max, int nx, int ny) {
    GridCheck gc;
    gc.max_value = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= nx; ++i) {
        const double x = x_max * i / nx;
        for (int j = 1; j <= ny; ++j) {
            const double y = y_max * j / ny;
            const double v = divergence(x, y);
            ++gc.points;
            if (v > gc.max_value) {
                gc.max_value = v;
                gc.at_x = x;
                gc.at_y = y;
            }
            if (v >= 0.0) gc.all_negative = false;
        }
    }
    return gc;
}

} // namespace

GridCheck dulac_grid_check_sub(const ScaledSub& p, double x_max, double y_max, int nx, int ny) {
    return grid_check([&](double x, double y) { return dulac_divergence_sub(x, y, p); }, x_max,
                      y_max, nx, ny);
}

GridCheck dulac_grid_check_sat(const ScaledSat& p, double x_max, double y_max, int nx, int ny) {
    return grid_check([&](double x, double y) { return dulac_divergence_sat(x, y, p); }, x_max,
                      y_max, nx, ny);
}

} // namespace sirs
