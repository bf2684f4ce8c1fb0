#include "sirs/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace sirs {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

nlohmann::json jnum(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

namespace {

std::string regime_name(Regime r) { return r == Regime::Sub ? "sub" : "sat"; }
std::string mult_name(Multiplicity m) {
    return m == Multiplicity::Double ? "double" : "simple";
}

} // namespace

nlohmann::json to_json(const RawParams& raw) {
    return {{"A", jnum(raw.A)},         {"d", jnum(raw.d)},   {"lambda", jnum(raw.lambda)},
            {"nu", jnum(raw.nu)},       {"mu", jnum(raw.mu)}, {"theta", jnum(raw.theta)},
            {"r", jnum(raw.r)},         {"n", jnum(raw.n)},   {"I0", jnum(raw.I0)}};
}

nlohmann::json to_json(const ScaledSub& p) {
    return {{"m", jnum(p.m)}, {"B", jnum(p.B)}, {"e", jnum(p.e)}, {"q", jnum(p.q)},
            {"x0", jnum(p.x0)}};
}

nlohmann::json to_json(const ScaledSat& p) {
    return {{"m", jnum(p.m)}, {"B", jnum(p.B)}, {"g", jnum(p.g)}, {"p", jnum(p.p)},
            {"f", jnum(p.f)}, {"x0", jnum(p.x0)}};
}

nlohmann::json to_json(const Equilibrium& e) {
    return {{"x", jnum(e.x)},
            {"y", jnum(e.y)},
            {"regime", regime_name(e.regime)},
            {"multiplicity", mult_name(e.multiplicity)},
            {"admissible", e.admissible}};
}

nlohmann::json to_json(const StabilityReport& r) {
    nlohmann::json j{{"trace", jnum(r.trace)},
                     {"determinant", jnum(r.determinant)},
                     {"eigenvalues",
                      {{jnum(r.eig1.real()), jnum(r.eig1.imag())},
                       {jnum(r.eig2.real()), jnum(r.eig2.imag())}}},
                     {"label", to_string(r.label)}};
    if (r.normal_form) {
        const NormalForm& n = *r.normal_form;
        j["normal_form"] = {{"a10", jnum(n.a10)}, {"a01", jnum(n.a01)}, {"a20", jnum(n.a20)},
                            {"a11", jnum(n.a11)}, {"b10", jnum(n.b10)}, {"b01", jnum(n.b01)},
                            {"c20", jnum(n.c20)}, {"d01", jnum(n.d01)},
                            {"epsilon", jnum(n.epsilon)}};
    }
    if (r.note1_p) j["note1_p"] = jnum(*r.note1_p);
    if (r.note2_q) j["note2_q"] = jnum(*r.note2_q);
    if (r.paper_criterion) j["reference_criterion"] = jnum(*r.paper_criterion);
    return j;
}

nlohmann::json to_json(const DulacCertificate& c) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [name, value] : c.witness) w[name] = jnum(value);
    return {{"condition", to_string(c.condition)}, {"holds", c.holds}, {"witness", w}};
}

nlohmann::json to_json(const SotomayorReport& s) {
    return {{"e_star", jnum(s.e_star)},
            {"x_star", jnum(s.x_star)},
            {"y_star", jnum(s.y_star)},
            {"v", {jnum(s.v1), jnum(s.v2)}},
            {"w", {jnum(s.w1), jnum(s.w2)}},
            {"wFe", jnum(s.wFe)},
            {"wD2F", jnum(s.wD2F)},
            {"ref_wFe", jnum(s.ref_wFe)},
            {"ref_wD2F", jnum(s.ref_wD2F)},
            {"ref_w2", jnum(s.ref_w2)},
            {"w_ref_cross", jnum(s.w_ref_cross)},
            {"verdict", s.verdict}};
}

namespace {

nlohmann::json grid_to_json(const GridCheck& g) {
    return {{"all_negative", g.all_negative},
            {"max_value", jnum(g.max_value)},
            {"at", {jnum(g.at_x), jnum(g.at_y)}},
            {"points", g.points}};
}

} // namespace

nlohmann::json analyze_document(const RawParams& raw) {
    const auto [sub, sat] = nondimensionalize(raw);
    const EquilibriumCatalog cat = catalog(sub, sat);
    const Thresholds th = thresholds_p1_p2(sub);

    nlohmann::json doc;
    doc["params"] = to_json(raw);
    doc["scaled"] = {{"sub", to_json(sub)}, {"sat", to_json(sat)}};
    doc["R0"] = jnum(cat.r0);
    doc["theorem1_case"] = to_string(cat.sub_case);
    doc["P1_hat"] = jnum(th.p1_hat);
    doc["P2_hat"] = jnum(th.p2_hat);

    nlohmann::json discrepancies = nlohmann::json::array();

    auto entry = [&](const Equilibrium& eq) {
        nlohmann::json e = to_json(eq);
        const StabilityReport rep = classify(eq, sub, sat);
        e["classification"] = to_json(rep);
        if (rep.paper_criterion) {
            const double c = rep.normal_form ? rep.normal_form->c20 : 0.0;
            discrepancies.push_back(
                {{"id", "degenerate_disease_free_drift_vs_reference"},
                 {"computed", jnum(c)},
                 {"reference", jnum(*rep.paper_criterion)},
                 {"signs_agree", c * *rep.paper_criterion > 0.0}});
        }
        if (rep.note1_p) {
            discrepancies.push_back({{"id", "note1_sign_vs_det"},
                                     {"note1_p", jnum(*rep.note1_p)},
                                     {"determinant", jnum(rep.determinant)},
                                     {"signs_agree", *rep.note1_p * rep.determinant > 0.0}});
        }
        if (rep.note2_q) {
            discrepancies.push_back({{"id", "note2_sign_vs_trace"},
                                     {"note2_q", jnum(*rep.note2_q)},
                                     {"trace", jnum(rep.trace)},
                                     {"signs_agree", *rep.note2_q * rep.trace > 0.0}});
        }
        return e;
    };

    doc["disease_free"] = entry(cat.disease_free);
    doc["endemic"] = nlohmann::json::array();
    for (const auto& eq : cat.endemic) doc["endemic"].push_back(entry(eq));

    doc["dulac"] = nlohmann::json::array();
    const double extent = std::max(sub.B, 1.0);
    for (const auto& cert : dulac_certificates(sub, sat)) {
        nlohmann::json c = to_json(cert);
        if (cert.holds) {
            c["grid_sub"] = grid_to_json(dulac_grid_check_sub(sub, extent, extent, 50, 50));
            c["grid_sat"] = grid_to_json(dulac_grid_check_sat(sat, extent, extent, 50, 50));
            c["claim"] = "no limit cycles; disease-free equilibrium globally asymptotically stable";
        }
        doc["dulac"].push_back(c);
    }

    nlohmann::json sn;
    const bool fold_defined = sub.B * sub.m > 1.0 + sub.q;
    sn["defined"] = fold_defined;
    if (fold_defined) {
        sn["e_sn"] = jnum(e_sn(sub));
        sn["x_star"] = jnum(fold_x(sub));
        if (std::abs(sub.e - e_sn(sub)) <= 1e-10 * std::max(1.0, e_sn(sub))) {
            const SotomayorReport so = sotomayor(sub);
            sn["sotomayor"] = to_json(so);
            discrepancies.push_back({{"id", "sotomayor_wFe_vs_reference"},
                                     {"computed", jnum(so.wFe)},
                                     {"reference", jnum(so.ref_wFe)}});
            discrepancies.push_back({{"id", "sotomayor_wD2F_vs_reference"},
                                     {"computed", jnum(so.wD2F)},
                                     {"reference", jnum(so.ref_wD2F)}});
            discrepancies.push_back({{"id", "sotomayor_w2_vs_reference"},
                                     {"computed", jnum(so.w2)},
                                     {"reference", jnum(so.ref_w2)},
                                     {"cross", jnum(so.w_ref_cross)}});
        }
    }
    doc["saddle_node"] = sn;
    doc["discrepancies"] = discrepancies;
    return doc;
}

namespace {

// renders any leaf of the document with 6 significant digits
std::string leaf6(const nlohmann::json& v) {
    if (v.is_number_float()) return fmt6(v.get<double>());
    if (v.is_number()) return v.dump();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_equilibrium(std::ostringstream& os, const nlohmann::json& e) {
    os << "  (" << leaf6(e["x"]) << ", " << leaf6(e["y"]) << ")  regime=" << leaf6(e["regime"])
       << "  multiplicity=" << leaf6(e["multiplicity"])
       << "  admissible=" << leaf6(e["admissible"]) << "\n";
    const auto& c = e["classification"];
    os << "      label=" << leaf6(c["label"]) << "  trace=" << leaf6(c["trace"])
       << "  det=" << leaf6(c["determinant"]) << "  eigenvalues=[" << leaf6(c["eigenvalues"][0][0])
       << (c["eigenvalues"][0][1].is_number() && c["eigenvalues"][0][1].get<double>() != 0.0
               ? "+" + leaf6(c["eigenvalues"][0][1]) + "i"
               : "")
       << ", " << leaf6(c["eigenvalues"][1][0])
       << (c["eigenvalues"][1][1].is_number() && c["eigenvalues"][1][1].get<double>() != 0.0
               ? "+" + leaf6(c["eigenvalues"][1][1]) + "i"
               : "")
       << "]\n";
    if (c.contains("normal_form")) {
        const auto& n = c["normal_form"];
        os << "      normal form: a10=" << leaf6(n["a10"]) << " a01=" << leaf6(n["a01"])
           << " a20=" << leaf6(n["a20"]) << " a11=" << leaf6(n["a11"]) << " b10="
           << leaf6(n["b10"]) << " b01=" << leaf6(n["b01"]) << " c20=" << leaf6(n["c20"])
           << " d01=" << leaf6(n["d01"]) << " epsilon=" << leaf6(n["epsilon"]) << "\n";
    }
}

} // namespace

std::string render_text_report(const nlohmann::json& doc) {
    std::ostringstream os;
    os << "SIRS treatment-capacity model analysis\n";
    os << "======================================\n\n";

    os << "parameters:";
    for (const auto& [k, v] : doc["params"].items()) os << "  " << k << "=" << leaf6(v);
    os << "\n";
    os << "scaled (sub):";
    for (const auto& [k, v] : doc["scaled"]["sub"].items()) os << "  " << k << "=" << leaf6(v);
    os << "\n";
    os << "scaled (sat):";
    for (const auto& [k, v] : doc["scaled"]["sat"].items()) os << "  " << k << "=" << leaf6(v);
    os << "\n\n";

    os << "R0 = " << leaf6(doc["R0"]) << "   case: " << leaf6(doc["theorem1_case"]) << "\n";
    os << "P1_hat = " << leaf6(doc["P1_hat"]) << "   P2_hat = " << leaf6(doc["P2_hat"]) << "\n\n";

    os << "disease-free equilibrium:\n";
    render_equilibrium(os, doc["disease_free"]);
    os << "endemic equilibria (" << doc["endemic"].size() << "):\n";
    for (const auto& e : doc["endemic"]) render_equilibrium(os, e);
    os << "\n";

    os << "global stability certificates:\n";
    for (const auto& c : doc["dulac"]) {
        os << "  " << leaf6(c["condition"]) << ": holds=" << leaf6(c["holds"]);
        for (const auto& [k, v] : c["witness"].items()) os << "  " << k << "=" << leaf6(v);
        os << "\n";
        if (c.contains("claim")) {
            os << "      " << leaf6(c["claim"]) << "\n";
            os << "      divergence grid (sub): all_negative=" << leaf6(c["grid_sub"]["all_negative"])
               << " max=" << leaf6(c["grid_sub"]["max_value"]) << "\n";
            os << "      divergence grid (sat): all_negative=" << leaf6(c["grid_sat"]["all_negative"])
               << " max=" << leaf6(c["grid_sat"]["max_value"]) << "\n";
        }
    }
    os << "\n";

    const auto& sn = doc["saddle_node"];
    os << "saddle-node fold: defined=" << leaf6(sn["defined"]) << "\n";
    if (sn["defined"].get<bool>()) {
        os << "  e_sn=" << leaf6(sn["e_sn"]) << "  x_star=" << leaf6(sn["x_star"]) << "\n";
        if (sn.contains("sotomayor")) {
            const auto& so = sn["sotomayor"];
            os << "  transversality: wFe=" << leaf6(so["wFe"]) << " (ref " << leaf6(so["ref_wFe"])
               << ")  wD2F=" << leaf6(so["wD2F"]) << " (ref " << leaf6(so["ref_wD2F"])
               << ")  verdict=" << leaf6(so["verdict"]) << "\n";
            os << "  w=(" << leaf6(so["w"][0]) << ", " << leaf6(so["w"][1]) << ")  ref_w2="
               << leaf6(so["ref_w2"]) << "  cross=" << leaf6(so["w_ref_cross"]) << "\n";
        }
    }
    os << "\n";

    os << "recorded reference-vs-computed values (" << doc["discrepancies"].size() << "):\n";
    for (const auto& d : doc["discrepancies"]) {
        os << "  " << leaf6(d["id"]);
        for (const auto& [k, v] : d.items())
            if (k != "id") os << "  " << k << "=" << leaf6(v);
        os << "\n";
    }
    return os.str();
}

void write_scan_columnar(const ScanResult& scan, std::ostream& out) {
    out << "# parameter: " << scan.parameter << "\n";
    out << "# value x y regime multiplicity admissible label\n";
    for (const auto& s : scan.samples) {
        for (std::size_t i = 0; i < s.reports.size(); ++i) {
            const auto& rep = s.reports[i];
            const auto& eq = rep.equilibrium;
            out << fmt17(s.value) << ' ' << fmt17(eq.x) << ' ' << fmt17(eq.y) << ' '
                << regime_name(eq.regime) << ' ' << mult_name(eq.multiplicity) << ' '
                << (eq.admissible ? 1 : 0) << ' ' << to_string(rep.label) << "\n";
        }
    }
}

nlohmann::json scan_document(const ScanResult& scan) {
    nlohmann::json doc;
    doc["parameter"] = scan.parameter;
    doc["samples"] = nlohmann::json::array();
    for (const auto& s : scan.samples) {
        nlohmann::json row;
        row["value"] = jnum(s.value);
        row["theorem1_case"] = to_string(s.cat.sub_case);
        row["R0"] = jnum(s.cat.r0);
        row["equilibria"] = nlohmann::json::array();
        for (const auto& rep : s.reports) {
            nlohmann::json e = to_json(rep.equilibrium);
            e["label"] = to_string(rep.label);
            row["equilibria"].push_back(e);
        }
        doc["samples"].push_back(row);
    }
    return doc;
}

void write_trajectory_columnar(const Trajectory& tr, const ScaledSub& sub, std::ostream& out) {
    (void)sub;
    out << "# t x y regime\n";
    for (std::size_t i = 0; i < tr.size(); ++i)
        out << fmt17(tr.times[i]) << ' ' << fmt17(tr.states[i].x) << ' ' << fmt17(tr.states[i].y)
            << ' ' << regime_name(tr.regimes[i]) << "\n";
}

void write_events(const Trajectory& tr, std::ostream& out) {
    out << "# time direction\n";
    for (const auto& ev : tr.events)
        out << fmt17(ev.time) << ' ' << (ev.direction > 0 ? "sub_to_sat" : "sat_to_sub") << "\n";
}

} // namespace sirs
