#ifndef SIRS_REPORT_HPP
#define SIRS_REPORT_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sirs/bifurcation.hpp"
#include "sirs/integrate.hpp"

namespace sirs {

/// Formats with 17 significant digits (machine-readable contexts).
std::string fmt17(double v);
/// Formats with 6 significant digits (human-readable contexts).
std::string fmt6(double v);
/// JSON value for a double; non-finite values become the strings
/// "inf", "-inf", "nan" (plain JSON has no encoding for them).
nlohmann::json jnum(double v);

nlohmann::json to_json(const RawParams& raw);
nlohmann::json to_json(const ScaledSub& p);
nlohmann::json to_json(const ScaledSat& p);
nlohmann::json to_json(const Equilibrium& e);
nlohmann::json to_json(const StabilityReport& r);
nlohmann::json to_json(const DulacCertificate& c);
nlohmann::json to_json(const SotomayorReport& s);

/// Full analysis document: scaled parameters, R0, theorem1_case, thresholds,
/// equilibria with classifications, Dulac certificates with grid checks,
/// saddle-node data when the fold parameter is defined, and the recorded
/// reference-vs-computed discrepancies.
nlohmann::json analyze_document(const RawParams& raw);

/// Renders the human-readable report from the same document the JSON output
/// is produced from, so every printed number also appears there.
std::string render_text_report(const nlohmann::json& doc);

void write_scan_columnar(const ScanResult& scan, std::ostream& out);
nlohmann::json scan_document(const ScanResult& scan);

void write_trajectory_columnar(const Trajectory& tr, const ScaledSub& sub, std::ostream& out);
void write_events(const Trajectory& tr, std::ostream& out);

} // namespace sirs

#endif
