#ifndef SIRS_ACCEPTANCE_HPP
#define SIRS_ACCEPTANCE_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace sirs::acceptance {

// Numeric knobs (tolerances, counts, seeds) may be overridden by key, e.g.
// "c1.residual_tol". Unknown keys raise std::invalid_argument.
using Overrides = std::map<std::string, double>;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details; // measured values, one line each
    nlohmann::json data;              // everything measured, machine-readable
};

int num_criteria();
CriterionResult run_criterion(int id, const Overrides& overrides);
std::vector<CriterionResult> run_all(const Overrides& overrides);

/// One "PASS|FAIL criterion N: name" line per criterion plus detail lines.
void print_results(const std::vector<CriterionResult>& results, std::ostream& out);
nlohmann::json summary_json(const std::vector<CriterionResult>& results);
bool all_pass(const std::vector<CriterionResult>& results);

} // namespace sirs::acceptance

#endif
