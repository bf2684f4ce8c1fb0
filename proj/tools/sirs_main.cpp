// Command-line front end: analyze | scan | simulate | verify.
// Exit codes: 0 success, 1 failed verification, 2 validation error,
// 3 numerical failure.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sirs/acceptance.hpp"
#include "sirs/report.hpp"

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path.string() + "'");
    out << contents;
}

sirs::acceptance::Overrides parse_overrides(const std::vector<std::string>& kv) {
    sirs::acceptance::Overrides o;
    for (const auto& item : kv) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("override must look like name=value: '" + item + "'");
        std::size_t used = 0;
        const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        o[key] = std::stod(val, &used);
        if (used != val.size())
            throw std::invalid_argument("override value is not numeric: '" + item + "'");
    }
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilibrium, stability and saddle-node analysis of an SIRS model "
                 "with saturating treatment"};
    app.require_subcommand(1);

    std::string params_file, out_dir = ".", format = "both";
    std::string scan_parameter;
    double scan_lo = 0, scan_hi = 0;
    int scan_steps = 0;
    double sim_x0 = 0, sim_y0 = 0, sim_t_end = 100.0, sim_tol = 1e-9;
    std::vector<std::string> override_kv;

    auto* analyze = app.add_subcommand("analyze", "full equilibrium/stability report");
    analyze->add_option("--params", params_file, "parameter file")->required();
    analyze->add_option("--out", out_dir, "output directory");
    analyze->add_option("--format", format, "text | json | both")
        ->check(CLI::IsMember({"text", "json", "both"}));

    auto* scan_cmd = app.add_subcommand("scan", "one-parameter equilibrium sweep");
    scan_cmd->add_option("--params", params_file, "parameter file")->required();
    scan_cmd->add_option("--parameter", scan_parameter, "one of r, A, nu, n, I0")->required();
    scan_cmd->add_option("--lo", scan_lo, "range start")->required();
    scan_cmd->add_option("--hi", scan_hi, "range end")->required();
    scan_cmd->add_option("--steps", scan_steps, "number of samples (>= 2)")->required();
    scan_cmd->add_option("--out", out_dir, "output directory");
    scan_cmd->add_option("--format", format, "text | json | both")
        ->check(CLI::IsMember({"text", "json", "both"}));

    auto* sim = app.add_subcommand("simulate", "integrate the piecewise system");
    sim->add_option("--params", params_file, "parameter file")->required();
    sim->add_option("--x0-init", sim_x0, "initial scaled infected density")->required();
    sim->add_option("--y0-init", sim_y0, "initial scaled recovered density")->required();
    sim->add_option("--t-end", sim_t_end, "integration horizon");
    sim->add_option("--tol", sim_tol, "local error tolerance");
    sim->add_option("--out", out_dir, "output directory");

    auto* verify = app.add_subcommand("verify", "run the built-in acceptance suite");
    verify->add_option("--out", out_dir, "output directory");
    verify->add_option("--override", override_kv,
                       "override a named tolerance, e.g. c1.residual_tol=1e-12");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        fs::create_directories(out_dir);
        if (*analyze) {
            const sirs::RawParams raw = sirs::load_params_file(params_file);
            const nlohmann::json doc = sirs::analyze_document(raw);
            if (format != "text") write_file(fs::path(out_dir) / "report.json", doc.dump(2) + "\n");
            if (format != "json")
                write_file(fs::path(out_dir) / "report.txt", sirs::render_text_report(doc));
            std::cout << sirs::render_text_report(doc);
        } else if (*scan_cmd) {
            const sirs::RawParams raw = sirs::load_params_file(params_file);
            const sirs::ScanResult result = sirs::scan(raw, scan_parameter, scan_lo, scan_hi,
                                                       scan_steps);
            std::ostringstream cols;
            sirs::write_scan_columnar(result, cols);
            write_file(fs::path(out_dir) / "scan.txt", cols.str());
            if (format != "text")
                write_file(fs::path(out_dir) / "scan.json",
                           sirs::scan_document(result).dump(2) + "\n");
            std::cout << "scan of " << result.parameter << ": " << result.samples.size()
                      << " samples written to " << (fs::path(out_dir) / "scan.txt").string()
                      << "\n";
        } else if (*sim) {
            const sirs::RawParams raw = sirs::load_params_file(params_file);
            const auto [sub, sat] = sirs::nondimensionalize(raw);
            const sirs::Trajectory tr =
                sirs::integrate({sim_x0, sim_y0}, sub, sat, sim_t_end, sim_tol);
            std::ostringstream cols, evs;
            sirs::write_trajectory_columnar(tr, sub, cols);
            sirs::write_events(tr, evs);
            write_file(fs::path(out_dir) / "trajectory.txt", cols.str());
            write_file(fs::path(out_dir) / "events.txt", evs.str());
            std::cout << "integrated to t=" << sirs::fmt6(tr.times.back()) << " with "
                      << tr.size() << " samples and " << tr.events.size() << " events\n";
        } else if (*verify) {
            const auto overrides = parse_overrides(override_kv);
            const auto results = sirs::acceptance::run_all(overrides);
            sirs::acceptance::print_results(results, std::cout);
            write_file(fs::path(out_dir) / "verify.json",
                       sirs::acceptance::summary_json(results).dump(2) + "\n");
            return sirs::acceptance::all_pass(results) ? 0 : 1;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
