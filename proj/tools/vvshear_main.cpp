// vvshear: viscosity sweeps for the shear-flow vanishing-viscosity experiment.
//
//   vvshear run    [--config path] [--key value ...]   single viscosity
//   vvshear sweep  [--config path] [--key value ...]   full ladder + rates
//   vvshear verify                                     self-check suite
//
// Flags mirror config keys and override file values. Exit codes:
//   0 success, 2 config error, 3 solver-integrity failure, 4 check failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vvshear/harness.hpp"
#include "vvshear/verify.hpp"
#include "vvshear/version.hpp"

namespace {

void usage() {
    std::cout <<
        "usage: vvshear <run|sweep|verify> [--config path] [--key value ...]\n"
        "\n"
        "subcommands:\n"
        "  run     solve a single viscosity (viscosity.nu) and write reports\n"
        "  sweep   solve every viscosity.ladder entry, fit rates, write reports\n"
        "  verify  run the library self-check suite\n"
        "\n"
        "keys (see README for the full list): grid.n1 grid.n2 grid.n_shear\n"
        "  time.T time.dt time.snapshot_stride viscosity.nu viscosity.ladder\n"
        "  datum.v1 datum.v3 velocity_mode test_family.max_space_mode\n"
        "  test_family.max_time_mode output.dir output.format\n";
}

int run_report(const vvshear::RunConfig& config, bool sweep) {
    const vvshear::ConvergenceReport report =
        sweep ? vvshear::run_sweep(config) : vvshear::run_single(config);
    const auto written = vvshear::write_report_files(report, config);
    bool all_admissible = true;
    for (const auto& entry : report.entries) {
        std::cout << "nu=" << vvshear::format_double(entry.nu)
                  << " sup_l2_err_u3=" << vvshear::format_double(entry.sup_l2_err_u3)
                  << " l2t_err_u1=" << vvshear::format_double(entry.l2t_err_u1)
                  << " weak_pair_max=" << vvshear::format_double(entry.weak_pair_max_abs)
                  << " admissible=" << (entry.admissible ? "yes" : "NO") << "\n";
        all_admissible = all_admissible && entry.admissible;
    }
    if (sweep && report.entries.size() >= 3) {
        std::cout << "rates: u1 slope=" << vvshear::format_double(report.u1_rate.slope)
                  << ", weak slope=" << vvshear::format_double(report.weak_rate.slope) << "\n";
    }
    for (const std::string& path : written) std::cout << "wrote " << path << "\n";
    if (!all_admissible) {
        std::cerr << "admissibility check failed\n";
        return 4;
    }
    return 0;
}

int run_verify() {
    const auto results = vvshear::run_verification_suite();
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.detail << ")\n";
        all = all && r.pass;
    }
    std::cout << (all ? "verify: all checks passed\n" : "verify: FAILURES above\n");
    return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        usage();
        return args.empty() ? 2 : 0;
    }
    const std::string subcommand = args[0];
    if (subcommand == "--version") {
        std::cout << "vvshear " << vvshear::kVersion << "\n";
        return 0;
    }
    if (subcommand != "run" && subcommand != "sweep" && subcommand != "verify") {
        std::cerr << "unknown subcommand '" << subcommand << "'\n";
        usage();
        return 2;
    }

    std::string config_text;
    std::vector<std::pair<std::string, std::string>> overrides;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i].rfind("--", 0) != 0) {
            std::cerr << "expected --key value, got '" << args[i] << "'\n";
            return 2;
        }
        const std::string key = args[i].substr(2);
        if (i + 1 >= args.size()) {
            std::cerr << "missing value for --" << key << "\n";
            return 2;
        }
        const std::string value = args[++i];
        if (key == "config") {
            std::ifstream in(value);
            if (!in) {
                std::cerr << "cannot read config file '" << value << "'\n";
                return 2;
            }
            std::ostringstream ss;
            ss << in.rdbuf();
            config_text = ss.str();
        } else {
            overrides.emplace_back(key, value);
        }
    }

    try {
        if (subcommand == "verify") {
            if (!overrides.empty() || !config_text.empty())
                vvshear::parse_config(config_text, overrides);  // validate, then ignore
            return run_verify();
        }
        const vvshear::RunConfig config = vvshear::parse_config(config_text, overrides);
        return run_report(config, subcommand == "sweep");
    } catch (const vvshear::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const vvshear::solver_integrity_error& e) {
        std::cerr << "solver integrity failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
