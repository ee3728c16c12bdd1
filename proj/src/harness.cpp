#include "vvshear/harness.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "vvshear/version.hpp"

namespace vvshear {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw config_error("field '" + key + "': not a number: '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    const int i = static_cast<int>(std::llround(v));
    if (std::abs(v - i) > 0.0) throw config_error("field '" + key + "': not an integer");
    return i;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "grid.n1", "grid.n2", "grid.n_shear",
        "time.T", "time.dt", "time.snapshot_stride",
        "viscosity.nu", "viscosity.ladder",
        "datum.v1", "datum.v3",
        "velocity_mode",
        "test_family.max_space_mode", "test_family.max_time_mode",
        "output.dir", "output.format",
    };
    return keys;
}

V1Spec parse_v1(const std::string& value) {
    V1Spec spec;
    if (value == "square_wave") {
        spec.kind = V1Spec::Kind::square_wave;
        return spec;
    }
    if (value.rfind("band_limited:", 0) == 0) {
        spec.kind = V1Spec::Kind::band_limited;
        for (const std::string& entry : split(value.substr(13), ';')) {
            const auto f = split(entry, ',');
            if (f.size() != 3) throw config_error("datum.v1 band_limited entry needs k,re,im");
            spec.modes.emplace_back(parse_int("datum.v1", f[0]),
                                    cplx{parse_number("datum.v1", f[1]),
                                         parse_number("datum.v1", f[2])});
        }
        return spec;
    }
    throw config_error("field 'datum.v1': unknown kind '" + value + "'");
}

V3Spec parse_v3(const std::string& value) {
    V3Spec spec;
    if (value.rfind("single_mode:", 0) == 0) {
        const auto f = split(value.substr(12), ',');
        if (f.size() != 3) throw config_error("datum.v3 single_mode needs m1,m2,amplitude");
        spec.kind = V3Spec::Kind::single_mode;
        spec.m1 = parse_int("datum.v3", f[0]);
        spec.m2 = parse_int("datum.v3", f[1]);
        spec.amplitude = parse_number("datum.v3", f[2]);
        return spec;
    }
    if (value.rfind("band_limited:", 0) == 0) {
        spec.kind = V3Spec::Kind::band_limited;
        for (const std::string& entry : split(value.substr(13), ';')) {
            const auto f = split(entry, ',');
            if (f.size() != 4) throw config_error("datum.v3 band_limited entry needs m1,m2,re,im");
            spec.modes.emplace_back(parse_int("datum.v3", f[0]), parse_int("datum.v3", f[1]),
                                    cplx{parse_number("datum.v3", f[2]),
                                         parse_number("datum.v3", f[3])});
        }
        return spec;
    }
    if (value.rfind("periodized_bump:", 0) == 0) {
        const auto f = split(value.substr(16), ',');
        if (f.size() != 3) throw config_error("datum.v3 periodized_bump needs c1,c2,width");
        spec.kind = V3Spec::Kind::periodized_bump;
        spec.center1 = parse_number("datum.v3", f[0]);
        spec.center2 = parse_number("datum.v3", f[1]);
        spec.width = parse_number("datum.v3", f[2]);
        if (spec.width <= 0.0 || spec.width >= 1.0)
            throw config_error("field 'datum.v3': bump width must be in (0, 1)");
        return spec;
    }
    if (value.rfind("random_band_limited:", 0) == 0) {
        const auto f = split(value.substr(20), ',');
        if (f.size() != 2) throw config_error("datum.v3 random_band_limited needs max_mode,seed");
        spec.kind = V3Spec::Kind::random_band_limited;
        spec.max_mode = parse_int("datum.v3", f[0]);
        spec.seed = static_cast<std::uint64_t>(parse_number("datum.v3", f[1]));
        return spec;
    }
    throw config_error("field 'datum.v3': unknown kind '" + value + "'");
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

SolverConfig RunConfig::solver_config() const {
    SolverConfig sc;
    sc.dt = dt;
    sc.T = T;
    sc.snapshot_stride = snapshot_stride;
    sc.velocity_mode = velocity_mode;
    return sc;
}

std::string RunConfig::resolved_output_dir() const {
    if (!output_dir.empty()) return output_dir;
    if (const char* env = std::getenv("VVSHEAR_OUTPUT_DIR"); env && *env) return env;
    return "out";
}

RunConfig parse_config(const std::string& text) {
    return parse_config(text, {});
}

RunConfig parse_config(const std::string& text,
                       const std::vector<std::pair<std::string, std::string>>& overrides) {
    std::map<std::string, std::string> kv;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known_keys().contains(key))
            throw config_error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (value.empty())
            throw config_error("line " + std::to_string(lineno) + ": empty value for '" + key + "'");
        kv[key] = value;
    }
    for (const auto& [key, value] : overrides) {
        if (!known_keys().contains(key)) throw config_error("unknown key '" + key + "'");
        kv[key] = value;
    }

    RunConfig cfg;
    auto take = [&](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };

    if (const auto* v = take("grid.n1")) cfg.n1 = parse_int("grid.n1", *v);
    if (const auto* v = take("grid.n2")) cfg.n2 = parse_int("grid.n2", *v);
    if (const auto* v = take("grid.n_shear")) cfg.n_shear = parse_int("grid.n_shear", *v);
    if (const auto* v = take("time.T")) cfg.T = parse_number("time.T", *v);
    if (const auto* v = take("time.dt")) cfg.dt = parse_number("time.dt", *v);
    if (const auto* v = take("time.snapshot_stride"))
        cfg.snapshot_stride = parse_int("time.snapshot_stride", *v);
    if (const auto* v = take("viscosity.nu")) cfg.nu = parse_number("viscosity.nu", *v);
    if (const auto* v = take("viscosity.ladder")) {
        cfg.ladder.clear();
        for (const std::string& s : split(*v, ','))
            cfg.ladder.push_back(parse_number("viscosity.ladder", s));
    }
    if (const auto* v = take("datum.v1")) cfg.datum.v1 = parse_v1(*v);
    if (const auto* v = take("datum.v3")) cfg.datum.v3 = parse_v3(*v);
    if (const auto* v = take("velocity_mode")) {
        if (*v == "pointwise_sign") cfg.velocity_mode = VelocityMode::pointwise_sign;
        else if (*v == "truncated_series") cfg.velocity_mode = VelocityMode::truncated_series;
        else throw config_error("field 'velocity_mode': expected pointwise_sign or truncated_series");
    }
    if (const auto* v = take("test_family.max_space_mode"))
        cfg.max_space_mode = parse_int("test_family.max_space_mode", *v);
    if (const auto* v = take("test_family.max_time_mode"))
        cfg.max_time_mode = parse_int("test_family.max_time_mode", *v);
    if (const auto* v = take("output.dir")) cfg.output_dir = *v;
    if (const auto* v = take("output.format")) cfg.output_format = *v;

    // ---- validation ----
    for (const auto& [name, n] : {std::pair{"grid.n1", cfg.n1}, {"grid.n2", cfg.n2},
                                  {"grid.n_shear", cfg.n_shear}}) {
        if (n < 8 || n % 2 != 0)
            throw config_error("field '" + std::string(name) + "': grid size must be even and >= 8");
    }
    if (cfg.T <= 0.0) throw config_error("field 'time.T': must be positive");
    if (cfg.dt <= 0.0) throw config_error("field 'time.dt': must be positive");
    {
        const double ratio = cfg.T / cfg.dt;
        const long long n = std::llround(ratio);
        if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio))
            throw config_error("field 'time.dt': T/dt must be an integer");
    }
    if (cfg.snapshot_stride < 1) throw config_error("field 'time.snapshot_stride': must be >= 1");
    if (cfg.nu < 0.0) throw config_error("field 'viscosity.nu': must be nonnegative");
    if (cfg.ladder.empty()) throw config_error("field 'viscosity.ladder': must not be empty");
    for (std::size_t i = 0; i < cfg.ladder.size(); ++i) {
        if (cfg.ladder[i] < 0.0) throw config_error("field 'viscosity.ladder': entries must be >= 0");
        if (i > 0 && cfg.ladder[i] >= cfg.ladder[i - 1])
            throw config_error("field 'viscosity.ladder': must be strictly decreasing");
    }
    if (cfg.max_space_mode < 0 || cfg.max_space_mode > std::min(cfg.n1, cfg.n2) / 3)
        throw config_error("field 'test_family.max_space_mode': beyond the dealias band");
    if (cfg.max_time_mode < 0) throw config_error("field 'test_family.max_time_mode': must be >= 0");
    if (cfg.output_format != "csv" && cfg.output_format != "json" && cfg.output_format != "both")
        throw config_error("field 'output.format': expected csv, json or both");
    if (cfg.velocity_mode == VelocityMode::pointwise_sign &&
        cfg.datum.v1.kind != V1Spec::Kind::square_wave)
        throw config_error("field 'velocity_mode': pointwise_sign requires datum.v1 = square_wave");

    // resolved picture for metadata
    auto record = [&](const std::string& key, const std::string& fallback) {
        auto it = kv.find(key);
        cfg.resolved[key] = it != kv.end() ? std::pair{it->second, false}
                                           : std::pair{fallback, true};
    };
    record("grid.n1", std::to_string(cfg.n1));
    record("grid.n2", std::to_string(cfg.n2));
    record("grid.n_shear", std::to_string(cfg.n_shear));
    record("time.T", format_double(cfg.T));
    record("time.dt", format_double(cfg.dt));
    record("time.snapshot_stride", std::to_string(cfg.snapshot_stride));
    record("viscosity.nu", format_double(cfg.nu));
    {
        std::string s;
        for (std::size_t i = 0; i < cfg.ladder.size(); ++i)
            s += (i ? "," : "") + format_double(cfg.ladder[i]);
        record("viscosity.ladder", s);
    }
    record("datum.v1", "square_wave");
    record("datum.v3", "single_mode:1,0,1");
    record("velocity_mode", cfg.velocity_mode == VelocityMode::pointwise_sign
                                ? "pointwise_sign" : "truncated_series");
    record("test_family.max_space_mode", std::to_string(cfg.max_space_mode));
    record("test_family.max_time_mode", std::to_string(cfg.max_time_mode));
    record("output.dir", cfg.resolved_output_dir());
    record("output.format", cfg.output_format);
    return cfg;
}

namespace {

NuSummary summarize_nu(const RunConfig& cfg, double nu) {
    const Grid2D grid = cfg.grid();
    const Grid1D shear_grid = cfg.shear_grid();
    const ViscousTrajectory traj = solve(cfg.datum, nu, cfg.solver_config(), shear_grid, grid);
    const ExactShearFlow exact = make_exact_flow(cfg.datum, grid, cfg.velocity_mode);
    const Field1D v1_ref = sample_v1(cfg.datum.v1, shear_grid);

    NuSummary s;
    s.nu = nu;
    s.times = traj.times;
    s.energy = traj.energy_ledger;
    s.initial_energy = traj.energy_ledger.front();
    s.final_energy = traj.energy_ledger.back();

    const StrongError err3 = strong_error(traj, exact);
    s.l2_err_u3 = err3.per_snapshot;
    s.sup_l2_err_u3 = err3.sup;

    s.l2_err_u1.reserve(traj.times.size());
    for (std::size_t j = 0; j < traj.times.size(); ++j) {
        Field1D diff = traj.u1_snapshots[j];
        for (int b = 0; b < diff.grid.n; ++b) diff.coeff[b] -= v1_ref.coeff[b];
        s.l2_err_u1.push_back(l2_norm(diff));
    }
    {  // trapezoid of the squared error over [0, T]
        double acc = 0.0;
        for (std::size_t j = 0; j + 1 < traj.times.size(); ++j) {
            const double h = traj.times[j + 1] - traj.times[j];
            acc += 0.5 * h * (s.l2_err_u1[j] * s.l2_err_u1[j] +
                              s.l2_err_u1[j + 1] * s.l2_err_u1[j + 1]);
        }
        s.l2t_err_u1 = std::sqrt(acc);
    }

    const auto family = default_test_family(cfg.max_space_mode, cfg.max_time_mode);
    const auto pairings = weak_pairings(traj, exact, family);
    for (const cplx& p : pairings) s.weak_pair_max_abs = std::max(s.weak_pair_max_abs, std::abs(p));
    s.weak_pair_max_abs_t = spatial_pairing_max(traj, exact, cfg.max_space_mode);

    const AdmissibilityReport adm = admissibility_check(traj);
    s.admissible = adm.pass;
    s.admissibility_violation = adm.max_violation;
    return s;
}

std::string metadata_text(const RunConfig& cfg) {
    std::string out = "vvshear " + std::string(kVersion) + "\n";
    for (const auto& [key, vp] : cfg.resolved)
        out += key + " = " + vp.first + (vp.second ? "  [default]" : "") + "\n";
    return out;
}

ConvergenceReport run_ladder(const RunConfig& cfg, const std::vector<double>& ladder) {
    ConvergenceReport report;
    report.nu_ladder = ladder;
    report.metadata = metadata_text(cfg);
    for (const double nu : ladder) {
        try {
            report.entries.push_back(summarize_nu(cfg, nu));
        } catch (const solver_integrity_error& e) {
            throw solver_integrity_error("nu = " + format_double(nu) + ": " + e.what());
        }
    }
    // rate fits need >= 3 strictly positive samples
    std::vector<double> nus, e1, ew;
    for (const NuSummary& s : report.entries) {
        if (s.nu > 0.0 && s.l2t_err_u1 > 0.0 && s.weak_pair_max_abs > 0.0) {
            nus.push_back(s.nu);
            e1.push_back(s.l2t_err_u1);
            ew.push_back(s.weak_pair_max_abs);
        }
    }
    if (nus.size() >= 3) {
        report.u1_rate = fit_rate(nus, e1);
        report.weak_rate = fit_rate(nus, ew);
    }
    return report;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

std::string csv_header_comment(const RunConfig& cfg) {
    std::string out;
    std::istringstream meta(metadata_text(cfg));
    std::string line;
    while (std::getline(meta, line)) out += "# " + line + "\n";
    return out;
}

}  // namespace

ConvergenceReport run_sweep(const RunConfig& config) {
    return run_ladder(config, config.ladder);
}

ConvergenceReport run_single(const RunConfig& config) {
    return run_ladder(config, {config.nu});
}

std::vector<std::string> write_report_files(const ConvergenceReport& report,
                                            const RunConfig& config) {
    namespace fs = std::filesystem;
    const fs::path dir = config.resolved_output_dir();
    fs::create_directories(dir);
    std::vector<std::string> written;

    const bool want_csv = config.output_format == "csv" || config.output_format == "both";
    const bool want_json = config.output_format == "json" || config.output_format == "both";

    if (want_csv) {
        std::string snap = csv_header_comment(config);
        snap += "nu,t,l2_err_u3,l2_err_u1,weak_pair_max_abs,energy,energy0\n";
        for (const NuSummary& s : report.entries)
            for (std::size_t j = 0; j < s.times.size(); ++j)
                snap += format_double(s.nu) + "," + format_double(s.times[j]) + "," +
                        format_double(s.l2_err_u3[j]) + "," + format_double(s.l2_err_u1[j]) + "," +
                        format_double(s.weak_pair_max_abs_t[j]) + "," +
                        format_double(s.energy[j]) + "," + format_double(s.initial_energy) + "\n";
        const fs::path p = dir / "snapshots.csv";
        atomic_write(p, snap);
        written.push_back(p.string());

        std::string summary = csv_header_comment(config);
        summary += "nu,sup_l2_err_u3,l2t_err_u1,weak_pair_max_abs,rate_context\n";
        std::string rate_context = "n/a";
        if (report.entries.size() >= 3)
            rate_context = "u1_slope=" + format_double(report.u1_rate.slope) +
                           ";weak_slope=" + format_double(report.weak_rate.slope);
        for (const NuSummary& s : report.entries)
            summary += format_double(s.nu) + "," + format_double(s.sup_l2_err_u3) + "," +
                       format_double(s.l2t_err_u1) + "," + format_double(s.weak_pair_max_abs) +
                       "," + rate_context + "\n";
        const fs::path p2 = dir / "summary.csv";
        atomic_write(p2, summary);
        written.push_back(p2.string());
    }

    if (want_json) {
        nlohmann::json j;
        j["artifact"] = "vvshear";
        j["version"] = kVersion;
        nlohmann::json cfg_json;
        for (const auto& [key, vp] : config.resolved)
            cfg_json[key] = {{"value", vp.first}, {"defaulted", vp.second}};
        j["config"] = cfg_json;
        j["nu_ladder"] = report.nu_ladder;
        if (report.entries.size() >= 3) {
            j["rates"] = {
                {"u1", {{"slope", report.u1_rate.slope},
                        {"intercept", report.u1_rate.intercept},
                        {"residual", report.u1_rate.residual}}},
                {"weak", {{"slope", report.weak_rate.slope},
                          {"intercept", report.weak_rate.intercept},
                          {"residual", report.weak_rate.residual}}},
            };
        }
        nlohmann::json entries = nlohmann::json::array();
        for (const NuSummary& s : report.entries) {
            entries.push_back({
                {"nu", s.nu},
                {"sup_l2_err_u3", s.sup_l2_err_u3},
                {"l2t_err_u1", s.l2t_err_u1},
                {"weak_pair_max_abs", s.weak_pair_max_abs},
                {"initial_energy", s.initial_energy},
                {"final_energy", s.final_energy},
                {"admissible", s.admissible},
                {"admissibility_violation", s.admissibility_violation},
                {"times", s.times},
                {"l2_err_u3", s.l2_err_u3},
                {"l2_err_u1", s.l2_err_u1},
                {"weak_pair_max_abs_t", s.weak_pair_max_abs_t},
                {"energy", s.energy},
            });
        }
        j["entries"] = entries;
        const fs::path p = dir / "report.json";
        atomic_write(p, j.dump(2) + "\n");
        written.push_back(p.string());
    }
    return written;
}

}  // namespace vvshear
