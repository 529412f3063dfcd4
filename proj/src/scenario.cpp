#include "jc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "jc/io_util.hpp"
#include "jc/model.hpp"
#include "jc/oracles.hpp"

namespace jc {

namespace fs = std::filesystem;
using nlohmann::json;

Mode mode_from_string(const std::string& s) {
    if (s == "simulate") return Mode::Simulate;
    if (s == "spectrum") return Mode::Spectrum;
    if (s == "rwa") return Mode::Rwa;
    if (s == "design") return Mode::Design;
    if (s == "sweep") return Mode::Sweep;
    throw ConfigError("unknown mode '" + s + "'");
}

const char* to_string(Mode m) {
    switch (m) {
        case Mode::Simulate: return "simulate";
        case Mode::Spectrum: return "spectrum";
        case Mode::Rwa: return "rwa";
        case Mode::Design: return "design";
        case Mode::Sweep: return "sweep";
    }
    return "?";
}

void ScenarioConfig::validate() const {
    if (!(horizon_periods > 0.0))
        throw ConfigError("horizon_periods must be > 0");
    if (samples < 2)
        throw ConfigError("samples must be >= 2");
    if (!(omega > 0.0))
        throw ConfigError("omega must be > 0");
    if (g_over_omega < 0.0)
        throw ConfigError("g_over_omega must be >= 0");
    if (omega0_over_omega < 0.0)
        throw ConfigError("omega0_over_omega must be >= 0");
    if (initial_site < 0)
        throw ConfigError("initial_site must be >= 0");
    if (truncation != 0 && truncation < 2)
        throw ConfigError("truncation must be 'auto' or an integer >= 2");
    if (truncation != 0 && initial_site >= truncation)
        throw ConfigError("initial_site must be < truncation");
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw ConfigError("tail_tol must lie in (0,1)");
    if (n_levels < 1)
        throw ConfigError("n_levels must be >= 1");
    if (rwa_site < 0 || rwa_site % 2 != 0)
        throw ConfigError("rwa_site must be even and >= 0");
    if (mode == Mode::Sweep && sweep_g_over_omega.empty())
        throw ConfigError("sweep mode requires sweep_g_over_omega");
}

ScenarioConfig preset(const std::string& name) {
    ScenarioConfig cfg;
    cfg.preset_name = name;
    if (name == "fig2") {
        cfg.mode = Mode::Simulate;
        cfg.g_over_omega = 2.0;
        cfg.omega0_over_omega = 0.0;
        cfg.chain = ChainId::F;
        cfg.initial_site = 0;
        cfg.horizon_periods = 1.5;
        cfg.samples = 600;
        cfg.write_svg = true;
    } else if (name == "fig3") {
        cfg.mode = Mode::Simulate;
        cfg.g_over_omega = 2.0;
        cfg.omega0_over_omega = 0.3;
        cfg.chain = ChainId::F;
        cfg.initial_site = 0;
        cfg.horizon_periods = 2.0;
        cfg.samples = 800;
        cfg.write_svg = true;
    } else if (name == "design-example") {
        cfg.mode = Mode::Design;
        cfg.g_over_omega = 2.0;
        cfg.truncation = 25;
        cfg.bend_radius_cm = 60.0;
        cfg.pitch_um = 6.0;
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return cfg;
}

namespace {

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + v + "' as a number");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + v + "' as an integer");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("key '" + key + "': cannot parse '" + v + "' as a boolean");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void apply_kv(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "mode") cfg.mode = mode_from_string(value);
    else if (key == "g_over_omega") cfg.g_over_omega = parse_double(key, value);
    else if (key == "omega0_over_omega") cfg.omega0_over_omega = parse_double(key, value);
    else if (key == "omega") cfg.omega = parse_double(key, value);
    else if (key == "chain") {
        if (value == "C") cfg.chain = ChainId::C;
        else if (value == "F") cfg.chain = ChainId::F;
        else throw ConfigError("key 'chain': expected C or F, got '" + value + "'");
    }
    else if (key == "initial_site") cfg.initial_site = parse_int(key, value);
    else if (key == "horizon_periods") cfg.horizon_periods = parse_double(key, value);
    else if (key == "samples") cfg.samples = parse_int(key, value);
    else if (key == "truncation")
        cfg.truncation = (value == "auto") ? 0 : parse_int(key, value);
    else if (key == "tail_tol") cfg.tail_tol = parse_double(key, value);
    else if (key == "n_levels") cfg.n_levels = parse_int(key, value);
    else if (key == "rwa_site") cfg.rwa_site = parse_int(key, value);
    else if (key == "delta_over_g") cfg.delta_over_g = parse_double(key, value);
    else if (key == "fab.A_per_mm") cfg.fab.A = per_millimeter(parse_double(key, value));
    else if (key == "fab.gamma_per_um")
        cfg.fab.gamma = per_micrometer(parse_double(key, value));
    else if (key == "fab.n_s") cfg.fab.n_s = parse_double(key, value);
    else if (key == "fab.lambda_nm") cfg.fab.lambda = nanometers(parse_double(key, value));
    else if (key == "bend_radius_cm") cfg.bend_radius_cm = parse_double(key, value);
    else if (key == "pitch_um") cfg.pitch_um = parse_double(key, value);
    else if (key == "design_strict") cfg.design_strict = parse_bool(key, value);
    else if (key == "sweep_g_over_omega") {
        cfg.sweep_g_over_omega.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ','))
            cfg.sweep_g_over_omega.push_back(parse_double(key, trim(item)));
        if (cfg.sweep_g_over_omega.empty())
            throw ConfigError("key 'sweep_g_over_omega': empty list");
    }
    else if (key == "out") cfg.out_dir = value;
    else if (key == "format") {
        cfg.write_csv = cfg.write_json = cfg.write_svg = false;
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item == "csv") cfg.write_csv = true;
            else if (item == "json") cfg.write_json = true;
            else if (item == "svg") cfg.write_svg = true;
            else throw ConfigError("key 'format': unknown format '" + item + "'");
        }
    }
    else throw ConfigError("unknown config key '" + key + "'");
}

ScenarioConfig load_config_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    ScenarioConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected key = value");
        try {
            apply_kv(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": " +
                              e.what());
        }
    }
    return cfg;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

JCParams resolved_params(const ScenarioConfig& cfg, int n_sites) {
    JCParams p;
    p.omega = cfg.omega;
    p.omega0 = cfg.omega0_over_omega * cfg.omega;
    p.g = cfg.g_over_omega * cfg.omega;
    p.n_sites = n_sites;
    return p;
}

json config_json(const ScenarioConfig& cfg) {
    json j;
    j["mode"] = to_string(cfg.mode);
    j["preset"] = cfg.preset_name;
    j["g_over_omega"] = cfg.g_over_omega;
    j["omega0_over_omega"] = cfg.omega0_over_omega;
    j["omega"] = cfg.omega;
    j["chain"] = to_string(cfg.chain);
    j["initial_site"] = cfg.initial_site;
    j["horizon_periods"] = cfg.horizon_periods;
    j["samples"] = cfg.samples;
    j["truncation"] = cfg.truncation == 0 ? json("auto") : json(cfg.truncation);
    j["tail_tol"] = cfg.tail_tol;
    j["n_levels"] = cfg.n_levels;
    j["rwa_site"] = cfg.rwa_site;
    j["delta_over_g"] = cfg.delta_over_g;
    j["fab"] = {{"A_per_mm", cfg.fab.A.per_um * 1e3},
                {"gamma_per_um", cfg.fab.gamma.per_um},
                {"n_s", cfg.fab.n_s},
                {"lambda_nm", cfg.fab.lambda.um * 1e3}};
    j["bend_radius_cm"] = cfg.bend_radius_cm;
    j["pitch_um"] = cfg.pitch_um;
    j["design_strict"] = cfg.design_strict;
    j["sweep_g_over_omega"] = cfg.sweep_g_over_omega;
    j["out"] = cfg.out_dir;
    json fmt = json::array();
    if (cfg.write_csv) fmt.push_back("csv");
    if (cfg.write_json) fmt.push_back("json");
    if (cfg.write_svg) fmt.push_back("svg");
    j["format"] = fmt;
    return j;
}

void emit(const fs::path& dir, const std::string& name, const std::string& content,
          RunResult& result) {
    atomic_write(dir / name, content);
    result.file_checksums[name] = fnv1a_hex(content);
}

void write_manifest(const fs::path& dir, const ScenarioConfig& cfg, RunResult& result,
                    const json& extra) {
    json m;
    m["config"] = config_json(cfg);
    m["truncation_used"] = result.truncation_used;
    m["tolerances"] = {{"spectral_norm", 1e-10},
                       {"stepper_norm", 1e-8},
                       {"cross_method_agreement", 1e-6}};
    json outputs;
    for (const auto& [name, sum] : result.file_checksums)
        outputs[name] = sum;
    m["outputs"] = outputs;
    if (!extra.is_null())
        m["summary"] = extra;
    const std::string body = m.dump(2) + "\n";
    atomic_write(dir / "manifest.json", body);
    result.file_checksums["manifest.json"] = fnv1a_hex(body);
}

std::string observables_csv(const ObservableSeries& obs, double omega) {
    std::ostringstream csv;
    csv << "omega_t,p_g,p_e,p_rev\n";
    for (int s = 0; s < obs.times.size(); ++s)
        csv << format_double(obs.times[s] * omega) << ',' << format_double(obs.p_g[s])
            << ',' << format_double(obs.p_e[s]) << ',' << format_double(obs.p_rev[s])
            << '\n';
    return csv.str();
}

std::string photon_dist_csv(const ObservableSeries& obs, double omega) {
    std::ostringstream csv;
    csv << "omega_t";
    for (int n = 0; n < obs.photon_dist.cols(); ++n)
        csv << ",site_" << n;
    csv << '\n';
    for (int s = 0; s < obs.times.size(); ++s) {
        csv << format_double(obs.times[s] * omega);
        for (int n = 0; n < obs.photon_dist.cols(); ++n)
            csv << ',' << format_double(obs.photon_dist(s, n));
        csv << '\n';
    }
    return csv.str();
}

int resolve_truncation(const ScenarioConfig& cfg, double horizon) {
    if (cfg.truncation > 0)
        return cfg.truncation;
    JCParams probe = resolved_params(cfg, 16);
    return choose_truncation(probe, horizon, cfg.tail_tol);
}

ObservableSeries simulate_observables(const ScenarioConfig& cfg, double horizon, int n) {
    const JCParams params = resolved_params(cfg, n);
    if (cfg.initial_site >= n)
        throw ConfigError("initial_site must be < truncation");
    const ChainHamiltonian h = build_chain_hamiltonian(params, cfg.chain);
    const TimeGrid grid{0.0, horizon, cfg.samples};
    const Trajectory traj = spectral_propagate(h, chain_site_state(n, cfg.initial_site), grid);
    return extract_observables(traj, cfg.chain);
}

RunResult run_simulate(const ScenarioConfig& cfg) {
    const double horizon = cfg.horizon_periods * kTwoPi / cfg.omega;
    RunResult result;
    result.truncation_used = resolve_truncation(cfg, horizon);
    const ObservableSeries obs = simulate_observables(cfg, horizon, result.truncation_used);

    const fs::path dir = cfg.out_dir;
    if (cfg.write_csv) {
        emit(dir, "observables.csv", observables_csv(obs, cfg.omega), result);
        emit(dir, "photon_dist.csv", photon_dist_csv(obs, cfg.omega), result);
    }
    if (cfg.write_svg)
        emit(dir, "heatmap.svg",
             svg_heatmap(obs.photon_dist, obs.times * cfg.omega, "P(n,t)"), result);

    result.summary["p_rev_min"] = obs.p_rev.minCoeff();
    result.summary["p_rev_final"] = obs.p_rev[obs.p_rev.size() - 1];
    json extra = {{"p_rev_min", obs.p_rev.minCoeff()},
                  {"p_rev_final", obs.p_rev[obs.p_rev.size() - 1]}};
    write_manifest(dir, cfg, result, extra);
    return result;
}

RunResult run_spectrum(const ScenarioConfig& cfg) {
    const int n = cfg.truncation > 0 ? cfg.truncation : 400;
    const JCParams params = resolved_params(cfg, n);
    if (cfg.n_levels > n)
        throw ConfigError("n_levels must be <= truncation");
    const ChainHamiltonian h = build_chain_hamiltonian(params, cfg.chain);
    const SpectralDecomposition eig(h);
    const VectorXd ladder = wannier_stark_energies(cfg.n_levels, params.g, params.omega);

    RunResult result;
    result.truncation_used = n;
    std::ostringstream csv;
    csv << "l,energy,wannier_stark,abs_diff\n";
    double max_diff = 0.0;
    for (int l = 0; l < cfg.n_levels; ++l) {
        const double e = eig.eigenvalues()[l];
        const double diff = std::abs(e - ladder[l]);
        max_diff = std::max(max_diff, diff);
        csv << l << ',' << format_double(e) << ',' << format_double(ladder[l]) << ','
            << format_double(diff) << '\n';
    }
    const fs::path dir = cfg.out_dir;
    if (cfg.write_csv)
        emit(dir, "spectrum.csv", csv.str(), result);
    result.summary["max_ladder_diff"] = max_diff;
    write_manifest(dir, cfg, result, {{"max_ladder_diff", max_diff}});
    return result;
}

RunResult run_rwa(const ScenarioConfig& cfg) {
    // Chain-C labeling: sites n (|e>|n>) and n+1 (|g>|n+1>), Delta = omega - omega0
    const double g = cfg.g_over_omega * cfg.omega;
    const double delta = cfg.delta_over_g * g;
    const int site = cfg.rwa_site;
    const int n = cfg.truncation > 0 ? cfg.truncation : std::max(16, site + 8);
    if (site + 1 >= n)
        throw ConfigError("rwa_site + 1 must be < truncation");

    JCParams params;
    params.omega = cfg.omega;
    params.omega0 = cfg.omega - delta;
    if (params.omega0 < 0.0)
        throw ConfigError("rwa: delta_over_g too large, omega0 would be negative");
    params.g = g;
    params.n_sites = n;

    const double rabi = rwa_frequency(site, delta, g);
    if (rabi == 0.0)
        throw ConfigError("rwa: zero Rabi frequency (g = 0 and delta = 0)");
    const double horizon = cfg.horizon_periods * std::numbers::pi / rabi;
    const ChainHamiltonian h = build_chain_hamiltonian(params, ChainId::C);
    const TimeGrid grid{0.0, horizon, cfg.samples};
    const Trajectory traj = spectral_propagate(h, chain_site_state(n, site), grid);
    const ObservableSeries obs = extract_observables(traj, ChainId::C);

    RunResult result;
    result.truncation_used = n;
    std::ostringstream csv;
    csv << "t,p_lower,p_upper,p_lower_rwa,p_upper_rwa,abs_diff_upper\n";
    double max_diff = 0.0;
    for (int s = 0; s < obs.times.size(); ++s) {
        const double t = obs.times[s];
        const double pl = obs.photon_dist(s, site);
        const double pu = obs.photon_dist(s, site + 1);
        const auto [rl, ru] = rwa_rabi(site, delta, g, t);
        max_diff = std::max(max_diff, std::abs(pu - ru));
        csv << format_double(t) << ',' << format_double(pl) << ',' << format_double(pu)
            << ',' << format_double(rl) << ',' << format_double(ru) << ','
            << format_double(std::abs(pu - ru)) << '\n';
    }
    const fs::path dir = cfg.out_dir;
    if (cfg.write_csv)
        emit(dir, "rwa.csv", csv.str(), result);
    result.summary["max_transfer_diff"] = max_diff;
    result.summary["rabi_frequency"] = rabi;
    write_manifest(dir, cfg, result,
                   {{"max_transfer_diff", max_diff}, {"rabi_frequency", rabi}});
    return result;
}

RunResult run_design(const ScenarioConfig& cfg) {
    const Length radius = centimeters(cfg.bend_radius_cm);
    const Length pitch = micrometers(cfg.pitch_um);
    const double omega = index_gradient(cfg.fab, pitch, radius).per_um;
    JCParams params;
    params.omega = omega;
    params.omega0 = cfg.omega0_over_omega * omega;
    params.g = cfg.g_over_omega * omega;
    params.n_sites = cfg.truncation > 0 ? cfg.truncation : 25;

    const WaveguideGeometry geo =
        design_array(params, cfg.fab, radius, pitch, cfg.design_strict);
    const VectorXd pos = geo.positions_um();

    RunResult result;
    result.truncation_used = params.n_sites;
    const fs::path dir = cfg.out_dir;
    if (cfg.write_csv) {
        std::ostringstream csv;
        csv << "n,position_um,spacing_um,kappa_per_um\n";
        for (int i = 0; i + 1 < geo.n_guides; ++i)
            csv << i << ',' << format_double(pos[i]) << ','
                << format_double(geo.spacings_um[i]) << ','
                << format_double(coupling(i, params.g)) << '\n';
        emit(dir, "geometry.csv", csv.str(), result);
    }

    const double period_um = kTwoPi / omega;
    if (cfg.write_json) {
        json rec;
        rec["fabrication"] = {{"A_per_mm", cfg.fab.A.per_um * 1e3},
                              {"gamma_per_um", cfg.fab.gamma.per_um},
                              {"n_s", cfg.fab.n_s},
                              {"lambda_nm", cfg.fab.lambda.um * 1e3}};
        rec["params"] = {{"omega_per_um", params.omega},
                         {"omega0_per_um", params.omega0},
                         {"g_per_um", params.g},
                         {"n_guides", params.n_sites}};
        rec["bend_radius_cm"] = cfg.bend_radius_cm;
        rec["pitch_um"] = cfg.pitch_um;
        rec["revival_period_cm"] = period_um * 1e-4;
        rec["omega_consistent"] = geo.omega_consistent;
        if (!geo.diagnostic.empty())
            rec["diagnostic"] = geo.diagnostic;
        std::vector<double> sp(geo.spacings_um.data(),
                               geo.spacings_um.data() + geo.spacings_um.size());
        rec["spacings_um"] = sp;
        emit(dir, "design.json", rec.dump(2) + "\n", result);
    }

    result.summary["omega_per_mm"] = omega * 1e3;
    result.summary["g_per_mm"] = params.g * 1e3;
    result.summary["period_cm"] = period_um * 1e-4;
    result.summary["d0_um"] = geo.spacings_um[0];
    write_manifest(dir, cfg, result,
                   {{"omega_per_mm", omega * 1e3},
                    {"g_per_mm", params.g * 1e3},
                    {"revival_period_cm", period_um * 1e-4},
                    {"d0_um", geo.spacings_um[0]}});
    return result;
}

RunResult run_sweep(const ScenarioConfig& cfg) {
    // one worker per parameter point; outputs land in disjoint subdirectories
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(cfg.sweep_g_over_omega.size());
    for (std::size_t i = 0; i < cfg.sweep_g_over_omega.size(); ++i) {
        workers.emplace_back([&, i]() {
            try {
                ScenarioConfig point = cfg;
                point.mode = Mode::Simulate;
                point.sweep_g_over_omega.clear();
                point.g_over_omega = cfg.sweep_g_over_omega[i];
                point.out_dir = (fs::path(cfg.out_dir) /
                                 ("g_" + format_double(point.g_over_omega)))
                                    .string();
                run_scenario(point);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& w : workers)
        w.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    RunResult result;
    write_manifest(cfg.out_dir, cfg, result,
                   {{"points", cfg.sweep_g_over_omega.size()}});
    return result;
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    switch (cfg.mode) {
        case Mode::Simulate: return run_simulate(cfg);
        case Mode::Spectrum: return run_spectrum(cfg);
        case Mode::Rwa: return run_rwa(cfg);
        case Mode::Design: return run_design(cfg);
        case Mode::Sweep: return run_sweep(cfg);
    }
    throw ConfigError("unhandled mode");
}

RunResult oracle_report(const ScenarioConfig& cfg) {
    cfg.validate();
    if (cfg.mode == Mode::Spectrum)
        return run_spectrum(cfg);
    if (cfg.mode != Mode::Simulate)
        throw ConfigError("oracle report supports simulate or spectrum configs");
    if (cfg.omega0_over_omega != 0.0)
        throw ConfigError(
            "oracle report: DSC closed forms require omega0 = 0 "
            "(got omega0_over_omega = " +
            format_double(cfg.omega0_over_omega) + ")");
    if (cfg.initial_site != 0 || cfg.chain != ChainId::F)
        throw ConfigError("oracle report: DSC closed forms require chain F, site 0");

    const double horizon = cfg.horizon_periods * kTwoPi / cfg.omega;
    RunResult result;
    result.truncation_used = resolve_truncation(cfg, horizon);
    const int n = result.truncation_used;
    const ObservableSeries obs = simulate_observables(cfg, horizon, n);
    const DscClosedForm oracle(cfg.g_over_omega, cfg.omega);

    const double beta = cfg.g_over_omega;
    std::vector<int> slices{0, static_cast<int>(std::lround(2.0 * beta * beta)),
                            static_cast<int>(std::lround(4.0 * beta * beta))};
    slices.erase(std::unique(slices.begin(), slices.end()), slices.end());
    for (int& s : slices)
        s = std::min(s, n - 1);

    std::ostringstream csv;
    csv << "omega_t,observable,numeric,oracle,abs_diff\n";
    std::map<std::string, double> max_diff;
    auto row = [&](double wt, const std::string& name, double numeric, double exact) {
        const double d = std::abs(numeric - exact);
        auto [it, inserted] = max_diff.try_emplace(name, d);
        if (!inserted)
            it->second = std::max(it->second, d);
        csv << format_double(wt) << ',' << name << ',' << format_double(numeric) << ','
            << format_double(exact) << ',' << format_double(d) << '\n';
    };

    for (int s = 0; s < obs.times.size(); ++s) {
        const double t = obs.times[s];
        const double wt = t * cfg.omega;
        row(wt, "p_rev", obs.p_rev[s], oracle.revival_probability(t));
        row(wt, "p_g", obs.p_g[s], oracle.populations(t).first);
        row(wt, "mean_n", mean_photon_number(obs.photon_dist.row(s)),
            oracle.mean_photon(t));
        for (int slice : slices)
            row(wt, "p_n_" + std::to_string(slice), obs.photon_dist(s, slice),
                oracle.photon_distribution(slice, t));
    }

    const fs::path dir = cfg.out_dir;
    emit(dir, "oracle_report.csv", csv.str(), result);
    json extra;
    for (const auto& [name, d] : max_diff) {
        extra["max_abs_diff"][name] = d;
        result.summary["max_abs_diff_" + name] = d;
    }
    write_manifest(dir, cfg, result, extra);
    return result;
}

}  // namespace jc
