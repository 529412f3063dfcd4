#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "jc/design.hpp"
#include "jc/propagate.hpp"
#include "jc/types.hpp"

namespace jc {

enum class Mode { Simulate, Spectrum, Rwa, Design, Sweep };

Mode mode_from_string(const std::string& s);
const char* to_string(Mode m);

/// Flat scenario configuration; populated from presets, key=value config
/// files and command-line overrides (later wins).
struct ScenarioConfig {
    Mode mode = Mode::Simulate;

    // model ratios; dynamics depend only on these (plus omega for the scale)
    double g_over_omega = 2.0;
    double omega0_over_omega = 0.0;
    double omega = 1.0;
    ChainId chain = ChainId::F;
    int initial_site = 0;
    double horizon_periods = 2.0;
    int samples = 400;
    int truncation = 0;  // 0 = auto (doubling search)
    double tail_tol = 1e-10;

    // spectrum mode
    int n_levels = 10;

    // rwa mode
    int rwa_site = 0;
    double delta_over_g = 0.0;

    // design mode (physical units)
    FabricationConstants fab;
    double bend_radius_cm = 60.0;
    double pitch_um = 6.0;
    bool design_strict = false;

    // sweep mode
    std::vector<double> sweep_g_over_omega;

    // output
    std::string out_dir = "out";
    bool write_csv = true;
    bool write_json = true;
    bool write_svg = false;
    std::string preset_name;

    void validate() const;
};

/// Code-defined presets: fig2, fig3, design-example.
ScenarioConfig preset(const std::string& name);

/// Apply one key=value override; throws ConfigError naming the key.
void apply_kv(ScenarioConfig& cfg, const std::string& key, const std::string& value);

/// Load a flat key = value config file ('#' starts a comment). Errors carry
/// the line number.
ScenarioConfig load_config_file(const std::filesystem::path& path);

struct RunResult {
    int truncation_used = 0;
    std::map<std::string, std::string> file_checksums;  // filename -> fnv1a
    std::map<std::string, double> summary;              // mode-specific scalars
};

/// Run one scenario and write its outputs (CSV/JSON/SVG plus a JSON run
/// manifest) under cfg.out_dir. Deterministic: identical config gives
/// byte-identical files.
RunResult run_scenario(const ScenarioConfig& cfg);

/// Numeric-vs-oracle comparison report. Simulate-style configs compare the
/// DSC closed forms (refused for omega0 != 0); spectrum configs compare the
/// Wannier-Stark ladder.
RunResult oracle_report(const ScenarioConfig& cfg);

}  // namespace jc
