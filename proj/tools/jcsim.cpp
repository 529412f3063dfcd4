// Command-line front end: named scenarios, figure presets, oracle reports.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jc/scenario.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string preset_name;
    std::vector<std::string> overrides;
    std::string out_dir;
    std::string format;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "flat key = value config file");
    cmd->add_option("--preset", opts.preset_name,
                    "named preset: fig2, fig3, design-example");
    cmd->add_option("--set", opts.overrides, "key=value override (repeatable, later wins)");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--format", opts.format, "comma list of csv,json,svg");
}

jc::ScenarioConfig build_config(const CommonOpts& opts, jc::Mode default_mode) {
    if (!opts.preset_name.empty() && !opts.config_path.empty())
        throw jc::ConfigError("--preset and --config are mutually exclusive");
    jc::ScenarioConfig cfg;
    if (!opts.preset_name.empty())
        cfg = jc::preset(opts.preset_name);
    else if (!opts.config_path.empty())
        cfg = jc::load_config_file(opts.config_path);
    else
        cfg.mode = default_mode;
    for (const std::string& kv : opts.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw jc::ConfigError("--set expects key=value, got '" + kv + "'");
        jc::apply_kv(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!opts.out_dir.empty())
        cfg.out_dir = opts.out_dir;
    if (!opts.format.empty())
        jc::apply_kv(cfg, "format", opts.format);
    return cfg;
}

void print_summary(const jc::RunResult& result) {
    std::printf("truncation N = %d\n", result.truncation_used);
    for (const auto& [key, value] : result.summary)
        std::printf("%s = %.10g\n", key.c_str(), value);
    for (const auto& [name, sum] : result.file_checksums)
        std::printf("wrote %s (fnv1a %s)\n", name.c_str(), sum.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jaynes-Cummings lattice simulator and waveguide-array designer"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd;
        CommonOpts opts;
        jc::Mode mode;
        bool report;
    };
    std::vector<Sub> subs;
    subs.reserve(6);  // option bindings point into this storage
    auto add = [&](const char* name, const char* desc, jc::Mode mode, bool report) {
        subs.push_back({app.add_subcommand(name, desc), {}, mode, report});
        add_common(subs.back().cmd, subs.back().opts);
    };
    add("simulate", "time-evolve a chain scenario and emit observables",
        jc::Mode::Simulate, false);
    add("spectrum", "chain eigenvalues vs the Wannier-Stark ladder",
        jc::Mode::Spectrum, false);
    add("rwa", "full-lattice vs two-site Rabi dynamics", jc::Mode::Rwa, false);
    add("design", "waveguide-array geometry from model parameters",
        jc::Mode::Design, false);
    add("sweep", "concurrent simulate runs over a g/omega list", jc::Mode::Sweep, false);
    add("report", "numeric-vs-oracle comparison tables", jc::Mode::Simulate, true);

    CLI11_PARSE(app, argc, argv);

    for (Sub& sub : subs) {
        if (!sub.cmd->parsed())
            continue;
        try {
            jc::ScenarioConfig cfg = build_config(sub.opts, sub.mode);
            if (!sub.report)
                cfg.mode = sub.mode;  // the subcommand is the mode selector
            const jc::RunResult result =
                sub.report ? jc::oracle_report(cfg) : jc::run_scenario(cfg);
            print_summary(result);
            return 0;
        } catch (const jc::ConfigError& e) {
            std::fprintf(stderr, "config error: %s\n", e.what());
            return 2;
        } catch (const jc::ConvergenceError& e) {
            std::fprintf(stderr, "convergence error: %s\n", e.what());
            return 3;
        } catch (const jc::InfeasibleDesignError& e) {
            std::fprintf(stderr, "infeasible design: %s\n", e.what());
            return 4;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 1;
        }
    }
    return 0;
}
