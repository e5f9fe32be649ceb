// uavsec command-line front end: run scenarios, compare mitigation
// strategies, sweep relay parameters and summarize trace files.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavsec/uavsec.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;

struct GlobalOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> steps;
    std::string out;
};

void apply_overrides(uavsec::ScenarioConfig& config, const GlobalOptions& opts) {
    if (opts.seed) config.seed = *opts.seed;
    if (opts.steps) config.mobility.n_steps = *opts.steps;
}

// Output base name: --out wins, then the config's output.path, then the
// config file's stem. A relative result is placed under $UAVSEC_OUTPUT_DIR
// when that variable is set.
std::string resolve_output_base(const uavsec::ScenarioConfig& config,
                                const GlobalOptions& opts, const std::string& config_path) {
    std::string base = !opts.out.empty()       ? opts.out
                       : !config.output.path.empty() ? config.output.path
                                                     : std::filesystem::path(config_path)
                                                           .stem()
                                                           .string();
    if (base.size() > 4 && base.ends_with(".csv")) base.resize(base.size() - 4);
    if (const char* dir = std::getenv("UAVSEC_OUTPUT_DIR");
        dir && *dir && std::filesystem::path(base).is_relative()) {
        base = (std::filesystem::path(dir) / base).string();
    }
    return base;
}

void print_run_header(const uavsec::ScenarioConfig& config) {
    for (const auto& line : uavsec::trace_header_lines(config)) std::cout << "# " << line << "\n";
}

void print_summary(const std::vector<uavsec::TraceRecord>& trace, double threshold_mbps) {
    const uavsec::TraceSummary s = uavsec::summarize(trace, threshold_mbps);
    std::cout << "records: " << trace.size() << "\n";
    std::cout << "threshold_mbps: " << threshold_mbps << "\n";
    std::cout << "mean_r_sec_mbps: " << s.mean_r_sec_mbps << "\n";
    std::cout << "min_r_sec_mbps: " << s.min_r_sec_mbps << "\n";
    std::cout << "fraction_at_or_above: " << s.fraction_at_or_above << "\n";
    if (s.below_interval_x_m) {
        std::cout << "below_threshold_interval_m: [" << s.below_interval_x_m->first << ", "
                  << s.below_interval_x_m->second << "] width " << s.below_interval_width_m()
                  << "\n";
    } else {
        std::cout << "below_threshold_interval_m: none\n";
    }
}

int cmd_run(const std::string& config_path, const GlobalOptions& opts) {
    uavsec::ScenarioConfig config = uavsec::load_config(config_path);
    apply_overrides(config, opts);
    const auto trace = uavsec::run_scenario(config);
    const std::string out = resolve_output_base(config, opts, config_path) + ".csv";
    uavsec::write_trace_csv(trace, out, config);
    print_run_header(config);
    print_summary(trace, config.output.threshold_mbps);
    std::cout << "trace: " << out << "\n";
    return 0;
}

int cmd_compare(const std::string& config_path, const GlobalOptions& opts) {
    uavsec::ScenarioConfig config = uavsec::load_config(config_path);
    apply_overrides(config, opts);
    const std::string base = resolve_output_base(config, opts, config_path);

    const uavsec::StrategyKind kinds[] = {uavsec::StrategyKind::DirectOnly,
                                          uavsec::StrategyKind::Handover,
                                          uavsec::StrategyKind::UavRelay};
    std::vector<std::pair<std::string, std::vector<uavsec::TraceRecord>>> traces;
    for (const auto kind : kinds) {
        uavsec::ScenarioConfig variant = config;
        variant.strategy.kind = kind;
        const auto trace = uavsec::run_scenario(variant);
        const std::string label = uavsec::to_string(kind);
        const std::string path = base + "_" + label + ".csv";
        uavsec::write_trace_csv(trace, path, variant);
        const uavsec::TraceSummary s = uavsec::summarize(trace, config.output.threshold_mbps);
        std::cout << label << ": mean_r_sec_mbps=" << s.mean_r_sec_mbps
                  << " min=" << s.min_r_sec_mbps << " trace=" << path << "\n";
        traces.emplace_back(label, trace);
    }
    const std::string joined = base + "_compare.csv";
    uavsec::write_joined_csv(traces, joined, uavsec::trace_header_lines(config));
    std::cout << "joined: " << joined << "\n";
    return 0;
}

int cmd_sweep(const std::string& config_path, const GlobalOptions& opts, const std::string& var,
              const std::vector<double>& values) {
    uavsec::ScenarioConfig config = uavsec::load_config(config_path);
    apply_overrides(config, opts);
    uavsec::SweepSpec spec;
    spec.variable = var == "sr" ? uavsec::SweepVariable::SpeedRate
                                : uavsec::SweepVariable::UavHeight;
    spec.values = values;
    const auto traces = uavsec::run_sweep(config, spec);
    const std::string base = resolve_output_base(config, opts, config_path);
    for (const auto& [value, trace] : traces) {
        uavsec::ScenarioConfig variant = config;
        if (spec.variable == uavsec::SweepVariable::SpeedRate) {
            variant.strategy.speed_rate = value;
            variant.mobility.speed_rate = value;
        } else {
            variant.mobility.uav_height = value;
        }
        const std::string path =
            base + "_" + var + "_" + uavsec::detail::format_double(value) + ".csv";
        uavsec::write_trace_csv(trace, path, variant);
        const uavsec::TraceSummary s = uavsec::summarize(trace, config.output.threshold_mbps);
        std::cout << var << "=" << value << ": mean_r_sec_mbps=" << s.mean_r_sec_mbps
                  << " min=" << s.min_r_sec_mbps << " trace=" << path << "\n";
    }
    return 0;
}

int cmd_summary(const std::string& trace_path, double threshold_mbps) {
    const auto trace = uavsec::read_trace_csv(trace_path);
    if (trace.empty()) {
        std::cerr << "error: trace file has no records: " << trace_path << "\n";
        return kExitIo;
    }
    print_summary(trace, threshold_mbps);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "uavsec: link-level secrecy-rate simulator for a mobile ground device,\n"
        "an aerial relay and a ground eavesdropper.\n\n"
        "Relative output paths honor the UAVSEC_OUTPUT_DIR environment variable\n"
        "(optional output-directory override)."};
    app.require_subcommand(1);

    GlobalOptions opts;
    std::uint64_t seed_value = 0;
    std::uint64_t steps_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "Override the config seed");
    auto* steps_opt =
        app.add_option("--steps", steps_value, "Override the number of mobility steps");
    app.add_option("--out", opts.out, "Output file or prefix");

    std::string config_path;
    std::string trace_path;
    std::string sweep_var;
    std::vector<double> sweep_values;
    double threshold_mbps = 50.0;

    auto* run = app.add_subcommand("run", "Run one scenario and write its trace CSV");
    run->fallthrough();
    run->add_option("config", config_path, "Scenario config file")->required();

    auto* compare = app.add_subcommand(
        "compare", "Run direct_only, handover and uav_relay on shared geometry");
    compare->fallthrough();
    compare->add_option("config", config_path, "Scenario config file")->required();

    auto* sweep = app.add_subcommand("sweep", "Sweep the relay speed rate or height");
    sweep->fallthrough();
    sweep->add_option("config", config_path, "Scenario config file")->required();
    sweep->add_option("--var", sweep_var, "Swept variable: sr or height")
        ->required()
        ->check(CLI::IsMember({"sr", "height"}));
    sweep->add_option("--values", sweep_values, "Comma-separated sweep values")
        ->required()
        ->delimiter(',');

    auto* summary = app.add_subcommand("summary", "Summarize an existing trace CSV");
    summary->fallthrough();
    summary->add_option("trace", trace_path, "Trace CSV file")->required();
    summary->add_option("--threshold", threshold_mbps, "Secrecy threshold in Mbps")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    if (seed_opt->count() > 0) opts.seed = seed_value;
    if (steps_opt->count() > 0) opts.steps = steps_value;

    try {
        if (run->parsed()) return cmd_run(config_path, opts);
        if (compare->parsed()) return cmd_compare(config_path, opts);
        if (sweep->parsed()) return cmd_sweep(config_path, opts, sweep_var, sweep_values);
        if (summary->parsed()) return cmd_summary(trace_path, threshold_mbps);
    } catch (const uavsec::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const uavsec::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
