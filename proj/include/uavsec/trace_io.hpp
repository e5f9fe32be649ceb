#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uavsec/config.hpp"
#include "uavsec/scenario.hpp"

namespace uavsec {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kTraceCsvHeader =
    "step,iot_x_m,uav_x_m,serving_bs,r_t_l_mbps,r_r_l_mbps,r_t_i_mbps,r_r_i_mbps,"
    "r_l_mbps,r_i_mbps,r_sec_mbps,r_sec_std_mbps";

namespace detail {

// Fixed 6-significant-digit rendering; locale-independent.
inline std::string format_rate(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace detail

/// The `#` comment block written before the CSV header row: seed, config
/// hash, strategy, the active fading modes and every default the loader
/// applied. Contains nothing run-dependent, so identical configs produce
/// byte-identical files.
inline std::vector<std::string> trace_header_lines(const ScenarioConfig& config) {
    std::vector<std::string> lines;
    lines.push_back("uavsec trace");
    {
        std::ostringstream hash;
        hash << "config_hash: 0x" << std::hex << compute_config_hash(config);
        lines.push_back(hash.str());
    }
    lines.push_back("seed: " + std::to_string(config.seed));
    {
        std::ostringstream strat;
        strat << "strategy: " << to_string(config.strategy.kind);
        if (config.strategy.kind == StrategyKind::UavRelay) {
            strat << " speed_rate=" << detail::format_double(config.strategy.speed_rate);
        }
        if (config.strategy.kind == StrategyKind::Handover) {
            strat << " hysteresis_margin_mbps="
                  << detail::format_double(config.strategy.hysteresis_margin_bps / 1e6);
        }
        lines.push_back(strat.str());
    }
    lines.push_back("fading.g2g: " + to_string(config.g2g_fading.kind) +
                    (config.g2g_fading.kind == FadingKind::MonteCarlo
                         ? " realizations=" + std::to_string(config.g2g_fading.realizations)
                         : ""));
    lines.push_back("fading.a2g: " + to_string(config.a2g_fading.kind) +
                    (config.a2g_fading.kind == FadingKind::MonteCarlo
                         ? " realizations=" + std::to_string(config.a2g_fading.realizations)
                         : ""));
    bool carrier_defaulted = false;
    for (const auto& d : config.applied_defaults) {
        carrier_defaulted = carrier_defaulted || d.starts_with("channel.carrier_frequency_hz");
    }
    lines.push_back("carrier_frequency_hz: " +
                    detail::format_double(config.channel.carrier_frequency_hz) +
                    (carrier_defaulted ? " (default)" : ""));
    if (config.applied_defaults.empty()) {
        lines.push_back("applied_defaults: none");
    } else {
        for (const auto& d : config.applied_defaults) lines.push_back("default: " + d);
    }
    return lines;
}

inline std::string render_trace_row(const TraceRecord& r) {
    std::string row = std::to_string(r.step);
    row += ',';
    row += detail::format_rate(r.iot_x_m);
    row += ',';
    if (r.uav_x_m) row += detail::format_rate(*r.uav_x_m);
    row += ',';
    row += r.serving_bs;
    for (const double v : {r.r_t_l_mbps, r.r_r_l_mbps, r.r_t_i_mbps, r.r_r_i_mbps, r.r_l_mbps,
                           r.r_i_mbps, r.r_sec_mbps, r.r_sec_std_mbps}) {
        row += ',';
        row += detail::format_rate(v);
    }
    return row;
}

/// Write a trace as CSV: `#` comment block, fixed header row, one row per
/// record with rates rendered to 6 significant digits.
inline void write_trace_csv(const std::vector<TraceRecord>& trace, const std::string& path,
                            const std::vector<std::string>& header_lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    for (const auto& line : header_lines) out << "# " << line << "\n";
    out << kTraceCsvHeader << "\n";
    for (const auto& rec : trace) out << render_trace_row(rec) << "\n";
    if (!out) throw IoError("failed writing trace file: " + path);
}

inline void write_trace_csv(const std::vector<TraceRecord>& trace, const std::string& path,
                            const ScenarioConfig& config) {
    write_trace_csv(trace, path, trace_header_lines(config));
}

/// Side-by-side secrecy-rate CSV for several traces over the same trajectory.
/// Labels become column suffixes: r_sec_<label>_mbps.
inline void write_joined_csv(const std::vector<std::pair<std::string, std::vector<TraceRecord>>>& traces,
                             const std::string& path,
                             const std::vector<std::string>& header_lines) {
    if (traces.empty()) throw std::invalid_argument("write_joined_csv: no traces");
    const std::size_t rows = traces.front().second.size();
    for (const auto& [label, trace] : traces) {
        if (trace.size() != rows) {
            throw std::invalid_argument("write_joined_csv: traces must have equal length");
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    for (const auto& line : header_lines) out << "# " << line << "\n";
    out << "step,iot_x_m";
    for (const auto& [label, trace] : traces) out << ",r_sec_" << label << "_mbps";
    out << "\n";
    for (std::size_t i = 0; i < rows; ++i) {
        out << traces.front().second[i].step << ','
            << detail::format_rate(traces.front().second[i].iot_x_m);
        for (const auto& [label, trace] : traces) {
            out << ',' << detail::format_rate(trace[i].r_sec_mbps);
        }
        out << "\n";
    }
    if (!out) throw IoError("failed writing file: " + path);
}

namespace detail {

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

inline double parse_csv_double(std::string_view field, const std::string& path, int line_no) {
    const std::string buf(field);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size()) {
        throw IoError(path + ":" + std::to_string(line_no) + ": bad numeric field \"" + buf + "\"");
    }
    return v;
}

} // namespace detail

/// Read a trace CSV written by write_trace_csv. Comment lines are skipped
/// and the header row is required to match exactly.
inline std::vector<TraceRecord> read_trace_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open trace file: " + path);
    std::vector<TraceRecord> trace;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != kTraceCsvHeader) {
                throw IoError(path + ":" + std::to_string(line_no) + ": unexpected CSV header");
            }
            header_seen = true;
            continue;
        }
        const auto fields = detail::split_csv_line(line);
        if (fields.size() != 12) {
            throw IoError(path + ":" + std::to_string(line_no) + ": expected 12 columns, got " +
                          std::to_string(fields.size()));
        }
        TraceRecord rec;
        {
            const auto f = fields[0];
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), rec.step);
            if (ec != std::errc{} || ptr != f.data() + f.size()) {
                throw IoError(path + ":" + std::to_string(line_no) + ": bad step field");
            }
        }
        rec.iot_x_m = detail::parse_csv_double(fields[1], path, line_no);
        if (!fields[2].empty()) {
            rec.uav_x_m = detail::parse_csv_double(fields[2], path, line_no);
        }
        rec.serving_bs = std::string(fields[3]);
        double* rates[] = {&rec.r_t_l_mbps, &rec.r_r_l_mbps, &rec.r_t_i_mbps, &rec.r_r_i_mbps,
                           &rec.r_l_mbps,   &rec.r_i_mbps,   &rec.r_sec_mbps, &rec.r_sec_std_mbps};
        for (std::size_t i = 0; i < 8; ++i) {
            *rates[i] = detail::parse_csv_double(fields[4 + i], path, line_no);
        }
        trace.push_back(std::move(rec));
    }
    if (!header_seen) throw IoError(path + ": missing CSV header row");
    return trace;
}

} // namespace uavsec
