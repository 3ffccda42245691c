#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gtvtool {

// Batch runner configuration, parsed from a JSON document:
// {
//   "n_range": [2, 4],
//   "d_range": [3, 8],
//   "alpha_mode": "exhaustive" | {"mode": "sampled", "count": 100, "seed": 7},
//   "checks": ["three_distinct", ...],     // optional, default core set
//   "output_path": "corpus.json",          // optional, "-" = stdout
//   "format": "json" | "csv"               // optional, default "json"
// }
struct SweepConfig {
    int n_min = 0, n_max = 0;
    int d_min = 0, d_max = 0;
    bool exhaustive = true;
    int sample_count = 0;
    std::uint64_t sample_seed = 0;
    std::vector<std::string> checks;
    std::string output_path = "-";
    std::string format = "json";
};

// Property checks a sweep may run per record, by name.
const std::vector<std::string>& registered_checks();

// Throws gtv::Error with a description on malformed or invalid config.
SweepConfig parse_sweep_config(const std::string& text);
SweepConfig load_sweep_config(const std::string& path);  // reads the file, then parses

struct SweepOutcome {
    std::string rendered;       // full report in the configured format
    std::size_t records = 0;
    std::size_t check_failures = 0;
    std::string summary_line;   // one-line human summary (for stderr)
};

// Evaluate every spec in the configured corpus. Deterministic: records appear
// in corpus order and the rendered report is byte-identical across runs and
// thread counts unless with_timings is set (which adds wall-clock fields,
// documented as non-reproducible).
SweepOutcome run_sweep(const SweepConfig& config, int threads, bool with_timings);

}  // namespace gtvtool
