#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "illusion/synthesis.hpp"
#include "illusion/wavecore.hpp"

namespace illusion {

inline constexpr double kMaxSweepAngleDeg = 80.0;

/// Inclusive arithmetic range; values are start + i * step, never accumulated.
struct SweepRange {
    double start;
    double stop;
    double step;

    std::vector<double> values() const;
};

struct SweepSpec {
    SweepRange theta_deg;
    SweepRange freq_ghz;
};

enum class OutputFormat { Csv, Svg };

struct OutputSpec {
    std::string path;  ///< empty means stdout
    OutputFormat format = OutputFormat::Csv;
};

struct ScenarioConfig {
    Stack actual;
    Stack target;
    SynthesisMode mode;
    SweepSpec sweep;
    OutputSpec output;
};

/// FR4 slab in front of a PEC wall, disguised as a Teflon slab in open air.
ScenarioConfig builtin_scenario();

/// Throws Error(Config) with an actionable message on any violation.
void validate_sweep(const SweepSpec& sweep);

// JSON document, units mm / GHz / degrees. Schema:
//   { "actual": STACK, "target": STACK, "mode": "reflective"|"transmissive",
//     "sweep": { "theta_deg": RANGE|number, "freq_ghz": RANGE|number },
//     "output": { "path": "...", "format": "csv"|"svg" } }
//   STACK = { "incident": MEDIUM?, "layers": [ { MEDIUM, "thickness_mm": x } ],
//             "termination": { "type": "pec" }
//                         | { "type": "open", MEDIUM }
//                         | { "type": "sheet", "rho": [re, im] } }
//   MEDIUM = "eps": [re, im], "mu": [re, im]?      RANGE = { start, stop, step }
ScenarioConfig parse_scenario(std::string_view json_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);
std::string scenario_to_json(const ScenarioConfig& config);

}  // namespace illusion
