#pragma once

#include <optional>
#include <string>
#include <vector>

#include "illusion/scenario.hpp"

namespace illusion {

struct GridPoint {
    double freq_ghz;
    double theta_deg;
};

/// One evaluated grid point. Failed evaluations keep whatever was computed
/// before the failure, fill the rest with NaN and name the error kind.
struct SweepRow {
    double freq_ghz = 0.0;
    double theta_deg = 0.0;
    Complex gamma_actual;
    Complex gamma_target;
    Complex rho_required;
    Complex secondary;  ///< eta / eta0 (reflective) or chi_e in meters (transmissive)
    bool passive = false;
    std::string error;  ///< empty on success
};

enum class SweepKind { Simulate, Synthesize };

struct SweepTable {
    SweepKind kind = SweepKind::Simulate;
    SynthesisMode mode = SynthesisMode::Reflective;
    std::vector<SweepRow> rows;

    /// True when the grid is non-empty and every point failed.
    bool all_failed() const;
};

/// Frequency-major grid: rows sorted by (freq, theta).
std::vector<GridPoint> sweep_grid(const SweepSpec& sweep);

PlaneWave plane_wave_at(const GridPoint& point);

SweepRow simulate_point(const ScenarioConfig& config, const GridPoint& point);
SweepRow synthesize_point(const ScenarioConfig& config, const GridPoint& point);

// Serial reference kernels; the parallel versions must match them bit for bit.
SweepTable run_simulate_serial(const ScenarioConfig& config);
SweepTable run_synthesize_serial(const ScenarioConfig& config);

// OpenMP kernels over the grid. Row order does not depend on scheduling.
SweepTable run_simulate_parallel(const ScenarioConfig& config);
SweepTable run_synthesize_parallel(const ScenarioConfig& config);

SweepTable run_simulate(const ScenarioConfig& config);
SweepTable run_synthesize(const ScenarioConfig& config);

}  // namespace illusion
