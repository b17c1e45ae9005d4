#include "illusion/sweep.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "illusion/errors.hpp"

namespace illusion {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const Complex kMissing{kNaN, kNaN};

SweepRow blank_row(const GridPoint& point)
{
    SweepRow row;
    row.freq_ghz = point.freq_ghz;
    row.theta_deg = point.theta_deg;
    row.gamma_actual = row.gamma_target = row.rho_required = row.secondary = kMissing;
    return row;
}

std::string error_label(const std::exception& e)
{
    if (const auto* error = dynamic_cast<const Error*>(&e))
        return std::string(to_string(error->kind()));
    return "internal";
}

template <typename PointFn>
SweepTable run_serial(const ScenarioConfig& config, SweepKind kind, PointFn point_fn)
{
    const std::vector<GridPoint> grid = sweep_grid(config.sweep);
    SweepTable table{kind, config.mode, {}};
    table.rows.reserve(grid.size());
    for (const GridPoint& point : grid)
        table.rows.push_back(point_fn(config, point));
    return table;
}

template <typename PointFn>
SweepTable run_parallel(const ScenarioConfig& config, SweepKind kind, PointFn point_fn)
{
    const std::vector<GridPoint> grid = sweep_grid(config.sweep);
    SweepTable table{kind, config.mode, std::vector<SweepRow>(grid.size())};
    const auto n = static_cast<long>(grid.size());
    // point functions never throw: failures land in SweepRow::error
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i)
        table.rows[static_cast<std::size_t>(i)] = point_fn(config, grid[static_cast<std::size_t>(i)]);
    return table;
}

}  // namespace

bool SweepTable::all_failed() const
{
    return !rows.empty() &&
           std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.error.empty(); });
}

std::vector<GridPoint> sweep_grid(const SweepSpec& sweep)
{
    validate_sweep(sweep);
    const std::vector<double> freqs = sweep.freq_ghz.values();
    const std::vector<double> thetas = sweep.theta_deg.values();
    std::vector<GridPoint> grid;
    grid.reserve(freqs.size() * thetas.size());
    for (double f : freqs)
        for (double t : thetas)
            grid.push_back({f, t});
    return grid;
}

PlaneWave plane_wave_at(const GridPoint& point)
{
    return PlaneWave(point.freq_ghz * 1e9, point.theta_deg * (std::numbers::pi / 180.0));
}

SweepRow simulate_point(const ScenarioConfig& config, const GridPoint& point)
{
    SweepRow row = blank_row(point);
    try {
        const PlaneWave wave = plane_wave_at(point);
        row.gamma_actual = chain_reflection(config.actual, wave);
        row.gamma_target = chain_reflection(config.target, wave);
    } catch (const std::exception& e) {
        row.error = error_label(e);
    }
    return row;
}

SweepRow synthesize_point(const ScenarioConfig& config, const GridPoint& point)
{
    SweepRow row = blank_row(point);
    try {
        const PlaneWave wave = plane_wave_at(point);
        row.gamma_actual = chain_reflection(config.actual, wave);
        const IllusionProblem problem(config.actual, config.target, wave, config.mode);
        row.gamma_target = target_reflection(problem);
        const SynthesisOutcome outcome = synthesize(problem);
        row.rho_required = outcome.rho_required;
        row.secondary = outcome.mode == SynthesisMode::Reflective
                            ? outcome.eta_required->eta_normalized
                            : *outcome.chi_e_required;
        row.passive = outcome.realizability == Realizability::Passive;
    } catch (const std::exception& e) {
        row.error = error_label(e);
    }
    return row;
}

SweepTable run_simulate_serial(const ScenarioConfig& config)
{
    return run_serial(config, SweepKind::Simulate, simulate_point);
}

SweepTable run_synthesize_serial(const ScenarioConfig& config)
{
    return run_serial(config, SweepKind::Synthesize, synthesize_point);
}

SweepTable run_simulate_parallel(const ScenarioConfig& config)
{
    return run_parallel(config, SweepKind::Simulate, simulate_point);
}

SweepTable run_synthesize_parallel(const ScenarioConfig& config)
{
    return run_parallel(config, SweepKind::Synthesize, synthesize_point);
}

SweepTable run_simulate(const ScenarioConfig& config) { return run_simulate_parallel(config); }
SweepTable run_synthesize(const ScenarioConfig& config) { return run_synthesize_parallel(config); }

}  // namespace illusion
