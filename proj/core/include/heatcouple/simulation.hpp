#pragma once

#include "heatcouple/config.hpp"
#include "heatcouple/grid.hpp"
#include "heatcouple/schemes.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace heatcouple {

/// Solver statistics accumulated over a range of steps.
struct StepStats {
    std::size_t steps = 0;
    std::size_t newton_iterations = 0;
    std::size_t outer_iterations = 0;
    std::size_t linear_solves = 0;
    std::size_t linear_iterations = 0;
    std::optional<NewtonStats> last_newton{};

    void record(const StepResult& step);
    StepStats& operator+=(const StepStats& other);
};

struct Snapshot {
    double time = 0.0;
    std::size_t step = 0;
    TemperatureField temperatures;
    std::vector<double> diffusivities;
    StepStats step_stats;  // since the previous snapshot
};

struct RunReport {
    SimulationConfig config;
    Grid1D grid;
    std::vector<Snapshot> snapshots;  // strictly increasing in time
    std::chrono::duration<double> wall_time{};
    StepStats totals;

    const Snapshot& final_snapshot() const { return snapshots.back(); }
};

/// Called after every completed step with the new field.
using StepObserver =
    std::function<void(std::size_t step, double time, const TemperatureField& previous,
                       const StepResult& result)>;

/// Runs round(t_end / dt) steps of config.scheme. Snapshots are taken at t = 0,
/// at every requested time and at t_end. Step failures are rethrown as
/// SolverFailure carrying the step index and time.
RunReport run_simulation(const SimulationConfig& config, const StepObserver& observer = {});

/// Step parameters for a validated config.
StepParams make_step_params(const SimulationConfig& config, const Grid1D& grid);

}  // namespace heatcouple
