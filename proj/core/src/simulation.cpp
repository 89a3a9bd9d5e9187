#include "heatcouple/simulation.hpp"

#include "heatcouple/diffusivity.hpp"
#include "heatcouple/errors.hpp"

#include <map>
#include <sstream>

namespace heatcouple {

void StepStats::record(const StepResult& step) {
    ++steps;
    if (step.newton) {
        newton_iterations += static_cast<std::size_t>(step.newton->iterations);
        last_newton = step.newton;
    }
    outer_iterations += static_cast<std::size_t>(step.outer_iterations);
    linear_solves += step.linear_solves;
    linear_iterations += step.linear_iterations;
}

StepStats& StepStats::operator+=(const StepStats& other) {
    steps += other.steps;
    newton_iterations += other.newton_iterations;
    outer_iterations += other.outer_iterations;
    linear_solves += other.linear_solves;
    linear_iterations += other.linear_iterations;
    if (other.last_newton) last_newton = other.last_newton;
    return *this;
}

StepParams make_step_params(const SimulationConfig& config, const Grid1D& grid) {
    return StepParams{config.dt, grid.dx(), DiffusivityLaw(config.gamma, config.exponent_a),
                      config.t_left, config.t_right};
}

namespace {

Snapshot take_snapshot(std::size_t step, double time, const TemperatureField& field,
                       const DiffusivityLaw& law, StepStats& pending) {
    Snapshot snap{time, step, field, diffusivity_profile(law, field), pending};
    pending = StepStats{};
    return snap;
}

FailureKind classify(const std::exception& e) {
    if (dynamic_cast<const LinearSolverError*>(&e) != nullptr) return FailureKind::LinearSolver;
    if (dynamic_cast<const DomainError*>(&e) != nullptr) return FailureKind::Domain;
    return FailureKind::NonConvergence;
}

}  // namespace

RunReport run_simulation(const SimulationConfig& raw_config, const StepObserver& observer) {
    const auto started = std::chrono::steady_clock::now();
    const SimulationConfig config = validate_config(raw_config);
    const Grid1D grid(config.nodes);
    const StepParams params = make_step_params(config, grid);
    const SolverSettings& settings = config.solver;
    const std::size_t n_steps = config.step_count();

    // Recorded times are the requested values, not step * dt.
    std::map<std::size_t, double> snapshot_steps{{n_steps, config.t_end}};
    for (double t : config.snapshot_times) snapshot_steps.emplace(snapshot_step(config, t), t);

    // One-way coupling freezes D once, before the first step.
    const FrozenDiffusivity frozen = FrozenDiffusivity::from_initial_state(params.law, config.t_right);

    RunReport report{config, grid, {}, {}, {}};
    TemperatureField field = initialize_field(config, grid);
    StepStats pending;
    report.snapshots.push_back(take_snapshot(0, 0.0, field, params.law, pending));

    for (std::size_t step = 1; step <= n_steps; ++step) {
        const double time = static_cast<double>(step) * config.dt;
        StepResult result;
        try {
            switch (config.scheme) {
                case Scheme::OneWay: result = step_one_way(field, frozen, params, settings); break;
                case Scheme::ExplicitSequential:
                    result = step_explicit_sequential(field, params, settings);
                    break;
                case Scheme::ImplicitSequential:
                    result = step_implicit_sequential(field, params, settings);
                    break;
                case Scheme::FullCoupling: result = step_full(field, params, settings); break;
            }
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& e) {
            std::ostringstream os;
            os << "step " << step << " (t = " << time << "): " << e.what();
            throw SolverFailure(classify(e), step, time, os.str());
        }

        pending.record(result);
        report.totals.record(result);
        if (observer) observer(step, time, field, result);
        field = std::move(result.field);

        if (const auto it = snapshot_steps.find(step); it != snapshot_steps.end())
            report.snapshots.push_back(take_snapshot(step, it->second, field, params.law, pending));
    }

    report.wall_time = std::chrono::steady_clock::now() - started;
    return report;
}

}  // namespace heatcouple
