#pragma once

#include "heatcouple/diffusivity.hpp"
#include "heatcouple/grid.hpp"
#include "heatcouple/linalg.hpp"
#include "heatcouple/settings.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace heatcouple {

/// Discretization data for one time step.
struct StepParams {
    double dt;
    double dx;
    DiffusivityLaw law;
    double t_left;
    double t_right;

    /// gamma * dt / (2 dx^2), the factor in front of every braced stencil sum.
    double beta() const noexcept { return law.gamma() * dt / (2.0 * dx * dx); }

    /// D * dt / dx^2 for the constant-coefficient BTCS system.
    double lambda(double diffusivity) const noexcept { return diffusivity * dt / (dx * dx); }
};

struct NewtonStats {
    int iterations = 0;
    NormTriple residual{};
    NormTriple relative_change{};
};

/// Scalar diffusivity held fixed by one-way coupling.
struct FrozenDiffusivity {
    double value;

    /// gamma * T_r^a, the diffusivity of the uniform initial state.
    static FrozenDiffusivity from_initial_state(const DiffusivityLaw& law, double t_right);
};

/// Interior system with the boundary contributions already on the rhs.
struct LinearSystem {
    TridiagonalSystem matrix;
    std::vector<double> rhs;
};

struct StepResult {
    TemperatureField field;
    std::optional<NewtonStats> newton{};
    int outer_iterations = 0;
    std::size_t linear_solves = 0;
    std::size_t linear_iterations = 0;
};

// ---- Full coupling -------------------------------------------------------

/// Nonlinear residual f_k, k = 1..N-2, of the fully coupled BTCS scheme with
/// arithmetic internodal averaging. Boundary neighbours take p.t_left/p.t_right.
std::vector<double> residual_full(const TemperatureField& t_new, const TemperatureField& t_old,
                                  const StepParams& p);

/// Analytic Jacobian of residual_full with respect to the interior unknowns.
TridiagonalSystem jacobian_full(const TemperatureField& t_new, const StepParams& p);

/// Newton-Raphson from the warm start t_old. Converged when the 1-, 2- and
/// inf-norms of both the residual and the relative correction are below
/// newton_tol; NewtonStats::iterations counts the corrections applied before
/// that test passed. Throws NonConvergenceError.
StepResult step_full(const TemperatureField& t_old, const StepParams& p,
                     const SolverSettings& settings);

// ---- Sequential coupling -------------------------------------------------

/// Linear system with diffusivities evaluated at `lagged` and rhs from `t_old`.
LinearSystem assemble_lagged(const TemperatureField& lagged, const TemperatureField& t_old,
                             const StepParams& p);

/// Diffusivities lagged to the previous time level.
LinearSystem assemble_explicit(const TemperatureField& t_old, const StepParams& p);

/// One exchange per step: diffusivity from level n, temperature to level n+1.
StepResult step_explicit_sequential(const TemperatureField& t_old, const StepParams& p,
                                    const SolverSettings& settings);

/// Picard loop on the lagged system until the relative inf-norm change falls
/// below fixed_point_tol. outer_iterations counts lagged solves. A constant
/// law needs exactly one. Throws NonConvergenceError.
StepResult step_implicit_sequential(const TemperatureField& t_old, const StepParams& p,
                                    const SolverSettings& settings);

// ---- One-way coupling ----------------------------------------------------

LinearSystem assemble_one_way(const TemperatureField& t_old, FrozenDiffusivity frozen,
                              const StepParams& p);

StepResult step_one_way(const TemperatureField& t_old, FrozenDiffusivity frozen,
                        const StepParams& p, const SolverSettings& settings);

/// Solve with the configured linear solver; x0 seeds BiCGSTAB only.
IterativeSolution solve_linear(const TridiagonalSystem& system, std::span<const double> rhs,
                               std::span<const double> x0, const SolverSettings& settings);

}  // namespace heatcouple
