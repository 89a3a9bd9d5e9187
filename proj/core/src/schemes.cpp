#include "heatcouple/schemes.hpp"

#include "heatcouple/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace heatcouple {

namespace {

void require_field(const TemperatureField& field, const char* name) {
    if (field.size() < 3) {
        throw ValidationError(std::string(name) + " needs at least 3 nodes");
    }
}

/// Nodal value with the Dirichlet data substituted at both ends.
double stencil_value(const TemperatureField& field, std::size_t k, const StepParams& p) noexcept {
    if (k == 0) return p.t_left;
    if (k + 1 == field.size()) return p.t_right;
    return field[k];
}

/// T_k^a over the whole stencil, boundaries included.
std::vector<double> powers(const TemperatureField& field, const StepParams& p) {
    std::vector<double> out(field.size());
    const double a = p.law.exponent();
    for (std::size_t k = 0; k < field.size(); ++k) {
        try {
            out[k] = temperature_power(stencil_value(field, k, p), a);
        } catch (const DomainError& e) {
            throw DomainError("node " + std::to_string(k) + ": " + e.what());
        }
    }
    return out;
}

TemperatureField with_interior(const TemperatureField& like, std::span<const double> interior,
                               const StepParams& p) {
    TemperatureField out = like;
    std::copy(interior.begin(), interior.end(), out.interior().begin());
    out[0] = p.t_left;
    out[out.size() - 1] = p.t_right;
    return out;
}

std::string describe(const NormTriple& n) {
    std::ostringstream os;
    os.precision(3);
    os << "[1: " << n.one << ", 2: " << n.two << ", inf: " << n.inf << "]";
    return os.str();
}

}  // namespace

FrozenDiffusivity FrozenDiffusivity::from_initial_state(const DiffusivityLaw& law, double t_right) {
    return {nodal_diffusivity(law, t_right)};
}

IterativeSolution solve_linear(const TridiagonalSystem& system, std::span<const double> rhs,
                               std::span<const double> x0, const SolverSettings& settings) {
    if (settings.linear_solver == LinearSolverKind::Thomas) return {thomas_solve(system, rhs), 0};
    return bicgstab_solve(system, rhs, x0, settings.bicgstab_tol, settings.bicgstab_max_iters);
}

// ---------------------------------------------------------------------------
// Full coupling

std::vector<double> residual_full(const TemperatureField& t_new, const TemperatureField& t_old,
                                  const StepParams& p) {
    require_field(t_new, "t_new");
    if (t_old.size() != t_new.size()) throw ValidationError("t_new and t_old differ in size");

    const std::size_t n = t_new.size();
    const std::vector<double> pw = powers(t_new, p);
    const double beta = p.beta();

    std::vector<double> f(n - 2);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double tm = stencil_value(t_new, k - 1, p);
        const double tk = t_new[k];
        const double tp = stencil_value(t_new, k + 1, p);
        const double braces = pw[k + 1] * tp - pw[k + 1] * tk + pw[k] * tp - 2.0 * pw[k] * tk +
                              pw[k] * tm - pw[k - 1] * tk + pw[k - 1] * tm;
        f[k - 1] = tk - t_old[k] - beta * braces;
    }
    return f;
}

TridiagonalSystem jacobian_full(const TemperatureField& t_new, const StepParams& p) {
    require_field(t_new, "t_new");
    const std::size_t n = t_new.size();
    const double a = p.law.exponent();
    const double beta = p.beta();

    const std::vector<double> pw = powers(t_new, p);
    // a * T^(a-1); identically zero for the constant law.
    std::vector<double> dpw(n, 0.0);
    if (a != 0.0) {
        for (std::size_t k = 0; k < n; ++k)
            dpw[k] = a * temperature_power(stencil_value(t_new, k, p), a - 1.0);
    }

    TridiagonalSystem jac(n - 2);
    auto lower = jac.lower();
    auto diag = jac.diag();
    auto upper = jac.upper();
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const std::size_t row = k - 1;
        const double tm = stencil_value(t_new, k - 1, p);
        const double tk = t_new[k];
        const double tp = stencil_value(t_new, k + 1, p);

        diag[row] = 1.0 - beta * (-pw[k + 1] + dpw[k] * tp - 2.0 * (a + 1.0) * pw[k] +
                                  dpw[k] * tm - pw[k - 1]);
        if (k > 1) lower[row - 1] = -beta * (pw[k] - dpw[k - 1] * tk + (a + 1.0) * pw[k - 1]);
        if (k + 2 < n) upper[row] = -beta * (pw[k] - dpw[k + 1] * tk + (a + 1.0) * pw[k + 1]);
    }
    return jac;
}

StepResult step_full(const TemperatureField& t_old, const StepParams& p,
                     const SolverSettings& settings) {
    require_field(t_old, "t_old");
    StepResult out;
    out.field = with_interior(t_old, t_old.interior(), p);
    TemperatureField& iterate = out.field;

    const std::size_t m = t_old.size() - 2;
    const std::vector<double> zero(m, 0.0);
    NewtonStats stats;

    for (int k = 0;; ++k) {
        std::vector<double> rhs = residual_full(iterate, t_old, p);
        stats.residual = norm_triple(rhs);
        for (double& v : rhs) v = -v;

        const TridiagonalSystem jac = jacobian_full(iterate, p);
        IterativeSolution delta = solve_linear(jac, rhs, zero, settings);
        ++out.linear_solves;
        out.linear_iterations += delta.iterations;

        auto interior = iterate.interior();
        for (std::size_t i = 0; i < m; ++i) interior[i] += delta.x[i];

        const NormTriple change = norm_triple(delta.x);
        const NormTriple size = norm_triple(iterate.interior());
        stats.relative_change = {change.one / std::max(size.one, 1e-300),
                                 change.two / std::max(size.two, 1e-300),
                                 change.inf / std::max(size.inf, 1e-300)};

        if (stats.residual.all_below(settings.newton_tol) &&
            stats.relative_change.all_below(settings.newton_tol)) {
            stats.iterations = k;
            out.newton = stats;
            return out;
        }
        if (k >= settings.newton_max_iters) {
            throw NonConvergenceError("Newton did not converge in " +
                                      std::to_string(settings.newton_max_iters) +
                                      " iterations; residual norms " + describe(stats.residual) +
                                      ", relative change norms " + describe(stats.relative_change));
        }
    }
}

// ---------------------------------------------------------------------------
// Sequential coupling

LinearSystem assemble_lagged(const TemperatureField& lagged, const TemperatureField& t_old,
                             const StepParams& p) {
    require_field(lagged, "lagged field");
    if (t_old.size() != lagged.size()) throw ValidationError("lagged and t_old differ in size");

    const std::size_t n = lagged.size();
    const double scale = p.dt / (p.dx * p.dx);
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        try {
            d[k] = nodal_diffusivity(p.law, stencil_value(lagged, k, p));
        } catch (const DomainError& e) {
            throw DomainError("node " + std::to_string(k) + ": " + e.what());
        }
    }

    LinearSystem sys{TridiagonalSystem(n - 2), std::vector<double>(n - 2)};
    auto lower = sys.matrix.lower();
    auto diag = sys.matrix.diag();
    auto upper = sys.matrix.upper();
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const std::size_t row = k - 1;
        const double west = scale * internodal_diffusivity(d[k - 1], d[k]);
        const double east = scale * internodal_diffusivity(d[k], d[k + 1]);
        diag[row] = 1.0 + west + east;
        sys.rhs[row] = t_old[k];
        if (k > 1) lower[row - 1] = -west;
        else sys.rhs[row] += west * p.t_left;
        if (k + 2 < n) upper[row] = -east;
        else sys.rhs[row] += east * p.t_right;
    }
    return sys;
}

LinearSystem assemble_explicit(const TemperatureField& t_old, const StepParams& p) {
    return assemble_lagged(t_old, t_old, p);
}

StepResult step_explicit_sequential(const TemperatureField& t_old, const StepParams& p,
                                    const SolverSettings& settings) {
    const LinearSystem sys = assemble_explicit(t_old, p);
    const IterativeSolution sol = solve_linear(sys.matrix, sys.rhs, t_old.interior(), settings);
    StepResult out;
    out.field = with_interior(t_old, sol.x, p);
    out.linear_solves = 1;
    out.linear_iterations = sol.iterations;
    return out;
}

StepResult step_implicit_sequential(const TemperatureField& t_old, const StepParams& p,
                                    const SolverSettings& settings) {
    require_field(t_old, "t_old");
    StepResult out;
    TemperatureField current = with_interior(t_old, t_old.interior(), p);
    double change = 0.0;

    for (int it = 1; it <= settings.fixed_point_max_iters; ++it) {
        const LinearSystem sys = assemble_lagged(current, t_old, p);
        const IterativeSolution sol = solve_linear(sys.matrix, sys.rhs, current.interior(), settings);
        ++out.linear_solves;
        out.linear_iterations += sol.iterations;

        TemperatureField next = with_interior(current, sol.x, p);
        double diff = 0.0;
        for (std::size_t k = 0; k < next.size(); ++k)
            diff = std::max(diff, std::abs(next[k] - current[k]));
        change = diff / std::max(vector_norm(next.values(), NormKind::Infinity), 1e-300);
        current = std::move(next);

        if (p.law.is_constant() || change < settings.fixed_point_tol) {
            out.field = std::move(current);
            out.outer_iterations = it;
            return out;
        }
    }
    throw NonConvergenceError("implicit sequential loop did not converge in " +
                              std::to_string(settings.fixed_point_max_iters) +
                              " iterations; last relative change " + std::to_string(change));
}

// ---------------------------------------------------------------------------
// One-way coupling

LinearSystem assemble_one_way(const TemperatureField& t_old, FrozenDiffusivity frozen,
                              const StepParams& p) {
    require_field(t_old, "t_old");
    const std::size_t m = t_old.size() - 2;
    const double lambda = p.lambda(frozen.value);

    LinearSystem sys{TridiagonalSystem(std::vector<double>(m - 1, -lambda),
                                       std::vector<double>(m, 1.0 + 2.0 * lambda),
                                       std::vector<double>(m - 1, -lambda)),
                     std::vector<double>(t_old.interior().begin(), t_old.interior().end())};
    sys.rhs.front() += lambda * p.t_left;
    sys.rhs.back() += lambda * p.t_right;
    return sys;
}

StepResult step_one_way(const TemperatureField& t_old, FrozenDiffusivity frozen,
                        const StepParams& p, const SolverSettings& settings) {
    const LinearSystem sys = assemble_one_way(t_old, frozen, p);
    const IterativeSolution sol = solve_linear(sys.matrix, sys.rhs, t_old.interior(), settings);
    StepResult out;
    out.field = with_interior(t_old, sol.x, p);
    out.linear_solves = 1;
    out.linear_iterations = sol.iterations;
    return out;
}

}  // namespace heatcouple
