#include "heatcouple/config.hpp"

#include "heatcouple/errors.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace heatcouple {

std::string_view to_string(Scheme scheme) noexcept {
    switch (scheme) {
        case Scheme::OneWay: return "one-way";
        case Scheme::ExplicitSequential: return "explicit";
        case Scheme::ImplicitSequential: return "implicit";
        case Scheme::FullCoupling: return "full";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) noexcept {
    for (Scheme s : kAllSchemes) {
        if (name == to_string(s)) return s;
    }
    if (name == "oneway" || name == "one_way") return Scheme::OneWay;
    if (name == "explicit-sequential") return Scheme::ExplicitSequential;
    if (name == "implicit-sequential") return Scheme::ImplicitSequential;
    if (name == "full-coupling") return Scheme::FullCoupling;
    return std::nullopt;
}

std::string_view to_string(LinearSolverKind kind) noexcept {
    return kind == LinearSolverKind::Thomas ? "thomas" : "bicgstab";
}

std::optional<LinearSolverKind> parse_linear_solver(std::string_view name) noexcept {
    if (name == "thomas") return LinearSolverKind::Thomas;
    if (name == "bicgstab") return LinearSolverKind::BiCGStab;
    return std::nullopt;
}

std::size_t SimulationConfig::step_count() const noexcept {
    return static_cast<std::size_t>(std::llround(t_end / dt));
}

std::size_t snapshot_step(const SimulationConfig& config, double time) noexcept {
    return static_cast<std::size_t>(std::llround(time / config.dt));
}

namespace {

[[noreturn]] void reject(const std::string& message) { throw ValidationError(message); }

std::string str(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

SimulationConfig validate_config(SimulationConfig config) {
    if (config.nodes < 3) reject("nodes must be >= 3 (got " + std::to_string(config.nodes) + ")");
    if (!std::isfinite(config.t_left) || config.t_left <= 0.0)
        reject("t_left must be a positive temperature (got " + str(config.t_left) + ")");
    if (!std::isfinite(config.t_right) || config.t_right <= 0.0)
        reject("t_right must be a positive temperature (got " + str(config.t_right) + ")");
    if (!std::isfinite(config.gamma) || config.gamma <= 0.0)
        reject("gamma must be > 0 (got " + str(config.gamma) + ")");
    if (!std::isfinite(config.exponent_a)) reject("exponent a must be finite");
    if (!std::isfinite(config.dt) || config.dt <= 0.0)
        reject("dt must be > 0 (got " + str(config.dt) + ")");
    if (!std::isfinite(config.t_end) || config.t_end <= 0.0)
        reject("t_end must be > 0 (got " + str(config.t_end) + ")");

    const double ratio = config.t_end / config.dt;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded)
        reject("t_end not an integer multiple of dt (t_end / dt = " + str(ratio) + ")");

    const SolverSettings& s = config.solver;
    if (!(s.newton_tol > 0.0)) reject("newton_tol must be > 0");
    if (s.newton_max_iters < 1) reject("newton_max_iters must be >= 1");
    if (!(s.bicgstab_tol > 0.0)) reject("bicgstab_tol must be > 0");
    if (!(s.fixed_point_tol > 0.0)) reject("fixed_point_tol must be > 0");
    if (s.fixed_point_max_iters < 1) reject("fixed_point_max_iters must be >= 1");

    for (double t : config.snapshot_times) {
        if (!std::isfinite(t) || t < 0.0 || t > config.t_end * (1.0 + 1e-12))
            reject("snapshot time " + str(t) + " outside [0, t_end]");
        const double steps = t / config.dt;
        if (std::abs(steps - std::round(steps)) * config.dt > 1e-9 * config.dt)
            reject("snapshot time " + str(t) + " does not fall on a step boundary");
    }
    return config;
}

}  // namespace heatcouple
