#pragma once

#include "heatcouple/settings.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace heatcouple {

/// Coupling strategy between the heat equation and the diffusivity law.
enum class Scheme { OneWay, ExplicitSequential, ImplicitSequential, FullCoupling };

inline constexpr std::array<Scheme, 4> kAllSchemes{
    Scheme::OneWay, Scheme::ExplicitSequential, Scheme::ImplicitSequential,
    Scheme::FullCoupling};

/// Short token used on the command line and in output file names.
std::string_view to_string(Scheme scheme) noexcept;
std::optional<Scheme> parse_scheme(std::string_view name) noexcept;

/// Problem and solver parameterization for one run.
///
/// Defaults reproduce the Marshak-type demonstrator: 200 nodes on [0, 1],
/// T_l = 0.1, T_r = 2.0, D(T) = T^3, dt = 0.001 up to t = 0.5.
struct SimulationConfig {
    std::size_t nodes = 200;
    double t_left = 0.1;
    double t_right = 2.0;
    double gamma = 1.0;
    double exponent_a = 3.0;
    double dt = 0.001;
    double t_end = 0.5;
    Scheme scheme = Scheme::FullCoupling;
    SolverSettings solver{};
    std::vector<double> snapshot_times{};

    /// round(t_end / dt); meaningful only for a validated config.
    std::size_t step_count() const noexcept;
};

/// Throws ValidationError naming the first violated invariant.
SimulationConfig validate_config(SimulationConfig config);

/// Step index a validated snapshot time falls on.
std::size_t snapshot_step(const SimulationConfig& config, double time) noexcept;

}  // namespace heatcouple
