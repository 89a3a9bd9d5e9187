#pragma once

#include <vector>

namespace heatcouple {

class TemperatureField;

/// D(T) = gamma * T^a. a = 3 corresponds to radiative transfer.
class DiffusivityLaw {
public:
    DiffusivityLaw(double gamma, double exponent);

    double gamma() const noexcept { return gamma_; }
    double exponent() const noexcept { return exponent_; }

    /// True when D does not depend on T (a == 0).
    bool is_constant() const noexcept { return exponent_ == 0.0; }

private:
    double gamma_;
    double exponent_;
};

/// T^a. Small integer exponents use repeated multiplication, all others
/// exp(a ln T). Throws DomainError for T <= 0 with a non-integer exponent,
/// and for T == 0 with a negative exponent.
double temperature_power(double temperature, double exponent);

double nodal_diffusivity(const DiffusivityLaw& law, double temperature);

/// Arithmetic mean of two nodal values.
constexpr double internodal_diffusivity(double d_left, double d_right) noexcept {
    return 0.5 * (d_left + d_right);
}

/// Elementwise nodal_diffusivity; domain errors name the offending node.
std::vector<double> diffusivity_profile(const DiffusivityLaw& law, const TemperatureField& field);

namespace detail {

inline constexpr int kMaxMultiplicationExponent = 16;

double power_by_multiplication(double base, int exponent) noexcept;
double power_by_exp_log(double base, double exponent);

}  // namespace detail

}  // namespace heatcouple
