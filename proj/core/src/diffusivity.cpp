#include "heatcouple/diffusivity.hpp"

#include "heatcouple/errors.hpp"
#include "heatcouple/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace heatcouple {

DiffusivityLaw::DiffusivityLaw(double gamma, double exponent) : gamma_(gamma), exponent_(exponent) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ValidationError("diffusivity prefactor gamma must be > 0");
    if (!std::isfinite(exponent)) throw ValidationError("diffusivity exponent must be finite");
}

namespace detail {

double power_by_multiplication(double base, int exponent) noexcept {
    unsigned n = static_cast<unsigned>(std::abs(exponent));
    double result = 1.0;
    double factor = base;
    while (n != 0) {
        if (n & 1u) result *= factor;
        factor *= factor;
        n >>= 1u;
    }
    return exponent < 0 ? 1.0 / result : result;
}

double power_by_exp_log(double base, double exponent) {
    if (!(base > 0.0)) {
        throw DomainError("T^a with non-integer a requires T > 0 (got T = " + std::to_string(base) + ")");
    }
    return std::exp(exponent * std::log(base));
}

}  // namespace detail

double temperature_power(double temperature, double exponent) {
    const double rounded = std::round(exponent);
    if (rounded == exponent && std::abs(rounded) <= detail::kMaxMultiplicationExponent) {
        if (exponent < 0.0 && temperature == 0.0)
            throw DomainError("T^a with negative a is undefined at T = 0");
        return detail::power_by_multiplication(temperature, static_cast<int>(rounded));
    }
    return detail::power_by_exp_log(temperature, exponent);
}

double nodal_diffusivity(const DiffusivityLaw& law, double temperature) {
    return law.gamma() * temperature_power(temperature, law.exponent());
}

std::vector<double> diffusivity_profile(const DiffusivityLaw& law, const TemperatureField& field) {
    std::vector<double> out(field.size());
    for (std::size_t k = 0; k < field.size(); ++k) {
        try {
            out[k] = nodal_diffusivity(law, field[k]);
        } catch (const DomainError& e) {
            throw DomainError("node " + std::to_string(k) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace heatcouple
