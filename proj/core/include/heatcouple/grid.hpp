#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace heatcouple {

struct SimulationConfig;

/// Uniform grid on [0, 1] including both boundary nodes.
class Grid1D {
public:
    explicit Grid1D(std::size_t nodes);

    std::size_t nodes() const noexcept { return positions_.size(); }
    double dx() const noexcept { return dx_; }
    double x(std::size_t k) const noexcept { return positions_[k]; }
    std::span<const double> positions() const noexcept { return positions_; }

private:
    double dx_;
    std::vector<double> positions_;
};

/// Nodal temperatures at one time level.
class TemperatureField {
public:
    TemperatureField() = default;
    explicit TemperatureField(std::vector<double> values) : values_(std::move(values)) {}
    TemperatureField(std::size_t nodes, double value) : values_(nodes, value) {}

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t k) const noexcept { return values_[k]; }
    double& operator[](std::size_t k) noexcept { return values_[k]; }

    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

    /// Nodes 1..N-2, the unknowns of every discrete system.
    std::span<const double> interior() const noexcept {
        return std::span<const double>(values_).subspan(1, values_.size() - 2);
    }
    std::span<double> interior() noexcept {
        return std::span<double>(values_).subspan(1, values_.size() - 2);
    }

    bool operator==(const TemperatureField&) const = default;

private:
    std::vector<double> values_;
};

/// T(x, 0) = t_right everywhere except node 0, which carries t_left.
TemperatureField initialize_field(const SimulationConfig& config, const Grid1D& grid);

}  // namespace heatcouple
