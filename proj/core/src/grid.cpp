#include "heatcouple/grid.hpp"

#include "heatcouple/config.hpp"
#include "heatcouple/errors.hpp"

namespace heatcouple {

Grid1D::Grid1D(std::size_t nodes) : dx_(0.0), positions_(nodes) {
    if (nodes < 2) throw ValidationError("grid needs at least two nodes");
    dx_ = 1.0 / static_cast<double>(nodes - 1);
    for (std::size_t k = 0; k + 1 < nodes; ++k) positions_[k] = static_cast<double>(k) * dx_;
    positions_.back() = 1.0;
}

TemperatureField initialize_field(const SimulationConfig& config, const Grid1D& grid) {
    TemperatureField field(grid.nodes(), config.t_right);
    field[0] = config.t_left;
    return field;
}

}  // namespace heatcouple
