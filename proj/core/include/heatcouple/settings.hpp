#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace heatcouple {

enum class LinearSolverKind { Thomas, BiCGStab };

std::string_view to_string(LinearSolverKind kind) noexcept;
std::optional<LinearSolverKind> parse_linear_solver(std::string_view name) noexcept;

/// Iteration controls shared by all stepping schemes.
struct SolverSettings {
    double newton_tol = 1e-6;
    int newton_max_iters = 50;
    LinearSolverKind linear_solver = LinearSolverKind::Thomas;
    double bicgstab_tol = 1e-7;
    std::size_t bicgstab_max_iters = 0;  // 0 selects 10 * system size
    double fixed_point_tol = 1e-6;
    int fixed_point_max_iters = 100;
};

}  // namespace heatcouple
