#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace heatcouple {

/// Three-band matrix of size m. lower[i] couples row i+1 to column i,
/// upper[i] couples row i to column i+1.
class TridiagonalSystem {
public:
    TridiagonalSystem() = default;
    explicit TridiagonalSystem(std::size_t size);
    TridiagonalSystem(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper);

    std::size_t size() const noexcept { return diag_.size(); }

    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> diag() const noexcept { return diag_; }
    std::span<const double> upper() const noexcept { return upper_; }
    std::span<double> lower() noexcept { return lower_; }
    std::span<double> diag() noexcept { return diag_; }
    std::span<double> upper() noexcept { return upper_; }

    /// Row i entries, zero where the band falls outside the matrix.
    double sub(std::size_t row) const noexcept { return row == 0 ? 0.0 : lower_[row - 1]; }
    double super(std::size_t row) const noexcept {
        return row + 1 == diag_.size() ? 0.0 : upper_[row];
    }

    bool strictly_diagonally_dominant() const noexcept;

private:
    std::vector<double> lower_;
    std::vector<double> diag_;
    std::vector<double> upper_;
};

enum class NormKind { One, Two, Infinity };

double vector_norm(std::span<const double> v, NormKind kind) noexcept;

/// All three norms of one vector.
struct NormTriple {
    double one = 0.0;
    double two = 0.0;
    double inf = 0.0;

    bool all_below(double tol) const noexcept { return one < tol && two < tol && inf < tol; }
};

NormTriple norm_triple(std::span<const double> v) noexcept;

std::vector<double> tridiagonal_matvec(const TridiagonalSystem& system, std::span<const double> v);

/// Thomas elimination without pivoting. Throws SingularMatrixError when a
/// pivot magnitude drops below 1e-300.
std::vector<double> thomas_solve(const TridiagonalSystem& system, std::span<const double> rhs);

struct IterativeSolution {
    std::vector<double> x;
    std::size_t iterations = 0;
};

/// Unpreconditioned BiCGSTAB. Stops when ||rhs - A x||_2 / ||rhs||_2 <= tol
/// (absolute residual when rhs == 0). max_iters == 0 selects 10 * m.
/// Throws NonConvergenceError or BreakdownError.
IterativeSolution bicgstab_solve(const TridiagonalSystem& system, std::span<const double> rhs,
                                 std::span<const double> x0, double tol,
                                 std::size_t max_iters = 0);

}  // namespace heatcouple
