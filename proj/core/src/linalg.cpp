#include "heatcouple/linalg.hpp"

#include "heatcouple/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace heatcouple {

namespace {

constexpr double kTiny = 1e-300;

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void require_length(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw ValidationError(std::string(what) + " has length " + std::to_string(got) +
                              ", expected " + std::to_string(want));
    }
}

}  // namespace

TridiagonalSystem::TridiagonalSystem(std::size_t size)
    : lower_(size == 0 ? 0 : size - 1, 0.0), diag_(size, 0.0), upper_(size == 0 ? 0 : size - 1, 0.0) {}

TridiagonalSystem::TridiagonalSystem(std::vector<double> lower, std::vector<double> diag,
                                     std::vector<double> upper)
    : lower_(std::move(lower)), diag_(std::move(diag)), upper_(std::move(upper)) {
    const std::size_t bands = diag_.empty() ? 0 : diag_.size() - 1;
    require_length(lower_.size(), bands, "lower band");
    require_length(upper_.size(), bands, "upper band");
}

bool TridiagonalSystem::strictly_diagonally_dominant() const noexcept {
    for (std::size_t i = 0; i < size(); ++i) {
        if (!(std::abs(diag_[i]) > std::abs(sub(i)) + std::abs(super(i)))) return false;
    }
    return true;
}

double vector_norm(std::span<const double> v, NormKind kind) noexcept {
    switch (kind) {
        case NormKind::One: {
            double s = 0.0;
            for (double x : v) s += std::abs(x);
            return s;
        }
        case NormKind::Two: {
            // Scaled accumulation keeps squares of large entries finite.
            double scale = 0.0;
            for (double x : v) scale = std::max(scale, std::abs(x));
            if (scale == 0.0) return 0.0;
            double s = 0.0;
            for (double x : v) {
                const double y = x / scale;
                s += y * y;
            }
            return scale * std::sqrt(s);
        }
        case NormKind::Infinity: {
            double m = 0.0;
            for (double x : v) m = std::max(m, std::abs(x));
            return m;
        }
    }
    return 0.0;
}

NormTriple norm_triple(std::span<const double> v) noexcept {
    return {vector_norm(v, NormKind::One), vector_norm(v, NormKind::Two),
            vector_norm(v, NormKind::Infinity)};
}

std::vector<double> tridiagonal_matvec(const TridiagonalSystem& system, std::span<const double> v) {
    const std::size_t m = system.size();
    require_length(v.size(), m, "vector");
    std::vector<double> out(m);
    const auto diag = system.diag();
    for (std::size_t i = 0; i < m; ++i) {
        // Column order, so the result equals a dense row product bit for bit.
        double s = i > 0 ? system.sub(i) * v[i - 1] : 0.0;
        s += diag[i] * v[i];
        if (i + 1 < m) s += system.super(i) * v[i + 1];
        out[i] = s;
    }
    return out;
}

std::vector<double> thomas_solve(const TridiagonalSystem& system, std::span<const double> rhs) {
    const std::size_t m = system.size();
    require_length(rhs.size(), m, "rhs");
    if (m == 0) return {};

    const auto diag = system.diag();
    std::vector<double> c(m);  // modified super-diagonal
    std::vector<double> x(m);

    double pivot = diag[0];
    if (std::abs(pivot) < kTiny) throw SingularMatrixError("Thomas: zero pivot at row 0");
    c[0] = system.super(0) / pivot;
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < m; ++i) {
        const double a = system.sub(i);
        pivot = diag[i] - a * c[i - 1];
        if (std::abs(pivot) < kTiny)
            throw SingularMatrixError("Thomas: zero pivot at row " + std::to_string(i));
        c[i] = system.super(i) / pivot;
        x[i] = (rhs[i] - a * x[i - 1]) / pivot;
    }
    for (std::size_t i = m - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

IterativeSolution bicgstab_solve(const TridiagonalSystem& system, std::span<const double> rhs,
                                 std::span<const double> x0, double tol, std::size_t max_iters) {
    const std::size_t m = system.size();
    require_length(rhs.size(), m, "rhs");
    require_length(x0.size(), m, "initial guess");
    if (!(tol > 0.0)) throw ValidationError("BiCGSTAB tolerance must be > 0");
    if (max_iters == 0) max_iters = 10 * std::max<std::size_t>(m, 1);

    IterativeSolution out{std::vector<double>(x0.begin(), x0.end()), 0};
    auto& x = out.x;

    const double rhs_norm = vector_norm(rhs, NormKind::Two);
    const double threshold = rhs_norm > 0.0 ? tol * rhs_norm : tol;

    std::vector<double> r(m);
    auto refresh_residual = [&] {
        r = tridiagonal_matvec(system, x);
        for (std::size_t i = 0; i < m; ++i) r[i] = rhs[i] - r[i];
        return vector_norm(r, NormKind::Two) <= threshold;
    };
    if (refresh_residual()) return out;

    std::vector<double> r_hat = r;
    std::vector<double> p(m, 0.0), v(m, 0.0), s(m), t;
    double rho_prev = 1.0, alpha = 1.0, omega = 1.0;
    bool restart = true;

    for (std::size_t it = 1; it <= max_iters; ++it) {
        const double rho = dot(r_hat, r);
        if (std::abs(rho) < kTiny) throw BreakdownError("BiCGSTAB breakdown: rho vanished");
        if (restart) {
            p = r;
            restart = false;
        } else {
            const double beta = (rho / rho_prev) * (alpha / omega);
            for (std::size_t i = 0; i < m; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
        }
        v = tridiagonal_matvec(system, p);
        const double rv = dot(r_hat, v);
        if (std::abs(rv) < kTiny) throw BreakdownError("BiCGSTAB breakdown: <r_hat, v> vanished");
        alpha = rho / rv;
        for (std::size_t i = 0; i < m; ++i) s[i] = r[i] - alpha * v[i];
        out.iterations = it;

        bool recurrence_converged = false;
        if (vector_norm(s, NormKind::Two) <= threshold) {
            for (std::size_t i = 0; i < m; ++i) x[i] += alpha * p[i];
            recurrence_converged = true;
        } else {
            t = tridiagonal_matvec(system, s);
            const double tt = dot(t, t);
            if (tt < kTiny) throw BreakdownError("BiCGSTAB breakdown: <t, t> vanished");
            omega = dot(t, s) / tt;
            if (std::abs(omega) < kTiny) throw BreakdownError("BiCGSTAB breakdown: omega vanished");
            for (std::size_t i = 0; i < m; ++i) {
                x[i] += alpha * p[i] + omega * s[i];
                r[i] = s[i] - omega * t[i];
            }
            recurrence_converged = vector_norm(r, NormKind::Two) <= threshold;
        }
        if (recurrence_converged) {
            // The recursive residual drifts from the true one; confirm before returning.
            if (refresh_residual()) return out;
            r_hat = r;
            restart = true;
        }
        rho_prev = rho;
    }
    throw NonConvergenceError("BiCGSTAB did not reach relative residual " + std::to_string(tol) +
                              " in " + std::to_string(max_iters) + " iterations");
}

}  // namespace heatcouple
