#pragma once

#include "heatcouple/config.hpp"
#include "heatcouple/simulation.hpp"

#include <span>
#include <string>
#include <vector>

namespace heatcouple {

/// Nodal L1 / L2 / L-inf norms of a profile difference.
struct Discrepancy {
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
};

Discrepancy profile_discrepancy(const TemperatureField& a, const TemperatureField& b);

struct ComparisonEntry {
    Scheme scheme;
    double dt;
    Discrepancy vs_reference;
    RunReport run;
};

struct SchemeSpread {
    Scheme scheme;
    double linf_spread;  // max pairwise L-inf distance between its t_end profiles
};

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status) noexcept;

struct OrderingCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct ComparisonReport {
    double reference_dt = 0.0;
    TemperatureField reference;  // full coupling at the smallest dt, at t_end
    std::vector<ComparisonEntry> entries;  // scheme-major, input order
    std::vector<SchemeSpread> spreads;
    std::vector<OrderingCheck> checks;

    const ComparisonEntry* find(Scheme scheme, double dt) const noexcept;
    const SchemeSpread* spread(Scheme scheme) const noexcept;
};

struct CompareOptions {
    bool parallel = true;
};

/// Runs every scheme at every dt and measures t_end profiles against full
/// coupling at the smallest dt. Failures are rethrown labelled with
/// (scheme, dt).
ComparisonReport compare_schemes(const SimulationConfig& base, std::span<const double> dt_values,
                                 std::span<const Scheme> schemes = kAllSchemes,
                                 const CompareOptions& options = {});

/// The three qualitative orderings of the timestep sweep:
///   - explicit sequential error strictly increasing in dt,
///   - one-way worse than explicit sequential at every dt,
///   - full-coupling cross-dt spread below that of one-way and explicit sequential.
/// Checks whose schemes are missing from the report are Skipped.
std::vector<OrderingCheck> evaluate_orderings(const ComparisonReport& report);

struct ConvergenceStudy {
    Scheme scheme;
    std::vector<double> dts;                      // descending
    std::vector<TemperatureField> profiles;       // t_end profile per dt
    std::vector<double> successive_differences;   // ||T(dt_i+1) - T(dt_i)||_inf
    std::vector<double> orders;                   // one per consecutive triplet
};

/// log(coarse_diff / fine_diff) / log(ratio).
double richardson_order(double coarse_diff, double fine_diff, double ratio);

/// Runs a geometric dt ladder (at least three values, constant ratio) and
/// estimates the observed temporal order from every consecutive triplet.
ConvergenceStudy convergence_study(const SimulationConfig& base, Scheme scheme,
                                   std::span<const double> dt_ladder);

}  // namespace heatcouple
