#pragma once

#include <heatcouple/compare.hpp>
#include <heatcouple/simulation.hpp>

#include <filesystem>
#include <string>

namespace heatcouple::cli {

/// Shortest decimal text that round-trips to `value`.
std::string format_shortest(double value);

/// `<scheme>_dt<dt>_t<time>.csv`
std::string profile_file_name(Scheme scheme, double dt, double time);

/// Header `x,temperature,diffusivity`, then one row per node at 17 significant digits.
std::string format_profile(const Grid1D& grid, const Snapshot& snapshot);

/// Config echo, iteration totals and a per-snapshot statistics table.
/// Contains no timing data, so it is deterministic for a given config.
std::string format_run_summary(const RunReport& report);

std::string format_comparison_csv(const ComparisonReport& report);
std::string format_comparison_summary(const SimulationConfig& base, const ComparisonReport& report);

std::string format_convergence_csv(const ConvergenceStudy& study);
std::string format_convergence_summary(const SimulationConfig& base, const ConvergenceStudy& study);

void write_text(const std::filesystem::path& path, const std::string& contents);

/// Writes every snapshot of `report` into `dir`; returns the number of files.
std::size_t write_profiles(const std::filesystem::path& dir, const RunReport& report);

}  // namespace heatcouple::cli
