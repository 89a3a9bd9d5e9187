#include "heatcouple/compare.hpp"

#include "heatcouple/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>

namespace heatcouple {

std::string_view to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

Discrepancy profile_discrepancy(const TemperatureField& a, const TemperatureField& b) {
    if (a.size() != b.size()) throw ValidationError("profiles differ in node count");
    std::vector<double> diff(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];
    const NormTriple n = norm_triple(diff);
    return {n.one, n.two, n.inf};
}

const ComparisonEntry* ComparisonReport::find(Scheme scheme, double dt) const noexcept {
    for (const auto& e : entries) {
        if (e.scheme == scheme && e.dt == dt) return &e;
    }
    return nullptr;
}

const SchemeSpread* ComparisonReport::spread(Scheme scheme) const noexcept {
    for (const auto& s : spreads) {
        if (s.scheme == scheme) return &s;
    }
    return nullptr;
}

namespace {

std::string label(Scheme scheme, double dt) {
    std::ostringstream os;
    os << "[" << to_string(scheme) << ", dt = " << dt << "] ";
    return os.str();
}

RunReport labelled_run(SimulationConfig config, Scheme scheme, double dt) {
    config.scheme = scheme;
    config.dt = dt;
    try {
        return run_simulation(config);
    } catch (const SolverFailure& e) {
        throw SolverFailure(e.kind(), e.step(), e.time(), label(scheme, dt) + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(label(scheme, dt) + e.what());
    }
}

/// Runs every job, concurrently when asked; results keep input order.
std::vector<RunReport> run_all(const std::vector<std::function<RunReport()>>& jobs, bool parallel) {
    std::vector<RunReport> out;
    out.reserve(jobs.size());
    if (!parallel) {
        for (const auto& job : jobs) out.push_back(job());
        return out;
    }
    std::vector<std::future<RunReport>> pending;
    pending.reserve(jobs.size());
    for (const auto& job : jobs) pending.push_back(std::async(std::launch::async, job));
    for (auto& f : pending) out.push_back(f.get());
    return out;
}

}  // namespace

ComparisonReport compare_schemes(const SimulationConfig& base, std::span<const double> dt_values,
                                 std::span<const Scheme> schemes, const CompareOptions& options) {
    if (dt_values.empty()) throw ValidationError("compare needs at least one dt value");
    if (schemes.empty()) throw ValidationError("compare needs at least one scheme");
    for (double dt : dt_values) {
        SimulationConfig probe = base;
        probe.dt = dt;
        probe.snapshot_times.clear();
        try {
            validate_config(probe);
        } catch (const ValidationError& e) {
            std::ostringstream os;
            os << "dt = " << dt << ": " << e.what();
            throw ValidationError(os.str());
        }
    }

    ComparisonReport report;
    report.reference_dt = *std::min_element(dt_values.begin(), dt_values.end());

    std::vector<std::function<RunReport()>> jobs;
    for (Scheme s : schemes)
        for (double dt : dt_values) jobs.emplace_back([&base, s, dt] { return labelled_run(base, s, dt); });

    const bool reference_included =
        std::find(schemes.begin(), schemes.end(), Scheme::FullCoupling) != schemes.end();
    if (!reference_included) {
        jobs.emplace_back([&base, dt = report.reference_dt] {
            return labelled_run(base, Scheme::FullCoupling, dt);
        });
    }

    std::vector<RunReport> runs = run_all(jobs, options.parallel);
    if (!reference_included) {
        report.reference = runs.back().final_snapshot().temperatures;
        runs.pop_back();
    }

    std::size_t idx = 0;
    for (Scheme s : schemes) {
        for (double dt : dt_values) {
            RunReport& run = runs[idx++];
            if (reference_included && s == Scheme::FullCoupling && dt == report.reference_dt &&
                report.reference.size() == 0) {
                report.reference = run.final_snapshot().temperatures;
            }
            report.entries.push_back({s, dt, {}, std::move(run)});
        }
    }
    for (auto& e : report.entries)
        e.vs_reference = profile_discrepancy(e.run.final_snapshot().temperatures, report.reference);

    for (Scheme s : schemes) {
        double spread = 0.0;
        for (const auto& a : report.entries) {
            if (a.scheme != s) continue;
            for (const auto& b : report.entries) {
                if (b.scheme != s) continue;
                spread = std::max(spread, profile_discrepancy(a.run.final_snapshot().temperatures,
                                                              b.run.final_snapshot().temperatures)
                                              .linf);
            }
        }
        report.spreads.push_back({s, spread});
    }

    report.checks = evaluate_orderings(report);
    return report;
}

std::vector<OrderingCheck> evaluate_orderings(const ComparisonReport& report) {
    std::vector<double> dts;
    for (const auto& e : report.entries) {
        if (std::find(dts.begin(), dts.end(), e.dt) == dts.end()) dts.push_back(e.dt);
    }
    std::sort(dts.begin(), dts.end());
    const bool has_explicit = report.spread(Scheme::ExplicitSequential) != nullptr;
    const bool has_one_way = report.spread(Scheme::OneWay) != nullptr;
    const bool has_full = report.spread(Scheme::FullCoupling) != nullptr;

    std::vector<OrderingCheck> checks;

    {
        OrderingCheck c{"explicit-sequential discrepancy strictly increasing in dt",
                        CheckStatus::Skipped, ""};
        if (has_explicit && dts.size() >= 2) {
            std::ostringstream os;
            os.precision(6);
            bool ok = true;
            for (std::size_t i = 0; i < dts.size(); ++i) {
                const double d = report.find(Scheme::ExplicitSequential, dts[i])->vs_reference.linf;
                os << (i ? " < " : "") << d;
                if (i > 0 && !(d > report.find(Scheme::ExplicitSequential, dts[i - 1])->vs_reference.linf))
                    ok = false;
            }
            c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
            c.detail = os.str();
        } else {
            c.detail = "needs the explicit scheme and at least two dt values";
        }
        checks.push_back(std::move(c));
    }
    {
        OrderingCheck c{"one-way discrepancy exceeds explicit-sequential at every dt",
                        CheckStatus::Skipped, ""};
        if (has_explicit && has_one_way) {
            std::ostringstream os;
            os.precision(6);
            bool ok = true;
            for (double dt : dts) {
                const double ow = report.find(Scheme::OneWay, dt)->vs_reference.linf;
                const double ex = report.find(Scheme::ExplicitSequential, dt)->vs_reference.linf;
                if (os.tellp() > 0) os << "; ";
                os << "dt " << dt << ": " << ow << " vs " << ex;
                ok = ok && ow > ex;
            }
            c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
            c.detail = os.str();
        } else {
            c.detail = "needs the one-way and explicit schemes";
        }
        checks.push_back(std::move(c));
    }
    {
        // Implicit sequential converges to the same discrete solution as full
        // coupling, so only the loosely coupled schemes are compared.
        OrderingCheck c{"full-coupling cross-dt spread smallest", CheckStatus::Skipped, ""};
        const bool others = has_explicit || has_one_way;
        if (has_full && others && dts.size() >= 2) {
            const double full = report.spread(Scheme::FullCoupling)->linf_spread;
            std::ostringstream os;
            os.precision(6);
            os << "full " << full;
            bool ok = true;
            for (Scheme s : {Scheme::ExplicitSequential, Scheme::OneWay}) {
                if (const SchemeSpread* sp = report.spread(s)) {
                    os << ", " << to_string(s) << " " << sp->linf_spread;
                    ok = ok && full < sp->linf_spread;
                }
            }
            c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
            c.detail = os.str();
        } else {
            c.detail = "needs full coupling, another loosely coupled scheme and two dt values";
        }
        checks.push_back(std::move(c));
    }
    return checks;
}

double richardson_order(double coarse_diff, double fine_diff, double ratio) {
    return std::log(coarse_diff / fine_diff) / std::log(ratio);
}

ConvergenceStudy convergence_study(const SimulationConfig& base, Scheme scheme,
                                   std::span<const double> dt_ladder) {
    if (dt_ladder.size() < 3) throw ValidationError("need >= 3 dt values for an order estimate");
    std::vector<double> dts(dt_ladder.begin(), dt_ladder.end());
    std::sort(dts.begin(), dts.end(), std::greater<>());
    const double ratio = dts[0] / dts[1];
    if (!(ratio > 1.0)) throw ValidationError("dt ladder values must be distinct");
    for (std::size_t i = 1; i + 1 < dts.size(); ++i) {
        if (std::abs(dts[i] / dts[i + 1] - ratio) > 1e-9 * ratio)
            throw ValidationError("dt ladder must be geometric with a constant ratio");
    }

    ConvergenceStudy study{scheme, dts, {}, {}, {}};
    SimulationConfig config = base;
    config.snapshot_times.clear();
    for (double dt : dts) study.profiles.push_back(labelled_run(config, scheme, dt).final_snapshot().temperatures);
    for (std::size_t i = 0; i + 1 < dts.size(); ++i)
        study.successive_differences.push_back(
            profile_discrepancy(study.profiles[i + 1], study.profiles[i]).linf);
    for (std::size_t i = 0; i + 1 < study.successive_differences.size(); ++i)
        study.orders.push_back(richardson_order(study.successive_differences[i],
                                                study.successive_differences[i + 1], ratio));
    return study;
}

}  // namespace heatcouple
