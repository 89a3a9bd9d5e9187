#include "cli.hpp"

#include "output.hpp"

#include <heatcouple/compare.hpp>
#include <heatcouple/errors.hpp>
#include <heatcouple/simulation.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

namespace heatcouple::cli {

namespace {

namespace fs = std::filesystem;

/// Flag values shared by every subcommand.
struct CommonFlags {
    SimulationConfig config{};
    std::string scheme = "full";
    std::string solver = "thomas";
    std::string out_dir = "out";
    std::vector<double> snapshots{};
};

void add_problem_flags(CLI::App& cmd, CommonFlags& f) {
    SimulationConfig& c = f.config;
    cmd.add_option("--nodes", c.nodes, "Node count including both boundary nodes")->capture_default_str();
    cmd.add_option("--tl", c.t_left, "Temperature at x = 0")->capture_default_str();
    cmd.add_option("--tr", c.t_right, "Temperature at x = 1 and initial temperature")->capture_default_str();
    cmd.add_option("--gamma", c.gamma, "Diffusivity prefactor in D = gamma T^a")->capture_default_str();
    cmd.add_option("--a", c.exponent_a, "Diffusivity exponent")->capture_default_str();
    cmd.add_option("--t-end", c.t_end, "Target simulation time")->capture_default_str();
    cmd.add_option("--newton-tol", c.solver.newton_tol, "Newton exit tolerance")->capture_default_str();
    cmd.add_option("--newton-max-iters", c.solver.newton_max_iters, "Newton iteration cap")
        ->capture_default_str();
    cmd.add_option("--solver", f.solver, "Linear solver: thomas | bicgstab")->capture_default_str();
    cmd.add_option("--solver-tol", c.solver.bicgstab_tol, "BiCGSTAB relative residual tolerance")
        ->capture_default_str();
    cmd.add_option("--fixed-point-tol", c.solver.fixed_point_tol,
                   "Implicit sequential outer-loop tolerance")
        ->capture_default_str();
    cmd.add_option("--fixed-point-max-iters", c.solver.fixed_point_max_iters,
                   "Implicit sequential outer-loop cap")
        ->capture_default_str();
    cmd.add_option("--out-dir", f.out_dir, "Output directory")->capture_default_str();
}

Scheme scheme_from(const std::string& name) {
    if (auto s = parse_scheme(name)) return *s;
    throw ValidationError("unknown scheme '" + name + "' (one-way | explicit | implicit | full)");
}

/// Applies string-typed flags and validates the result.
SimulationConfig finish_config(CommonFlags& f) {
    if (auto s = parse_linear_solver(f.solver)) {
        f.config.solver.linear_solver = *s;
    } else {
        throw ValidationError("unknown linear solver '" + f.solver + "' (thomas | bicgstab)");
    }
    f.config.scheme = scheme_from(f.scheme);
    f.config.snapshot_times = f.snapshots;
    return validate_config(f.config);
}

fs::path prepare_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw Error("cannot create output directory " + dir + ": " + ec.message());
    return p;
}

int cmd_run(CommonFlags& f, std::ostream& out) {
    const SimulationConfig config = finish_config(f);
    const fs::path dir = prepare_dir(f.out_dir);
    const RunReport report = run_simulation(config);

    const std::size_t files = write_profiles(dir, report);
    write_text(dir / "summary.txt", format_run_summary(report));
    const std::string timing = "wall_time_seconds: " + format_shortest(report.wall_time.count()) + '\n';
    write_text(dir / "timing.txt", timing);

    out << "scheme " << to_string(config.scheme) << ", " << report.totals.steps << " steps, "
        << report.totals.newton_iterations << " Newton iterations, "
        << report.totals.linear_iterations << " linear iterations\n"
        << timing << "wrote " << files << " profile(s) to " << dir.string() << '\n';
    return kExitOk;
}

int cmd_compare(CommonFlags& f, const std::vector<double>& dts,
                const std::vector<std::string>& scheme_names, bool serial, std::ostream& out) {
    f.config.dt = *std::min_element(dts.begin(), dts.end());
    const SimulationConfig base = finish_config(f);
    std::vector<Scheme> schemes;
    for (const auto& name : scheme_names) {
        const Scheme s = scheme_from(name);
        if (std::find(schemes.begin(), schemes.end(), s) == schemes.end()) schemes.push_back(s);
    }
    const fs::path dir = prepare_dir(f.out_dir);
    const ComparisonReport report = compare_schemes(base, dts, schemes, CompareOptions{!serial});

    for (const auto& e : report.entries) write_profiles(dir, e.run);
    write_text(dir / "comparison.csv", format_comparison_csv(report));
    const std::string summary = format_comparison_summary(base, report);
    write_text(dir / "summary.txt", summary);
    out << format_comparison_csv(report) << '\n' << summary;
    return kExitOk;
}

int cmd_convergence(CommonFlags& f, const std::vector<double>& ladder, std::ostream& out) {
    if (ladder.size() < 3) throw ValidationError("need >= 3 dt values for an order estimate");
    f.config.dt = *std::min_element(ladder.begin(), ladder.end());
    const SimulationConfig base = finish_config(f);
    const fs::path dir = prepare_dir(f.out_dir);
    const ConvergenceStudy study = convergence_study(base, base.scheme, ladder);

    for (std::size_t i = 0; i < study.dts.size(); ++i) {
        Snapshot snap{base.t_end, 0, study.profiles[i],
                      diffusivity_profile(DiffusivityLaw(base.gamma, base.exponent_a), study.profiles[i]),
                      {}};
        write_text(dir / profile_file_name(study.scheme, study.dts[i], base.t_end),
                   format_profile(Grid1D(base.nodes), snap));
    }
    write_text(dir / "convergence.csv", format_convergence_csv(study));
    const std::string summary = format_convergence_summary(base, study);
    write_text(dir / "summary.txt", summary);
    out << summary;
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coupling strategies for the 1D nonlinear heat equation dT/dt = d/dx(gamma T^a dT/dx)",
                 "heatcouple"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    auto* run = app.add_subcommand("run", "Run one simulation and write profile files");
    add_problem_flags(*run, run_flags);
    run->add_option("--scheme", run_flags.scheme, "one-way | explicit | implicit | full")->capture_default_str();
    run->add_option("--dt", run_flags.config.dt, "Timestep")->capture_default_str();
    run->add_option("--snapshots", run_flags.snapshots, "Comma-separated snapshot times")->delimiter(',');

    CommonFlags cmp_flags;
    std::vector<double> dt_list{0.001, 0.005, 0.01};
    std::vector<std::string> scheme_list{"one-way", "explicit", "implicit", "full"};
    bool serial = false;
    auto* cmp = app.add_subcommand("compare", "Run every scheme at every dt and compare t_end profiles");
    add_problem_flags(*cmp, cmp_flags);
    cmp->add_option("--dt-list", dt_list, "Comma-separated timesteps")->delimiter(',')->capture_default_str();
    cmp->add_option("--scheme-list", scheme_list, "Comma-separated schemes")->delimiter(',')->capture_default_str();
    cmp->add_flag("--serial", serial, "Run the sweep on one thread");

    CommonFlags conv_flags;
    std::vector<double> ladder{0.01, 0.005, 0.0025, 0.00125};
    auto* conv = app.add_subcommand("convergence", "Estimate the observed temporal order on a dt ladder");
    add_problem_flags(*conv, conv_flags);
    conv->add_option("--scheme", conv_flags.scheme, "one-way | explicit | implicit | full")->capture_default_str();
    conv->add_option("--dt-ladder", ladder, "Comma-separated geometric dt ladder")->delimiter(',')->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if (run->parsed()) return cmd_run(run_flags, out);
        if (cmp->parsed()) return cmd_compare(cmp_flags, dt_list, scheme_list, serial, out);
        return cmd_convergence(conv_flags, ladder, out);
    } catch (const ValidationError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitValidation;
    } catch (const SolverFailure& e) {
        err << "solver failure at " << e.what() << '\n';
        return kExitSolver;
    } catch (const NonConvergenceError& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const LinearSolverError& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const DomainError& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace heatcouple::cli
