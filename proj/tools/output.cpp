#include "output.hpp"

#include <heatcouple/errors.hpp>

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace heatcouple::cli {

namespace {

std::string g17(double v) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

void echo_config(std::ostream& os, const SimulationConfig& c) {
    os << "nodes: " << c.nodes << '\n'
       << "t_left: " << format_shortest(c.t_left) << '\n'
       << "t_right: " << format_shortest(c.t_right) << '\n'
       << "gamma: " << format_shortest(c.gamma) << '\n'
       << "exponent_a: " << format_shortest(c.exponent_a) << '\n'
       << "t_end: " << format_shortest(c.t_end) << '\n'
       << "newton_tol: " << format_shortest(c.solver.newton_tol) << '\n'
       << "newton_max_iters: " << c.solver.newton_max_iters << '\n'
       << "linear_solver: " << to_string(c.solver.linear_solver) << '\n'
       << "bicgstab_tol: " << format_shortest(c.solver.bicgstab_tol) << '\n'
       << "fixed_point_tol: " << format_shortest(c.solver.fixed_point_tol) << '\n'
       << "fixed_point_max_iters: " << c.solver.fixed_point_max_iters << '\n';
}

void echo_stats(std::ostream& os, const StepStats& s) {
    os << "steps: " << s.steps << '\n'
       << "newton_iterations: " << s.newton_iterations << '\n'
       << "outer_iterations: " << s.outer_iterations << '\n'
       << "linear_solves: " << s.linear_solves << '\n'
       << "linear_iterations: " << s.linear_iterations << '\n';
}

}  // namespace

std::string format_shortest(double value) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

std::string profile_file_name(Scheme scheme, double dt, double time) {
    return std::string(to_string(scheme)) + "_dt" + format_shortest(dt) + "_t" +
           format_shortest(time) + ".csv";
}

std::string format_profile(const Grid1D& grid, const Snapshot& snapshot) {
    std::string out = "x,temperature,diffusivity\n";
    for (std::size_t k = 0; k < grid.nodes(); ++k) {
        out += g17(grid.x(k));
        out += ',';
        out += g17(snapshot.temperatures[k]);
        out += ',';
        out += g17(snapshot.diffusivities[k]);
        out += '\n';
    }
    return out;
}

std::string format_run_summary(const RunReport& report) {
    std::ostringstream os;
    const SimulationConfig& c = report.config;
    os << "scheme: " << to_string(c.scheme) << '\n' << "dt: " << format_shortest(c.dt) << '\n';
    echo_config(os, c);
    os << '\n' << "# totals\n";
    echo_stats(os, report.totals);
    os << '\n' << "# snapshots (statistics accumulated since the previous snapshot)\n"
       << "time,step,steps,newton_iterations,outer_iterations,linear_solves,linear_iterations,file\n";
    for (const Snapshot& s : report.snapshots) {
        const StepStats& st = s.step_stats;
        os << format_shortest(s.time) << ',' << s.step << ',' << st.steps << ','
           << st.newton_iterations << ',' << st.outer_iterations << ',' << st.linear_solves << ','
           << st.linear_iterations << ',' << profile_file_name(c.scheme, c.dt, s.time) << '\n';
    }
    return os.str();
}

std::string format_comparison_csv(const ComparisonReport& report) {
    std::ostringstream os;
    os << "scheme,dt,l1,l2,linf,steps,newton_iterations,outer_iterations,linear_solves,"
          "linear_iterations\n";
    for (const auto& e : report.entries) {
        const StepStats& t = e.run.totals;
        os << to_string(e.scheme) << ',' << format_shortest(e.dt) << ',' << g17(e.vs_reference.l1)
           << ',' << g17(e.vs_reference.l2) << ',' << g17(e.vs_reference.linf) << ',' << t.steps
           << ',' << t.newton_iterations << ',' << t.outer_iterations << ',' << t.linear_solves
           << ',' << t.linear_iterations << '\n';
    }
    return os.str();
}

std::string format_comparison_summary(const SimulationConfig& base, const ComparisonReport& report) {
    std::ostringstream os;
    os << "command: compare\n";
    echo_config(os, base);
    os << "reference: full coupling at dt = " << format_shortest(report.reference_dt) << '\n';
    os << "\n# cross-dt L-inf spread per scheme\n";
    for (const auto& s : report.spreads)
        os << to_string(s.scheme) << ": " << g17(s.linf_spread) << '\n';
    os << "\n# ordering checks\n";
    for (const auto& c : report.checks)
        os << to_string(c.status) << ": " << c.name << " (" << c.detail << ")\n";
    return os.str();
}

std::string format_convergence_csv(const ConvergenceStudy& study) {
    std::ostringstream os;
    os << "dt,linf_diff_to_next,order\n";
    for (std::size_t i = 0; i < study.dts.size(); ++i) {
        os << format_shortest(study.dts[i]) << ',';
        if (i < study.successive_differences.size()) os << g17(study.successive_differences[i]);
        os << ',';
        if (i < study.orders.size()) os << g17(study.orders[i]);
        os << '\n';
    }
    return os.str();
}

std::string format_convergence_summary(const SimulationConfig& base, const ConvergenceStudy& study) {
    std::ostringstream os;
    os << "command: convergence\n" << "scheme: " << to_string(study.scheme) << '\n';
    echo_config(os, base);
    os << "\n# observed temporal order, one estimate per dt triplet\n";
    for (std::size_t i = 0; i < study.orders.size(); ++i) {
        os << format_shortest(study.dts[i]) << '/' << format_shortest(study.dts[i + 1]) << '/'
           << format_shortest(study.dts[i + 2]) << ": " << g17(study.orders[i]) << '\n';
    }
    return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << contents;
    if (!out) throw Error("failed writing " + path.string());
}

std::size_t write_profiles(const std::filesystem::path& dir, const RunReport& report) {
    for (const Snapshot& s : report.snapshots) {
        write_text(dir / profile_file_name(report.config.scheme, report.config.dt, s.time),
                   format_profile(report.grid, s));
    }
    return report.snapshots.size();
}

}  // namespace heatcouple::cli
