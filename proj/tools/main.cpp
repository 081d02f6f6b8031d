// Command-line front end: evaluate one state, sweep a family into CSV/JSON,
// or cross-check the closed forms against the measurement-optimization oracle.
//
// Exit codes: 0 success, 1 argument or I/O error, 2 verification failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "su2d/parallel.hpp"
#include "su2d/report.hpp"

namespace {

using su2d::SU2InvariantState;
using su2d::TwiceJ;

// 15 significant digits everywhere a number is serialized.
std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

const std::vector<std::string> kQuantityOrder = {"mutual",          "classical", "discord",
                                                 "discord_large_j", "eof",       "negativity"};

double quantity_value(const std::string& q, const SU2InvariantState& s) {
    if (q == "mutual") return su2d::mutual_information(s);
    if (q == "classical") return su2d::classical_correlations(s);
    if (q == "discord") return su2d::quantum_discord(s);
    if (q == "discord_large_j") return su2d::discord_large_j(s);
    if (q == "eof") return su2d::entanglement_of_formation(s);
    return su2d::negativity(su2d::build_product_basis(s));
}

// Endpoint-inclusive grid with exact endpoints.
std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> v(static_cast<std::size_t>(steps));
    const double step = (hi - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i) v[static_cast<std::size_t>(i)] = lo + i * step;
    v.front() = lo;
    v.back() = hi;
    return v;
}

// Requested quantities in canonical column order, duplicates dropped.
std::vector<std::string> canonical_columns(const std::vector<std::string>& requested) {
    std::vector<std::string> cols;
    for (const std::string& q : kQuantityOrder)
        if (std::find(requested.begin(), requested.end(), q) != requested.end()) cols.push_back(q);
    return cols;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
};

int cmd_compute(int two_j, double f, const std::string& format, const std::string& out_path) {
    const SU2InvariantState s{TwiceJ(two_j), f};
    const su2d::CorrelationReport r = su2d::evaluate_state(s);
    Output out(out_path);
    if (format == "json") {
        *out.os << "{\n"
                << "  \"two_j\": " << r.two_j << ",\n"
                << "  \"F\": " << fmt15(r.F) << ",\n"
                << "  \"mutual\": " << fmt15(r.mutual) << ",\n"
                << "  \"classical\": " << fmt15(r.classical) << ",\n"
                << "  \"discord\": " << fmt15(r.discord) << ",\n"
                << "  \"eof\": " << fmt15(r.eof) << ",\n"
                << "  \"negativity\": " << fmt15(r.negativity) << "\n"
                << "}\n";
    } else {
        *out.os << "two_j       " << r.two_j << "\n"
                << "F           " << fmt15(r.F) << "\n"
                << "mutual      " << fmt15(r.mutual) << "\n"
                << "classical   " << fmt15(r.classical) << "\n"
                << "discord     " << fmt15(r.discord) << "\n"
                << "eof         " << fmt15(r.eof) << "\n"
                << "negativity  " << fmt15(r.negativity) << "\n";
    }
    return out.os->good() ? 0 : 1;
}

int cmd_sweep(std::vector<int> two_js, double f_start, double f_end, int f_steps,
              const std::vector<std::string>& quantities, const std::string& format,
              const std::string& out_path) {
    if (f_start > f_end) throw std::runtime_error("--f-start must not exceed --f-end");
    std::sort(two_js.begin(), two_js.end());
    two_js.erase(std::unique(two_js.begin(), two_js.end()), two_js.end());

    const std::vector<std::string> cols = canonical_columns(quantities);
    const std::vector<double> fs = linspace(f_start, f_end, f_steps);

    // Rows ordered by (two_j, F) ascending; evaluated concurrently, emitted
    // in order so repeated runs are byte-identical.
    const std::size_t n_rows = two_js.size() * fs.size();
    std::vector<std::vector<double>> rows(n_rows);
    su2d::parallel_for(n_rows, [&](std::size_t idx) {
        const int tj = two_js[idx / fs.size()];
        const double f = fs[idx % fs.size()];
        const SU2InvariantState s{TwiceJ(tj), f};
        std::vector<double>& row = rows[idx];
        row.reserve(cols.size());
        for (const std::string& q : cols) row.push_back(quantity_value(q, s));
    });

    Output out(out_path);
    if (format == "json") {
        *out.os << "[\n";
        for (std::size_t idx = 0; idx < n_rows; ++idx) {
            *out.os << "  {\"two_j\": " << two_js[idx / fs.size()]
                    << ", \"F\": " << fmt15(fs[idx % fs.size()]);
            for (std::size_t c = 0; c < cols.size(); ++c)
                *out.os << ", \"" << cols[c] << "\": " << fmt15(rows[idx][c]);
            *out.os << (idx + 1 < n_rows ? "},\n" : "}\n");
        }
        *out.os << "]\n";
    } else {
        *out.os << "two_j,F";
        for (const std::string& c : cols) *out.os << "," << c;
        *out.os << "\n";
        for (std::size_t idx = 0; idx < n_rows; ++idx) {
            *out.os << two_js[idx / fs.size()] << "," << fmt15(fs[idx % fs.size()]);
            for (double v : rows[idx]) *out.os << "," << fmt15(v);
            *out.os << "\n";
        }
    }
    out.os->flush();
    return out.os->good() ? 0 : 1;
}

int cmd_verify(const std::vector<int>& two_js, int f_steps, int n_theta, int n_phi, double tol) {
    std::cout << "verify: grid " << n_theta << "x" << n_phi << ", " << f_steps
              << " F points in [0,1], tol " << fmt15(tol) << "\n";
    bool pass = true;
    for (int tj : two_js) {
        double dev = 0.0;
        double spread = 0.0;
        for (double f : linspace(0.0, 1.0, f_steps)) {
            const SU2InvariantState s{TwiceJ(tj), f};
            const su2d::DensityMatrix rho = su2d::build_product_basis(s);
            const su2d::MinimizationResult m =
                su2d::minimize_conditional_entropy(rho, {n_theta, n_phi});
            const double numeric = su2d::von_neumann_entropy(partial_trace(rho, su2d::Subsystem::B)) -
                                   su2d::von_neumann_entropy(rho) + m.min_entropy;
            dev = std::max(dev, std::abs(numeric - su2d::quantum_discord(s)));
            spread = std::max(spread, m.landscape_spread);
        }
        std::cout << "  two_j " << tj << "  max |numeric - analytic| = " << fmt15(dev)
                  << "  landscape spread = " << fmt15(spread) << "\n";
        if (dev > tol) pass = false;
    }
    std::cout << (pass ? "verify: PASS\n" : "verify: FAIL\n");
    return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlation measures of SU(2)-invariant spin-j x spin-1/2 states"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "Evaluate every measure at one (2j, F) point");
    int c_two_j = 0;
    double c_f = 0.0;
    std::string c_format = "text";
    std::string c_out;
    compute->add_option("--two-j", c_two_j, "Doubled spin 2j of subsystem a (integer >= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    compute->add_option("--f", c_f, "Weight F of the J = j - 1/2 multiplet")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    compute->add_option("--format", c_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--out", c_out, "Output path (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "Tabulate measures over a grid of (2j, F)");
    std::vector<int> s_two_js;
    double s_f_start = 0.0;
    double s_f_end = 1.0;
    int s_f_steps = 101;
    std::vector<std::string> s_quantities = {"mutual", "classical", "discord", "eof", "negativity"};
    std::string s_format = "csv";
    std::string s_out;
    sweep->add_option("--two-j", s_two_js, "Comma-separated list of 2j values")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sweep->add_option("--f-start", s_f_start)->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--f-end", s_f_end)->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--f-steps", s_f_steps, "Number of F points (endpoints included)")
        ->check(CLI::Range(2, 1000000));
    sweep->add_option("--quantities", s_quantities, "Comma-separated subset of the output columns")
        ->delimiter(',')
        ->check(CLI::IsMember(kQuantityOrder));
    sweep->add_option("--format", s_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", s_out, "Output path (default stdout)");

    auto* verify = app.add_subcommand(
        "verify", "Compare closed-form discord against the measurement-optimization oracle");
    std::vector<int> v_two_js = {1, 2, 3, 4, 9};
    int v_f_steps = 11;
    std::string v_grid = "64x128";
    double v_tol = 1e-8;
    verify->add_option("--two-j", v_two_js, "Comma-separated list of 2j values")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    verify->add_option("--f-steps", v_f_steps)->check(CLI::Range(2, 1000000));
    verify->add_option("--grid", v_grid, "Direction grid as THETAxPHI, e.g. 64x128");
    verify->add_option("--tol", v_tol, "Allowed |numeric - analytic| discord deviation")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*compute) return cmd_compute(c_two_j, c_f, c_format, c_out);
        if (*sweep)
            return cmd_sweep(s_two_js, s_f_start, s_f_end, s_f_steps, s_quantities, s_format, s_out);
        int n_theta = 0;
        int n_phi = 0;
        if (std::sscanf(v_grid.c_str(), "%dx%d", &n_theta, &n_phi) != 2 || n_theta < 8 || n_phi < 8)
            throw std::runtime_error("--grid must look like 64x128 with both counts >= 8");
        return cmd_verify(v_two_js, v_f_steps, n_theta, n_phi, v_tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
