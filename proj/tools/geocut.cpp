// Command-line surface for the geometric-weight max-cut library. Every
// subcommand writes machine-readable CSV or JSON whose bytes depend only on
// the request, never on the thread count or the wall clock; timing and
// progress go to stderr.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <geocut/analysis.hpp>
#include <geocut/enumerate.hpp>
#include <geocut/io.hpp>
#include <geocut/parallel.hpp>
#include <geocut/polyengine.hpp>
#include <geocut/rootfind.hpp>
#include <geocut/verify.hpp>

namespace {

using namespace geocut;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

int default_threads() {
    if (const char* env = std::getenv("GEOCUT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

EvalPrecision parse_precision(const std::string& name) {
    return name == "extended" ? EvalPrecision::Extended : EvalPrecision::Double;
}

// Shared option state; each subcommand reads only the fields it registered.
struct Options {
    int n = 0;
    int k = 0;
    double r = 0;
    int n_min = 0;
    int n_max = 0;
    double mesh = 0.001;
    double r_low = 1.001;
    double r_high = 1.999;
    int points = 20;
    int max_k = 8;
    double tol = 1e-12;
    bool midpoints = false;
    bool diagnostic = false;
    std::string mode;
    std::string format;
    std::string output;
    std::string precision = "double";
    std::vector<std::string> pairs;
    int threads = default_threads();
};

void add_common(CLI::App* cmd, Options& o, const std::string& default_format) {
    // The Options block is shared by every subcommand, so the per-command
    // default has to be applied when the command is actually parsed.
    o.format = default_format;
    cmd->preparse_callback([&o, default_format](std::size_t) { o.format = default_format; });
    cmd->add_option("--format", o.format, "Output format")
        ->transform(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", o.output, "Write to this file instead of standard output");
    cmd->add_option("--threads", o.threads,
                    "Worker count (default from GEOCUT_THREADS, then 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void require_range(const Options& o, int lowest) {
    if (o.n_min < lowest || o.n_max < o.n_min)
        throw CLI::ValidationError("--n-min/--n-max",
                                   "need " + std::to_string(lowest) + " <= n-min <= n-max");
}

int run_poly(const Options& o) {
    const SignedExponentPoly p = threshold_polynomial(o.n, o.k);
    write_output(o.output, o.format == "csv" ? poly_csv(p) : poly_json(p));
    return kExitOk;
}

int run_thresholds(const Options& o) {
    require_range(o, 4);
    const EvalPrecision prec = parse_precision(o.precision);
    std::vector<ThresholdTable> tables(static_cast<std::size_t>(o.n_max - o.n_min + 1));
    parallel_for(tables.size(), o.threads, [&](std::size_t i) {
        tables[i] = threshold_table(o.n_min + static_cast<int>(i), o.tol, prec);
    });
    std::string text;
    if (o.format == "json")
        text = thresholds_json(tables);
    else if (o.n_min == o.n_max)
        text = threshold_pairs_csv(tables.front());
    else
        text = thresholds_matrix_csv(tables, o.max_k);
    write_output(o.output, text);
    return kExitOk;
}

int run_phase(const Options& o) {
    const PhaseDiagram d = phase_diagram(o.n, o.mesh, o.r_low, o.r_high, o.threads);
    std::fprintf(stderr, "phase: n=%d, %zu points, %zu segments\n", d.n, d.points.size(),
                 d.segments.size());
    write_output(o.output, o.format == "json" ? phase_json(d) : phase_csv(d));
    return kExitOk;
}

int run_enumerate(const Options& o) {
    SweepStats stats;
    const EnumerationResult e = max_cut_exhaustive(o.n, o.r, &stats);
    std::fprintf(stderr, "enumerate: %llu cuts, drift %.3g\n",
                 static_cast<unsigned long long>(stats.evaluated), stats.final_drift);
    write_output(o.output, o.format == "json" ? enumeration_json(e) : enumeration_csv(e));
    return kExitOk;
}

int run_verify(const Options& o) {
    require_range(o, o.mode == "exhaustive" ? 2 : 4);
    VerificationReport report;
    if (o.mode == "exhaustive")
        report = verify_exhaustive(o.n_min, o.n_max, o.mesh, o.threads, o.midpoints);
    else
        report = verify_near_isolated(o.n_min, o.n_max, o.points, o.threads, o.diagnostic);
    std::fprintf(stderr, "verify %s: checked %llu, indeterminate %llu, violations %zu, %.2fs\n",
                 report.mode.c_str(), static_cast<unsigned long long>(report.checked_count),
                 static_cast<unsigned long long>(report.indeterminate_count),
                 report.violations.size(), report.elapsed_seconds);
    write_output(o.output,
                 o.format == "csv" ? verification_csv(report) : verification_json(report));
    return report.ok() ? kExitOk : kExitViolations;
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& specs) {
    std::vector<std::pair<int, int>> out;
    for (const std::string& s : specs) {
        const auto colon = s.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--pair", "expected n:k, got '" + s + "'");
        out.emplace_back(std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1)));
    }
    return out;
}

int run_scaling(const Options& o) {
    // Default instances mirror the published scaling table.
    static const std::vector<std::pair<int, int>> kDefault = {
        {10, 1}, {10, 2}, {10, 3}, {15, 1}, {15, 2}, {15, 3},
        {20, 1}, {20, 2}, {20, 3}, {30, 2}, {30, 3}, {30, 4},
    };
    const auto pairs = o.pairs.empty() ? kDefault : parse_pairs(o.pairs);
    const auto rows = scaling_error_table(pairs);
    write_output(o.output, o.format == "json" ? scaling_json(rows) : scaling_csv(rows));
    return kExitOk;
}

int run_bounds(const Options& o, bool have_n, bool have_r) {
    if (have_n != have_r)
        throw CLI::ValidationError("--n/--r", "give both --n and --r, or neither");
    // Default instances mirror the published bound-comparison table.
    static const std::vector<std::pair<int, double>> kDefault = {
        {8, 1.05}, {8, 1.10}, {8, 1.50}, {10, 1.20}};
    std::vector<BoundComparison> rows;
    if (have_n) {
        rows.push_back(bound_comparison(o.n, o.r));
    } else {
        for (const auto& [n, r] : kDefault) rows.push_back(bound_comparison(n, r));
    }
    write_output(o.output, o.format == "json" ? bounds_json(rows) : bounds_csv(rows));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-cut toolkit for complete graphs with geometric edge weights"};
    app.require_subcommand(1);
    Options o;
    int exit_code = kExitOk;

    CLI::App* poly =
        app.add_subcommand("poly", "Emit the comparison polynomial of consecutive split sizes");
    poly->add_option("--n", o.n, "Vertex count")->required();
    poly->add_option("--k", o.k, "Split size compared against k+1")->required();
    add_common(poly, o, "json");
    poly->callback([&] { exit_code = run_poly(o); });

    CLI::App* thr = app.add_subcommand(
        "thresholds",
        "Transition roots r_k(n); roots are bracketed inside [1+1e-9, 2-1e-9]");
    thr->add_option("--n-min", o.n_min, "Smallest vertex count")->required();
    thr->add_option("--n-max", o.n_max, "Largest vertex count")->required();
    thr->add_option("--max-k", o.max_k, "Column count of the matrix layout")
        ->capture_default_str();
    thr->add_option("--tol", o.tol, "Bracket width target for bisection")->capture_default_str();
    thr->add_option("--precision", o.precision, "Polynomial evaluation precision")
        ->transform(CLI::IsMember({"double", "extended"}))
        ->capture_default_str();
    add_common(thr, o, "csv");
    thr->callback([&] { exit_code = run_thresholds(o); });

    CLI::App* phase =
        app.add_subcommand("phase", "Winning cut at every grid point of an r sweep");
    phase->add_option("--n", o.n, "Vertex count (2..24)")->required();
    phase->add_option("--mesh", o.mesh, "Grid step")->capture_default_str();
    phase->add_option("--r-low", o.r_low, "First grid point")->capture_default_str();
    phase->add_option("--r-high", o.r_high, "Last grid point")->capture_default_str();
    add_common(phase, o, "csv");
    phase->callback([&] { exit_code = run_phase(o); });

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "Exhaustive maximum cut at a single (n, r)");
    enumerate->add_option("--n", o.n, "Vertex count (2..24)")->required();
    enumerate->add_option("--r", o.r, "Weight ratio")->required();
    add_common(enumerate, o, "csv");
    enumerate->callback([&] { exit_code = run_enumerate(o); });

    CLI::App* verify = app.add_subcommand(
        "verify", "Check that an isolated cut wins everywhere; exit 1 on any violation");
    verify->add_option("--mode", o.mode, "exhaustive sweeps all cuts, near-isolated the S* family")
        ->transform(CLI::IsMember({"exhaustive", "near-isolated"}))
        ->required();
    verify->add_option("--n-min", o.n_min, "Smallest vertex count")->required();
    verify->add_option("--n-max", o.n_max, "Largest vertex count")->required();
    verify->add_option("--mesh", o.mesh, "Grid step (exhaustive mode)")->capture_default_str();
    verify->add_option("--points", o.points, "Interior points per threshold interval")
        ->capture_default_str();
    verify->add_flag("--midpoints", o.midpoints,
                     "Also test the midpoint of every threshold interval (exhaustive mode)");
    verify->add_flag("--diagnostic", o.diagnostic,
                     "Disable pruning so every comparison is evaluated (near-isolated mode)");
    add_common(verify, o, "json");
    verify->callback([&] { exit_code = run_verify(o); });

    CLI::App* scaling =
        app.add_subcommand("scaling", "First-order prediction of r_k(n) - 1 vs the computed root");
    scaling->add_option("--pair", o.pairs, "Instance as n:k (repeatable); default is the table set");
    add_common(scaling, o, "csv");
    scaling->callback([&] { exit_code = run_scaling(o); });

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Generic lower bounds (matching and spanning-tree) vs the true optimum");
    auto* bn = bounds->add_option("--n", o.n, "Vertex count (2..20)");
    auto* br = bounds->add_option("--r", o.r, "Weight ratio");
    add_common(bounds, o, "csv");
    bounds->callback([&] { exit_code = run_bounds(o, bn->count() > 0, br->count() > 0); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return exit_code;
}
