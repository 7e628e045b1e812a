#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geocut/enumerate.hpp"
#include "geocut/rootfind.hpp"

namespace geocut {

struct Violation {
    int n = 0;
    double r = 0;
    CutSpec winner;       // the cut that displaced the expected one
    int expected_k = 0;   // index of the isolated cut expected to win at r
    // Log-weight edge of the displacement. Exhaustive mode reports
    // log W(winner) - log W(C_k) (positive); near-isolated mode reports
    // log W(C_k) - log W(S_j*) (negative).
    double margin = 0;
};

struct VerificationReport {
    std::string mode;
    int n_low = 0;
    int n_high = 0;
    double mesh = 0;                  // exhaustive mode only
    int points_per_interval = 0;      // near-isolated mode only
    std::uint64_t checked_count = 0;
    std::uint64_t indeterminate_count = 0;
    std::vector<Violation> violations;   // sorted by (n, r)
    double elapsed_seconds = 0;          // wall clock; not serialized
    bool ok() const { return violations.empty(); }
};

// Sweeps every cut of K_n for each n in [n_low, n_high] at every interior
// multiple of mesh in (1, 2) and reports each point whose true maximum cut is
// not an isolated one. checked_count counts (n, r) points. With
// add_threshold_midpoints, the midpoint of every interval between consecutive
// threshold roots joins the grid (needs n_low >= 4).
VerificationReport verify_exhaustive(int n_low, int n_high, double mesh, int threads = 1,
                                     bool add_threshold_midpoints = false);

// Checks, at `points` interior samples of every threshold interval, that the
// reigning isolated cut outweighs every near-isolated cut. checked_count
// counts (point, j) comparisons; margins inside +/-1e-12 are tallied as
// indeterminate instead of deciding either way. diagnostic disables the
// cheap upper-bound skip so every margin is evaluated exactly.
VerificationReport verify_near_isolated(int n_low, int n_high, int points = 20, int threads = 1,
                                        bool diagnostic = false);

struct RInterval {
    int k = 0;        // the isolated index that should win inside
    double lo = 0;
    double hi = 0;
};

// Splits (1, 2) at the table's roots: interval k runs from r_k up to r_(k-1)
// (sentinel r_0 = 2), and the last interval reaches down to 1.
std::vector<RInterval> threshold_intervals(const ThresholdTable& table);

struct SmallNStructure {
    int n = 0;
    std::vector<double> boundaries;   // exact winner-change points, ascending
    std::vector<CutSpec> winners;     // one per region, left to right
};

// Full winner structure for n = 4, 5, 6: regions discovered on the default
// grid, then each boundary polished to a root of the pairwise difference.
std::vector<SmallNStructure> small_n_counterexamples();

}  // namespace geocut
