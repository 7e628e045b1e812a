#pragma once

#include <utility>
#include <vector>

#include "geocut/polyengine.hpp"

namespace geocut {

struct RootResult {
    double root = 0;
    int iterations = 0;
    double residual = 0;   // |value| at the root relative to its positive part
};

// Bisection on the sign of p inside [lo, hi], which must straddle a sign
// change. Bisects to width <= tol, then keeps halving until the relative
// residual drops below 1e-11 (or the bracket, iteration cap runs out).
RootResult find_root(const SignedExponentPoly& p, double lo, double hi, double tol = 1e-12,
                     EvalPrecision prec = EvalPrecision::Double);

// Root of the k vs k+1 comparison polynomial inside (1, 2). Throws when the
// polynomial has no interior sign change, which happens past n/2 - 1.
RootResult find_threshold(int n, int k, double tol = 1e-12,
                          EvalPrecision prec = EvalPrecision::Double);

// Largest k whose comparison polynomial crosses zero inside (1, 2).
int max_threshold_index(int n);

struct ThresholdEntry {
    int k = 0;
    double r = 0;
    int iterations = 0;
    double residual = 0;
};

struct ThresholdTable {
    int n = 0;
    double tolerance = 0;
    double bracket_low = 0;
    double bracket_high = 0;
    // entries[0] is a sentinel {k = 0, r = 2}; real roots follow in k order.
    std::vector<ThresholdEntry> entries;
};

ThresholdTable threshold_table(int n, double tol = 1e-12,
                               EvalPrecision prec = EvalPrecision::Double);

struct MonotonicityReport {
    int tables_checked = 0;
    // (n, k) pairs where r_k grew when moving from n - 1 to n vertices.
    std::vector<std::pair<int, int>> increases_in_n;
};

// Verifies each table decreases strictly in k (throws std::logic_error if
// not) and records where roots move the unexpected way as n grows.
MonotonicityReport check_monotonicity(const std::vector<ThresholdTable>& tables);

}  // namespace geocut
