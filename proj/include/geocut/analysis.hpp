#pragma once

#include <utility>
#include <vector>

#include "geocut/cutmodel.hpp"

namespace geocut {

// Exact fraction, always reduced with den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

struct DeltaParts {
    Rational abar;    // mean positive exponent of the comparison polynomial
    Rational bbar;    // mean negative exponent
    Rational delta;   // abar - bbar
};

// Means computed directly from the built exponent sets.
DeltaParts delta_parts(int n, int k);

// The same gap in closed form, (k+2)(n-k)/2 - (k+1)(4-k)/6, cross-checked
// against the direct means. Throws std::logic_error if the two disagree.
Rational delta_gap(int n, int k);

// First-order estimate of r_k(n) - 1: both polynomial halves are collapsed
// onto their mean exponent, giving ln((n-k-1)/k) / delta.
double scaling_prediction(int n, int k);

struct ScalingRow {
    int n = 0;
    int k = 0;
    double actual = 0;      // computed root minus 1
    double predicted = 0;
    double error_pct = 0;   // (predicted - actual) / actual * 100
};

std::vector<ScalingRow> scaling_error_table(const std::vector<std::pair<int, int>>& pairs);

// Weight of the whole graph: the geometric series over all N exponents.
WeightValue total_weight(int n, double r);

struct MatchingResult {
    std::vector<std::pair<int, int>> edges;   // (i, j) with i < j, by lowest vertex
    double weight = 0;
};

// Exact maximum-weight matching by subset dynamic programming, 2 <= n <= 20.
MatchingResult max_weight_matching(int n, double r);

// Kruskal over the complete graph; with r > 1 this collects the edges at the
// highest-index vertex.
double min_spanning_tree_weight(int n, double r);

// Half of total weight plus half the best matching.
double gutin_yeo_bound(int n, double r);

// Half of total weight plus a quarter of the lightest spanning tree.
double poljak_turzik_bound(int n, double r);

struct BoundComparison {
    int n = 0;
    double r = 0;
    int optimal_k = 0;    // best isolated index at r
    double optimum = 0;   // weight of that cut
    double gy_bound = 0;
    double pt_bound = 0;
    double gap_gy_pct = 0;   // how far the matching bound sits below optimum
};

BoundComparison bound_comparison(int n, double r);

}  // namespace geocut
