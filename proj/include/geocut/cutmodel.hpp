#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geocut {

// Vertices are numbered 1..n. Edge (i,j) with i<j has the 1-based
// lexicographic index (i-1)n - i(i-1)/2 + (j-i), and edge idx carries weight
// r^(N-idx) where N = n(n-1)/2, so the lexicographically first edge (1,2) is
// the heaviest and the last edge (n-1,n) has weight r^0 = 1.

int edge_count(int n);                             // N = n(n-1)/2
int edge_index(int i, int j, int n);               // throws std::domain_error outside 1 <= i < j <= n
std::pair<int, int> edge_endpoints(int index, int n);

// A cut of K_n keyed by the vertex side that contains vertex 1. Construction
// canonicalizes: a member set that misses vertex 1 is replaced by its
// complement, so complementary inputs compare equal. members == {1..n} is the
// degenerate empty cut (no edge crosses, weight 0). Immutable after
// construction; safe to share across threads.
class CutSpec {
public:
    // Defaults to the empty cut of K_2 so aggregates holding cuts can be
    // value-initialized before a real cut is assigned.
    CutSpec() : CutSpec(2, {1, 2}) {}
    CutSpec(int n, const std::vector<int>& members);

    // Parses a 0/1 membership string x of length n (x[i-1] is vertex i).
    static CutSpec from_indicator(const std::string& x);

    int n() const { return n_; }
    bool contains(int v) const;
    int member_count() const;
    std::vector<int> members() const;       // ascending
    std::string indicator() const;          // membership string, first char '1'

    bool operator==(const CutSpec& other) const = default;

    static constexpr int kMaxVertices = 128;

private:
    int n_;
    std::array<std::uint64_t, 2> side_;     // bit v-1 set iff vertex v is on vertex 1's side
};

CutSpec isolated_cut(int k, int n);        // C_k: members {1..k}, 1 <= k <= n-1
CutSpec near_isolated_cut(int k, int n);   // S_k*: members {1..k, n}, 1 <= k <= n-2

// The edge bit string delta: bits[e-1] == '1' iff edge with index e crosses
// the cut. Length is always N.
struct CutVector {
    int n = 0;
    std::string bits;
};

CutVector cut_vector(const CutSpec& spec);

// Exponents N-idx of the crossing edges, strictly decreasing. Empty iff the
// cut is the degenerate empty cut.
std::vector<int> crossing_exponents(const CutSpec& spec);

// A cut weight in both representations. direct is present only when
// (N-1)*ln(r) <= 700 (no overflow possible); log_value is absent only for the
// weight-0 empty cut, which has no logarithm.
struct WeightValue {
    std::optional<double> direct;
    std::optional<double> log_value;
    std::vector<int> exponents;   // strictly decreasing, each in [0, N-1]
};

WeightValue cut_weight(const CutSpec& spec, double r);   // requires r > 0

// log(sum of r^e over exps) for a strictly decreasing exponent list,
// evaluated by factoring out the dominant term. log_r may be any real.
double log_weight_from_exponents(const std::vector<int>& exps, double log_r);

// 1-based position of C_k when canonical membership strings are enumerated in
// lexicographic order: 1 + sum_{j=0}^{k-2} 2^(n-2-j). Requires n <= 64.
std::uint64_t lex_position(int k, int n);

// argmax over k = 1..n-1 of the weight of C_k at this r; the smallest such k
// wins exact ties. Comparisons are done in log space.
int best_isolated_k(int n, double r);

}  // namespace geocut
