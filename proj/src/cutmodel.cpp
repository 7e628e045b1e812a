#include "geocut/cutmodel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace geocut {

namespace {

constexpr double kDirectLogLimit = 700.0;   // exp(700) is still finite in double

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

}  // namespace

int edge_count(int n) {
    require(n >= 0, "edge_count: n must be nonnegative");
    return n * (n - 1) / 2;
}

int edge_index(int i, int j, int n) {
    require(1 <= i && i < j && j <= n, "edge_index: need 1 <= i < j <= n");
    return (i - 1) * n - i * (i - 1) / 2 + (j - i);
}

std::pair<int, int> edge_endpoints(int index, int n) {
    require(1 <= index && index <= edge_count(n), "edge_endpoints: index out of range");
    // Row i holds indices (i-1)n - i(i-1)/2 + 1 .. i*n - i(i+1)/2.
    for (int i = 1; i < n; ++i) {
        const int row_end = i * n - i * (i + 1) / 2;
        if (index <= row_end) {
            const int row_start = (i - 1) * n - i * (i - 1) / 2 + 1;
            return {i, i + 1 + (index - row_start)};
        }
    }
    throw std::domain_error("edge_endpoints: unreachable");
}

CutSpec::CutSpec(int n, const std::vector<int>& members) : n_(n), side_{0, 0} {
    require(2 <= n && n <= kMaxVertices, "CutSpec: n out of range");
    for (int v : members) {
        require(1 <= v && v <= n, "CutSpec: vertex out of range");
        side_[static_cast<std::size_t>(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
    }
    if (!contains(1)) {
        // Canonicalize to the complementary side.
        for (int w = 0; w < 2; ++w) side_[w] = ~side_[w];
        side_[static_cast<std::size_t>(n - 1) / 64] &=
            (n % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n % 64)) - 1);
        if (n <= 64) side_[1] = 0;
    }
}

CutSpec CutSpec::from_indicator(const std::string& x) {
    const int n = static_cast<int>(x.size());
    std::vector<int> members;
    for (int v = 1; v <= n; ++v) {
        require(x[v - 1] == '0' || x[v - 1] == '1', "from_indicator: not a 0/1 string");
        if (x[v - 1] == '1') members.push_back(v);
    }
    return CutSpec(n, members);
}

bool CutSpec::contains(int v) const {
    if (v < 1 || v > n_) return false;
    return (side_[static_cast<std::size_t>(v - 1) / 64] >> ((v - 1) % 64)) & 1;
}

int CutSpec::member_count() const {
    return static_cast<int>(std::popcount(side_[0]) + std::popcount(side_[1]));
}

std::vector<int> CutSpec::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(member_count()));
    for (int v = 1; v <= n_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

std::string CutSpec::indicator() const {
    std::string x(static_cast<std::size_t>(n_), '0');
    for (int v = 1; v <= n_; ++v)
        if (contains(v)) x[static_cast<std::size_t>(v - 1)] = '1';
    return x;
}

CutSpec isolated_cut(int k, int n) {
    require(1 <= k && k <= n - 1, "isolated_cut: need 1 <= k <= n-1");
    std::vector<int> members(static_cast<std::size_t>(k));
    for (int v = 1; v <= k; ++v) members[static_cast<std::size_t>(v - 1)] = v;
    return CutSpec(n, members);
}

CutSpec near_isolated_cut(int k, int n) {
    require(1 <= k && k <= n - 2, "near_isolated_cut: need 1 <= k <= n-2");
    std::vector<int> members(static_cast<std::size_t>(k + 1));
    for (int v = 1; v <= k; ++v) members[static_cast<std::size_t>(v - 1)] = v;
    members.back() = n;
    return CutSpec(n, members);
}

CutVector cut_vector(const CutSpec& spec) {
    const int n = spec.n();
    CutVector cv;
    cv.n = n;
    cv.bits.reserve(static_cast<std::size_t>(edge_count(n)));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            cv.bits.push_back(spec.contains(i) != spec.contains(j) ? '1' : '0');
    return cv;
}

std::vector<int> crossing_exponents(const CutSpec& spec) {
    const int n = spec.n();
    const int N = edge_count(n);
    std::vector<int> exps;
    int idx = 0;
    for (int i = 1; i < n; ++i) {
        const bool si = spec.contains(i);
        for (int j = i + 1; j <= n; ++j) {
            ++idx;
            if (si != spec.contains(j)) exps.push_back(N - idx);
        }
    }
    return exps;   // idx ascending, so exponents come out strictly decreasing
}

double log_weight_from_exponents(const std::vector<int>& exps, double log_r) {
    if (exps.empty()) throw std::domain_error("log_weight_from_exponents: empty exponent list");
    // Dominant term: largest e*log_r. Exponents are descending, so that is the
    // front for log_r >= 0 and the back otherwise.
    const bool front_anchor = log_r >= 0.0;
    const int anchor = front_anchor ? exps.front() : exps.back();
    double acc = 0.0;
    if (front_anchor) {
        for (int e : exps) {
            const double d = (e - anchor) * log_r;
            if (d < -745.0) break;   // terms only shrink from here
            acc += std::exp(d);
        }
    } else {
        for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
            const double d = (*it - anchor) * log_r;
            if (d < -745.0) break;
            acc += std::exp(d);
        }
    }
    return anchor * log_r + std::log(acc);
}

WeightValue cut_weight(const CutSpec& spec, double r) {
    require(r > 0.0, "cut_weight: r must be positive");
    WeightValue w;
    w.exponents = crossing_exponents(spec);
    if (w.exponents.empty()) {
        w.direct = 0.0;   // empty cut: weight 0, no log value
        return w;
    }
    const double log_r = std::log(r);
    w.log_value = log_weight_from_exponents(w.exponents, log_r);
    const int N = edge_count(spec.n());
    if ((N - 1) * log_r <= kDirectLogLimit) {
        double sum = 0.0;
        for (auto it = w.exponents.rbegin(); it != w.exponents.rend(); ++it)
            sum += std::pow(r, *it);   // ascending magnitudes for a tighter sum
        w.direct = sum;
    }
    return w;
}

std::uint64_t lex_position(int k, int n) {
    require(1 <= k && k <= n - 1, "lex_position: need 1 <= k <= n-1");
    require(n <= 64, "lex_position: n too large for a 64-bit position");
    std::uint64_t pos = 1;
    for (int j = 0; j <= k - 2; ++j) pos += std::uint64_t{1} << (n - 2 - j);
    return pos;
}

int best_isolated_k(int n, double r) {
    require(n >= 2, "best_isolated_k: n too small");
    require(r > 0.0, "best_isolated_k: r must be positive");
    const double log_r = std::log(r);
    int best_k = 1;
    double best_log = log_weight_from_exponents(crossing_exponents(isolated_cut(1, n)), log_r);
    for (int k = 2; k <= n - 1; ++k) {
        const double lk = log_weight_from_exponents(crossing_exponents(isolated_cut(k, n)), log_r);
        if (lk > best_log) {
            best_log = lk;
            best_k = k;
        }
    }
    return best_k;
}

}  // namespace geocut
