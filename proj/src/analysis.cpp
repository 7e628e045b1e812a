#include "geocut/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "geocut/polyengine.hpp"
#include "geocut/rootfind.hpp"

namespace geocut {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

Rational rational_sub(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

std::vector<double> power_table(int n, double r) {
    const int N = edge_count(n);
    std::vector<double> pw(static_cast<std::size_t>(N));
    pw[0] = 1.0;
    for (int e = 1; e < N; ++e) pw[static_cast<std::size_t>(e)] = pw[static_cast<std::size_t>(e - 1)] * r;
    return pw;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

DeltaParts delta_parts(int n, int k) {
    const SignedExponentPoly p = threshold_polynomial(n, k);
    long long pos_sum = 0, neg_sum = 0;
    for (int e : p.pos) pos_sum += e;
    for (int e : p.neg) neg_sum += e;
    DeltaParts d;
    d.abar = Rational(pos_sum, static_cast<long long>(p.pos.size()));
    d.bbar = Rational(neg_sum, static_cast<long long>(p.neg.size()));
    d.delta = rational_sub(d.abar, d.bbar);
    return d;
}

Rational delta_gap(int n, int k) {
    const Rational closed(3LL * (k + 2) * (n - k) - (k + 1) * (4 - k), 6);
    if (!(closed == delta_parts(n, k).delta))
        throw std::logic_error("delta_gap: closed form disagrees with direct means");
    return closed;
}

double scaling_prediction(int n, int k) {
    require(1 <= k && n - k - 1 >= 1, "scaling_prediction: need 1 <= k <= n - 2");
    return std::log(static_cast<double>(n - k - 1) / k) / delta_gap(n, k).value();
}

std::vector<ScalingRow> scaling_error_table(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<ScalingRow> rows;
    for (const auto& [n, k] : pairs) {
        ScalingRow row;
        row.n = n;
        row.k = k;
        row.actual = find_threshold(n, k).root - 1.0;
        row.predicted = scaling_prediction(n, k);
        row.error_pct = (row.predicted - row.actual) / row.actual * 100.0;
        rows.push_back(row);
    }
    return rows;
}

WeightValue total_weight(int n, double r) {
    require(n >= 2, "total_weight: need n >= 2");
    require(r > 0, "total_weight: need r > 0");
    const int N = edge_count(n);
    std::vector<int> exps(static_cast<std::size_t>(N));
    for (int e = 0; e < N; ++e) exps[static_cast<std::size_t>(e)] = N - 1 - e;
    WeightValue w;
    w.exponents = std::move(exps);
    const double lr = std::log(r);
    w.log_value = log_weight_from_exponents(w.exponents, lr);
    if ((N - 1) * lr <= 700.0) {
        double sum = 0.0;
        for (auto it = w.exponents.rbegin(); it != w.exponents.rend(); ++it)
            sum += std::pow(r, *it);
        w.direct = sum;
    }
    return w;
}

MatchingResult max_weight_matching(int n, double r) {
    require(2 <= n && n <= 20, "max_weight_matching: need 2 <= n <= 20");
    require(r > 0, "max_weight_matching: need r > 0");
    const int N = edge_count(n);
    const std::vector<double> pw = power_table(n, r);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<double> f(full + 1, 0.0);
    std::vector<std::uint8_t> mate(full + 1, 0);   // 1-based partner of the lowest vertex
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int v = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        double best = f[rest];   // leave the lowest vertex unmatched
        std::uint8_t who = 0;
        for (std::uint32_t m = rest; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            const double cand = pw[static_cast<std::size_t>(N - edge_index(v + 1, u + 1, n))] +
                                f[rest & ~(std::uint32_t{1} << u)];
            if (cand > best) {
                best = cand;
                who = static_cast<std::uint8_t>(u + 1);
            }
        }
        f[s] = best;
        mate[s] = who;
    }
    MatchingResult res;
    res.weight = f[full];
    std::uint32_t s = full;
    while (s) {
        const int v = std::countr_zero(s);
        const std::uint8_t who = mate[s];
        if (who == 0) {
            s &= s - 1;
            continue;
        }
        res.edges.push_back({v + 1, static_cast<int>(who)});
        s &= ~(std::uint32_t{1} << v);
        s &= ~(std::uint32_t{1} << (who - 1));
    }
    return res;
}

double min_spanning_tree_weight(int n, double r) {
    require(n >= 2, "min_spanning_tree_weight: need n >= 2");
    require(r > 0, "min_spanning_tree_weight: need r > 0");
    const int N = edge_count(n);
    const std::vector<double> pw = power_table(n, r);
    std::vector<int> order(static_cast<std::size_t>(N));
    for (int idx = 1; idx <= N; ++idx) order[static_cast<std::size_t>(idx - 1)] = idx;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double wa = pw[static_cast<std::size_t>(N - a)], wb = pw[static_cast<std::size_t>(N - b)];
        if (wa != wb) return wa < wb;
        return a < b;
    });
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    for (int v = 1; v <= n; ++v) parent[static_cast<std::size_t>(v)] = v;
    const auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    double total = 0.0;
    int taken = 0;
    for (int idx : order) {
        const auto [i, j] = edge_endpoints(idx, n);
        const int ri = find(i), rj = find(j);
        if (ri == rj) continue;
        parent[static_cast<std::size_t>(ri)] = rj;
        total += pw[static_cast<std::size_t>(N - idx)];
        if (++taken == n - 1) break;
    }
    return total;
}

double gutin_yeo_bound(int n, double r) {
    return (*total_weight(n, r).direct + max_weight_matching(n, r).weight) / 2.0;
}

double poljak_turzik_bound(int n, double r) {
    const WeightValue total = total_weight(n, r);
    require(total.direct.has_value(), "poljak_turzik_bound: total weight overflows double");
    return *total.direct / 2.0 + min_spanning_tree_weight(n, r) / 4.0;
}

BoundComparison bound_comparison(int n, double r) {
    BoundComparison b;
    b.n = n;
    b.r = r;
    b.optimal_k = best_isolated_k(n, r);
    b.optimum = *cut_weight(isolated_cut(b.optimal_k, n), r).direct;
    b.gy_bound = gutin_yeo_bound(n, r);
    b.pt_bound = poljak_turzik_bound(n, r);
    b.gap_gy_pct = (b.optimum - b.gy_bound) / b.optimum * 100.0;
    return b;
}

}  // namespace geocut
