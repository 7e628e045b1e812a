#include "geocut/polyengine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace geocut {

namespace {

// ~100 decimal digits; enough headroom to separate sums that double cannot.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

int binom2(int m) { return m * (m - 1) / 2; }

void check_nk(int n, int k) {
    require(n >= 3, "threshold polynomial: need n >= 3");
    require(1 <= k && k <= n - 2, "threshold polynomial: need 1 <= k <= n - 2");
}

// Log-sum-exp over descending exponents. Anchored at the dominant term so the
// running sum stays in [1, count]; terms below exp(-745) cannot move it.
double log_sum_pow(const std::vector<int>& exps, double log_r) {
    const int anchor = log_r >= 0 ? exps.front() : exps.back();
    double sum = 0.0;
    for (int e : exps) {
        const double d = (e - anchor) * log_r;
        if (d < -745.0) break;
        sum += std::exp(d);
    }
    return anchor * log_r + std::log(sum);
}

SignedLogValue eval_multiprecision(const SignedExponentPoly& p, double r) {
    const BigFloat rb(r);
    BigFloat acc(0);
    for (int e : p.pos) acc += pow(rb, e);
    for (int e : p.neg) acc -= pow(rb, e);
    SignedLogValue v;
    if (acc == 0) {
        v.sign = 0;
        return v;
    }
    v.sign = acc > 0 ? 1 : -1;
    v.log_abs = static_cast<double>(log(abs(acc)));
    return v;
}

}  // namespace

SignedExponentPoly poly_from_cut_pair(const CutSpec& a, const CutSpec& b) {
    require(a.n() == b.n(), "poly_from_cut_pair: cuts live on different vertex counts");
    const auto ea = crossing_exponents(a);
    const auto eb = crossing_exponents(b);
    const std::set<int> sa(ea.begin(), ea.end()), sb(eb.begin(), eb.end());
    SignedExponentPoly p;
    p.n = a.n();
    for (int e : ea)
        if (!sb.count(e)) p.pos.push_back(e);
    for (int e : eb)
        if (!sa.count(e)) p.neg.push_back(e);
    return p;   // crossing_exponents is descending, so pos/neg already are
}

SignedExponentPoly poly_from_cuts(int n, int k) {
    check_nk(n, k);
    SignedExponentPoly p = poly_from_cut_pair(isolated_cut(k, n), isolated_cut(k + 1, n));
    p.k = k;
    return p;
}

SignedExponentPoly base_polynomial(int n) {
    require(n >= 3, "base_polynomial: need n >= 3");
    const int N = edge_count(n);
    SignedExponentPoly p;
    p.n = n;
    p.k = 1;
    p.pos = {N - 1};
    for (int e = N - n; e >= N - 2 * n + 3; --e) p.neg.push_back(e);
    return p;
}

SignedExponentPoly threshold_polynomial(int n, int k) {
    check_nk(n, k);
    const int m = n - k + 1;
    SignedExponentPoly p;
    p.n = n;
    p.k = k;
    for (int i = 1; i <= k; ++i) p.pos.push_back(binom2(n - i + 1) - (k - i + 1));
    for (int i = 0; i <= m - 3; ++i) p.neg.push_back(binom2(m) - m - i);
    return p;
}

SignedExponentPoly threshold_polynomial_recursive(int n, int k) {
    check_nk(n, k);
    if (k == 1) return base_polynomial(n);
    SignedExponentPoly tail = threshold_polynomial_recursive(n - 1, k - 1);
    SignedExponentPoly p;
    p.n = n;
    p.k = k;
    p.pos.push_back(edge_count(n) - k);
    p.pos.insert(p.pos.end(), tail.pos.begin(), tail.pos.end());
    p.neg = std::move(tail.neg);
    return p;
}

bool in_unique_root_regime(int n, int k) { return n >= 6 && 1 <= k && k <= n / 2 - 1; }

int min_pos_exponent_closed(int n, int k) {
    check_nk(n, k);
    return edge_count(n) - 1 - (k - 1) * (2 * n - k) / 2;
}

int max_neg_exponent_closed(int n, int k) {
    check_nk(n, k);
    return edge_count(n) - 1 - k * (2 * n - k - 1) / 2;
}

int separation_gap(int n, int k) {
    const SignedExponentPoly p = threshold_polynomial(n, k);
    return p.pos.back() - p.neg.front();
}

SignedExponentPoly reduced_base(int n) {
    require(n >= 3, "reduced_base: need n >= 3");
    SignedExponentPoly p;
    p.n = n;
    p.k = 1;
    p.pos = {2 * n - 3, 0};
    p.neg = {2 * n - 4, n - 2};
    return p;
}

SignedExponentPoly shift_up(const SignedExponentPoly& p, int amount) {
    SignedExponentPoly s = p;
    for (int& e : s.pos) e += amount;
    for (int& e : s.neg) e += amount;
    return s;
}

SignedExponentPoly poly_subtract(const SignedExponentPoly& a, const SignedExponentPoly& b) {
    std::map<int, int, std::greater<int>> coeff;
    for (int e : a.pos) coeff[e] += 1;
    for (int e : a.neg) coeff[e] -= 1;
    for (int e : b.pos) coeff[e] -= 1;
    for (int e : b.neg) coeff[e] += 1;
    SignedExponentPoly d;
    d.n = a.n;
    for (const auto& [e, c] : coeff) {
        if (c == 0) continue;
        require(c == 1 || c == -1, "poly_subtract: coefficient outside {-1, 0, +1}");
        (c == 1 ? d.pos : d.neg).push_back(e);
    }
    return d;
}

int sign_change_count(const SignedExponentPoly& p) {
    std::map<int, int, std::greater<int>> coeff;
    for (int e : p.pos) coeff[e] = 1;
    for (int e : p.neg) coeff[e] = -1;
    int changes = 0, prev = 0;
    for (const auto& [e, c] : coeff) {
        if (prev != 0 && c != prev) ++changes;
        prev = c;
    }
    return changes;
}

long long eval_poly_at_one(const SignedExponentPoly& p) {
    return static_cast<long long>(p.pos.size()) - static_cast<long long>(p.neg.size());
}

SignedLogValue eval_poly_signed_log(const SignedExponentPoly& p, double r, EvalPrecision prec) {
    require(r > 0, "eval_poly_signed_log: need r > 0");
    if (prec == EvalPrecision::Extended) return eval_multiprecision(p, r);

    SignedLogValue v;
    if (p.pos.empty() && p.neg.empty()) return v;
    const double lr = std::log(r);
    if (p.neg.empty()) {
        v.sign = 1;
        v.log_abs = log_sum_pow(p.pos, lr);
        return v;
    }
    if (p.pos.empty()) {
        v.sign = -1;
        v.log_abs = log_sum_pow(p.neg, lr);
        return v;
    }
    const double lp = log_sum_pow(p.pos, lr);
    const double ln = log_sum_pow(p.neg, lr);
    const double scale = std::max({1.0, std::fabs(lp), std::fabs(ln)});
    if (std::fabs(lp - ln) <= 1e-12 * scale) return eval_multiprecision(p, r);
    v.sign = lp > ln ? 1 : -1;
    const double hi = std::max(lp, ln), lo = std::min(lp, ln);
    v.log_abs = hi + std::log1p(-std::exp(lo - hi));
    return v;
}

double eval_poly(const SignedExponentPoly& p, double r, EvalPrecision prec) {
    const SignedLogValue v = eval_poly_signed_log(p, r, prec);
    return v.sign == 0 ? 0.0 : v.sign * std::exp(v.log_abs);
}

}  // namespace geocut
