#include "geocut/rootfind.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace geocut {

namespace {

constexpr double kBracketLow = 1.0 + 1e-9;
constexpr double kBracketHigh = 2.0 - 1e-9;
constexpr double kResidualTarget = 1e-11;
constexpr double kWidthFloor = 1e-15;
constexpr int kMaxIterations = 200;

// |p(r)| measured against the positive part alone, so a residual of 1e-11
// means the two halves of the polynomial agree to eleven digits.
double relative_residual(const SignedExponentPoly& p, double r, EvalPrecision prec) {
    const SignedLogValue v = eval_poly_signed_log(p, r, prec);
    if (v.sign == 0) return 0.0;
    SignedExponentPoly pos_part;
    pos_part.pos = p.pos;
    const SignedLogValue scale = eval_poly_signed_log(pos_part, r, prec);
    return std::exp(v.log_abs - scale.log_abs);
}

}  // namespace

RootResult find_root(const SignedExponentPoly& p, double lo, double hi, double tol,
                     EvalPrecision prec) {
    if (!(lo < hi)) throw std::domain_error("find_root: need lo < hi");
    int sign_lo = eval_poly_signed_log(p, lo, prec).sign;
    int sign_hi = eval_poly_signed_log(p, hi, prec).sign;
    if (sign_lo == 0) return {lo, 0, 0.0};
    if (sign_hi == 0) return {hi, 0, 0.0};
    if (sign_lo == sign_hi) throw std::domain_error("find_root: no sign change in bracket");

    RootResult result;
    double mid = 0.5 * (lo + hi);
    while (result.iterations < kMaxIterations) {
        mid = 0.5 * (lo + hi);
        const double width = hi - lo;
        if (width <= tol) {
            // Bisection target met; keep halving only while the polynomial
            // value at the midpoint is still visibly nonzero.
            if (relative_residual(p, mid, prec) <= kResidualTarget) break;
            if (width <= kWidthFloor) break;
        }
        const int s = eval_poly_signed_log(p, mid, prec).sign;
        ++result.iterations;
        if (s == 0) break;
        if (s == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
    result.root = mid;
    result.residual = relative_residual(p, mid, prec);
    return result;
}

RootResult find_threshold(int n, int k, double tol, EvalPrecision prec) {
    return find_root(threshold_polynomial(n, k), kBracketLow, kBracketHigh, tol, prec);
}

int max_threshold_index(int n) { return n / 2 - 1; }

ThresholdTable threshold_table(int n, double tol, EvalPrecision prec) {
    if (n < 4) throw std::domain_error("threshold_table: need n >= 4");
    ThresholdTable t;
    t.n = n;
    t.tolerance = tol;
    t.bracket_low = kBracketLow;
    t.bracket_high = kBracketHigh;
    t.entries.push_back({0, 2.0, 0, 0.0});
    for (int k = 1; k <= max_threshold_index(n); ++k) {
        const RootResult r = find_threshold(n, k, tol, prec);
        t.entries.push_back({k, r.root, r.iterations, r.residual});
    }
    return t;
}

MonotonicityReport check_monotonicity(const std::vector<ThresholdTable>& tables) {
    MonotonicityReport rep;
    rep.tables_checked = static_cast<int>(tables.size());
    std::map<std::pair<int, int>, double> by_nk;
    for (const auto& t : tables) {
        for (std::size_t j = 1; j < t.entries.size(); ++j) {
            if (t.entries[j].r >= t.entries[j - 1].r)
                throw std::logic_error("check_monotonicity: roots must fall as k grows");
            by_nk[{t.n, t.entries[j].k}] = t.entries[j].r;
        }
    }
    for (const auto& [nk, r] : by_nk) {
        const auto prev = by_nk.find({nk.first - 1, nk.second});
        if (prev != by_nk.end() && r > prev->second) rep.increases_in_n.push_back(nk);
    }
    return rep;
}

}  // namespace geocut
