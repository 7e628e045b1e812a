#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "geocut/cutmodel.hpp"
#include "geocut/polyengine.hpp"

using namespace geocut;

namespace {

// Oracle: build W(C_k) - W(C_{k+1}) by plain set difference of exponent sets.
std::pair<std::vector<int>, std::vector<int>> difference_oracle(int n, int k) {
    const auto a = crossing_exponents(isolated_cut(k, n));
    const auto b = crossing_exponents(isolated_cut(k + 1, n));
    const std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::vector<int> pos, neg;
    for (int e : a)
        if (!sb.count(e)) pos.push_back(e);
    for (int e : b)
        if (!sa.count(e)) neg.push_back(e);
    std::sort(pos.rbegin(), pos.rend());
    std::sort(neg.rbegin(), neg.rend());
    return {pos, neg};
}

double eval_oracle(const SignedExponentPoly& p, double r) {
    double v = 0.0;
    for (int e : p.pos) v += std::pow(r, e);
    for (int e : p.neg) v -= std::pow(r, e);
    return v;
}

}  // namespace

TEST_CASE("the three construction routes agree with the set-difference oracle") {
    for (int n = 4; n <= 14; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            const auto [pos, neg] = difference_oracle(n, k);
            const SignedExponentPoly p1 = poly_from_cuts(n, k);
            const SignedExponentPoly p3 = threshold_polynomial(n, k);
            const SignedExponentPoly p2 = threshold_polynomial_recursive(n, k);
            CHECK(p1.pos == pos);
            CHECK(p1.neg == neg);
            CHECK(p3.pos == pos);
            CHECK(p3.neg == neg);
            CHECK(p2.pos == pos);
            CHECK(p2.neg == neg);
        }
}

TEST_CASE("known expansions") {
    const SignedExponentPoly p72 = threshold_polynomial(7, 2);
    CHECK(p72.pos == std::vector<int>({19, 14}));
    CHECK(p72.neg == std::vector<int>({9, 8, 7, 6}));

    const SignedExponentPoly p71 = base_polynomial(7);
    CHECK(p71.pos == std::vector<int>({20}));
    CHECK(p71.neg == std::vector<int>({14, 13, 12, 11, 10}));

    const SignedExponentPoly p42 = threshold_polynomial(4, 2);
    CHECK(p42.pos == std::vector<int>({4, 2}));
    CHECK(p42.neg == std::vector<int>({0}));
}

TEST_CASE("term counts, separation gap, and sign structure") {
    for (int n = 5; n <= 30; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            const SignedExponentPoly p = threshold_polynomial(n, k);
            CHECK(static_cast<int>(p.pos.size()) == k);
            CHECK(static_cast<int>(p.neg.size()) == n - k - 1);
            CHECK(p.pos.back() == min_pos_exponent_closed(n, k));
            CHECK(p.neg.front() == max_neg_exponent_closed(n, k));
            CHECK(separation_gap(n, k) == n - k);
            CHECK(p.pos.back() - p.neg.front() == n - k);
            CHECK(sign_change_count(p) == 1);
            CHECK(std::is_sorted(p.pos.rbegin(), p.pos.rend()));
            CHECK(std::is_sorted(p.neg.rbegin(), p.neg.rend()));
        }
}

TEST_CASE("value at one counts terms with sign") {
    for (int n = 6; n <= 20; ++n)
        for (int k = 1; k <= n - 2; ++k)
            CHECK(eval_poly_at_one(threshold_polynomial(n, k)) == 2 * k - n + 1);
}

TEST_CASE("integer evaluation oracle at r = 2 for n = 6") {
    // 2^14 - 2^9 - 2^8 - 2^7 - 2^6, summed with exact integer shifts.
    const SignedExponentPoly p = base_polynomial(6);
    std::int64_t want = 0;
    for (int e : p.pos) want += std::int64_t{1} << e;
    for (int e : p.neg) want -= std::int64_t{1} << e;
    CHECK(want == 15424);
    CHECK(want == (std::int64_t{1} << 14) - (std::int64_t{1} << 10) + (std::int64_t{1} << 6));

    const SignedLogValue v = eval_poly_signed_log(p, 2.0);
    CHECK(v.sign == 1);
    CHECK(std::exp(v.log_abs) == doctest::Approx(15424.0).epsilon(1e-10));
    CHECK(eval_poly(p, 2.0) == doctest::Approx(15424.0).epsilon(1e-10));
}

TEST_CASE("signed log evaluation matches direct double sums away from roots") {
    for (int n : {5, 7, 9, 12})
        for (int k = 1; k <= n - 2; ++k)
            for (double r : {1.02, 1.3, 1.7, 1.95}) {
                const SignedExponentPoly p = threshold_polynomial(n, k);
                const double direct = eval_oracle(p, r);
                if (std::fabs(direct) < 1e-6) continue;
                const SignedLogValue v = eval_poly_signed_log(p, r);
                CHECK(v.sign == (direct > 0 ? 1 : -1));
                CHECK(v.sign * std::exp(v.log_abs) == doctest::Approx(direct).epsilon(1e-9));
            }
}

TEST_CASE("sign flips across a known root") {
    const SignedExponentPoly p = threshold_polynomial(7, 1);
    CHECK(eval_poly_signed_log(p, 1.228).sign == -1);   // just below the crossing
    CHECK(eval_poly_signed_log(p, 1.231).sign == 1);    // just above
}

TEST_CASE("extended precision agrees with double evaluation") {
    const SignedExponentPoly p = threshold_polynomial(7, 2);
    for (double r : {1.05, 1.5, 1.9}) {
        const SignedLogValue d = eval_poly_signed_log(p, r, EvalPrecision::Double);
        const SignedLogValue x = eval_poly_signed_log(p, r, EvalPrecision::Extended);
        CHECK(d.sign == x.sign);
        CHECK(d.log_abs == doctest::Approx(x.log_abs).epsilon(1e-12));
    }
}

TEST_CASE("exact cancellation falls through to the high-precision path") {
    SignedExponentPoly p;
    p.pos = {3};
    p.neg = {3};
    const SignedLogValue v = eval_poly_signed_log(p, 1.37);
    CHECK(v.sign == 0);
}

TEST_CASE("huge exponents stay finite in log space") {
    const SignedExponentPoly p = threshold_polynomial(60, 1);
    const SignedLogValue v = eval_poly_signed_log(p, 1.99);
    CHECK(v.sign == 1);
    CHECK(std::isfinite(v.log_abs));
    CHECK(v.log_abs > 1000.0);
}

TEST_CASE("reduced form identity: (x - 1) P equals the shifted short polynomial") {
    for (int n = 4; n <= 30; ++n) {
        const SignedExponentPoly p = base_polynomial(n);
        const SignedExponentPoly lhs = poly_subtract(shift_up(p, 1), p);
        const int shift = edge_count(n) - 2 * n + 3;
        const SignedExponentPoly rhs = shift_up(reduced_base(n), shift);
        CHECK(lhs.pos == rhs.pos);
        CHECK(lhs.neg == rhs.neg);
    }
    const SignedExponentPoly f6 = reduced_base(6);
    CHECK(f6.pos == std::vector<int>({9, 0}));
    CHECK(f6.neg == std::vector<int>({8, 4}));
    // f_6(2) = 512 - 256 - 16 + 1 = 241 and 2^6 * 241 recovers the full value.
    CHECK(eval_poly(f6, 2.0) == doctest::Approx(241.0).epsilon(1e-12));
    CHECK(64.0 * 241.0 == 15424.0);
}

TEST_CASE("subtraction cancels matching exponents and rejects stacked ones") {
    SignedExponentPoly a, b;
    a.pos = {5, 3};
    a.neg = {1};
    b.pos = {3};
    b.neg = {2};
    const SignedExponentPoly d = poly_subtract(a, b);
    CHECK(d.pos == std::vector<int>({5, 2}));
    CHECK(d.neg == std::vector<int>({1}));

    SignedExponentPoly c;
    c.neg = {5};   // a - c would put coefficient 2 on x^5
    CHECK_THROWS_AS(poly_subtract(a, c), std::domain_error);
}

TEST_CASE("shift_up raises every exponent") {
    SignedExponentPoly a;
    a.pos = {4, 0};
    a.neg = {2};
    const SignedExponentPoly s = shift_up(a, 3);
    CHECK(s.pos == std::vector<int>({7, 3}));
    CHECK(s.neg == std::vector<int>({5}));
}

TEST_CASE("one-step comparison polynomial for n = 7, k = 1") {
    const SignedExponentPoly q =
        poly_subtract(shift_up(threshold_polynomial(7, 2), 1), threshold_polynomial(7, 1));
    CHECK(q.pos == std::vector<int>({15, 14, 13, 12, 11}));
    CHECK(q.neg == std::vector<int>({9, 8, 7}));
    CHECK(eval_poly_at_one(q) == 2);
    for (double r : {1.001, 1.1, 1.5, 1.99}) CHECK(eval_poly_signed_log(q, r).sign == 1);
}

TEST_CASE("difference polynomial of an arbitrary cut pair") {
    const SignedExponentPoly d = poly_from_cut_pair(near_isolated_cut(1, 4), isolated_cut(2, 4));
    CHECK(d.pos == std::vector<int>({5, 0}));
    CHECK(d.neg == std::vector<int>({3, 2}));
    CHECK(eval_poly(d, 1.5) == doctest::Approx(2.96875).epsilon(1e-12));
    CHECK_THROWS_AS(poly_from_cut_pair(isolated_cut(1, 5), isolated_cut(1, 6)), std::domain_error);
}

TEST_CASE("unique-root regime bounds") {
    CHECK(in_unique_root_regime(6, 1));
    CHECK(in_unique_root_regime(6, 2));
    CHECK_FALSE(in_unique_root_regime(6, 3));
    CHECK(in_unique_root_regime(7, 2));
    CHECK_FALSE(in_unique_root_regime(7, 3));
    CHECK_FALSE(in_unique_root_regime(5, 1));
    CHECK(in_unique_root_regime(20, 8));
    CHECK(in_unique_root_regime(20, 9));
    CHECK_FALSE(in_unique_root_regime(20, 10));
}

TEST_CASE("construction domain errors") {
    CHECK_THROWS_AS(threshold_polynomial(5, 4), std::domain_error);
    CHECK_THROWS_AS(threshold_polynomial(5, 0), std::domain_error);
    CHECK_THROWS_AS(base_polynomial(2), std::domain_error);
}
