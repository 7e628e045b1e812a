#pragma once

#include <vector>

#include "geocut/cutmodel.hpp"

namespace geocut {

// Sparse polynomial with every coefficient +1 or -1, stored as two exponent
// lists in strictly decreasing order. pos and neg never share an exponent.
struct SignedExponentPoly {
    int n = 0;   // vertex count the polynomial was built for, 0 if free-form
    int k = 0;   // isolated index it compares against k+1, 0 if free-form
    std::vector<int> pos;
    std::vector<int> neg;

    bool operator==(const SignedExponentPoly&) const = default;
};

// W(C_k) - W(C_{k+1}) by cancelling the shared crossing exponents.
SignedExponentPoly poly_from_cuts(int n, int k);

// W(a) - W(b) for two cuts on the same vertex count.
SignedExponentPoly poly_from_cut_pair(const CutSpec& a, const CutSpec& b);

// The k = 1 comparison written out directly: one positive term, n - 2
// consecutive negative ones.
SignedExponentPoly base_polynomial(int n);

// Closed-form expansion of W(C_k) - W(C_{k+1}), 1 <= k <= n - 2.
SignedExponentPoly threshold_polynomial(int n, int k);

// Same polynomial assembled by peeling one vertex at a time down to k = 1.
SignedExponentPoly threshold_polynomial_recursive(int n, int k);

// True when the separation guarantees apply: n >= 6 and 1 <= k <= n/2 - 1.
bool in_unique_root_regime(int n, int k);

// Smallest positive exponent and largest negative exponent, in closed form.
int min_pos_exponent_closed(int n, int k);
int max_neg_exponent_closed(int n, int k);

// Gap between the two, always n - k for the comparison polynomials.
int separation_gap(int n, int k);

// Short form of the k = 1 polynomial after dividing out a monomial and x - 1:
// x^(2n-3) - x^(2n-4) - x^(n-2) + 1.
SignedExponentPoly reduced_base(int n);

// Multiply by x^amount.
SignedExponentPoly shift_up(const SignedExponentPoly& p, int amount);

// a - b over a coefficient map. Throws if any coefficient leaves {-1, 0, +1},
// so a successful call certifies the exponent sets interleave cleanly.
SignedExponentPoly poly_subtract(const SignedExponentPoly& a, const SignedExponentPoly& b);

// Sign changes in the coefficient sequence read from the highest exponent down.
int sign_change_count(const SignedExponentPoly& p);

// Value of the polynomial at x = 1: just the signed term count.
long long eval_poly_at_one(const SignedExponentPoly& p);

struct SignedLogValue {
    int sign = 0;         // -1, 0, +1
    double log_abs = 0;   // natural log of |value|; meaningless when sign == 0
};

enum class EvalPrecision { Double, Extended };

// Sign-accurate evaluation at r > 0. The positive and negative parts are each
// summed in log space; when they cancel to within working precision the value
// is recomputed with a wide multiprecision float before a sign is reported.
// Extended forces the multiprecision route.
SignedLogValue eval_poly_signed_log(const SignedExponentPoly& p, double r,
                                    EvalPrecision prec = EvalPrecision::Double);

// Convenience: sign * exp(log_abs). May overflow to +/-inf for huge values.
double eval_poly(const SignedExponentPoly& p, double r,
                 EvalPrecision prec = EvalPrecision::Double);

}  // namespace geocut
