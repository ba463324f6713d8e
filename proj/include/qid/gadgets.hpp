#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qid/series.hpp"

namespace qid {

/* T_k = k(k+1)/2. Rejects k < 0. */
int64_t triangular(int64_t k);

/* A signed monomial, the argument of a Pochhammer symbol: coeff * monomial,
 * e.g. -c*q for (-cq)_n (sign folded into the coefficient). */
struct PochArg {
    Int coeff = 1;
    Monomial mono;
};

inline PochArg neg(Monomial m) { return PochArg{-1, m}; }
inline PochArg pos(Monomial m) { return PochArg{1, m}; }

/* Pochhammer specification: (arg; q^d)_n with n >= 0, n < 0 unsupported, or
 * infinite length (length = nullopt), which needs a truncation order. */
struct PochSpec {
    PochArg argument;
    int base_dilation = 1;
    std::optional<int> length;  // nullopt = infinite
};

/* (arg; q^d)_n = prod_{j=0}^{n-1} (1 - arg*q^{d j}), exact. (.)_0 = 1. */
Series poch_finite(const PochArg& a, int d, int n);

/* (arg; q^d)_infinity truncated at Q. The argument must have q-exponent >= 1
 * so the product converges coefficientwise. */
Series poch_infinite(const PochArg& a, int d, int64_t Q);

/* 1 / (arg; q^d)_n truncated at Q, each factor expanded geometrically.
 * Requires q-exponent of the argument >= 1. */
Series poch_recip_finite(const PochArg& a, int d, int n, int64_t Q);

/* 1 / (arg; q^d)_infinity truncated at Q. Same argument requirement. */
Series poch_recip_infinite(const PochArg& a, int d, int64_t Q);

/* Evaluate a PochSpec (finite exactly, infinite truncated at Q). */
Series poch(const PochSpec& spec, std::optional<int64_t> Q = std::nullopt);

/* Gaussian binomial [n, k] in base q^d, exact. For n >= 0 computed by the
 * Pascal recurrence (memoized, thread-local); 0 when k < 0 or k > n. For
 * n < 0 the reflection (-1)^k q^{d(nk - k(k-1)/2)} [k-n-1, k] gives a Laurent
 * polynomial. */
Series gauss_binomial(int64_t n, int64_t k, int d = 1);

/* q-multinomial [n; parts...] in base q^d, as a product of Gaussian
 * binomials (never by division). parts must be >= 0 and sum to <= n. */
Series q_multinomial(int64_t n, const std::vector<int64_t>& parts, int d = 1);

/* prod_{m >= 1} factor(m), truncated at Q. factor(m) - 1 must have minimum
 * q-exponent weakly increasing and eventually > Q; iteration stops at the
 * first m with min_exp(m) > Q. */
Series infinite_product(int64_t Q, const std::function<Series(int)>& factor,
                        const std::function<int64_t(int)>& min_exp);

}  // namespace qid
