#pragma once

#include <map>
#include <tuple>

#include "qid/catalog.hpp"
#include "qid/gadgets.hpp"

namespace qid::bd {

inline int64_t T(int64_t k) { return triangular(k); }

inline Monomial ma(int e) { return vpow(Param::a, e); }
inline Monomial mb(int e) { return vpow(Param::b, e); }
inline Monomial mc(int e) { return vpow(Param::c, e); }
inline Monomial mt(int e) { return vpow(Param::t, e); }
inline Monomial mz(int e) { return vpow(Param::z, e); }

inline Param ai(int i) {
    if (i < 1 || i > 6) throw SeriesError("subscripted parameter out of range");
    return static_cast<Param>(static_cast<int>(Param::a1) + i - 1);
}
inline Monomial mai(int i, int e) { return vpow(ai(i), e); }

inline Series one() { return Series::one(); }
inline Series term(Int c, const Monomial& m) { return Series::term(c, m); }
inline Series qp(int64_t e) { return Series::q_power(e); }

/* (coeff * arg; q^d)_n, exact. */
inline Series P(Int coeff, const Monomial& arg, int d, int n) {
    return poch_finite(PochArg{std::move(coeff), arg}, d, n);
}

/* (coeff * arg; q^d)_infinity truncated at Q. */
inline Series Pinf(Int coeff, const Monomial& arg, int d, int64_t Q) {
    return poch_infinite(PochArg{std::move(coeff), arg}, d, Q);
}

struct RecipKey {
    int sign;
    Monomial arg;
    int d;
    int n;  // -1 for infinite
    int64_t Q;
    friend auto operator<=>(const RecipKey&, const RecipKey&) = default;
};

/* Cached 1/(sign*arg; q^d)_n truncated at Q (n = -1 for the infinite
 * symbol). Arguments are restricted to coefficient +-1, which covers every
 * reciprocal in the catalog. */
inline Series R(int sign, const Monomial& arg, int d, int n, int64_t Q) {
    thread_local std::map<RecipKey, Series> cache;
    RecipKey key{sign, arg, d, n, Q};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Series value = n < 0 ? poch_recip_infinite(PochArg{sign, arg}, d, Q)
                         : poch_recip_finite(PochArg{sign, arg}, d, n, Q);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

/* 1/(q^s; q^d)_n shorthand. */
inline Series Rq(int64_t s, int d, int n, int64_t Q) {
    return R(1, qpow(s), d, n, Q);
}

inline Series bin(int64_t n, int64_t k, int d = 1) {
    return gauss_binomial(n, k, d);
}

/* Multiply a (possibly Laurent) exact prefactor by truncated reciprocal
 * factors so the product is valid to at least Q, then normalize the cap to
 * exactly Q. Factors are supplied as already-built series valid to
 * Q + slack where slack = max(0, -min_q(prefactor)); use recip_order(Q,
 * prefactor) to get that order. */
inline int64_t recip_order(int64_t Q, const Series& prefactor) {
    if (prefactor.is_zero()) return Q;
    return Q + std::max<int64_t>(0, -prefactor.min_q());
}

inline Series capped_sum_start(int64_t Q) {
    Series s;
    s.set_caps(Caps::at(Q));
    return s;
}

inline int get(const Assignment& a, const std::string& k) {
    auto it = a.find(k);
    if (it == a.end()) throw SeriesError("missing parameter " + k);
    return it->second;
}

inline int get_or(const Assignment& a, const std::string& k, int dflt) {
    auto it = a.find(k);
    return it == a.end() ? dflt : it->second;
}

std::vector<IdentityEntry> make_entries_classical();
std::vector<IdentityEntry> make_entries_capparelli();

}  // namespace qid::bd
