#include "qid/gadgets.hpp"

#include <map>
#include <tuple>

namespace qid {

int64_t triangular(int64_t k) {
    if (k < 0) throw SeriesError("triangular: negative index");
    return k * (k + 1) / 2;
}

Series poch_finite(const PochArg& a, int d, int n) {
    if (d < 1) throw SeriesError("poch_finite: base dilation must be >= 1");
    if (n < 0) throw SeriesError("poch_finite: negative length unsupported");
    Series r = Series::one();
    for (int j = 0; j < n; ++j) {
        Monomial m = a.mono;
        m.q += int64_t(d) * j;
        r = r * (Series::one() - Series::term(a.coeff, m));
        if (r.is_zero()) break;  // a factor 1 - q^0 vanished
    }
    return r;
}

Series poch_infinite(const PochArg& a, int d, int64_t Q) {
    if (d < 1) throw SeriesError("poch_infinite: base dilation must be >= 1");
    if (a.mono.q < 1)
        throw SeriesError(
            "poch_infinite: argument must have q-exponent >= 1");
    Series r = Series::one();
    r.set_caps(Caps::at(Q));
    r.normalize();
    for (int j = 0; a.mono.q + int64_t(d) * j <= Q; ++j) {
        Monomial m = a.mono;
        m.q += int64_t(d) * j;
        r = r * (Series::one() - Series::term(a.coeff, m));
    }
    return r;
}

namespace {

/* 1 / (1 - x) as a geometric series up to the caps, x a single signed
 * monomial with positive q-exponent. */
Series geometric_inverse(const Int& coeff, const Monomial& x, int64_t Q) {
    Series g(Caps::at(Q));
    Monomial m;
    Int c = 1;
    while (m.q <= Q) {
        g.accumulate(m, c);
        m *= x;
        c *= coeff;
        if (m.q <= 0) throw SeriesError("geometric_inverse: q-exponent <= 0");
    }
    g.normalize();
    return g;
}

}  // namespace

Series poch_recip_finite(const PochArg& a, int d, int n, int64_t Q) {
    if (d < 1 || n < 0) throw SeriesError("poch_recip_finite: bad arguments");
    if (n > 0 && a.mono.q < 1)
        throw SeriesError(
            "poch_recip_finite: argument must have q-exponent >= 1");
    Series r = Series::one();
    r.set_caps(Caps::at(Q));
    r.normalize();
    for (int j = 0; j < n; ++j) {
        Monomial m = a.mono;
        m.q += int64_t(d) * j;
        if (m.q > Q) break;  // remaining factors are 1 + O(q^{>Q})
        r = r * geometric_inverse(a.coeff, m, Q);
    }
    return r;
}

Series poch_recip_infinite(const PochArg& a, int d, int64_t Q) {
    if (d < 1) throw SeriesError("poch_recip_infinite: bad dilation");
    if (a.mono.q < 1)
        throw SeriesError(
            "poch_recip_infinite: argument must have q-exponent >= 1");
    Series r = Series::one();
    r.set_caps(Caps::at(Q));
    r.normalize();
    for (int j = 0; a.mono.q + int64_t(d) * j <= Q; ++j) {
        Monomial m = a.mono;
        m.q += int64_t(d) * j;
        r = r * geometric_inverse(a.coeff, m, Q);
    }
    return r;
}

Series poch(const PochSpec& spec, std::optional<int64_t> Q) {
    if (spec.length) return poch_finite(spec.argument, spec.base_dilation,
                                        *spec.length);
    if (!Q)
        throw SeriesError("poch: infinite symbol needs a truncation order");
    return poch_infinite(spec.argument, spec.base_dilation, *Q);
}

namespace {

using BinomKey = std::tuple<int64_t, int64_t, int>;

const Series& pascal_binomial(int64_t n, int64_t k, int d) {
    thread_local std::map<BinomKey, Series> memo;
    auto it = memo.find({n, k, d});
    if (it != memo.end()) return it->second;
    Series value;
    if (k == 0 || k == n) {
        value = Series::one();
    } else {
        // [n, k] = [n-1, k-1] + q^{dk} [n-1, k]
        value = pascal_binomial(n - 1, k - 1, d) +
                Series::q_power(int64_t(d) * k) * pascal_binomial(n - 1, k, d);
    }
    return memo.emplace(BinomKey{n, k, d}, std::move(value)).first->second;
}

}  // namespace

Series gauss_binomial(int64_t n, int64_t k, int d) {
    if (d < 1) throw SeriesError("gauss_binomial: base dilation must be >= 1");
    if (k < 0) return Series::zero();
    if (n >= 0) {
        if (k > n) return Series::zero();
        return pascal_binomial(n, k, d);
    }
    // Reflection to a nonnegative upper index.
    int64_t shift = d * (n * k - k * (k - 1) / 2);
    Series r = Series::term((k % 2 == 0) ? 1 : -1, qpow(shift));
    return r * gauss_binomial(k - n - 1, k, d);
}

Series q_multinomial(int64_t n, const std::vector<int64_t>& parts, int d) {
    if (n < 0) throw SeriesError("q_multinomial: negative upper index");
    int64_t total = 0;
    for (int64_t p : parts) {
        if (p < 0) throw SeriesError("q_multinomial: negative part");
        total += p;
    }
    if (total > n) throw SeriesError("q_multinomial: parts exceed upper index");
    Series r = Series::one();
    int64_t rem = n;
    for (int64_t p : parts) {
        r = r * gauss_binomial(rem, p, d);
        rem -= p;
    }
    return r;
}

Series infinite_product(int64_t Q, const std::function<Series(int)>& factor,
                        const std::function<int64_t(int)>& min_exp) {
    Series r = Series::one();
    r.set_caps(Caps::at(Q));
    r.normalize();
    for (int m = 1; min_exp(m) <= Q; ++m) r = r * factor(m);
    return r;
}

}  // namespace qid
