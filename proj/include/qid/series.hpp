#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qid {

using Int = boost::multiprecision::cpp_int;

/* Named parameters carried by monomials besides q. Only q may take negative
 * exponents; parameter exponents are nonnegative. Order is alphabetical so
 * that monomial comparison and serialization agree. */
enum class Param : uint8_t { a = 0, a1, a2, a3, a4, a5, a6, b, c, t, z };

inline constexpr int kParamCount = 11;

const char* param_name(Param v);
std::optional<Param> param_from_name(std::string_view name);

/* Exponent vector: one signed q-exponent plus nonnegative exponents for each
 * named parameter. Canonical by construction (positional storage), so two
 * equal monomials compare equal member-wise. Comparison is q-exponent first,
 * then parameter exponents in alphabetical order. */
struct Monomial {
    int64_t q = 0;
    std::array<uint16_t, kParamCount> p{};

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    bool is_one() const;
    Monomial& operator*=(const Monomial& o);
    friend Monomial operator*(Monomial l, const Monomial& r) { return l *= r; }
};

Monomial qpow(int64_t e);
Monomial vpow(Param v, int e);

/* +infinity sentinel for validity arithmetic. */
inline constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

int64_t sat_add(int64_t a, int64_t b);

/* Validity caps. q: kInf means exact, otherwise all coefficients with
 * q-exponent <= q are exact and larger ones are unknown. p[v]: -1 means the
 * parameter is unconstrained, otherwise coefficients are exact on the region
 * exponent(v) <= p[v] and terms beyond were discarded (a ring quotient, legal
 * because parameter exponents are nonnegative). */
struct Caps {
    int64_t q = kInf;
    std::array<int32_t, kParamCount> p = [] {
        std::array<int32_t, kParamCount> a{};
        a.fill(-1);
        return a;
    }();

    static Caps exact() { return Caps{}; }
    static Caps at(int64_t Q);

    bool exact_q() const { return q >= kInf; }
    Caps meet(const Caps& o) const;
    bool contains(const Monomial& m) const;
    /* True if a comparison over `region` is answerable from a series with
     * these caps. */
    bool covers(const Caps& region) const;

    friend bool operator==(const Caps&, const Caps&) = default;
};

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Raised when an operation or comparison would need coefficients beyond the
 * validity region of its inputs. `required` carries the minimum cap that
 * would make the request legal when known. */
struct InsufficientValidity : SeriesError {
    int64_t available = 0;
    int64_t required = 0;
    InsufficientValidity(const std::string& what, int64_t avail, int64_t req)
        : SeriesError(what), available(avail), required(req) {}
};

/* Exact sparse Laurent polynomial / truncated formal power series in q with
 * nonnegative-exponent parameters over arbitrary-precision integers.
 * Immutable value semantics: every operation returns a fresh series; no
 * stored coefficient is zero; every stored term lies inside the caps. */
class Series {
public:
    using TermMap = std::map<Monomial, Int>;

    Series() = default;
    explicit Series(Caps caps) : caps_(caps) {}

    static Series zero() { return Series(); }
    static Series one();
    static Series term(Int coeff, const Monomial& m);
    static Series variable(Param v);
    static Series q_power(int64_t e);
    static Series integer(Int n);

    const TermMap& terms() const { return terms_; }
    const Caps& caps() const { return caps_; }
    bool is_exact() const { return caps_.exact_q(); }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    /* Minimum q-exponent over stored terms, +inf for the zero series. */
    int64_t min_q() const { return min_q_; }
    /* Maximum q-exponent over stored terms, -inf (= -kInf) for zero. */
    int64_t max_q() const;
    /* Maximum stored exponent of v. */
    int max_exp(Param v) const;

    const Int& coeff_at(const Monomial& m) const;

    /* Construction helper used by the arithmetic kernels: accumulate a term,
     * dropping it if outside caps. Callers must finish with normalize(). */
    void accumulate(const Monomial& m, const Int& c);
    void normalize();
    void set_caps(const Caps& c) { caps_ = c; }

private:
    TermMap terms_;
    Caps caps_ = Caps::exact();
    int64_t min_q_ = kInf;
};

Series operator+(const Series& l, const Series& r);
Series operator-(const Series& l, const Series& r);
Series operator-(const Series& s);
Series operator*(const Series& l, const Series& r);
Series& operator+=(Series& l, const Series& r);
Series& operator*=(Series& l, const Series& r);
bool operator==(const Series& l, const Series& r);

/* q -> q^d. Ring homomorphism; caps scale with d. Rejects d <= 0. */
Series dilate(const Series& s, int d);

/* v -> v * q^t. For t < 0 on a truncated series the parameter must carry a
 * degree cap E, and the result is valid only to Q + t*E. */
Series translate(const Series& s, Param v, int t);

/* Homomorphic substitution v -> replacement. The replacement must be exact.
 * On a truncated series v must be uncapped unless the replacement is zero;
 * a replacement with negative min_q additionally requires a cap on v. */
Series substitute(const Series& s, Param v, const Series& replacement);

/* Tighten caps (discarding terms outside). Never widens validity. */
Series restrict_caps(const Series& s, const Caps& c);
Series truncate_q(const Series& s, int64_t Q);
Series cap_param(const Series& s, Param v, int cap);

/* Coefficient lookup; the monomial must lie inside the validity region. */
Int coeff_of(const Series& s, const Monomial& m);

/* Collapse q (set q = 1): sums coefficients over q-exponents. Exact input
 * only. */
Series eval_q1(const Series& s);

struct Mismatch {
    Monomial monomial;
    Int lhs;
    Int rhs;
};

/* Compare coefficients over `region`. Both series must cover the region.
 * Returns the lexicographically smallest mismatching monomial (q-exponent
 * first), or nullopt if the sides agree. */
std::optional<Mismatch> first_mismatch(const Series& l, const Series& r,
                                       const Caps& region);

/* Deterministic text form: terms sorted by (q_exp, param exponents), e.g.
 * "-3*a^2*b*q^-1 + 5*q^2". parse_series inverts it. */
std::string to_string(const Series& s);
std::string to_string(const Monomial& m);
Series parse_series(std::string_view text);

}  // namespace qid
