#include "qid/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qid {

namespace {
constexpr const char* kParamNames[kParamCount] = {
    "a", "a1", "a2", "a3", "a4", "a5", "a6", "b", "c", "t", "z"};
}

const char* param_name(Param v) { return kParamNames[static_cast<int>(v)]; }

std::optional<Param> param_from_name(std::string_view name) {
    for (int i = 0; i < kParamCount; ++i)
        if (name == kParamNames[i]) return static_cast<Param>(i);
    return std::nullopt;
}

bool Monomial::is_one() const {
    if (q != 0) return false;
    return std::all_of(p.begin(), p.end(), [](uint16_t e) { return e == 0; });
}

Monomial& Monomial::operator*=(const Monomial& o) {
    q += o.q;
    for (int i = 0; i < kParamCount; ++i) {
        int64_t e = int64_t(p[i]) + o.p[i];
        if (e > std::numeric_limits<uint16_t>::max())
            throw SeriesError("parameter exponent overflow");
        p[i] = static_cast<uint16_t>(e);
    }
    return *this;
}

Monomial qpow(int64_t e) {
    Monomial m;
    m.q = e;
    return m;
}

Monomial vpow(Param v, int e) {
    if (e < 0) throw SeriesError("parameter exponents must be nonnegative");
    Monomial m;
    m.p[static_cast<int>(v)] = static_cast<uint16_t>(e);
    return m;
}

int64_t sat_add(int64_t a, int64_t b) {
    if (a >= kInf || b >= kInf) return kInf;
    if (a <= -kInf || b <= -kInf) return -kInf;
    return a + b;
}

Caps Caps::at(int64_t Q) {
    Caps c;
    c.q = Q;
    return c;
}

Caps Caps::meet(const Caps& o) const {
    Caps r;
    r.q = std::min(q, o.q);
    for (int i = 0; i < kParamCount; ++i) {
        if (p[i] < 0)
            r.p[i] = o.p[i];
        else if (o.p[i] < 0)
            r.p[i] = p[i];
        else
            r.p[i] = std::min(p[i], o.p[i]);
    }
    return r;
}

bool Caps::contains(const Monomial& m) const {
    if (m.q > q) return false;
    for (int i = 0; i < kParamCount; ++i)
        if (p[i] >= 0 && m.p[i] > p[i]) return false;
    return true;
}

bool Caps::covers(const Caps& region) const {
    if (region.q > q) return false;
    for (int i = 0; i < kParamCount; ++i) {
        if (p[i] < 0) continue;  // unconstrained here
        if (region.p[i] < 0 || region.p[i] > p[i]) return false;
    }
    return true;
}

Series Series::one() { return term(1, Monomial{}); }

Series Series::term(Int coeff, const Monomial& m) {
    Series s;
    if (coeff != 0) {
        s.terms_.emplace(m, std::move(coeff));
        s.min_q_ = m.q;
    }
    return s;
}

Series Series::variable(Param v) { return term(1, vpow(v, 1)); }
Series Series::q_power(int64_t e) { return term(1, qpow(e)); }
Series Series::integer(Int n) { return term(std::move(n), Monomial{}); }

int64_t Series::max_q() const {
    return terms_.empty() ? -kInf : terms_.rbegin()->first.q;
}

int Series::max_exp(Param v) const {
    int m = 0;
    for (const auto& [mono, c] : terms_)
        m = std::max<int>(m, mono.p[static_cast<int>(v)]);
    return m;
}

const Int& Series::coeff_at(const Monomial& m) const {
    static const Int zero = 0;
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

void Series::accumulate(const Monomial& m, const Int& c) {
    if (c == 0 || !caps_.contains(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
}

void Series::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || !caps_.contains(it->first))
            it = terms_.erase(it);
        else
            ++it;
    }
    min_q_ = terms_.empty() ? kInf : terms_.begin()->first.q;
}

Series operator+(const Series& l, const Series& r) {
    Series out(l.caps().meet(r.caps()));
    for (const auto& [m, c] : l.terms()) out.accumulate(m, c);
    for (const auto& [m, c] : r.terms()) out.accumulate(m, c);
    out.normalize();
    return out;
}

Series operator-(const Series& s) {
    Series out(s.caps());
    for (const auto& [m, c] : s.terms()) out.accumulate(m, -c);
    out.normalize();
    return out;
}

Series operator-(const Series& l, const Series& r) { return l + (-r); }

Series operator*(const Series& l, const Series& r) {
    Caps caps = Caps::exact();
    /* Validity-order rule: a side truncated at Q contributes Q + min_q of the
     * other side; the product is exact only when both sides are. */
    int64_t ql = l.caps().exact_q() ? kInf : sat_add(l.caps().q, r.min_q());
    int64_t qr = r.caps().exact_q() ? kInf : sat_add(r.caps().q, l.min_q());
    caps.q = std::min(ql, qr);
    for (int i = 0; i < kParamCount; ++i) {
        int32_t a = l.caps().p[i], b = r.caps().p[i];
        caps.p[i] = (a < 0) ? b : (b < 0) ? a : std::min(a, b);
    }
    Series out(caps);
    for (const auto& [ml, cl] : l.terms()) {
        for (const auto& [mr, cr] : r.terms()) {
            Monomial m = ml;
            m *= mr;
            if (!caps.contains(m)) continue;
            out.accumulate(m, cl * cr);
        }
    }
    out.normalize();
    return out;
}

Series& operator+=(Series& l, const Series& r) { return l = l + r; }
Series& operator*=(Series& l, const Series& r) { return l = l * r; }

bool operator==(const Series& l, const Series& r) {
    return l.caps() == r.caps() && l.terms() == r.terms();
}

Series dilate(const Series& s, int d) {
    if (d <= 0) throw SeriesError("dilate: dilation must be >= 1");
    Caps caps = s.caps();
    if (!caps.exact_q()) caps.q = caps.q * d;
    Series out(caps);
    for (const auto& [m, c] : s.terms()) {
        Monomial md = m;
        md.q = m.q * d;
        out.accumulate(md, c);
    }
    out.normalize();
    return out;
}

Series translate(const Series& s, Param v, int t) {
    Caps caps = s.caps();
    if (t < 0 && !caps.exact_q()) {
        int32_t cap = caps.p[static_cast<int>(v)];
        if (cap < 0)
            throw SeriesError(std::string("translate: negative shift of ") +
                              param_name(v) +
                              " on a truncated series needs a degree cap");
        caps.q = sat_add(caps.q, int64_t(t) * cap);
    }
    Series out(caps);
    for (const auto& [m, c] : s.terms()) {
        Monomial mt = m;
        mt.q = m.q + int64_t(t) * m.p[static_cast<int>(v)];
        out.accumulate(mt, c);
    }
    out.normalize();
    return out;
}

Series substitute(const Series& s, Param v, const Series& replacement) {
    if (!replacement.is_exact())
        throw SeriesError("substitute: replacement must be exact");
    const int vi = static_cast<int>(v);
    Caps caps = s.caps();
    if (replacement.is_zero()) {
        caps.p[vi] = -1;
        Series out(caps);
        for (const auto& [m, c] : s.terms())
            if (m.p[vi] == 0) out.accumulate(m, c);
        out.normalize();
        return out;
    }
    if (!caps.exact_q()) {
        if (caps.p[vi] >= 0 && replacement.min_q() != 0)
            throw SeriesError(
                "substitute: variable is degree-capped; substitution would "
                "need the discarded terms");
        if (replacement.min_q() < 0) {
            if (caps.p[vi] < 0)
                throw SeriesError(
                    "substitute: replacement lowers q-exponents; the variable "
                    "needs a degree cap");
            caps.q = sat_add(caps.q, replacement.min_q() * caps.p[vi]);
        }
    }
    caps.p[vi] = -1;
    Series out(caps);
    std::vector<Series> powers{Series::one()};
    for (const auto& [m, c] : s.terms()) {
        int e = m.p[vi];
        Monomial base = m;
        base.p[vi] = 0;
        if (e == 0) {
            out.accumulate(base, c);
            continue;
        }
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * replacement);
        for (const auto& [mr, cr] : powers[e].terms()) {
            Monomial mm = base;
            mm *= mr;
            out.accumulate(mm, c * cr);
        }
    }
    out.normalize();
    return out;
}

Series restrict_caps(const Series& s, const Caps& c) {
    Series out(s.caps().meet(c));
    for (const auto& [m, cf] : s.terms()) out.accumulate(m, cf);
    out.normalize();
    return out;
}

Series truncate_q(const Series& s, int64_t Q) {
    return restrict_caps(s, Caps::at(Q));
}

Series cap_param(const Series& s, Param v, int cap) {
    Caps c = Caps::exact();
    c.p[static_cast<int>(v)] = cap;
    return restrict_caps(s, c);
}

Int coeff_of(const Series& s, const Monomial& m) {
    if (!s.caps().contains(m)) {
        if (m.q > s.caps().q)
            throw InsufficientValidity("coeff_of: monomial beyond q validity",
                                       s.caps().q, m.q);
        throw SeriesError("coeff_of: monomial beyond a parameter cap");
    }
    return s.coeff_at(m);
}

Series eval_q1(const Series& s) {
    if (!s.is_exact())
        throw SeriesError("eval_q1: series must be exact");
    Series out;
    for (const auto& [m, c] : s.terms()) {
        Monomial m1 = m;
        m1.q = 0;
        out.accumulate(m1, c);
    }
    out.normalize();
    return out;
}

std::optional<Mismatch> first_mismatch(const Series& l, const Series& r,
                                       const Caps& region) {
    if (!l.caps().covers(region))
        throw InsufficientValidity("compare: lhs does not cover the region",
                                   l.caps().q, region.q);
    if (!r.caps().covers(region))
        throw InsufficientValidity("compare: rhs does not cover the region",
                                   r.caps().q, region.q);
    auto il = l.terms().begin(), el = l.terms().end();
    auto ir = r.terms().begin(), er = r.terms().end();
    while (il != el || ir != er) {
        if (il != el && !region.contains(il->first)) {
            ++il;
            continue;
        }
        if (ir != er && !region.contains(ir->first)) {
            ++ir;
            continue;
        }
        if (il == el)
            return Mismatch{ir->first, 0, (ir++)->second};
        if (ir == er)
            return Mismatch{il->first, (il++)->second, 0};
        if (il->first < ir->first)
            return Mismatch{il->first, il->second, 0};
        if (ir->first < il->first)
            return Mismatch{ir->first, 0, ir->second};
        if (il->second != ir->second)
            return Mismatch{il->first, il->second, ir->second};
        ++il;
        ++ir;
    }
    return std::nullopt;
}

namespace {

void append_monomial(std::ostream& os, const Monomial& m, bool unit_coeff) {
    bool first = unit_coeff;
    for (int i = 0; i < kParamCount; ++i) {
        if (m.p[i] == 0) continue;
        if (!first) os << '*';
        os << kParamNames[i];
        if (m.p[i] != 1) os << '^' << m.p[i];
        first = false;
    }
    if (m.q != 0) {
        if (!first) os << '*';
        os << 'q';
        if (m.q != 1) os << '^' << m.q;
        first = false;
    }
    if (first && unit_coeff) os << '1';
}

}  // namespace

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    append_monomial(os, m, true);
    return os.str();
}

std::string to_string(const Series& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : s.terms()) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) {
            os << mag;
            if (!m.is_one()) {
                os << '*';
                append_monomial(os, m, true);
            }
        } else {
            append_monomial(os, m, true);
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int parse_int() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == start) throw SeriesError("parse: expected digits");
        return Int(std::string(s.substr(start, i - start)));
    }
    int64_t parse_exponent() {
        skip_ws();
        bool neg = accept('-');
        Int v = parse_int();
        int64_t e = v.convert_to<int64_t>();
        return neg ? -e : e;
    }
    std::string parse_name() {
        skip_ws();
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i]))))
            ++i;
        return std::string(s.substr(start, i - start));
    }

    /* term := [sign] [integer] {'*' factor} | [sign] factor {'*' factor} */
    void parse_term(Series& out, bool negated) {
        Int coeff = 1;
        Monomial m;
        bool have_factor = false;
        skip_ws();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = parse_int();
            have_factor = true;
        }
        while (true) {
            skip_ws();
            if (have_factor) {
                if (!accept('*')) break;
            }
            std::string name = parse_name();
            if (name.empty()) throw SeriesError("parse: expected factor name");
            int64_t e = 1;
            if (accept('^')) e = parse_exponent();
            if (name == "1") {
                // literal 1 from a unit monomial
            } else if (name == "q") {
                m.q += e;
            } else {
                auto v = param_from_name(name);
                if (!v) throw SeriesError("parse: unknown symbol " + name);
                if (e < 0)
                    throw SeriesError("parse: negative parameter exponent");
                m.p[static_cast<int>(*v)] += static_cast<uint16_t>(e);
            }
            have_factor = true;
        }
        out.accumulate(m, negated ? Int(-coeff) : coeff);
    }
};

}  // namespace

Series parse_series(std::string_view text) {
    Series out;
    Parser p{text};
    if (p.eof()) throw SeriesError("parse: empty input");
    {
        Parser probe = p;
        if (probe.accept('0') && probe.eof()) return out;
    }
    bool neg = p.accept('-');
    p.parse_term(out, neg);
    while (!p.eof()) {
        if (p.accept('+'))
            p.parse_term(out, false);
        else if (p.accept('-'))
            p.parse_term(out, true);
        else
            throw SeriesError("parse: expected '+' or '-'");
    }
    out.normalize();
    return out;
}

}  // namespace qid
