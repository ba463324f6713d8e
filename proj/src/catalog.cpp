#include "qid/catalog.hpp"

#include <algorithm>
#include <chrono>

namespace qid {

namespace detail {
/* Defined in builders.cpp. */
std::vector<IdentityEntry> make_catalog();
}  // namespace detail

const std::vector<IdentityEntry>& catalog() {
    static const std::vector<IdentityEntry> entries = detail::make_catalog();
    return entries;
}

const IdentityEntry& entry(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw UnknownId("unknown identity id: " + id);
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const auto& e : catalog()) ids.push_back(e.id);
    return ids;
}

SweepRng::SweepRng(const std::string& seed) {
    // FNV-1a, then splitmix64 stepping
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : seed) {
        h ^= c;
        h *= 1099511628211ull;
    }
    state = h;
}

uint64_t SweepRng::next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int SweepRng::uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % uint64_t(hi - lo + 1));
}

std::vector<Assignment> default_sweep(const IdentityEntry& e) {
    if (e.sweep) return e.sweep();
    if (e.param_names.empty()) return {e.defaults};
    std::vector<Assignment> out;
    const int k = static_cast<int>(e.param_names.size());
    std::vector<int> tuple(k, 0);
    // all tuples in [0,6]^k inside the domain
    while (true) {
        Assignment a = e.defaults;
        for (int i = 0; i < k; ++i) a[e.param_names[i]] = tuple[i];
        if (e.in_domain(a)) out.push_back(a);
        int i = 0;
        for (; i < k; ++i) {
            if (++tuple[i] <= 6) break;
            tuple[i] = 0;
        }
        if (i == k) break;
    }
    // three seeded random tuples in [0,10]^k inside the domain
    SweepRng rng(e.id);
    int found = 0, guard = 0;
    while (found < 3 && guard < 10000) {
        ++guard;
        Assignment a = e.defaults;
        for (int i = 0; i < k; ++i) a[e.param_names[i]] = rng.uniform(0, 10);
        if (!e.in_domain(a)) continue;
        out.push_back(a);
        ++found;
    }
    return out;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 =
        std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

Caps with_extra(Caps caps, const std::map<Param, int>& extra) {
    for (auto [v, cap] : extra) {
        int i = static_cast<int>(v);
        caps.p[i] = caps.p[i] < 0 ? cap : std::min(caps.p[i], cap);
    }
    return caps;
}

}  // namespace

VerificationReport verify(const IdentityEntry& e, const Assignment& a,
                          int64_t qmax,
                          const std::map<Param, int>& extra_caps) {
    VerificationReport rep;
    rep.id = e.id;
    rep.assignment = a;
    Timer timer;
    try {
        if (!e.in_domain(a))
            throw SeriesError("assignment out of the entry's domain");
        std::optional<Mismatch> found;
        std::string found_label;
        Caps region = Caps::exact();
        for (const auto& chk : e.checks) {
            if (e.mode == VerifyMode::exact) {
                region = with_extra(Caps::exact(), extra_caps);
                Series l = chk.build(Side::lhs, a, region);
                Series r = chk.build(Side::rhs, a, region);
                found = first_mismatch(l, r, region);
            } else if (e.mode == VerifyMode::exact_bounded) {
                Series ex = chk.build(e.exact_side, a, Caps::exact());
                if (!ex.is_exact())
                    throw SeriesError("exact side failed to build exactly");
                int64_t Q = std::max<int64_t>(ex.max_q(), 0) + 2;
                region = with_extra(e.region_at(Q), extra_caps);
                Side other =
                    e.exact_side == Side::lhs ? Side::rhs : Side::lhs;
                Series tr = chk.build(other, a, region);
                found = e.exact_side == Side::lhs
                            ? first_mismatch(ex, tr, region)
                            : first_mismatch(tr, ex, region);
            } else {
                region = with_extra(e.region_at(qmax), extra_caps);
                Series l = chk.build(Side::lhs, a, region);
                Series r = chk.build(Side::rhs, a, region);
                found = first_mismatch(l, r, region);
            }
            if (found) {
                found_label = chk.label;
                break;
            }
        }
        rep.region = region;
        if (found) {
            rep.status = "mismatch";
            rep.check_label = found_label;
            rep.mismatch = *found;
        } else {
            rep.status = "verified";
        }
        rep.passed = (e.expected == Expected::identity)
                         ? rep.status == "verified"
                         : rep.status == "mismatch";
    } catch (const std::exception& ex) {
        rep.status = "error";
        rep.error = ex.what();
        rep.passed = false;
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

Series build_side(const std::string& id, Side side, const Assignment& a,
                  int64_t qmax) {
    const IdentityEntry& e = entry(id);
    Assignment merged = e.defaults;
    for (const auto& [k, v] : a) merged[k] = v;
    Caps caps = e.mode == VerifyMode::exact ? Caps::exact()
                                            : e.region_at(qmax);
    return e.checks.front().build(side, merged, caps);
}

TransformStep TransformStep::dil(int d) {
    TransformStep s;
    s.kind = Kind::dilate;
    s.dilation = d;
    return s;
}

TransformStep TransformStep::trans(Param v, int t) {
    TransformStep s;
    s.kind = Kind::translate;
    s.var = v;
    s.shift = t;
    return s;
}

TransformStep TransformStep::subst(Param v, Series r) {
    TransformStep s;
    s.kind = Kind::substitute;
    s.var = v;
    s.replacement = std::move(r);
    return s;
}

Series apply_steps(Series s, const std::vector<TransformStep>& steps) {
    for (const auto& st : steps) {
        switch (st.kind) {
            case TransformStep::Kind::dilate:
                s = dilate(s, st.dilation);
                break;
            case TransformStep::Kind::translate:
                s = translate(s, st.var, st.shift);
                break;
            case TransformStep::Kind::substitute:
                s = substitute(s, st.var, st.replacement);
                break;
        }
    }
    return s;
}

VerificationReport verify_limit(const LimitCheck& lc,
                                std::optional<int64_t> q_override) {
    VerificationReport rep;
    rep.id = lc.id;
    Timer timer;
    int64_t Q = q_override.value_or(lc.q);
    rep.region = Caps::at(Q);
    try {
        const IdentityEntry& fin = entry(lc.finite_id);
        const IdentityEntry& inf = entry(lc.infinite_id);
        auto bounds = lc.schedule(Q);
        if (bounds.size() < 3)
            throw SeriesError("limit schedule needs at least 3 bound values");
        Caps caps = Caps::at(Q);
        for (Side side : {Side::lhs, Side::rhs}) {
            Series target = inf.checks.front().build(side, inf.defaults, caps);
            for (const auto& b : bounds) {
                Assignment a = fin.defaults;
                for (const auto& [k, v] : b) a[k] = v;
                Series f = fin.checks.front().build(side, a, caps);
                for (auto [from, to] : lc.renames)
                    f = substitute(f, from, Series::variable(to));
                if (auto mm = first_mismatch(f, target, caps)) {
                    rep.status = "mismatch";
                    rep.mismatch = *mm;
                    rep.assignment = a;
                    rep.check_label =
                        side == Side::lhs ? "lhs" : "rhs";
                    rep.passed = false;
                    rep.elapsed_ms = timer.ms();
                    return rep;
                }
            }
        }
        rep.status = "verified";
        rep.passed = true;
    } catch (const std::exception& ex) {
        rep.status = "error";
        rep.error = ex.what();
        rep.passed = false;
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerificationReport verify_limit(const std::string& finite_id,
                                const std::string& infinite_id, int64_t Q) {
    for (const auto& lc : limit_checks())
        if (lc.finite_id == finite_id && lc.infinite_id == infinite_id)
            return verify_limit(lc, Q);
    throw UnknownId("no registered limit check " + finite_id + " -> " +
                    infinite_id);
}

VerificationReport specialize_check(const ChainCheck& c,
                                    std::optional<int64_t> q_override) {
    VerificationReport rep;
    rep.id = c.id;
    Timer timer;
    int64_t Q = q_override.value_or(c.q);
    rep.region = Caps::at(Q);
    try {
        const IdentityEntry& src = entry(c.source_id);
        const IdentityEntry& tgt = entry(c.target_id);
        int64_t Qsrc = c.source_q ? c.source_q(Q) : Q;
        Caps src_caps = Caps::at(Qsrc);
        for (auto [v, cap] : c.source_caps)
            src_caps.p[static_cast<int>(v)] = cap;

        Caps cmp = Caps::at(Q);
        for (auto [v, cap] : c.source_caps)
            cmp.p[static_cast<int>(v)] = cap;

        Assignment sa = src.defaults;
        for (const auto& [k, v] : c.source_assignment) sa[k] = v;
        Assignment ta = tgt.defaults;
        for (const auto& [k, v] : c.target_assignment) ta[k] = v;

        for (Side side : {Side::lhs, Side::rhs}) {
            Series s = src.checks.front().build(side, sa, src_caps);
            s = restrict_caps(s, src_caps);
            s = apply_steps(std::move(s), c.steps);
            Side tside = side;
            if (c.crossed) tside = side == Side::lhs ? Side::rhs : Side::lhs;
            Series t = tgt.checks.front().build(tside, ta, Caps::at(Q));
            if (auto mm = first_mismatch(s, t, cmp)) {
                rep.status = "mismatch";
                rep.mismatch = *mm;
                rep.check_label = side == Side::lhs ? "lhs" : "rhs";
                rep.passed = false;
                rep.elapsed_ms = timer.ms();
                return rep;
            }
        }
        rep.status = "verified";
        rep.passed = true;
    } catch (const std::exception& ex) {
        rep.status = "error";
        rep.error = ex.what();
        rep.passed = false;
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

}  // namespace qid
