#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qid/series.hpp"

namespace qid {

using Assignment = std::map<std::string, int>;

enum class Side { lhs, rhs };

enum class VerifyMode {
    exact,          // both sides exact Laurent polynomials; full comparison
    exact_bounded,  // one side exact; compared through deg(exact side) + 2
    truncated       // compared through the requested q order
};

enum class Expected { identity, non_identity };

struct UnknownId : SeriesError {
    using SeriesError::SeriesError;
};

/* Builder contract: return a series covering the requested caps region
 * (exact series trivially do). */
using SideBuilder =
    std::function<Series(Side, const Assignment&, const Caps&)>;

struct EntryCheck {
    std::string label;  // sub-identity tag for multi-pair entries
    SideBuilder build;
};

struct IdentityEntry {
    std::string id;
    std::string source;     // display label, e.g. "(1.1)" or "Thm 5.1"
    std::string statement;  // one-line ASCII rendering
    VerifyMode mode = VerifyMode::truncated;
    Expected expected = Expected::identity;
    Side exact_side = Side::lhs;  // for exact_bounded
    std::vector<std::string> param_names;
    Assignment defaults;
    std::function<bool(const Assignment&)> domain;  // nullptr = all
    std::vector<EntryCheck> checks;                 // at least one
    /* Comparison region for a requested q order (adds entry parameter caps,
     * e.g. the z cap of the Ramamani-Venkatachaliengar identity). */
    std::function<Caps(int64_t)> region;  // nullptr = Caps::at(Q)
    std::function<std::vector<Assignment>()> sweep;  // nullptr = {defaults}
    std::string notes;

    bool in_domain(const Assignment& a) const { return !domain || domain(a); }
    Caps region_at(int64_t Q) const {
        return region ? region(Q) : Caps::at(Q);
    }
};

const std::vector<IdentityEntry>& catalog();
const IdentityEntry& entry(const std::string& id);
std::vector<std::string> catalog_ids();

struct VerificationReport {
    std::string id;
    Assignment assignment;
    Caps region = Caps::exact();
    std::string status;  // verified | mismatch | error
    std::string check_label;
    std::optional<Mismatch> mismatch;
    bool passed = false;
    double elapsed_ms = 0.0;
    std::string error;
};

/* Compare the entry's sides on its declared region. `qmax` is the requested
 * comparison order for truncated entries (ignored by exact ones).
 * extra_caps lets the caller tighten parameter caps. */
VerificationReport verify(const IdentityEntry& e, const Assignment& a,
                          int64_t qmax,
                          const std::map<Param, int>& extra_caps = {});

Series build_side(const std::string& id, Side side, const Assignment& a,
                  int64_t qmax);

/* All bound tuples in [0,6]^k inside the entry domain plus three seeded
 * random tuples in [0,10]^k (the spec's default sweep policy). */
std::vector<Assignment> default_sweep(const IdentityEntry& e);

/* Deterministic helper RNG (splitmix64), seeded from a string. */
struct SweepRng {
    uint64_t state;
    explicit SweepRng(const std::string& seed);
    uint64_t next();
    int uniform(int lo, int hi);  // inclusive
};

/* ---- limits -------------------------------------------------------------- */

struct LimitCheck {
    std::string id;
    std::string finite_id;
    std::string infinite_id;
    int64_t q = 12;
    /* Bound assignments, each stabilized (all bounds >= q); at least 3. */
    std::function<std::vector<Assignment>(int64_t Q)> schedule;
    /* Parameter renames applied to the finite sides (from -> to). */
    std::vector<std::pair<Param, Param>> renames;
};

const std::vector<LimitCheck>& limit_checks();
VerificationReport verify_limit(const LimitCheck& lc,
                                std::optional<int64_t> q_override = {});
VerificationReport verify_limit(const std::string& finite_id,
                                const std::string& infinite_id, int64_t Q);

/* ---- specialization chains ----------------------------------------------- */

struct TransformStep {
    enum class Kind { dilate, translate, substitute } kind;
    int dilation = 1;
    Param var = Param::a;
    int shift = 0;
    Series replacement;

    static TransformStep dil(int d);
    static TransformStep trans(Param v, int t);
    static TransformStep subst(Param v, Series r);
};

Series apply_steps(Series s, const std::vector<TransformStep>& steps);

struct ChainCheck {
    std::string id;
    std::string source_id;
    std::string target_id;
    std::vector<TransformStep> steps;
    bool crossed = false;  // source lhs pairs with target rhs and vice versa
    int64_t q = 20;
    /* Working order and parameter caps for the source build. */
    std::function<int64_t(int64_t)> source_q;
    std::vector<std::pair<Param, int>> source_caps;
    Assignment source_assignment;
    Assignment target_assignment;
};

const std::vector<ChainCheck>& chain_checks();
VerificationReport specialize_check(const ChainCheck& c,
                                    std::optional<int64_t> q_override = {});

}  // namespace qid
