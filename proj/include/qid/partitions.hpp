#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qid/series.hpp"

namespace qid {

/* Weakly decreasing list of positive integers. */
struct Partition {
    std::vector<int> parts;
    int weight() const;
};

/* Declarative admissibility: part_ok filters single part values; extend_ok
 * sees the whole (decreasing) prefix and the candidate next (smaller or
 * equal) part, so gap rules, window rules and multiplicity limits are all
 * expressible. Both default to "always". */
struct PartitionConstraint {
    std::string name;
    std::function<bool(int)> part_ok;
    std::function<bool(const std::vector<int>&, int)> extend_ok;

    bool admits_part(int p) const { return !part_ok || part_ok(p); }
    bool admits_extension(const std::vector<int>& prefix, int next) const {
        return !extend_ok || extend_ok(prefix, next);
    }
};

/* All partitions of n satisfying c, in deterministic (descending lex)
 * order. n = 0 yields the empty partition. */
std::vector<Partition> enumerate_partitions(int n,
                                            const PartitionConstraint& c);

/* Count without materializing. */
int64_t count_partitions(int n, const PartitionConstraint& c);

using StatFn = std::function<std::vector<int>(const Partition&)>;

/* Group enumerate(n, c) by the requested statistics. */
std::map<std::vector<int>, int64_t> tally(int n, const PartitionConstraint& c,
                                          const StatFn& stats);

/* Weighted tally: sum of monomials weight(pi) over admissible partitions of
 * n; the result is an exact Series with q-exponent 0 terms. */
Series weighted_tally(int n, const PartitionConstraint& c,
                      const std::function<Monomial(const Partition&)>& weight);

/* ---- the paper's partition classes -------------------------------------- */

/* Residue-class convention: "part = j (mod M)" means part = j + lambda*M
 * with lambda >= 0, so in particular part >= j. */
bool in_residue_class(int part, int j, int M);

/* Level parity of p as a j (mod M) part: parity of lambda. */
int level_parity(int part, int j, int M);

PartitionConstraint unconstrained();
PartitionConstraint distinct_parts();
/* Even parts non-repeating, odd parts free. */
PartitionConstraint evens_distinct();
/* Odd parts only, each value at most twice. */
PartitionConstraint odd_at_most_twice();
/* Distinct parts congruent to +-1 mod 3. */
PartitionConstraint distinct_pm1_mod3();
/* Schur: difference >= 3, > 3 when the pair are multiples of 3. */
PartitionConstraint schur();
/* Goellnitz g_i: difference >= 2, > 2 for odd pairs, smallest part >= i. */
PartitionConstraint gollnitz_gap(int smallest);
/* Goellnitz G_i: distinct parts = 2, 4, or 2i-1 (mod 4). */
PartitionConstraint gollnitz_residue(int i);
/* Distinct parts in given (j, M) classes. */
PartitionConstraint distinct_residues(const std::vector<std::pair<int, int>>&);
/* Capparelli C*: parts = +-2, +-3 (mod 12), repetition allowed. */
PartitionConstraint capparelli_cstar();
/* Capparelli D: parts > 1, difference >= 2, >= 4 unless the consecutive
 * parts are both multiples of 3 or sum to a multiple of 6. Optionally with
 * the extra window rule: m | lambda_i implies lambda_i - lambda_{i+j} >=
 * m*j. */
PartitionConstraint capparelli_d(std::optional<int> window_modulus = {});
/* Capparelli second-theorem classes. */
PartitionConstraint capparelli_a6();  // distinct parts = 1,3,5,6 (mod 6)
PartitionConstraint capparelli_b();   // D-conditions, 2 excluded, 1 allowed
/* Theorem C-R C: distinct parts = 2,3,4,6 (mod 6). */
PartitionConstraint capparelli_c6();
/* Theorem C5 classes. */
PartitionConstraint c5_a();
PartitionConstraint c5_c();
PartitionConstraint c5_d();

/* Theorem H floor readings for the B side. */
enum class FloorReading { residue_sum, count_sum };

struct TheoremHConfig {
    int m = 2;
    std::vector<int> residues = {1};  // j_i, 0 < j_i < 2m, j_i != m
    FloorReading floor = FloorReading::count_sum;
};

/* A side: nu_i distinct parts = j_i (mod 2m) plus distinct multiples of m. */
PartitionConstraint theorem_h_a(const TheoremHConfig&);
/* B side: nu_i distinct parts = j_i (mod m), any two parts of different
 * level parities differ by more than m, distinct multiples of m above the
 * floor. The floor depends on the reading: (sum j_i) * m, or (number of
 * non-multiple parts) * m. */
PartitionConstraint theorem_h_b(const TheoremHConfig&);

/* ---- theorem checks ------------------------------------------------------ */

struct TheoremReport {
    std::string id;
    int n_max = 0;
    bool pass = false;
    std::optional<int> first_fail_n;
    std::string detail;  // human-readable; includes adjudicated readings
};

std::vector<std::string> theorem_ids();

/* Options: integer knobs (m, r, j1, j2, ...) for thm-H. */
TheoremReport theorem_check(const std::string& id, int n_max,
                            const std::map<std::string, int>& options = {});

/* Tallies for `count`: per-theorem statistics at a single n, both sides. */
std::string theorem_count(const std::string& id, int n,
                          const std::map<std::string, int>& options = {});

}  // namespace qid
