#pragma once

#include "towns/family.hpp"
#include "towns/pattern.hpp"

#include <chrono>
#include <optional>
#include <vector>

namespace towns {

struct SearchConfig {
    std::optional<double> time_limit_seconds;
    bool deterministic = true;
    bool use_upper_bound_cutoff = true;
    int worker_count = 1;
};

struct SearchResult {
    long long best_size = 0;
    std::vector<SubsetMask> witness;
    bool optimal = false;
    unsigned long long nodes_expanded = 0;
    std::chrono::milliseconds elapsed{0};
};

// All subsets of [n] whose size satisfies the pattern's first entry, in
// increasing order of their value as n-bit integers. Refuses n > 24 unless
// allow_large is set (2^n enumeration).
std::vector<SubsetMask> candidate_universe(const Pattern& pattern, const GroundSet& ground,
                                           bool allow_large = false);

// Exact maximum family size by depth-first branch and bound over the
// candidate universe (n <= 24). Candidates are appended in increasing
// bitmask order; a branch dies when the remaining compatible candidates
// cannot beat the best known family, and the whole search stops early once
// the best equals upper_bound(pattern, n) (sound: the bound is proved).
// With deterministic=true the witness is the lexicographically first
// maximum-size family in candidate order, regardless of worker_count.
// optimal=false only when the time limit expired first.
SearchResult max_family(const Pattern& pattern, const GroundSet& ground,
                        const SearchConfig& config = {});

// Independent brute-force check: plain recursion over all feasible
// subfamilies of the candidate universe, re-verifying with verify_pattern
// at every extension, no pruning of any kind. Hard-capped at n <= 5. The
// config is accepted for call-site symmetry and ignored; the oracle always
// runs to completion.
SearchResult oracle_max(const Pattern& pattern, const GroundSet& ground,
                        const SearchConfig& config = {});

// Smallest proved upper bound on the maximum family size, assembled from:
// tabulated prefix values (arity 2 and 3 mod 2, arity 2 and 3 mod 3 where
// finite); pairwise-intersection counting for arity-4 tails (1,0,0) and
// (0,1,1); and chop-the-front reductions t + bound(suffix) where entries
// t+1, t+2 admit no common residue. Returns nullopt when nothing applies
// (treat as unbounded). Values below the arity are clamped up to it: the
// tabulated formulas assume all levels populated, and a family of size
// < arity escapes them vacuously.
std::optional<long long> upper_bound(const Pattern& pattern, int n);

} // namespace towns
