#pragma once

#include "towns/family.hpp"
#include "towns/pattern.hpp"

#include <span>
#include <vector>

namespace towns {

// Output of trace: the non-chosen members cut down to T = intersection of
// the chosen members, relabeled onto ground {1..|T|}. relabel[i-1] is the
// original element behind new element i.
struct TraceResult {
    SetFamily family;
    Pattern suffix;
    std::vector<int> relabel;
};

// Intersects every non-chosen member with T and drops the first t pattern
// entries. chosen holds t distinct 1-based member indices; t may be 0 (T is
// the whole ground). Requires t < |family| and t + 2 <= arity with entries
// t+1, t+2 admitting no common residue (that disjointness is what makes the
// cut members provably distinct). Throws if the output collapses (a sign the
// input did not satisfy the pattern).
TraceResult trace(const SetFamily& family, const Pattern& pattern,
                  std::span<const int> chosen);

// Adds a fresh element n+1 to every member. Every intersection size grows
// by exactly one, so a family matching a mod-2 pattern maps to one matching
// the entrywise-flipped pattern.
SetFamily dualize(const SetFamily& family);

// Pairs the i-th member of a with the i-th of b (shifted past a's ground)
// and unites them; excess members of the longer family are dropped. When a
// satisfies alpha and b satisfies beta, the result satisfies the entrywise
// sum (patterns must share arity and modulus and be all-exact).
SetFamily partition_sum(const SetFamily& a, const SetFamily& b, const Pattern& alpha,
                        const Pattern& beta);

// Members F ∩ (complement of the pivot member), pivot dropped, relabeled to
// ground {1..n-|pivot|}. Cut members may coincide, so the output is a
// multiset (members_distinct() may be false). pivot is 1-based.
struct RestrictResult {
    SetFamily family;
    std::vector<int> relabel;
};

RestrictResult restrict_outside(const SetFamily& family, int pivot);

// Complements every member within the ground set.
SetFamily complement_family(const SetFamily& family);

} // namespace towns
