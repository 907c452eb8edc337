#pragma once

#include "towns/family.hpp"
#include "towns/pattern.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace towns {

enum class ConstructionId {
    Singletons,        // {1},...,{n}
    EventownPairs,     // all unions of the blocks {2i-1,2i}, incl. the empty set
    DualEventown,      // EventownPairs on [n-1], auxiliary element n added to all
    Star2Uniform,      // {1,i} for i = 2..n
    Cosingletons,      // all (n-t-1)-subsets of [n-t], elements above n-t isolated
    C110,              // tail block + complement-plus-partner sets, odd sizes
    C001,              // even-size variant sharing a sentinel element
    StarEdgesOdd,      // edge stars of K_m on a C(m,2) edge ground, m odd
    StarEdgesAux,      // edge stars of K_m plus a shared auxiliary element, m even
    VertexEdgeStarOdd, // ([m] \ {i}) + edge star at i, m odd
    VertexEdgeStarEven,// same shape, m even
    Star3Uniform,      // all 3-sets containing element 1
    MatchedComplement, // ([k] \ {i}) + {k+i} on [2k], k ≡ 0 mod 3
    MatchingBlocks,    // ([3k-1] \ {i}) + the i-th block of a 2-element matching
    Anm,               // ([n] \ {i}) + the i-th of n disjoint m-blocks
    PartitionTriples,  // all unions of the blocks {3i-2,3i-1,3i} (aux variant: +n)
};

inline constexpr int construction_count = 16;

std::string to_string(ConstructionId id);
std::optional<ConstructionId> construction_from_string(const std::string& name);

// Integer parameters keyed by name. Common keys: "n" (ground or vertex
// count), "t" (cosingleton shrink), "k" (arity or block count), "m" (block
// size), "aux" (1 = auxiliary-element variant).
using Params = std::map<std::string, long long>;

struct ConstructionSpec {
    ConstructionId id;
    Params params;
};

// Materializes the family. Throws std::invalid_argument naming the violated
// predicate for invalid or degenerate parameters.
SetFamily build(const ConstructionSpec& spec);

// One catalog row per (construction, served pattern) pair.
struct CatalogEntry {
    std::string key;       // e.g. "c110:110@2"
    ConstructionId id = ConstructionId::Singletons;
    Pattern served = Pattern(2, {ResidueConstraint::exact(0)});
    std::function<bool(const Params&)> valid;
    std::function<long long(const Params&)> family_size;
    std::function<long long(const Params&)> ground_size;
    // Parameter choices for soundness sweeps: the entry's documented range,
    // additionally capped by the given ground limit.
    std::function<std::vector<Params>(long long ground_limit)> sweep_params;
    Params smallest;       // smallest valid parameter choice
};

const std::vector<CatalogEntry>& catalog();

// Residue classes (mod ell) of the A_{n,m} parameters realizing an arity-3
// pattern over {Exact(0), NonZero}: n - 2 must match entry 2, n - 3 entry 3,
// and n + m - 1 entry 1. When several n classes qualify the smallest is
// reported and m classes are given relative to it. none iff the congruences
// are unsatisfiable (consecutive residues n-2, n-3 cannot both vanish).
struct AnmParams {
    int modulus = 0;
    int n_residue = 0;
    std::vector<int> m_residues;  // all valid classes, ascending
};

std::optional<AnmParams> solve_anm_params(const Pattern& pattern, int ell);

// Smallest concrete (n, m) in the solved classes with n >= 4, m >= 1.
std::optional<std::pair<long long, long long>> anm_smallest_params(const Pattern& pattern,
                                                                   int ell);

} // namespace towns
