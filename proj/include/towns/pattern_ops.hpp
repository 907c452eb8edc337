#pragma once

#include "towns/pattern.hpp"

namespace towns {

// Entrywise flip of each residue (r -> r+1 mod 2). Mod-2 patterns only.
Pattern pattern_dual(const Pattern& pattern);

// Entrywise sum of residues mod p. Requires equal arity and modulus and
// all-exact entries on both sides.
Pattern pattern_sum(const Pattern& a, const Pattern& b);

// Growth classification for mod-2 patterns of arity >= 3. LinearType means
// maximum family size grows at least linearly in the ground size; the
// remaining patterns admit only O(sqrt(n)) growth.
enum class PatternClass { LinearType, SqrtBounded };

// A pattern is LinearType iff it or its dual is one of: all-zero;
// (1,0,0,...,0); alternating (1,0,1,0,...); or the delayed alternation
// (0,0,1,0,1,0,...).
PatternClass classify_pattern(const Pattern& pattern);

} // namespace towns
