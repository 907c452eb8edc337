#pragma once

#include "towns/pattern.hpp"

#include <optional>
#include <string>

namespace towns {

// Best known bounds for the maximum family size at a given ground size.
// upper == nullopt means no finite upper bound is tabulated.
struct ReferenceBound {
    long long lower = 0;
    std::optional<long long> upper;
    std::string note;

    bool exact() const { return upper.has_value() && lower == *upper; }
};

// Tabulated values for: every mod-2 pattern of arity 2, 3, or 4, and every
// arity-3 pattern over {Exact(0), NonZero} mod 3. Returns nullopt for
// anything else. The encoded formulas assume families large enough to
// populate all levels; for tiny n (values below ~arity) the true maximum
// under vacuous-level semantics can exceed them, so callers compare search
// results only at n >= 4. Throws std::overflow_error when an exponential
// cell exceeds the representable range (n > 125).
std::optional<ReferenceBound> reference_value(const Pattern& pattern, int n);

} // namespace towns
