#pragma once

#include "towns/family.hpp"
#include "towns/pattern.hpp"

#include <optional>
#include <span>
#include <vector>

namespace towns {

// A witness that a family fails a pattern: the lexicographically first
// offending tuple, searching level 1 upward and index tuples in ascending
// order within a level. Member indices are 1-based positions in the family.
struct Violation {
    std::vector<int> indices;
    int level = 0;
    long long observed_size = 0;
    ResidueConstraint required = ResidueConstraint::exact(0);
};

// Size of the common intersection of the given masks. Throws on an empty
// span or mismatched ground sizes.
long long intersection_size(std::span<const SubsetMask> masks);

// Checks every i-wise intersection of distinct members for each level
// i <= min(arity, family size); levels beyond the family size are vacuous.
// Throws std::invalid_argument if the family has duplicate members.
bool verify_pattern(const SetFamily& family, const Pattern& pattern);

// Same check, reporting the first violation (see Violation) or nullopt.
std::optional<Violation> find_violation(const SetFamily& family, const Pattern& pattern);

} // namespace towns
