#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace towns {

// A per-level requirement on intersection sizes: either a fixed residue
// r mod p, or "any nonzero residue" mod p.
class ResidueConstraint {
public:
    static ResidueConstraint exact(int residue);
    static ResidueConstraint nonzero();

    bool is_exact() const { return residue_.has_value(); }
    // Only valid for exact constraints.
    int residue() const { return *residue_; }

    bool satisfied_by(long long size, int modulus) const;

    // True when no residue class satisfies both constraints. Nonzero vs
    // exact(0) are disjoint; nonzero vs nonzero never are; exact vs exact
    // compare residues.
    bool disjoint_with(const ResidueConstraint& other, int modulus) const;

    // "0", "1", ... for exact; "*" for nonzero.
    std::string to_string() const;

    bool operator==(const ResidueConstraint& other) const = default;

private:
    std::optional<int> residue_;
};

// An intersection pattern: entries()[i] constrains the size of every
// (i+1)-wise intersection of distinct family members, modulo modulus().
// With modulus 2, nonzero is normalized to exact(1).
class Pattern {
public:
    Pattern(int modulus, std::vector<ResidueConstraint> entries);

    // One character per entry: a digit below the modulus, or '*'.
    static Pattern parse(std::string_view text, int modulus);

    int modulus() const { return modulus_; }
    int arity() const { return static_cast<int>(entries_.size()); }
    const std::vector<ResidueConstraint>& entries() const { return entries_; }
    const ResidueConstraint& entry(int level) const;  // level is 1-based

    bool all_exact() const;
    std::string to_string() const;

    bool operator==(const Pattern& other) const = default;

private:
    int modulus_;
    std::vector<ResidueConstraint> entries_;
};

} // namespace towns
