#include "towns/pattern.hpp"

#include <stdexcept>

namespace towns {

ResidueConstraint ResidueConstraint::exact(int residue) {
    if (residue < 0) throw std::invalid_argument("residue must be nonnegative");
    ResidueConstraint c;
    c.residue_ = residue;
    return c;
}

ResidueConstraint ResidueConstraint::nonzero() { return ResidueConstraint{}; }

bool ResidueConstraint::satisfied_by(long long size, int modulus) const {
    long long r = size % modulus;
    if (residue_) return r == *residue_;
    return r != 0;
}

bool ResidueConstraint::disjoint_with(const ResidueConstraint& other, int modulus) const {
    if (residue_ && other.residue_) return *residue_ != *other.residue_;
    // One side (at least) allows every nonzero residue, of which there are
    // modulus-1 >= 1. Overlap fails only against exact(0).
    if (residue_) return *residue_ == 0;
    if (other.residue_) return *other.residue_ == 0;
    return false;
}

std::string ResidueConstraint::to_string() const {
    return residue_ ? std::to_string(*residue_) : std::string("*");
}

Pattern::Pattern(int modulus, std::vector<ResidueConstraint> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    if (entries_.empty()) throw std::invalid_argument("pattern needs at least one entry");
    for (auto& e : entries_) {
        if (e.is_exact() && e.residue() >= modulus)
            throw std::invalid_argument("pattern residue " + std::to_string(e.residue()) +
                                        " not below modulus " + std::to_string(modulus));
        // Mod 2 the only nonzero residue is 1, so the two forms coincide;
        // keep the exact form as canonical.
        if (!e.is_exact() && modulus == 2) e = ResidueConstraint::exact(1);
    }
}

Pattern Pattern::parse(std::string_view text, int modulus) {
    if (text.empty()) throw std::invalid_argument("empty pattern");
    std::vector<ResidueConstraint> entries;
    entries.reserve(text.size());
    for (char c : text) {
        if (c == '*') {
            entries.push_back(ResidueConstraint::nonzero());
        } else if (c >= '0' && c <= '9') {
            entries.push_back(ResidueConstraint::exact(c - '0'));
        } else {
            throw std::invalid_argument(std::string("bad pattern character '") + c + "'");
        }
    }
    return Pattern(modulus, std::move(entries));
}

const ResidueConstraint& Pattern::entry(int level) const {
    if (level < 1 || level > arity())
        throw std::out_of_range("pattern level " + std::to_string(level) +
                                " outside [1, " + std::to_string(arity()) + "]");
    return entries_[static_cast<size_t>(level - 1)];
}

bool Pattern::all_exact() const {
    for (const auto& e : entries_)
        if (!e.is_exact()) return false;
    return true;
}

std::string Pattern::to_string() const {
    std::string out;
    for (const auto& e : entries_) out += e.to_string();
    return out;
}

} // namespace towns
