#include "towns/pattern_ops.hpp"

#include <stdexcept>
#include <vector>

namespace towns {

namespace {

// Residue of an exact entry; nonzero entries never appear mod 2.
int residue_at(const Pattern& p, int level) {
    auto e = p.entry(level);
    if (!e.is_exact()) throw std::logic_error("mod-2 pattern with a nonzero entry");
    return e.residue();
}

} // namespace

Pattern pattern_dual(const Pattern& pattern) {
    if (pattern.modulus() != 2)
        throw std::invalid_argument("pattern_dual: unsupported modulus " +
                                    std::to_string(pattern.modulus()));
    std::vector<ResidueConstraint> flipped;
    flipped.reserve(pattern.arity());
    for (int i = 1; i <= pattern.arity(); ++i)
        flipped.push_back(ResidueConstraint::exact(1 - residue_at(pattern, i)));
    return Pattern(2, std::move(flipped));
}

Pattern pattern_sum(const Pattern& a, const Pattern& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("pattern_sum: modulus mismatch");
    if (a.arity() != b.arity())
        throw std::invalid_argument("pattern_sum: arity mismatch");
    if (!a.all_exact() || !b.all_exact())
        throw std::invalid_argument("pattern_sum: nonzero entries have no sum");
    int p = a.modulus();
    std::vector<ResidueConstraint> sum;
    sum.reserve(a.arity());
    for (int i = 1; i <= a.arity(); ++i)
        sum.push_back(
            ResidueConstraint::exact((a.entry(i).residue() + b.entry(i).residue()) % p));
    return Pattern(p, std::move(sum));
}

namespace {

bool is_all_zero(const std::vector<int>& r) {
    for (int x : r)
        if (x != 0) return false;
    return true;
}

bool is_leading_one(const std::vector<int>& r) {
    if (r[0] != 1) return false;
    for (size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0) return false;
    return true;
}

// 1,0,1,0,...
bool is_alternating(const std::vector<int>& r) {
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] != (i % 2 == 0 ? 1 : 0)) return false;
    return true;
}

// 0,0,1,0,1,0,...
bool is_delayed_alternating(const std::vector<int>& r) {
    if (r.size() < 3 || r[0] != 0 || r[1] != 0) return false;
    for (size_t i = 2; i < r.size(); ++i)
        if (r[i] != (i % 2 == 0 ? 1 : 0)) return false;
    return true;
}

bool in_linear_list(const std::vector<int>& r) {
    return is_all_zero(r) || is_leading_one(r) || is_alternating(r) ||
           is_delayed_alternating(r);
}

} // namespace

PatternClass classify_pattern(const Pattern& pattern) {
    if (pattern.modulus() != 2)
        throw std::invalid_argument("classify_pattern: unsupported modulus " +
                                    std::to_string(pattern.modulus()));
    if (pattern.arity() < 3)
        throw std::invalid_argument("classify_pattern: arity below 3 is not classified");

    std::vector<int> r, flipped;
    for (int i = 1; i <= pattern.arity(); ++i) {
        int x = residue_at(pattern, i);
        r.push_back(x);
        flipped.push_back(1 - x);
    }
    return in_linear_list(r) || in_linear_list(flipped) ? PatternClass::LinearType
                                                        : PatternClass::SqrtBounded;
}

} // namespace towns
