#include "towns/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace towns {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

// New ground {1..|keep|} with relabel[i-1] = the original element behind i.
struct Relabeling {
    std::vector<int> originals;
    std::vector<int> new_of;  // indexed by original element, 0 = dropped

    explicit Relabeling(const SubsetMask& keep)
        : originals(keep.elements()), new_of(static_cast<size_t>(keep.ground_size()) + 1, 0) {
        for (size_t i = 0; i < originals.size(); ++i)
            new_of[static_cast<size_t>(originals[i])] = static_cast<int>(i) + 1;
    }

    SubsetMask apply(const SubsetMask& member) const {
        SubsetMask out(static_cast<int>(originals.size()));
        for (int e : member.elements())
            if (new_of[static_cast<size_t>(e)]) out.set(new_of[static_cast<size_t>(e)]);
        return out;
    }
};

} // namespace

TraceResult trace(const SetFamily& family, const Pattern& pattern,
                  std::span<const int> chosen) {
    const long long t = static_cast<long long>(chosen.size());
    std::set<int> seen;
    for (int idx : chosen) {
        if (idx < 1 || idx > family.size())
            fail("trace: chosen index " + std::to_string(idx) + " out of range");
        if (!seen.insert(idx).second)
            fail("trace: chosen index " + std::to_string(idx) + " repeated");
    }
    if (t + 2 > pattern.arity())
        fail("trace: need t + 2 <= arity, got t = " + std::to_string(t) + " with arity " +
             std::to_string(pattern.arity()));
    if (t >= family.size()) fail("trace: at least one member must remain");
    if (!pattern.entry(static_cast<int>(t) + 1)
             .disjoint_with(pattern.entry(static_cast<int>(t) + 2), pattern.modulus()))
        fail("trace: entries " + std::to_string(t + 1) + " and " + std::to_string(t + 2) +
             " admit a common residue");

    SubsetMask cut = SubsetMask(family.ground_size()).complement();
    for (int idx : chosen) cut.intersect_with(family.member(idx - 1));
    if (cut.empty()) fail("trace: chosen members have empty intersection");

    Relabeling relabel(cut);
    std::vector<SubsetMask> members;
    std::set<std::vector<int>> distinct;
    for (long long i = 0; i < family.size(); ++i) {
        if (seen.count(static_cast<int>(i) + 1)) continue;
        SubsetMask piece = family.member(i);
        piece.intersect_with(cut);
        SubsetMask moved = relabel.apply(piece);
        if (!distinct.insert(moved.elements()).second)
            fail("trace: cut members collapsed; the input cannot satisfy the pattern");
        members.push_back(std::move(moved));
    }

    std::vector<ResidueConstraint> rest(pattern.entries().begin() + t, pattern.entries().end());
    return TraceResult{SetFamily(GroundSet(static_cast<int>(relabel.originals.size())),
                                 std::move(members)),
                       Pattern(pattern.modulus(), std::move(rest)),
                       std::move(relabel.originals)};
}

SetFamily dualize(const SetFamily& family) {
    GroundSet wider(family.ground_size() + 1);
    std::vector<SubsetMask> members;
    members.reserve(static_cast<size_t>(family.size()));
    for (const auto& m : family.members()) {
        SubsetMask grown(wider.n);
        for (int e : m.elements()) grown.set(e);
        grown.set(wider.n);
        members.push_back(std::move(grown));
    }
    return SetFamily(wider, std::move(members));
}

SetFamily partition_sum(const SetFamily& a, const SetFamily& b, const Pattern& alpha,
                        const Pattern& beta) {
    if (alpha.arity() != beta.arity()) fail("partition_sum: patterns must share arity");
    if (alpha.modulus() != beta.modulus()) fail("partition_sum: patterns must share modulus");
    if (!alpha.all_exact() || !beta.all_exact())
        fail("partition_sum: exact residues required in both patterns");
    GroundSet joint(a.ground_size() + b.ground_size());
    long long count = std::min(a.size(), b.size());
    std::vector<SubsetMask> members;
    members.reserve(static_cast<size_t>(count));
    for (long long i = 0; i < count; ++i) {
        SubsetMask m(joint.n);
        for (int e : a.member(i).elements()) m.set(e);
        for (int e : b.member(i).elements()) m.set(a.ground_size() + e);
        members.push_back(std::move(m));
    }
    return SetFamily(joint, std::move(members));
}

RestrictResult restrict_outside(const SetFamily& family, int pivot) {
    if (pivot < 1 || pivot > family.size())
        fail("restrict_outside: pivot index " + std::to_string(pivot) + " out of range");
    SubsetMask outside = family.member(pivot - 1).complement();
    if (outside.empty()) fail("restrict_outside: pivot member covers the whole ground");

    Relabeling relabel(outside);
    std::vector<SubsetMask> members;
    for (long long i = 0; i < family.size(); ++i) {
        if (i == pivot - 1) continue;
        SubsetMask piece = family.member(i);
        piece.intersect_with(outside);
        members.push_back(relabel.apply(piece));
    }
    return RestrictResult{
        SetFamily::multiset(GroundSet(static_cast<int>(relabel.originals.size())),
                            std::move(members)),
        std::move(relabel.originals)};
}

SetFamily complement_family(const SetFamily& family) {
    std::vector<SubsetMask> members;
    members.reserve(static_cast<size_t>(family.size()));
    for (const auto& m : family.members()) members.push_back(m.complement());
    return family.members_distinct()
               ? SetFamily(family.ground(), std::move(members))
               : SetFamily::multiset(family.ground(), std::move(members));
}

} // namespace towns
