#pragma once

#include "towns/mask.hpp"

#include <vector>

namespace towns {

// Maximum admissible ground-set size. Defaults to 1024; override with the
// TOWNS_GROUND_CAP environment variable (read once, cached).
int ground_cap();

// A ground set {1, ..., n}. Validates 1 <= n <= ground_cap().
struct GroundSet {
    int n;
    explicit GroundSet(int n_);
    int size() const { return n; }
};

// An ordered family of subsets of a common ground set. Members are distinct
// by default; the multiset() factory admits duplicates and records the fact.
class SetFamily {
public:
    SetFamily(GroundSet ground, std::vector<SubsetMask> members);
    static SetFamily multiset(GroundSet ground, std::vector<SubsetMask> members);

    int ground_size() const { return n_; }
    GroundSet ground() const { return GroundSet(n_); }
    long long size() const { return static_cast<long long>(members_.size()); }
    const SubsetMask& member(long long i) const { return members_[static_cast<size_t>(i)]; }
    const std::vector<SubsetMask>& members() const { return members_; }

    // True when no two members are equal. Families built through the main
    // constructor always hold this; multiset() output may not.
    bool members_distinct() const { return distinct_; }

    // Copy with duplicate members removed (first occurrence kept).
    SetFamily deduplicated() const;

private:
    SetFamily(int n, std::vector<SubsetMask> members, bool distinct);
    int n_;
    std::vector<SubsetMask> members_;
    bool distinct_;
};

// Re-hosts the family on {1, ..., new_n}. Every member must fit: growing the
// ground adds isolated elements; shrinking requires all members to avoid the
// removed elements.
SetFamily with_ground(const SetFamily& family, int new_n);

} // namespace towns
