#pragma once

#include <cstdint>
#include <vector>

namespace towns {

// A subset of a ground set {1, ..., n}, stored as a packed bitset.
// Element i corresponds to bit i-1. Width is fixed at construction;
// all set operations require equal widths.
class SubsetMask {
public:
    SubsetMask() = default;
    explicit SubsetMask(int n);

    static SubsetMask from_elements(int n, const std::vector<int>& elems);

    int ground_size() const { return n_; }
    bool test(int element) const;
    void set(int element);
    void reset(int element);

    long long count() const;
    bool empty() const;
    std::vector<int> elements() const;

    SubsetMask& intersect_with(const SubsetMask& other);
    SubsetMask& unite_with(const SubsetMask& other);
    SubsetMask& symmetric_difference_with(const SubsetMask& other);
    SubsetMask complement() const;

    // Popcount of (*this & other) without materializing the intersection.
    long long intersect_count(const SubsetMask& other) const;

    bool operator==(const SubsetMask& other) const;
    // Orders masks by their value as an n-bit integer (element 1 = least
    // significant bit), so singleton {1} < {2} < {1,2} < {3} < ...
    bool operator<(const SubsetMask& other) const;

    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }
    int word_count() const { return static_cast<int>(words_.size()); }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;

    void check_element(int element) const;
    void check_width(const SubsetMask& other) const;
};

} // namespace towns
