#include "towns/gf2.hpp"

#include <stdexcept>

namespace towns {

Gf2Matrix characteristic_matrix(const SetFamily& family) {
    Gf2Matrix m;
    m.cols = family.ground().size();
    m.rows = family.members();
    return m;
}

namespace {

// Index of the lowest set element, or 0 for the zero vector.
int pivot_of(const SubsetMask& v) {
    auto els = v.elements();
    return els.empty() ? 0 : els.front();
}

// Reduced basis of the row span, keyed by pivot element.
std::vector<SubsetMask> reduce(const Gf2Matrix& m) {
    std::vector<SubsetMask> basis;  // invariant: strictly increasing pivots
    for (const auto& row : m.rows) {
        SubsetMask v = row;
        for (const auto& b : basis) {
            int p = pivot_of(b);
            if (v.test(p)) v.symmetric_difference_with(b);
        }
        if (v.empty()) continue;
        int p = pivot_of(v);
        auto it = basis.begin();
        while (it != basis.end() && pivot_of(*it) < p) ++it;
        basis.insert(it, v);
    }
    return basis;
}

} // namespace

int rank(const Gf2Matrix& m) { return static_cast<int>(reduce(m).size()); }

std::pair<int, int> span_dims(const Gf2Matrix& m) {
    int r = rank(m);
    return {r, m.cols - r};
}

IsotropicCount isotropic_count(const Gf2Matrix& m) {
    auto basis = reduce(m);
    int r = static_cast<int>(basis.size());
    if (r > 20)
        throw std::invalid_argument("isotropic_count: rank " + std::to_string(r) +
                                    " exceeds the enumeration cap of 20");
    IsotropicCount out;
    out.span_size = 1LL << r;
    SubsetMask acc(m.cols);
    long long even = 0;
    // Gray-code walk: flip one basis vector per step.
    if (acc.count() % 2 == 0) ++even;
    for (long long g = 1; g < out.span_size; ++g) {
        int flip = 0;
        while (!((g >> flip) & 1)) ++flip;
        acc.symmetric_difference_with(basis[static_cast<size_t>(flip)]);
        if (acc.count() % 2 == 0) ++even;
    }
    out.isotropic = even;
    return out;
}

bool check_claim_a2(const SetFamily& family) {
    int n = family.ground().size();
    int dim = rank(characteristic_matrix(family));
    return dim <= (n + 1) / 2;
}

} // namespace towns
