#pragma once

#include "towns/family.hpp"

#include <utility>

namespace towns {

// Rows are GF(2) vectors of a fixed length (characteristic vectors of
// family members when built via characteristic_matrix).
struct Gf2Matrix {
    int cols = 0;
    std::vector<SubsetMask> rows;
};

Gf2Matrix characteristic_matrix(const SetFamily& family);

// GF(2) row rank by elimination (first-set-bit pivots).
int rank(const Gf2Matrix& m);

// (dim of the row span W, dim of its orthogonal complement) = (rank, n - rank).
std::pair<int, int> span_dims(const Gf2Matrix& m);

struct IsotropicCount {
    long long span_size = 0;  // |W| = 2^rank
    long long isotropic = 0;  // count of w in W with w.w = 0, i.e. even weight
};

// Enumerates the row span. Requires rank <= 20. When some span vector has
// odd weight the count is exactly half the span.
IsotropicCount isotropic_count(const Gf2Matrix& m);

// For families whose members have pairwise and self intersections all odd:
// the span dimension is at most floor((n+1)/2) (at most n/2 for even n).
bool check_claim_a2(const SetFamily& family);

} // namespace towns
