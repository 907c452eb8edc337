#include "towns/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace towns {

namespace {

long long pow2_cell(int exponent, int n) {
    if (n > 125)
        throw std::overflow_error("reference_value: 2^" + std::to_string(exponent) +
                                  " exceeds the representable range");
    return 1LL << exponent;
}

long long choose2(long long m) { return m * (m - 1) / 2; }

long long isqrt_floor(long long x) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Largest m with C(m,2) <= bound, any parity.
long long largest_m_pairs(long long bound) {
    long long m = isqrt_floor(2 * bound) + 2;
    while (m > 0 && choose2(m) > bound) --m;
    return m;
}

// Largest m >= floor_m of the given parity with predicate(m); 0 when none.
template <class Pred>
long long largest_with(long long start, int parity, long long floor_m, Pred pred) {
    long long m = start;
    if (((m % 2) + 2) % 2 != parity) --m;
    for (; m >= floor_m; m -= 2)
        if (pred(m)) return m;
    return 0;
}

// Sizes of the two explicit triple-level families, by ground residue mod 4.
long long c001_size(long long n) {
    switch (n % 4) {
        case 0: return n / 2;
        case 1: return (n - 1) / 2;
        case 2: return (n - 2) / 2;
        default: return (n + 1) / 2;
    }
}

long long c110_size(long long n) {
    switch (n % 4) {
        case 0: return n / 2;
        case 1: return (n - 1) / 2;
        case 2: return n / 2 + 1;
        default: return (n - 1) / 2 + 1;
    }
}

struct RowBound {
    long long lower = 0;
    std::optional<long long> upper;
};

// Widen the ceiling to the trivial subset count when the ground is too small
// for the counting arguments to engage every level.
ReferenceBound finish(RowBound row, int n, int arity, std::string note) {
    ReferenceBound out;
    out.lower = std::max(row.lower, 0LL);
    out.upper = row.upper;
    out.note = std::move(note);
    if (arity >= 3 && n < 4 && out.upper) {
        long long cap = 1LL << n;
        if (*out.upper < cap) {
            out.upper = cap;
            out.note = "tiny ground: counting ceiling replaced by the 2^n cap";
        }
    }
    return out;
}

ReferenceBound mod2_arity2(const std::string& key, int n) {
    RowBound r;
    if (key == "10") {
        r.lower = r.upper.emplace(n);
    } else if (key == "00") {
        r.lower = r.upper.emplace(pow2_cell(n / 2, n));
    } else if (key == "01") {
        r.lower = r.upper.emplace(n - (n % 2 == 0 ? 1 : 0));
    } else {  // 11
        r.lower = r.upper.emplace(pow2_cell((n - 1) / 2, n));
    }
    return finish(r, n, 2, "");
}

ReferenceBound mod2_arity3(const std::string& key, int n) {
    RowBound r;
    std::string note;
    if (key == "100") {
        r.lower = r.upper.emplace(n);
    } else if (key == "000") {
        r.lower = r.upper.emplace(pow2_cell(n / 2, n));
    } else if (key == "111") {
        r.lower = r.upper.emplace(pow2_cell((n - 1) / 2, n));
    } else if (key == "011") {
        r.upper = n - 1;
        r.lower = std::max<long long>(n - 1, 1);
    } else if (key == "101") {
        r.upper = n % 2 == 0 ? n : n - 1;
        r.lower = n % 2 == 0 ? (n >= 2 ? n : 1) : (n >= 3 ? n - 1 : 1);
    } else if (key == "010") {
        r.lower = r.upper.emplace(n % 2 == 0 ? n - 1 : n);
    } else if (key == "110") {
        r.upper = c110_size(n);
        r.lower = n >= 6 ? c110_size(n) : n >= 3 ? 2 : 1;
    } else {  // 001
        r.upper = c001_size(n) + (n % 4 == 2 ? 1 : 0);
        r.lower = std::max(n >= 7 ? c001_size(n) : 0, n >= 2 ? 2LL : 1LL);
        if (n % 4 == 2 && n >= 6) note = "bracket: the gap at this residue is open";
    }
    return finish(r, n, 3, std::move(note));
}

long long sqrt_row_upper(long long n) { return isqrt_floor(2 * n) + 1; }

ReferenceBound mod2_arity4(const std::string& key, int n) {
    RowBound r;
    std::string note;
    const long long scan_start = isqrt_floor(2LL * n) + 2;
    if (key == "0000") {
        r.lower = r.upper.emplace(pow2_cell(n / 2, n));
    } else if (key == "1111") {
        r.lower = r.upper.emplace(pow2_cell((n - 1) / 2, n));
    } else if (key == "1000") {
        r.lower = r.upper.emplace(n);
    } else if (key == "0111") {
        r.upper = n - 1;
        r.lower = std::max<long long>(n - 1, 1);
    } else if (key == "1010") {
        r.upper = n % 2 == 0 ? n : n - 1;
        r.lower = n % 2 == 0 ? (n >= 2 ? n : 1) : (n >= 3 ? n - 1 : 1);
    } else if (key == "0101") {
        r.upper = n - (n % 2 == 0 ? 1 : 0);
        r.lower = std::max<long long>(n % 2 == 1 ? n - 1 : n - 2, 1);
        note = "floor lifts the alternating row from one element below";
    } else if (key == "0010") {
        r.upper = c001_size(n) + (n % 4 == 2 ? 1 : 0);
        r.lower = std::max(n >= 7 ? c001_size(n) - 1 : 0, n >= 2 ? 2LL : 1LL);
        if (n >= 6) note = "bracket: prefix ceiling, sentinel-free floor";
    } else if (key == "0100") {
        r.upper = sqrt_row_upper(n);
        long long m =
            largest_with(scan_start, 1, 5, [&](long long v) { return choose2(v) <= n; });
        r.lower = std::max(m, n >= 3 ? 2LL : 1LL);
    } else if (key == "0011") {
        r.upper = sqrt_row_upper(n);
        long long m =
            largest_with(scan_start, 0, 4, [&](long long v) { return choose2(v) + 1 <= n; });
        r.lower = std::max(m, n >= 2 ? 2LL : 1LL);
    } else if (key == "0001") {
        r.upper = sqrt_row_upper(n);
        long long m =
            largest_with(scan_start, 1, 3, [&](long long v) { return v + choose2(v) <= n; });
        r.lower = std::max(m, n >= 2 ? 2LL : 1LL);
    } else if (key == "0110") {
        r.upper = sqrt_row_upper(n);
        long long m =
            largest_with(scan_start, 0, 4, [&](long long v) { return v + choose2(v) <= n; });
        r.lower = std::max(m, n >= 3 ? 2LL : 1LL);
    } else if (key == "1011") {
        r.upper = std::min<long long>(n % 2 == 0 ? n : n - 1, largest_m_pairs(n + 1));
        long long m =
            largest_with(scan_start, 1, 5, [&](long long v) { return choose2(v) <= n - 1; });
        r.lower = std::max(m, n >= 2 ? 2LL : 1LL);
        note = "bracket: alternating prefix against the pair-count rule";
    } else if (key == "1100") {
        r.upper = largest_m_pairs(n);
        long long m = largest_with(scan_start, 0, 4,
                                   [&](long long v) { return choose2(v) + 1 <= n - 1; });
        r.lower = std::max(m, n >= 3 ? 2LL : 1LL);
        note = "bracket: pair-count ceiling";
    } else if (key == "1001") {
        r.upper = n;
        long long m = largest_with(scan_start, 0, 4,
                                   [&](long long v) { return v + choose2(v) <= n - 1; });
        r.lower = std::max(m, n >= 2 ? 2LL : 1LL);
        note = "bracket: leading-one prefix ceiling";
    } else if (key == "1101") {
        r.upper = c110_size(n);
        r.lower = std::max(n >= 8 ? c001_size(n - 1) - 1 : 0, n >= 3 ? 2LL : 1LL);
        note = "bracket: odd-triple prefix ceiling, lifted sentinel-free floor";
    } else {  // 1110
        r.upper = n + 2;
        long long m = largest_with(scan_start, 1, 3,
                                   [&](long long v) { return v + choose2(v) <= n - 1; });
        r.lower = std::max(m, n >= 3 ? 2LL : 1LL);
        note = "bracket: two-step cut ceiling";
    }
    return finish(r, n, 4, std::move(note));
}

ReferenceBound mod3_arity3(const std::string& key, int n) {
    RowBound r;
    std::string note;
    if (key == "*00") {
        r.lower = r.upper.emplace(n);
    } else if (key == "0**") {
        r.upper = 1 + n + choose2(n);
        r.lower = std::max(n >= 3 ? choose2(n - 1) : 0, 1LL);
        note = "bracket: one-point 3-sets against quadratic counting";
    } else if (key == "*0*") {
        long long value = n - (n % 3 == 0 ? 1 : n % 3 == 1 ? 2 : 0);
        r.upper = n % 3 == 2 ? value : n;
        r.lower = std::max(n >= 2 ? value : 0, 1LL);
        if (n % 3 != 2) note = "bracket at this residue class";
    } else if (key == "0*0") {
        r.upper = n;
        long long k = (n / 2) - (n / 2) % 3;
        if (k < 3) k = 0;
        r.lower = std::max({k, n >= 4 ? 2LL : 0LL, 1LL});
        note = "bracket: matched complements against the linear ceiling";
    } else if (key == "**0") {
        long long value = n - (n % 3 == 0 ? 0 : n % 3 == 1 ? 1 : 2);
        r.lower = std::max({value, n >= 2 ? 2LL : 0LL, 1LL});
        r.upper = std::max<long long>(value, r.lower);
    } else if (key == "00*") {
        r.upper = 2 + n + choose2(n);
        long long k = (n + 3) / 9;
        r.lower = std::max(k >= 1 ? 3 * k - 1 : 0, n >= 3 ? 2LL : 1LL);
        note = "bracket: matching blocks against quadratic counting";
    } else if (key == "000") {
        r.lower = pow2_cell(n / 3, n);
        note = "no finite ceiling tabulated";
    } else {  // ***
        r.lower = pow2_cell((n - 1) / 3, n);
        note = "no finite ceiling tabulated";
    }
    return finish(r, n, 3, std::move(note));
}

} // namespace

std::optional<ReferenceBound> reference_value(const Pattern& pattern, int n) {
    if (n < 1) throw std::invalid_argument("reference_value: ground size must be positive");
    const std::string key = pattern.to_string();
    if (pattern.modulus() == 2) {
        if (pattern.arity() == 2) return mod2_arity2(key, n);
        if (pattern.arity() == 3) return mod2_arity3(key, n);
        if (pattern.arity() == 4) return mod2_arity4(key, n);
        return std::nullopt;
    }
    if (pattern.modulus() == 3 && pattern.arity() == 3) {
        for (const auto& e : pattern.entries())
            if (e.is_exact() && e.residue() != 0) return std::nullopt;
        return mod3_arity3(key, n);
    }
    return std::nullopt;
}

} // namespace towns
