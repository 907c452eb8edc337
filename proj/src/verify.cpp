#include "towns/verify.hpp"

#include <bit>
#include <stdexcept>

namespace towns {

long long intersection_size(std::span<const SubsetMask> masks) {
    if (masks.empty())
        throw std::invalid_argument("intersection of zero masks is undefined");
    SubsetMask acc = masks[0];
    for (size_t i = 1; i < masks.size(); ++i) acc.intersect_with(masks[i]);
    return acc.count();
}

namespace {

struct LevelScan {
    const std::vector<SubsetMask>& members;
    int words;
    int level;                     // tuple size being checked
    const ResidueConstraint& req;
    int modulus;
    bool zero_ok;                  // residue 0 satisfies req
    std::vector<std::uint64_t> partials;  // depth-major scratch, level*words
    std::vector<int> chosen;

    LevelScan(const std::vector<SubsetMask>& mem, int level_, const ResidueConstraint& req_,
              int modulus_)
        : members(mem),
          words(mem.empty() ? 0 : mem[0].word_count()),
          level(level_),
          req(req_),
          modulus(modulus_),
          zero_ok(req_.satisfied_by(0, modulus_)),
          partials(static_cast<size_t>(level_) * static_cast<size_t>(words)),
          chosen(static_cast<size_t>(level_)) {}

    std::uint64_t* slot(int depth) { return partials.data() + static_cast<size_t>(depth) * words; }

    // Fills slot(depth) with slot(depth-1) & members[idx] (or the member
    // itself at depth 0) and returns its popcount.
    long long extend(int depth, int idx) {
        const std::uint64_t* src = members[static_cast<size_t>(idx)].data();
        std::uint64_t* dst = slot(depth);
        long long cnt = 0;
        if (depth == 0) {
            for (int w = 0; w < words; ++w) {
                dst[w] = src[w];
                cnt += std::popcount(dst[w]);
            }
        } else {
            const std::uint64_t* prev = slot(depth - 1);
            for (int w = 0; w < words; ++w) {
                dst[w] = prev[w] & src[w];
                cnt += std::popcount(dst[w]);
            }
        }
        return cnt;
    }

    std::optional<Violation> violation_at(int depth, long long size) {
        Violation v;
        v.indices.reserve(static_cast<size_t>(level));
        for (int d = 0; d <= depth; ++d) v.indices.push_back(chosen[static_cast<size_t>(d)] + 1);
        // Pad with the smallest indices past the last chosen one; the loop
        // bounds in scan() guarantee they exist.
        for (int extra = 1; extra <= level - 1 - depth; ++extra)
            v.indices.push_back(chosen[static_cast<size_t>(depth)] + extra + 1);
        v.level = level;
        v.observed_size = size;
        v.required = req;
        return v;
    }

    std::optional<Violation> scan() { return descend(0, 0); }

    std::optional<Violation> descend(int depth, int first) {
        const int m = static_cast<int>(members.size());
        for (int idx = first; idx <= m - (level - depth); ++idx) {
            chosen[static_cast<size_t>(depth)] = idx;
            long long cnt = extend(depth, idx);
            if (depth == level - 1) {
                if (!req.satisfied_by(cnt, modulus)) return violation_at(depth, cnt);
                continue;
            }
            if (cnt == 0) {
                // Every completion of this tuple intersects to the empty set.
                if (zero_ok) continue;
                return violation_at(depth, 0);
            }
            if (auto v = descend(depth + 1, idx + 1)) return v;
        }
        return std::nullopt;
    }
};

std::optional<Violation> scan_family(const SetFamily& family, const Pattern& pattern) {
    if (!family.members_distinct())
        throw std::invalid_argument("pattern verification requires distinct members");
    const int top = static_cast<int>(std::min<long long>(pattern.arity(), family.size()));
    for (int level = 1; level <= top; ++level) {
        LevelScan scan(family.members(), level, pattern.entry(level), pattern.modulus());
        if (auto v = scan.scan()) return v;
    }
    return std::nullopt;
}

} // namespace

bool verify_pattern(const SetFamily& family, const Pattern& pattern) {
    return !scan_family(family, pattern).has_value();
}

std::optional<Violation> find_violation(const SetFamily& family, const Pattern& pattern) {
    return scan_family(family, pattern);
}

} // namespace towns
