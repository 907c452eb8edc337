#include "towns/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace towns {

int ground_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("TOWNS_GROUND_CAP")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1 && v <= 1'000'000)
                return static_cast<int>(v);
            throw std::invalid_argument("TOWNS_GROUND_CAP must be an integer in [1, 1000000]");
        }
        return 1024;
    }();
    return cap;
}

GroundSet::GroundSet(int n_) : n(n_) {
    if (n < 1 || n > ground_cap())
        throw std::invalid_argument("ground size " + std::to_string(n) +
                                    " outside [1, " + std::to_string(ground_cap()) + "]");
}

namespace {

void check_widths(int n, const std::vector<SubsetMask>& members) {
    for (const auto& m : members) {
        if (m.ground_size() != n)
            throw std::invalid_argument("family member has ground size " +
                                        std::to_string(m.ground_size()) + ", expected " +
                                        std::to_string(n));
    }
}

bool all_distinct(const std::vector<SubsetMask>& members) {
    std::set<std::vector<int>> seen;
    for (const auto& m : members) {
        if (!seen.insert(m.elements()).second) return false;
    }
    return true;
}

} // namespace

SetFamily::SetFamily(int n, std::vector<SubsetMask> members, bool distinct)
    : n_(n), members_(std::move(members)), distinct_(distinct) {}

SetFamily::SetFamily(GroundSet ground, std::vector<SubsetMask> members)
    : SetFamily(ground.n, std::move(members), true) {
    check_widths(n_, members_);
    if (!all_distinct(members_))
        throw std::invalid_argument("family members must be distinct");
}

SetFamily SetFamily::multiset(GroundSet ground, std::vector<SubsetMask> members) {
    check_widths(ground.n, members);
    bool distinct = all_distinct(members);
    return SetFamily(ground.n, std::move(members), distinct);
}

SetFamily SetFamily::deduplicated() const {
    std::vector<SubsetMask> kept;
    std::set<std::vector<int>> seen;
    for (const auto& m : members_) {
        if (seen.insert(m.elements()).second) kept.push_back(m);
    }
    return SetFamily(n_, std::move(kept), true);
}

SetFamily with_ground(const SetFamily& family, int new_n) {
    GroundSet g(new_n);
    std::vector<SubsetMask> out;
    out.reserve(static_cast<size_t>(family.size()));
    for (const auto& m : family.members()) {
        SubsetMask moved(new_n);
        for (int e : m.elements()) {
            if (e > new_n)
                throw std::invalid_argument("member uses element " + std::to_string(e) +
                                            " beyond new ground size " + std::to_string(new_n));
            moved.set(e);
        }
        out.push_back(std::move(moved));
    }
    return family.members_distinct() ? SetFamily(g, std::move(out))
                                     : SetFamily::multiset(g, std::move(out));
}

} // namespace towns
