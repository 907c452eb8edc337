#include "towns/search.hpp"

#include "towns/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace towns {

namespace {

long long choose2(long long m) { return m * (m - 1) / 2; }

long long isqrt_floor(long long v) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Largest m with C(m,2) <= bound.
long long largest_m_pairs(long long bound) {
    long long m = isqrt_floor(2 * bound) + 1;
    while (m > 0 && choose2(m) > bound) --m;
    return m;
}

long long c110_size(long long n) {
    switch (n % 4) {
        case 0: return n / 2;
        case 1: return (n - 1) / 2;
        case 2: return n / 2 + 1;
        default: return (n - 1) / 2 + 1;
    }
}

long long c001_size(long long n) {
    switch (n % 4) {
        case 0: return n / 2;
        case 1: return (n - 1) / 2;
        case 2: return (n - 2) / 2;
        default: return (n + 1) / 2;
    }
}

// Power-of-two cells overflow quickly; past n = 125 report "no bound" and
// let the caller fall back to other rules.
std::optional<long long> pow2_cell(int exponent, int n) {
    if (n > 125) return std::nullopt;
    return 1ll << exponent;
}

// Closed-form bound for one tabulated row, or nullopt.
std::optional<long long> direct_bound(const Pattern& p, int n) {
    const std::string row = p.to_string();
    const int k = p.arity();
    if (p.modulus() == 2) {
        if (k == 2) {
            if (row == "10") return n;
            if (row == "00") return pow2_cell(n / 2, n);
            if (row == "01") return n - (n % 2 == 0);
            if (row == "11") return pow2_cell((n - 1) / 2, n);
        }
        if (k == 3) {
            if (row == "100") return n;
            if (row == "000") return pow2_cell(n / 2, n);
            if (row == "111") return pow2_cell((n - 1) / 2, n);
            if (row == "011") return n - 1;
            if (row == "101") return n % 2 == 0 ? n : n - 1;
            if (row == "010") return n % 2 == 0 ? n - 1 : n;
            if (row == "110") return c110_size(n);
            if (row == "001") {
                switch (n % 4) {
                    case 0: return n / 2;
                    case 1: return (n - 1) / 2;
                    case 2: return n / 2;
                    default: return (n + 1) / 2;
                }
            }
        }
        if (k == 4) {
            if (row == "1000") return n;
            if (row == "0000") return pow2_cell(n / 2, n);
            if (row == "1111") return pow2_cell((n - 1) / 2, n);
            if (row == "0111") return n - 1;
            if (row == "1010") return n % 2 == 0 ? n : n - 1;
            if (row == "0101") return n % 2 == 0 ? n - 1 : n;
            if (row == "0010") return c001_size(n) + (n % 4 == 2);
            if (row == "0100" || row == "0011" || row == "0001" || row == "0110")
                return isqrt_floor(2ll * n) + 1;
            if (row == "1100") return largest_m_pairs(n);
            if (row == "1011")
                return std::min<long long>(n % 2 == 0 ? n : n - 1, largest_m_pairs(n + 1));
            if (row == "1001") return n;
            if (row == "1101") return c110_size(n);
            if (row == "1110") return n + 2;
        }
        return std::nullopt;
    }
    if (p.modulus() == 3) {
        if (k == 2) {
            if (row == "*0") return n;
            if (row == "0*") return 1 + n + choose2(n);
        }
        if (k == 3) {
            if (row == "*00") return n;
            if (row == "0**") return 1 + n + choose2(n);
            if (row == "*0*") return n;
            if (row == "00*") return 2 + n + choose2(n);
            if (row == "**0") {
                long long value = n - (n % 3 == 0 ? 0 : n % 3 == 1 ? 1 : 2);
                return std::max(value, n >= 2 ? 2ll : 1ll);
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<long long> assemble_bound(const Pattern& p, int n);

// Counting bound for arity-4 rows whose entries 2..4 force pairwise
// intersections to be pairwise distinct sets.
std::optional<long long> pair_count_bound(const Pattern& p, int n) {
    if (p.modulus() != 2 || p.arity() != 4) return std::nullopt;
    const std::string tail = p.to_string().substr(1);
    if (tail == "100") return largest_m_pairs(n);
    if (tail == "011") return largest_m_pairs(static_cast<long long>(n) + 1);
    return std::nullopt;
}

std::optional<long long> assemble_bound_uncached(const Pattern& p, int n) {
    std::vector<long long> candidates;
    auto add = [&candidates](std::optional<long long> v) {
        if (v) candidates.push_back(*v);
    };

    add(direct_bound(p, n));
    add(pair_count_bound(p, n));

    const int k = p.arity();
    if (k >= 3) {
        std::vector<ResidueConstraint> head(p.entries().begin(), p.entries().end() - 1);
        add(assemble_bound(Pattern(p.modulus(), std::move(head)), n));
    }
    for (int t = 1; t <= k - 2; ++t) {
        if (!p.entry(t + 1).disjoint_with(p.entry(t + 2), p.modulus())) continue;
        std::vector<ResidueConstraint> rest(p.entries().begin() + t, p.entries().end());
        auto suffix = assemble_bound(Pattern(p.modulus(), std::move(rest)), n);
        if (suffix) candidates.push_back(t + *suffix);
    }

    if (candidates.empty()) return std::nullopt;
    long long best = *std::min_element(candidates.begin(), candidates.end());
    return std::max<long long>(best, k);
}

std::optional<long long> assemble_bound(const Pattern& p, int n) {
    static std::mutex lock;
    static std::unordered_map<std::string, std::optional<long long>> memo;
    const std::string key =
        p.to_string() + "@" + std::to_string(p.modulus()) + "#" + std::to_string(n);
    {
        std::scoped_lock guard(lock);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    auto value = assemble_bound_uncached(p, n);
    std::scoped_lock guard(lock);
    memo.emplace(key, value);
    return value;
}

// Shared state of one branch-and-bound run.
struct BnbState {
    const std::vector<SubsetMask>* universe = nullptr;
    const Pattern* pattern = nullptr;
    std::optional<long long> cutoff;  // stop once best reaches this (proved bound)
    std::optional<std::chrono::steady_clock::time_point> deadline;

    std::mutex lock;
    std::atomic<long long> best{0};
    std::vector<SubsetMask> witness;
    std::atomic<bool> stop{false};
    std::atomic<bool> expired{false};
    std::atomic<unsigned long long> nodes{0};

    bool out_of_time() {
        if (!deadline) return false;
        if (std::chrono::steady_clock::now() < *deadline) return false;
        expired.store(true);
        stop.store(true);
        return true;
    }
};

// True when every entry at levels [from, arity] accepts intersection size 0,
// so a branch whose running intersection is already empty cannot fail there.
bool zero_tail(const Pattern& p, int from) {
    for (int level = from; level <= p.arity(); ++level)
        if (!p.entry(level).satisfied_by(0, p.modulus())) return false;
    return true;
}

// Checks every tuple {candidate} ∪ S with S a nonempty subset of stack
// members at positions >= start, given inter = candidate ∩ (members chosen
// so far) with depth members already included.
bool tuples_ok(const Pattern& p, const std::vector<SubsetMask>& stack, size_t start, int depth,
               const SubsetMask& inter) {
    for (size_t j = start; j < stack.size(); ++j) {
        SubsetMask next = inter;
        next.intersect_with(stack[j]);
        int level = depth + 2;  // candidate + depth members + this one
        if (level <= p.arity() && !p.entry(level).satisfied_by(next.count(), p.modulus()))
            return false;
        if (level < p.arity() && j + 1 < stack.size()) {
            if (next.empty() && zero_tail(p, level + 1)) continue;
            if (!tuples_ok(p, stack, j + 1, depth + 1, next)) return false;
        }
    }
    return true;
}

// Tuples that involve both of the two newest members can be checked alone
// when everything not involving `fresh` was already validated.
bool extension_ok_incremental(const Pattern& p, const std::vector<SubsetMask>& old_stack,
                              const SubsetMask& fresh, const SubsetMask& candidate) {
    SubsetMask both = candidate;
    both.intersect_with(fresh);
    if (p.arity() >= 2 && !p.entry(2).satisfied_by(both.count(), p.modulus())) return false;
    if (p.arity() < 3 || old_stack.empty()) return true;
    if (both.empty() && zero_tail(p, 3)) return true;
    return tuples_ok(p, old_stack, 0, 1, both);
}

// Depth-first expansion in lexicographic candidate order. live holds the
// universe indices still compatible with the stack, ascending.
void expand(BnbState& st, std::vector<SubsetMask>& stack, const std::vector<int>& live,
            size_t from, int stride) {
    if (st.stop.load(std::memory_order_relaxed)) return;
    st.nodes.fetch_add(1, std::memory_order_relaxed);
    if (st.out_of_time()) return;

    const auto& universe = *st.universe;
    for (size_t pos = from; pos < live.size(); pos += (stack.empty() ? stride : 1)) {
        if (st.stop.load(std::memory_order_relaxed)) return;
        if (static_cast<long long>(stack.size()) + static_cast<long long>(live.size() - pos) <=
            st.best.load(std::memory_order_relaxed))
            return;
        const SubsetMask& chosen = universe[static_cast<size_t>(live[pos])];

        stack.push_back(chosen);
        bool improved = false;
        {
            std::scoped_lock guard(st.lock);
            if (static_cast<long long>(stack.size()) > st.best.load()) {
                st.best.store(static_cast<long long>(stack.size()));
                st.witness = stack;
                improved = true;
            }
        }
        if (improved && st.cutoff && static_cast<long long>(stack.size()) >= *st.cutoff) {
            st.stop.store(true);
            stack.pop_back();
            return;
        }

        std::vector<int> next_live;
        next_live.reserve(live.size() - pos);
        std::vector<SubsetMask> old_stack(stack.begin(), stack.end() - 1);
        for (size_t q = pos + 1; q < live.size(); ++q) {
            const SubsetMask& cand = universe[static_cast<size_t>(live[q])];
            if (extension_ok_incremental(*st.pattern, old_stack, chosen, cand))
                next_live.push_back(live[q]);
        }
        expand(st, stack, next_live, 0, 1);
        stack.pop_back();
        if (st.expired.load(std::memory_order_relaxed)) return;
    }
}

SearchResult run_bnb(const Pattern& pattern, const std::vector<SubsetMask>& universe,
                     const SearchConfig& config, std::optional<long long> cutoff) {
    auto start = std::chrono::steady_clock::now();
    BnbState st;
    st.universe = &universe;
    st.pattern = &pattern;
    st.cutoff = cutoff;
    if (config.time_limit_seconds)
        st.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(*config.time_limit_seconds));

    std::vector<int> root(universe.size());
    for (size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);

    int workers = std::max(1, config.worker_count);
    if (workers == 1 || root.size() < 2) {
        std::vector<SubsetMask> stack;
        expand(st, stack, root, 0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&st, &root, w, workers] {
                std::vector<SubsetMask> stack;
                expand(st, stack, root, static_cast<size_t>(w), workers);
            });
        for (auto& th : pool) th.join();
    }

    SearchResult result;
    result.best_size = st.best.load();
    result.witness = std::move(st.witness);
    result.optimal = !st.expired.load();
    result.nodes_expanded = st.nodes.load();
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

} // namespace

std::vector<SubsetMask> candidate_universe(const Pattern& pattern, const GroundSet& ground,
                                           bool allow_large) {
    const int n = ground.n;
    if (n > 24 && !allow_large)
        throw std::invalid_argument("candidate enumeration over 2^" + std::to_string(n) +
                                    " subsets refused; pass allow_large to override");
    if (n > 62)
        throw std::invalid_argument("candidate enumeration over 2^" + std::to_string(n) +
                                    " subsets is not feasible");

    std::vector<bool> size_ok(static_cast<size_t>(n) + 1);
    for (int s = 0; s <= n; ++s)
        size_ok[static_cast<size_t>(s)] = pattern.entry(1).satisfied_by(s, pattern.modulus());

    std::vector<SubsetMask> out;
    for (unsigned long long v = 0; v < (1ull << n); ++v) {
        if (!size_ok[static_cast<size_t>(std::popcount(v))]) continue;
        SubsetMask m(n);
        m.data()[0] = v;
        out.push_back(std::move(m));
    }
    return out;
}

SearchResult max_family(const Pattern& pattern, const GroundSet& ground,
                        const SearchConfig& config) {
    auto universe = candidate_universe(pattern, ground);
    std::optional<long long> cutoff;
    if (config.use_upper_bound_cutoff) cutoff = upper_bound(pattern, ground.n);

    SearchResult result = run_bnb(pattern, universe, config, cutoff);

    // Parallel exploration finds the right size but an arbitrary witness;
    // rerun in lexicographic order, stopping at the first family of the
    // proved size. Pruning below best_size - 1 cannot skip it.
    int workers = std::max(1, config.worker_count);
    if (workers > 1 && config.deterministic && result.optimal && result.best_size > 0) {
        SearchConfig replay = config;
        replay.worker_count = 1;
        // The size is already proved, so the replay terminates at the first
        // family reaching it; no deadline needed.
        replay.time_limit_seconds.reset();
        SearchResult canonical = run_bnb(pattern, universe, replay, result.best_size);
        canonical.nodes_expanded += result.nodes_expanded;
        canonical.elapsed += result.elapsed;
        return canonical;
    }
    return result;
}

SearchResult oracle_max(const Pattern& pattern, const GroundSet& ground,
                        const SearchConfig& config) {
    (void)config;
    if (ground.n > 5)
        throw std::invalid_argument("oracle_max: ground size " + std::to_string(ground.n) +
                                    " exceeds the hard cap of 5");
    auto start = std::chrono::steady_clock::now();
    auto universe = candidate_universe(pattern, ground);

    SearchResult result;
    result.optimal = true;
    std::vector<SubsetMask> stack;

    auto extend = [&](auto&& self, size_t from) -> void {
        for (size_t i = from; i < universe.size(); ++i) {
            stack.push_back(universe[i]);
            ++result.nodes_expanded;
            if (verify_pattern(SetFamily(ground, stack), pattern)) {
                if (static_cast<long long>(stack.size()) > result.best_size) {
                    result.best_size = static_cast<long long>(stack.size());
                    result.witness = stack;
                }
                self(self, i + 1);
            }
            stack.pop_back();
        }
    };
    extend(extend, 0);

    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

std::optional<long long> upper_bound(const Pattern& pattern, int n) {
    if (n < 1) throw std::invalid_argument("upper_bound: n >= 1 required");
    return assemble_bound(pattern, n);
}

} // namespace towns
