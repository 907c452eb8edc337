#include "towns/constructions.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>

namespace towns {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

long long need(const Params& params, const char* key, const char* who) {
    auto it = params.find(key);
    if (it == params.end()) fail(std::string(who) + ": missing parameter \"" + key + "\"");
    return it->second;
}

void expect_keys(const Params& params, std::initializer_list<const char*> allowed,
                 const char* who) {
    for (const auto& [key, value] : params) {
        (void)value;
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) fail(std::string(who) + ": unknown parameter \"" + key + "\"");
    }
}

int as_ground(long long n, const char* who) {
    if (n < 1 || n > ground_cap())
        fail(std::string(who) + ": ground size " + std::to_string(n) + " outside [1, " +
             std::to_string(ground_cap()) + "]");
    return static_cast<int>(n);
}

long long choose2(long long m) { return m * (m - 1) / 2; }

// Position of the edge {a, b}, a < b, when the edges of K_m are listed in
// colexicographic order: (1,2), (1,3), (2,3), (1,4), ...
int edge_index(int a, int b) { return static_cast<int>(choose2(b - 1)) + a; }

// [top] \ {skip} inside a width-n mask.
SubsetMask punctured_prefix(int n, int top, int skip) {
    SubsetMask m(n);
    for (int i = 1; i <= top; ++i)
        if (i != skip) m.set(i);
    return m;
}

// All unions of the given blocks, in binary counting order over block
// subsets (bit i-1 of the counter selects blocks[i-1]).
std::vector<SubsetMask> block_unions(const std::vector<SubsetMask>& blocks,
                                     const SubsetMask& common) {
    std::vector<SubsetMask> members;
    members.reserve(1ull << blocks.size());
    for (unsigned long long s = 0; s < (1ull << blocks.size()); ++s) {
        SubsetMask m = common;
        for (size_t i = 0; i < blocks.size(); ++i)
            if (s >> i & 1) m.unite_with(blocks[i]);
        members.push_back(std::move(m));
    }
    return members;
}

SetFamily build_singletons(const Params& p) {
    expect_keys(p, {"n"}, "singletons");
    long long n = need(p, "n", "singletons");
    if (n < 1) fail("singletons: n >= 1 required");
    GroundSet g(as_ground(n, "singletons"));
    std::vector<SubsetMask> members;
    for (int i = 1; i <= g.n; ++i) members.push_back(SubsetMask::from_elements(g.n, {i}));
    return SetFamily(g, std::move(members));
}

// Core of the paired-blocks family: unions of the blocks {1,2}, {3,4}, ...
// drawn from [usable], hosted on [n], each union extended by `common`.
SetFamily paired_blocks(int n, int usable, const SubsetMask& common, const char* who) {
    int b = usable / 2;
    if (b > 20) fail(std::string(who) + ": more than 2^20 members");
    std::vector<SubsetMask> blocks;
    for (int i = 1; i <= b; ++i)
        blocks.push_back(SubsetMask::from_elements(n, {2 * i - 1, 2 * i}));
    return SetFamily(GroundSet(n), block_unions(blocks, common));
}

SetFamily build_eventown_pairs(const Params& p) {
    expect_keys(p, {"n"}, "eventown_pairs");
    long long n = need(p, "n", "eventown_pairs");
    if (n < 1) fail("eventown_pairs: n >= 1 required");
    int g = as_ground(n, "eventown_pairs");
    return paired_blocks(g, g, SubsetMask(g), "eventown_pairs");
}

SetFamily build_dual_eventown(const Params& p) {
    expect_keys(p, {"n"}, "dual_eventown");
    long long n = need(p, "n", "dual_eventown");
    if (n < 1) fail("dual_eventown: n >= 1 required");
    int g = as_ground(n, "dual_eventown");
    return paired_blocks(g, g - 1, SubsetMask::from_elements(g, {g}), "dual_eventown");
}

SetFamily build_star_2uniform(const Params& p) {
    expect_keys(p, {"n"}, "star_2uniform");
    long long n = need(p, "n", "star_2uniform");
    if (n < 2) fail("star_2uniform: n >= 2 required");
    GroundSet g(as_ground(n, "star_2uniform"));
    std::vector<SubsetMask> members;
    for (int i = 2; i <= g.n; ++i) members.push_back(SubsetMask::from_elements(g.n, {1, i}));
    return SetFamily(g, std::move(members));
}

SetFamily build_cosingletons(const Params& p) {
    expect_keys(p, {"n", "t"}, "cosingletons");
    long long n = need(p, "n", "cosingletons");
    long long t = need(p, "t", "cosingletons");
    if (n < 1) fail("cosingletons: n >= 1 required");
    if (t < 0) fail("cosingletons: t >= 0 required");
    if (n - t < 1) fail("cosingletons: n - t >= 1 required");
    GroundSet g(as_ground(n, "cosingletons"));
    int top = static_cast<int>(n - t);
    std::vector<SubsetMask> members;
    for (int i = 1; i <= top; ++i) members.push_back(punctured_prefix(g.n, top, i));
    return SetFamily(g, std::move(members));
}

// Ground used by the odd-size triple family below n: largest 4k+2 <= n.
int c110_pad(long long n) {
    switch (n % 4) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 0;
        default: return 1;
    }
}

// Ground used by the even-size triple family below n: largest 4k+3 <= n.
int c001_pad(long long n) {
    switch (n % 4) {
        case 0: return 1;
        case 1: return 2;
        case 2: return 3;
        default: return 0;
    }
}

SetFamily build_c110(const Params& p) {
    expect_keys(p, {"n"}, "c110");
    long long n = need(p, "n", "c110");
    long long base = n - c110_pad(n);
    if (base < 6) fail("c110: n >= 6 required");
    GroundSet g(as_ground(n, "c110"));
    int k = static_cast<int>((base - 2) / 4);
    std::vector<SubsetMask> members;
    SubsetMask tail(g.n);
    for (int e = 2 * k + 2; e <= 4 * k + 2; ++e) tail.set(e);
    members.push_back(tail);
    for (int i = 1; i <= 2 * k + 1; ++i) {
        SubsetMask m = punctured_prefix(g.n, 2 * k + 1, i);
        m.set(2 * k + 1 + i);
        members.push_back(std::move(m));
    }
    return SetFamily(g, std::move(members));
}

SetFamily build_c001(const Params& p) {
    expect_keys(p, {"n"}, "c001");
    long long n = need(p, "n", "c001");
    long long base = n - c001_pad(n);
    if (base < 7) fail("c001: n >= 7 required");
    GroundSet g(as_ground(n, "c001"));
    int k = static_cast<int>((base - 3) / 4);
    int sentinel = 4 * k + 3;
    std::vector<SubsetMask> members;
    SubsetMask tail(g.n);
    for (int e = 2 * k + 2; e <= sentinel; ++e) tail.set(e);
    members.push_back(tail);
    for (int i = 1; i <= 2 * k + 1; ++i) {
        SubsetMask m = punctured_prefix(g.n, 2 * k + 1, i);
        m.set(2 * k + 1 + i);
        m.set(sentinel);
        members.push_back(std::move(m));
    }
    return SetFamily(g, std::move(members));
}

// Edge star at vertex i of K_m on the edge ground, optionally shifted and
// with extra elements mixed in by the caller.
SubsetMask edge_star(int n, int m, int i, int shift) {
    SubsetMask star(n);
    for (int j = 1; j <= m; ++j) {
        if (j == i) continue;
        star.set(shift + edge_index(std::min(i, j), std::max(i, j)));
    }
    return star;
}

SetFamily build_star_edges_odd(const Params& p) {
    expect_keys(p, {"m"}, "star_edges_odd");
    long long m = need(p, "m", "star_edges_odd");
    if (m < 5) fail("star_edges_odd: m >= 5 required");
    if (m % 2 == 0) fail("star_edges_odd: odd m required");
    GroundSet g(as_ground(choose2(m), "star_edges_odd"));
    std::vector<SubsetMask> members;
    for (int i = 1; i <= m; ++i) members.push_back(edge_star(g.n, static_cast<int>(m), i, 0));
    return SetFamily(g, std::move(members));
}

SetFamily build_star_edges_aux(const Params& p) {
    expect_keys(p, {"m"}, "star_edges_aux");
    long long m = need(p, "m", "star_edges_aux");
    if (m < 4) fail("star_edges_aux: m >= 4 required");
    if (m % 2 == 1) fail("star_edges_aux: even m required");
    GroundSet g(as_ground(choose2(m) + 1, "star_edges_aux"));
    std::vector<SubsetMask> members;
    for (int i = 1; i <= m; ++i) {
        SubsetMask star = edge_star(g.n, static_cast<int>(m), i, 0);
        star.set(g.n);
        members.push_back(std::move(star));
    }
    return SetFamily(g, std::move(members));
}

SetFamily build_vertex_edge_star(const Params& p, bool odd) {
    const char* who = odd ? "vertex_edge_star_odd" : "vertex_edge_star_even";
    expect_keys(p, {"m"}, who);
    long long m = need(p, "m", who);
    if (odd && m < 3) fail(std::string(who) + ": m >= 3 required");
    if (!odd && m < 4) fail(std::string(who) + ": m >= 4 required");
    if (m % 2 != (odd ? 1 : 0))
        fail(std::string(who) + (odd ? ": odd m required" : ": even m required"));
    GroundSet g(as_ground(m + choose2(m), who));
    int mi = static_cast<int>(m);
    std::vector<SubsetMask> members;
    for (int i = 1; i <= mi; ++i) {
        SubsetMask s = edge_star(g.n, mi, i, mi);
        s.unite_with(punctured_prefix(g.n, mi, i));
        members.push_back(std::move(s));
    }
    return SetFamily(g, std::move(members));
}

SetFamily build_star_3uniform(const Params& p) {
    expect_keys(p, {"n"}, "star_3uniform");
    long long n = need(p, "n", "star_3uniform");
    if (n < 3) fail("star_3uniform: n >= 3 required");
    GroundSet g(as_ground(n, "star_3uniform"));
    std::vector<SubsetMask> members;
    for (int a = 2; a < g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b)
            members.push_back(SubsetMask::from_elements(g.n, {1, a, b}));
    return SetFamily(g, std::move(members));
}

SetFamily build_matched_complement(const Params& p) {
    expect_keys(p, {"k"}, "matched_complement");
    long long k = need(p, "k", "matched_complement");
    if (k < 3) fail("matched_complement: k >= 3 required");
    if (k % 3 != 0) fail("matched_complement: k divisible by 3 required");
    GroundSet g(as_ground(2 * k, "matched_complement"));
    int ki = static_cast<int>(k);
    std::vector<SubsetMask> members;
    for (int i = 1; i <= ki; ++i) {
        SubsetMask m = punctured_prefix(g.n, ki, i);
        m.set(ki + i);
        members.push_back(std::move(m));
    }
    return SetFamily(g, std::move(members));
}

// Shared core of the block gadget: ([n] \ {i}) plus the i-th of n disjoint
// m-element blocks appended after [n].
SetFamily block_gadget(long long n, long long m, const char* who) {
    if (m < 1) fail(std::string(who) + ": m >= 1 required");
    GroundSet g(as_ground(n + n * m, who));
    int ni = static_cast<int>(n);
    int mi = static_cast<int>(m);
    std::vector<SubsetMask> members;
    for (int i = 1; i <= ni; ++i) {
        SubsetMask s = punctured_prefix(g.n, ni, i);
        for (int e = 0; e < mi; ++e) s.set(ni + (i - 1) * mi + e + 1);
        members.push_back(std::move(s));
    }
    return SetFamily(g, std::move(members));
}

SetFamily build_matching_blocks(const Params& p) {
    expect_keys(p, {"k"}, "matching_blocks");
    long long k = need(p, "k", "matching_blocks");
    if (k < 1) fail("matching_blocks: k >= 1 required");
    return block_gadget(3 * k - 1, 2, "matching_blocks");
}

SetFamily build_anm(const Params& p) {
    expect_keys(p, {"n", "m"}, "anm");
    long long n = need(p, "n", "anm");
    long long m = need(p, "m", "anm");
    if (n < 3) fail("anm: n >= 3 required");
    return block_gadget(n, m, "anm");
}

SetFamily build_partition_triples(const Params& p) {
    expect_keys(p, {"n", "aux"}, "partition_triples");
    long long n = need(p, "n", "partition_triples");
    long long aux = p.count("aux") ? p.at("aux") : 0;
    if (n < 1) fail("partition_triples: n >= 1 required");
    if (aux != 0 && aux != 1) fail("partition_triples: aux must be 0 or 1");
    GroundSet g(as_ground(n, "partition_triples"));
    int usable = aux ? g.n - 1 : g.n;
    int b = usable / 3;
    if (b > 20) fail("partition_triples: more than 2^20 members");
    std::vector<SubsetMask> blocks;
    for (int i = 1; i <= b; ++i)
        blocks.push_back(SubsetMask::from_elements(g.n, {3 * i - 2, 3 * i - 1, 3 * i}));
    SubsetMask common(g.n);
    if (aux) common.set(g.n);
    return SetFamily(g, block_unions(blocks, common));
}

} // namespace

std::string to_string(ConstructionId id) {
    switch (id) {
        case ConstructionId::Singletons: return "singletons";
        case ConstructionId::EventownPairs: return "eventown_pairs";
        case ConstructionId::DualEventown: return "dual_eventown";
        case ConstructionId::Star2Uniform: return "star_2uniform";
        case ConstructionId::Cosingletons: return "cosingletons";
        case ConstructionId::C110: return "c110";
        case ConstructionId::C001: return "c001";
        case ConstructionId::StarEdgesOdd: return "star_edges_odd";
        case ConstructionId::StarEdgesAux: return "star_edges_aux";
        case ConstructionId::VertexEdgeStarOdd: return "vertex_edge_star_odd";
        case ConstructionId::VertexEdgeStarEven: return "vertex_edge_star_even";
        case ConstructionId::Star3Uniform: return "star_3uniform";
        case ConstructionId::MatchedComplement: return "matched_complement";
        case ConstructionId::MatchingBlocks: return "matching_blocks";
        case ConstructionId::Anm: return "anm";
        case ConstructionId::PartitionTriples: return "partition_triples";
    }
    fail("unknown construction id");
}

std::optional<ConstructionId> construction_from_string(const std::string& name) {
    for (int raw = 0; raw < construction_count; ++raw) {
        auto id = static_cast<ConstructionId>(raw);
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

SetFamily build(const ConstructionSpec& spec) {
    switch (spec.id) {
        case ConstructionId::Singletons: return build_singletons(spec.params);
        case ConstructionId::EventownPairs: return build_eventown_pairs(spec.params);
        case ConstructionId::DualEventown: return build_dual_eventown(spec.params);
        case ConstructionId::Star2Uniform: return build_star_2uniform(spec.params);
        case ConstructionId::Cosingletons: return build_cosingletons(spec.params);
        case ConstructionId::C110: return build_c110(spec.params);
        case ConstructionId::C001: return build_c001(spec.params);
        case ConstructionId::StarEdgesOdd: return build_star_edges_odd(spec.params);
        case ConstructionId::StarEdgesAux: return build_star_edges_aux(spec.params);
        case ConstructionId::VertexEdgeStarOdd: return build_vertex_edge_star(spec.params, true);
        case ConstructionId::VertexEdgeStarEven: return build_vertex_edge_star(spec.params, false);
        case ConstructionId::Star3Uniform: return build_star_3uniform(spec.params);
        case ConstructionId::MatchedComplement: return build_matched_complement(spec.params);
        case ConstructionId::MatchingBlocks: return build_matching_blocks(spec.params);
        case ConstructionId::Anm: return build_anm(spec.params);
        case ConstructionId::PartitionTriples: return build_partition_triples(spec.params);
    }
    fail("unknown construction id");
}

namespace {

using SizeFn = std::function<long long(long long)>;

// Catalog row driven by a single integer parameter swept over an arithmetic
// progression. `cap` already reflects any entry-specific runtime ceiling.
struct OneParamRow {
    const char* key;
    ConstructionId id;
    const char* pattern;
    int modulus;
    const char* pname;
    long long lo;
    long long step;
    long long cap;
    SizeFn fam;
    SizeFn ground;
};

CatalogEntry one_param(OneParamRow r) {
    CatalogEntry e;
    e.key = r.key;
    e.id = r.id;
    e.served = Pattern::parse(r.pattern, r.modulus);
    std::string pname = r.pname;
    e.valid = [pname, lo = r.lo, step = r.step](const Params& p) {
        auto it = p.find(pname);
        if (it == p.end() || p.size() != 1) return false;
        return it->second >= lo && (it->second - lo) % step == 0;
    };
    e.family_size = [pname, fam = r.fam](const Params& p) { return fam(p.at(pname)); };
    e.ground_size = [pname, ground = r.ground](const Params& p) { return ground(p.at(pname)); };
    e.sweep_params = [pname, lo = r.lo, step = r.step, cap = r.cap,
                      ground = r.ground](long long limit) {
        std::vector<Params> out;
        for (long long v = lo; v <= cap; v += step) {
            if (ground(v) > limit) break;
            out.push_back({{pname, v}});
        }
        return out;
    };
    e.smallest = {{pname, r.lo}};
    return e;
}

// Cosingleton row: t is a fixed residue function of n, chosen so that the
// shrunken ground has the parity/residue the pattern needs.
CatalogEntry cosingleton_row(const char* key, const char* pattern, int modulus, long long n_lo,
                             int t_mod, int t_shift, bool spot_check_tail) {
    CatalogEntry e;
    e.key = key;
    e.id = ConstructionId::Cosingletons;
    e.served = Pattern::parse(pattern, modulus);
    auto t_of = [t_mod, t_shift](long long n) { return (n + t_shift) % t_mod; };
    e.valid = [n_lo, t_of](const Params& p) {
        auto n = p.find("n");
        auto t = p.find("t");
        if (n == p.end() || t == p.end() || p.size() != 2) return false;
        return n->second >= n_lo && t->second == t_of(n->second);
    };
    e.family_size = [](const Params& p) { return p.at("n") - p.at("t"); };
    e.ground_size = [](const Params& p) { return p.at("n"); };
    // Four-entry rows scan quadruples, so the dense part of the sweep stops
    // at 100 with two larger spot checks.
    e.sweep_params = [n_lo, t_of, spot_check_tail](long long limit) {
        long long hi = std::min(limit, 200ll);
        std::vector<Params> out;
        long long dense = spot_check_tail ? std::min(hi, 100ll) : hi;
        for (long long n = n_lo; n <= dense; ++n) out.push_back({{"n", n}, {"t", t_of(n)}});
        if (spot_check_tail)
            for (long long n : {150ll, 200ll})
                if (n <= hi) out.push_back({{"n", n}, {"t", t_of(n)}});
        return out;
    };
    e.smallest = {{"n", n_lo}, {"t", t_of(n_lo)}};
    return e;
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> cat;
    auto id = [](long long v) { return v; };

    auto push_one = [&cat](std::string key, ConstructionId cid, const char* pattern, int modulus,
                           const char* pname, long long lo, long long step, long long cap,
                           SizeFn fam, SizeFn ground) {
        OneParamRow r{"", cid, pattern, modulus, pname, lo, step, cap, std::move(fam),
                      std::move(ground)};
        CatalogEntry e = one_param(r);
        e.key = std::move(key);
        cat.push_back(std::move(e));
    };

    for (const char* pattern : {"10", "100", "1000"})
        push_one(std::string("singletons:") + pattern + "@2", ConstructionId::Singletons, pattern,
                 2, "n", 1, 1, 200, id, id);
    push_one("singletons:*00@3", ConstructionId::Singletons, "*00", 3, "n", 1, 1, 200, id, id);

    auto pow2_half = [](long long n) { return 1ll << (n / 2); };
    auto pow2_half_less = [](long long n) { return 1ll << ((n - 1) / 2); };
    push_one("eventown_pairs:00@2", ConstructionId::EventownPairs, "00", 2, "n", 1, 1, 20,
             pow2_half, id);
    push_one("eventown_pairs:000@2", ConstructionId::EventownPairs, "000", 2, "n", 1, 1, 20,
             pow2_half, id);
    push_one("eventown_pairs:0000@2", ConstructionId::EventownPairs, "0000", 2, "n", 1, 1, 16,
             pow2_half, id);
    push_one("dual_eventown:11@2", ConstructionId::DualEventown, "11", 2, "n", 1, 1, 21,
             pow2_half_less, id);
    push_one("dual_eventown:111@2", ConstructionId::DualEventown, "111", 2, "n", 1, 1, 21,
             pow2_half_less, id);
    push_one("dual_eventown:1111@2", ConstructionId::DualEventown, "1111", 2, "n", 1, 1, 17,
             pow2_half_less, id);

    auto less1 = [](long long n) { return n - 1; };
    push_one("star_2uniform:011@2", ConstructionId::Star2Uniform, "011", 2, "n", 2, 1, 200, less1,
             id);
    {
        // Four-entry star row: dense sweep to 100, spot checks after.
        CatalogEntry e = one_param({"star_2uniform:0111@2", ConstructionId::Star2Uniform, "0111",
                                    2, "n", 2, 1, 100, less1, id});
        e.sweep_params = [](long long limit) {
            long long hi = std::min(limit, 200ll);
            std::vector<Params> out;
            for (long long n = 2; n <= std::min(hi, 100ll); ++n) out.push_back({{"n", n}});
            for (long long n : {150ll, 200ll})
                if (n <= hi) out.push_back({{"n", n}});
            return out;
        };
        cat.push_back(std::move(e));
    }

    cat.push_back(cosingleton_row("cosingletons:101@2", "101", 2, 2, 2, 0, false));
    cat.push_back(cosingleton_row("cosingletons:1010@2", "1010", 2, 4, 2, 0, true));
    cat.push_back(cosingleton_row("cosingletons:010@2", "010", 2, 3, 2, 1, false));
    cat.push_back(cosingleton_row("cosingletons:01@2", "01", 2, 3, 2, 1, false));
    cat.push_back(cosingleton_row("cosingletons:*0*@3", "*0*", 3, 2, 3, 1, false));
    cat.push_back(cosingleton_row("cosingletons:**0@3", "**0", 3, 3, 3, 0, false));

    push_one("c110:110@2", ConstructionId::C110, "110", 2, "n", 6, 1, 200,
             [](long long n) { return (n - c110_pad(n) + 2) / 2; }, id);
    push_one("c001:001@2", ConstructionId::C001, "001", 2, "n", 7, 1, 200,
             [](long long n) { return (n - c001_pad(n) + 1) / 2; }, id);

    push_one("star_edges_odd:0100@2", ConstructionId::StarEdgesOdd, "0100", 2, "m", 5, 2, 31, id,
             [](long long m) { return choose2(m); });
    push_one("star_edges_aux:0011@2", ConstructionId::StarEdgesAux, "0011", 2, "m", 4, 2, 30, id,
             [](long long m) { return choose2(m) + 1; });
    push_one("vertex_edge_star_odd:0001@2", ConstructionId::VertexEdgeStarOdd, "0001", 2, "m", 3,
             2, 31, id, [](long long m) { return m + choose2(m); });
    push_one("vertex_edge_star_even:0110@2", ConstructionId::VertexEdgeStarEven, "0110", 2, "m",
             4, 2, 30, id, [](long long m) { return m + choose2(m); });

    push_one("star_3uniform:0**@3", ConstructionId::Star3Uniform, "0**", 3, "n", 3, 1, 40,
             [](long long n) { return choose2(n - 1); }, id);
    push_one("matched_complement:0*0@3", ConstructionId::MatchedComplement, "0*0", 3, "k", 3, 3,
             100, id, [](long long k) { return 2 * k; });
    push_one("matching_blocks:00*@3", ConstructionId::MatchingBlocks, "00*", 3, "k", 1, 1, 22,
             [](long long k) { return 3 * k - 1; }, [](long long k) { return 9 * k - 3; });

    {
        CatalogEntry e;
        e.key = "anm:00*@3";
        e.id = ConstructionId::Anm;
        e.served = Pattern::parse("00*", 3);
        e.valid = [](const Params& p) {
            auto n = p.find("n");
            auto m = p.find("m");
            if (n == p.end() || m == p.end() || p.size() != 2) return false;
            return n->second >= 4 && n->second % 3 == 2 && m->second >= 1 && m->second % 3 == 2;
        };
        e.family_size = [](const Params& p) { return p.at("n"); };
        e.ground_size = [](const Params& p) { return p.at("n") * (p.at("m") + 1); };
        e.sweep_params = [](long long limit) {
            std::vector<Params> out;
            for (long long n = 5; 3 * n <= std::min(limit, 200ll); n += 3)
                out.push_back({{"n", n}, {"m", 2}});
            return out;
        };
        e.smallest = {{"n", 5}, {"m", 2}};
        cat.push_back(std::move(e));
    }

    auto pow2_third = [](long long n) { return 1ll << (n / 3); };
    push_one("partition_triples:00@3", ConstructionId::PartitionTriples, "00", 3, "n", 3, 1, 30,
             pow2_third, id);
    push_one("partition_triples:000@3", ConstructionId::PartitionTriples, "000", 3, "n", 3, 1, 27,
             pow2_third, id);

    auto aux_row = [&cat](std::string key, const char* pattern, long long n_lo, long long cap) {
        CatalogEntry e;
        e.key = std::move(key);
        e.id = ConstructionId::PartitionTriples;
        e.served = Pattern::parse(pattern, 3);
        e.valid = [n_lo](const Params& p) {
            auto n = p.find("n");
            auto aux = p.find("aux");
            if (n == p.end() || aux == p.end() || p.size() != 2) return false;
            return n->second >= n_lo && aux->second == 1;
        };
        e.family_size = [](const Params& p) { return 1ll << ((p.at("n") - 1) / 3); };
        e.ground_size = [](const Params& p) { return p.at("n"); };
        e.sweep_params = [n_lo, cap](long long limit) {
            std::vector<Params> out;
            for (long long n = n_lo; n <= std::min(cap, limit); ++n)
                out.push_back({{"n", n}, {"aux", 1}});
            return out;
        };
        e.smallest = {{"n", n_lo}, {"aux", 1}};
        cat.push_back(std::move(e));
    };
    aux_row("partition_triples:**@3", "**", 4, 31);
    aux_row("partition_triples:***@3", "***", 4, 28);

    return cat;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = make_catalog();
    return cat;
}

std::optional<AnmParams> solve_anm_params(const Pattern& pattern, int ell) {
    if (ell < 2) fail("solve_anm_params: modulus >= 2 required");
    if (pattern.modulus() != ell) fail("solve_anm_params: pattern modulus mismatch");
    if (pattern.arity() != 3) fail("solve_anm_params: arity-3 pattern required");
    auto rep = [ell](long long v) { return ((v % ell) + ell) % ell; };
    for (int n = 0; n < ell; ++n) {
        if (!pattern.entry(2).satisfied_by(rep(n - 2), ell)) continue;
        if (!pattern.entry(3).satisfied_by(rep(n - 3), ell)) continue;
        std::vector<int> ms;
        for (int m = 0; m < ell; ++m)
            if (pattern.entry(1).satisfied_by(rep(n + m - 1), ell)) ms.push_back(m);
        if (!ms.empty()) return AnmParams{ell, n, std::move(ms)};
    }
    return std::nullopt;
}

std::optional<std::pair<long long, long long>> anm_smallest_params(const Pattern& pattern,
                                                                   int ell) {
    auto solved = solve_anm_params(pattern, ell);
    if (!solved) return std::nullopt;
    long long n = 4;
    while (n % ell != solved->n_residue) ++n;
    long long m = 1;
    while (std::find(solved->m_residues.begin(), solved->m_residues.end(),
                     static_cast<int>(m % ell)) == solved->m_residues.end())
        ++m;
    return std::make_pair(n, m);
}

} // namespace towns
