// Acceptance harness: ten end-to-end checks covering the catalog, the
// bound tables, the exact search, the GF(2) reports, the growth
// classification, and the transform laws. Prints one PASS/FAIL line per
// criterion and exits nonzero when any of them fails.

#include "towns/constructions.hpp"
#include "towns/gf2.hpp"
#include "towns/pattern_ops.hpp"
#include "towns/reference.hpp"
#include "towns/search.hpp"
#include "towns/transforms.hpp"
#include "towns/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace towns;

struct Criterion {
    int failures = 0;
    std::vector<std::string> notes;

    void fail(const std::string& msg) {
        ++failures;
        if (notes.size() < 8) notes.push_back(msg);
    }
    void check(bool ok, const std::string& msg) {
        if (!ok) fail(msg);
    }
};

std::string at(const Pattern& p, long long n) {
    return p.to_string() + "@" + std::to_string(n);
}

Pattern mod2_pattern(int bits, int arity) {
    std::string s;
    for (int i = arity - 1; i >= 0; --i) s += (bits >> i & 1) ? '1' : '0';
    return Pattern::parse(s, 2);
}

// Arity-3 patterns over {0, nonzero} mod 3, in the same bit order.
Pattern mod3_pattern(int bits) {
    std::string s;
    for (int i = 2; i >= 0; --i) s += (bits >> i & 1) ? '*' : '0';
    return Pattern::parse(s, 3);
}

long long isqrt_floor(long long v) {
    long long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

int pick_int(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Exact search plus the witness invariants every result must satisfy.
SearchResult solved(Criterion& c, const Pattern& p, int n) {
    SearchResult r = max_family(p, GroundSet(n));
    if (!r.optimal) c.fail(at(p, n) + ": search did not prove optimality");
    if (static_cast<long long>(r.witness.size()) != r.best_size)
        c.fail(at(p, n) + ": witness size differs from best_size");
    else if (!verify_pattern(SetFamily(GroundSet(n), r.witness), p))
        c.fail(at(p, n) + ": witness violates the pattern");
    return r;
}

// Random subfamily: keeps each member with probability 0.7, then pads back
// to min_size (from the front of the input) or samples down to cap.
SetFamily random_subfamily(const SetFamily& f, std::mt19937& rng, size_t cap,
                           long long min_size) {
    std::vector<SubsetMask> kept;
    std::bernoulli_distribution keep(0.7);
    for (const auto& m : f.members())
        if (keep(rng)) kept.push_back(m);
    if (static_cast<long long>(kept.size()) < min_size)
        kept.assign(f.members().begin(), f.members().begin() + min_size);
    if (kept.size() > cap) {
        std::shuffle(kept.begin(), kept.end(), rng);
        kept.resize(cap);
    }
    return SetFamily(f.ground(), kept);
}

// ---- 1: every catalog entry, over its whole documented range ---------------

void crit_catalog(Criterion& c) {
    for (const auto& e : catalog()) {
        auto params = e.sweep_params(500);
        if (params.empty()) {
            c.fail(e.key + ": empty sweep");
            continue;
        }
        for (const auto& p : params) {
            if (!e.valid(p)) {
                c.fail(e.key + ": sweep produced invalid params");
                continue;
            }
            SetFamily f = build({e.id, p});
            if (!verify_pattern(f, e.served)) c.fail(e.key + ": pattern violated in sweep");
            if (f.size() != e.family_size(p)) c.fail(e.key + ": size != closed form");
            if (f.ground_size() != e.ground_size(p)) c.fail(e.key + ": ground size mismatch");
        }
    }

    // 50 random valid parameter choices for the block gadget, moduli 2..5.
    std::mt19937 rng(4101);
    int done = 0;
    while (done < 50) {
        int ell = pick_int(rng, 2, 5);
        std::vector<ResidueConstraint> entries;
        for (int i = 0; i < 3; ++i)
            entries.push_back(pick_int(rng, 0, 1) ? ResidueConstraint::nonzero()
                                                  : ResidueConstraint::exact(0));
        Pattern pat(ell, entries);
        auto sol = solve_anm_params(pat, ell);
        if (!sol) continue;  // unsatisfiable residue system; draw again

        long long n = sol->n_residue;
        while (n < 4) n += ell;
        n += static_cast<long long>(ell) * pick_int(rng, 0, 3);
        long long m = sol->m_residues[pick_int(rng, 0, static_cast<int>(sol->m_residues.size()) - 1)];
        while (m < 1) m += ell;
        m += static_cast<long long>(ell) * pick_int(rng, 0, 2);

        SetFamily f = build({ConstructionId::Anm, {{"n", n}, {"m", m}}});
        std::string who = "anm(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                          ")@" + std::to_string(ell);
        if (!verify_pattern(f, pat)) c.fail(who + ": pattern " + pat.to_string() + " violated");
        if (f.size() != n) c.fail(who + ": size != n");
        if (f.ground_size() != n * (m + 1)) c.fail(who + ": ground != n(m+1)");
        ++done;
    }
}

// ---- 2: exact three-entry mod-2 table, n in [4, 8] -------------------------

void crit_table3(Criterion& c) {
    const Pattern bracket_row = Pattern::parse("001", 2);
    for (int bits = 0; bits < 8; ++bits) {
        Pattern pat = mod2_pattern(bits, 3);
        for (int n = 4; n <= 8; ++n) {
            auto ref = reference_value(pat, n);
            if (!ref) {
                c.fail(at(pat, n) + ": no tabulated value");
                continue;
            }
            if (pat == bracket_row && n % 4 == 2) {
                SearchResult r = solved(c, pat, n);
                c.check(ref->lower <= r.best_size && r.best_size <= *ref->upper,
                        at(pat, n) + ": value " + std::to_string(r.best_size) +
                            " outside bracket");
                continue;
            }
            // Cells below 3 are skipped: a family smaller than the arity
            // leaves the top level unconstrained, so the tabulated formulas
            // do not apply there.
            if (!ref->exact() || ref->lower < 3) continue;
            SearchResult r = solved(c, pat, n);
            c.check(r.best_size == ref->lower,
                    at(pat, n) + ": got " + std::to_string(r.best_size) + ", want " +
                        std::to_string(ref->lower));
        }
    }
}

// ---- 3: classical two-entry values, n in [1, 8] -----------------------------

void crit_classic2(Criterion& c) {
    for (int n = 1; n <= 8; ++n) {
        auto want = [&](const char* text, long long value) {
            Pattern pat = Pattern::parse(text, 2);
            SearchResult r = solved(c, pat, n);
            c.check(r.best_size == value,
                    at(pat, n) + ": got " + std::to_string(r.best_size) + ", want " +
                        std::to_string(value));
        };
        want("10", n);
        want("00", 1LL << (n / 2));
        want("01", n - (n % 2 == 0 ? 1 : 0));
        want("11", 1LL << ((n - 1) / 2));
    }
}

// ---- 4: four-entry linear rows, exact cells ---------------------------------

void crit_table4_linear(Criterion& c) {
    const std::vector<std::pair<const char*, std::vector<int>>> cells = {
        {"1000", {4, 5, 6, 7}},
        {"0000", {4, 5, 6, 7}},
        {"1010", {4, 5, 6, 7}},
        {"0010", {4, 5}},
    };
    for (const auto& [text, ns] : cells) {
        Pattern pat = Pattern::parse(text, 2);
        for (int n : ns) {
            auto ref = reference_value(pat, n);
            if (!ref || !ref->exact()) {
                c.fail(at(pat, n) + ": expected an exact tabulated cell");
                continue;
            }
            SearchResult r = solved(c, pat, n);
            c.check(r.best_size == ref->lower,
                    at(pat, n) + ": got " + std::to_string(r.best_size) + ", want " +
                        std::to_string(ref->lower));
        }
    }
}

// ---- 5: four-entry sqrt rows: brackets, monotonicity, tight points ----------

void crit_table4_sqrt(Criterion& c) {
    for (const char* text : {"0100", "0011", "0001", "0110"}) {
        Pattern pat = Pattern::parse(text, 2);
        long long prev = 0;
        for (int n = 1; n <= 10; ++n) {
            auto ref = reference_value(pat, n);
            if (!ref) {
                c.fail(at(pat, n) + ": no tabulated value");
                continue;
            }
            SearchResult r = solved(c, pat, n);
            c.check(ref->lower <= r.best_size,
                    at(pat, n) + ": below the construction lower bound");
            c.check(r.best_size <= isqrt_floor(2 * n) + 1,
                    at(pat, n) + ": above the sqrt bracket");
            c.check(r.best_size >= prev, at(pat, n) + ": value decreased in n");
            prev = r.best_size;
        }
    }

    // Tight parameter points, certified by construction + bound (no search).
    {
        Pattern pat = Pattern::parse("0100", 2);
        SetFamily f = build({ConstructionId::StarEdgesOdd, {{"m", 7}}});
        c.check(verify_pattern(f, pat), "edge stars on 21 points violate 0100");
        c.check(f.size() == 7, "edge stars on 21 points: size != 7");
        auto ub = upper_bound(pat, 21);
        c.check(ub.has_value() && *ub == 7, "0100@21: bound is not 7");
    }
    {
        Pattern pat = Pattern::parse("0001", 2);
        SetFamily f = build({ConstructionId::VertexEdgeStarOdd, {{"m", 7}}});
        c.check(verify_pattern(f, pat), "vertex+edge stars on 28 points violate 0001");
        c.check(f.size() == 7, "vertex+edge stars on 28 points: size != 7");
        auto ub = upper_bound(pat, 28);
        c.check(ub.has_value() && *ub == 8, "0001@28: bound is not 8");
        c.check(ub.has_value() && f.size() <= *ub, "0001@28: construction exceeds the bound");
    }
}

// ---- 6: branch-and-bound agrees with the brute-force oracle -----------------

void crit_oracle(Criterion& c) {
    std::vector<Pattern> pats;
    for (int bits = 0; bits < 4; ++bits) pats.push_back(mod2_pattern(bits, 2));
    for (int bits = 0; bits < 8; ++bits) pats.push_back(mod2_pattern(bits, 3));
    for (int bits = 0; bits < 8; ++bits) pats.push_back(mod3_pattern(bits));

    for (const auto& pat : pats) {
        for (int n = 1; n <= 5; ++n) {
            SearchResult fast = solved(c, pat, n);
            SearchResult slow = oracle_max(pat, GroundSet(n));
            c.check(fast.best_size == slow.best_size,
                    at(pat, n) + ": search " + std::to_string(fast.best_size) +
                        " != oracle " + std::to_string(slow.best_size));
        }
    }
}

// ---- 7: transform laws on randomized catalog subfamilies --------------------

std::vector<int> valid_trace_ts(const Pattern& p) {
    std::vector<int> ts;
    for (int t = 0; t + 2 <= p.arity(); ++t)
        if (p.entry(t + 1).disjoint_with(p.entry(t + 2), p.modulus())) ts.push_back(t);
    return ts;
}

struct Draw {
    const CatalogEntry* entry;
    std::vector<Params> pool;
};

std::vector<Draw> draw_pool(bool (*want)(const CatalogEntry&)) {
    std::vector<Draw> out;
    for (const auto& e : catalog()) {
        if (!want(e)) continue;
        auto pool = e.sweep_params(24);
        if (!pool.empty()) out.push_back({&e, std::move(pool)});
    }
    return out;
}

void crit_transforms(Criterion& c) {
    // Trace: dropping t members cuts the size by t and the pattern keeps
    // its tail; valid whenever two consecutive entries share no residue.
    {
        auto picks = draw_pool([](const CatalogEntry& e) {
            return !valid_trace_ts(e.served).empty();
        });
        std::mt19937 rng(7101);
        for (int i = 0; i < 1000; ++i) {
            const Draw& d = picks[pick_int(rng, 0, static_cast<int>(picks.size()) - 1)];
            const Pattern& pat = d.entry->served;
            auto ts = valid_trace_ts(pat);
            int t = ts[pick_int(rng, 0, static_cast<int>(ts.size()) - 1)];
            const Params& p = d.pool[pick_int(rng, 0, static_cast<int>(d.pool.size()) - 1)];
            std::string who = d.entry->key + " case " + std::to_string(i);
            try {
                SetFamily sub = random_subfamily(build({d.entry->id, p}), rng, 60, t + 1);
                if (!verify_pattern(sub, pat)) {
                    c.fail(who + ": subfamily stopped satisfying the pattern");
                    continue;
                }
                std::vector<int> indices(sub.size());
                for (int k = 0; k < sub.size(); ++k) indices[k] = k + 1;
                std::shuffle(indices.begin(), indices.end(), rng);
                std::vector<int> chosen(indices.begin(), indices.begin() + t);

                TraceResult r = trace(sub, pat, chosen);
                c.check(r.family.size() == sub.size() - t, who + ": trace size law broken");
                c.check(r.suffix.arity() == pat.arity() - t, who + ": suffix arity wrong");
                c.check(verify_pattern(r.family, r.suffix),
                        who + ": traced family violates the suffix pattern");
            } catch (const std::exception& ex) {
                c.fail(who + ": threw " + ex.what());
            }
        }
    }

    // Dualize: one fresh shared element flips every mod-2 entry.
    {
        auto picks = draw_pool([](const CatalogEntry& e) { return e.served.modulus() == 2; });
        std::mt19937 rng(7102);
        for (int i = 0; i < 1000; ++i) {
            const Draw& d = picks[pick_int(rng, 0, static_cast<int>(picks.size()) - 1)];
            const Params& p = d.pool[pick_int(rng, 0, static_cast<int>(d.pool.size()) - 1)];
            std::string who = d.entry->key + " case " + std::to_string(i);
            try {
                SetFamily sub = random_subfamily(build({d.entry->id, p}), rng, 80, 1);
                if (!verify_pattern(sub, d.entry->served)) {
                    c.fail(who + ": subfamily stopped satisfying the pattern");
                    continue;
                }
                SetFamily dual = dualize(sub);
                c.check(dual.size() == sub.size(), who + ": dualize changed the size");
                c.check(dual.ground_size() == sub.ground_size() + 1,
                        who + ": dualize ground != n+1");
                c.check(verify_pattern(dual, pattern_dual(d.entry->served)),
                        who + ": dual family violates the flipped pattern");
            } catch (const std::exception& ex) {
                c.fail(who + ": threw " + ex.what());
            }
        }
    }

    // Partition sum: disjoint grounds, members united pairwise, patterns add.
    {
        auto picks = draw_pool([](const CatalogEntry& e) { return e.served.all_exact(); });
        std::map<std::pair<int, int>, std::vector<const Draw*>> groups;
        for (const auto& d : picks)
            groups[{d.entry->served.arity(), d.entry->served.modulus()}].push_back(&d);
        std::vector<std::vector<const Draw*>> glist;
        for (auto& [key, v] : groups) glist.push_back(v);

        std::mt19937 rng(7103);
        for (int i = 0; i < 1000; ++i) {
            const auto& group = glist[pick_int(rng, 0, static_cast<int>(glist.size()) - 1)];
            const Draw& da = *group[pick_int(rng, 0, static_cast<int>(group.size()) - 1)];
            const Draw& db = *group[pick_int(rng, 0, static_cast<int>(group.size()) - 1)];
            const Params& pa = da.pool[pick_int(rng, 0, static_cast<int>(da.pool.size()) - 1)];
            const Params& pb = db.pool[pick_int(rng, 0, static_cast<int>(db.pool.size()) - 1)];
            std::string who = da.entry->key + "+" + db.entry->key + " case " + std::to_string(i);
            try {
                SetFamily a = random_subfamily(build({da.entry->id, pa}), rng, 60, 1);
                SetFamily b = random_subfamily(build({db.entry->id, pb}), rng, 60, 1);
                if (!verify_pattern(a, da.entry->served) || !verify_pattern(b, db.entry->served)) {
                    c.fail(who + ": subfamily stopped satisfying its pattern");
                    continue;
                }
                SetFamily s = partition_sum(a, b, da.entry->served, db.entry->served);
                c.check(s.size() == std::min(a.size(), b.size()), who + ": size != min");
                c.check(s.ground_size() == a.ground_size() + b.ground_size(),
                        who + ": grounds did not add");
                c.check(verify_pattern(s, pattern_sum(da.entry->served, db.entry->served)),
                        who + ": sum family violates the summed pattern");
            } catch (const std::exception& ex) {
                c.fail(who + ": threw " + ex.what());
            }
        }
    }

    // Restrict outside a pivot: odd/odd/even inputs turn even/odd, and
    // even/odd/odd inputs turn odd/even, one member shorter, members distinct.
    {
        struct Case {
            const CatalogEntry* entry;
            std::vector<Params> pool;
            Pattern expect;
        };
        std::vector<Case> cases;
        for (const auto& e : catalog()) {
            if (e.key == "c110:110@2") {
                cases.push_back({&e, e.sweep_params(24), Pattern::parse("01", 2)});
            } else if (e.key == "star_2uniform:011@2") {
                std::vector<Params> pool;
                for (const auto& p : e.sweep_params(24))
                    if (p.at("n") >= 3) pool.push_back(p);  // a 2-member ground has a full member
                cases.push_back({&e, std::move(pool), Pattern::parse("10", 2)});
            }
        }
        std::mt19937 rng(7104);
        for (int i = 0; i < 1000; ++i) {
            const Case& cs = cases[pick_int(rng, 0, static_cast<int>(cases.size()) - 1)];
            const Params& p = cs.pool[pick_int(rng, 0, static_cast<int>(cs.pool.size()) - 1)];
            std::string who = cs.entry->key + " case " + std::to_string(i);
            try {
                SetFamily sub = random_subfamily(build({cs.entry->id, p}), rng, 60, 1);
                if (!verify_pattern(sub, cs.entry->served)) {
                    c.fail(who + ": subfamily stopped satisfying the pattern");
                    continue;
                }
                int pivot = pick_int(rng, 1, static_cast<int>(sub.size()));
                long long pivot_size = sub.member(pivot - 1).count();
                RestrictResult r = restrict_outside(sub, pivot);
                c.check(r.family.size() == sub.size() - 1, who + ": size law broken");
                c.check(r.family.ground_size() == sub.ground_size() - pivot_size,
                        who + ": ground != n - |pivot|");
                if (!r.family.members_distinct()) {
                    c.fail(who + ": cut members collapsed");
                    continue;
                }
                c.check(verify_pattern(r.family, cs.expect),
                        who + ": restricted family violates " + cs.expect.to_string());
            } catch (const std::exception& ex) {
                c.fail(who + ": threw " + ex.what());
            }
        }
    }
}

// ---- 8: GF(2) rank and isotropic counts on odd-intersection families --------

void crit_gf2(Criterion& c) {
    // Witnesses of the odd-size/even-intersection sweep have independent rows.
    Pattern oddtown = Pattern::parse("10", 2);
    for (int n = 1; n <= 8; ++n) {
        SearchResult r = solved(c, oddtown, n);
        SetFamily w(GroundSet(n), r.witness);
        c.check(rank(characteristic_matrix(w)) == w.size(),
                at(oddtown, n) + ": witness rows are dependent");
    }

    // All-odd families: span dimension at most (n+1)/2 and exactly half the
    // span is isotropic.
    Pattern allodd = Pattern::parse("11", 2);
    std::vector<SetFamily> families;
    for (const auto& e : catalog()) {
        if (e.key != "dual_eventown:11@2") continue;
        for (const auto& p : e.sweep_params(8)) families.push_back(build({e.id, p}));
    }
    c.check(!families.empty(), "no catalog families for the all-odd checks");
    for (int n = 1; n <= 8; ++n) {
        SearchResult r = solved(c, allodd, n);
        families.emplace_back(GroundSet(n), r.witness);
    }
    for (size_t i = 0; i < families.size(); ++i) {
        const SetFamily& f = families[i];
        std::string who = "all-odd family #" + std::to_string(i) + " (n=" +
                          std::to_string(f.ground_size()) + ")";
        c.check(check_claim_a2(f), who + ": span dimension above (n+1)/2");
        IsotropicCount ic = isotropic_count(characteristic_matrix(f));
        c.check(ic.isotropic * 2 == ic.span_size, who + ": isotropic count != half the span");
    }
}

// ---- 9: growth classification is exactly the linear list and its flips ------

void crit_classify(Criterion& c) {
    for (int bits = 0; bits < 8; ++bits) {
        Pattern pat = mod2_pattern(bits, 3);
        c.check(classify_pattern(pat) == PatternClass::LinearType,
                pat.to_string() + ": expected LinearType");
    }

    std::set<std::string> expect = {"0000", "0010", "0101", "0111",
                                    "1000", "1010", "1101", "1111"};
    std::set<std::string> got;
    for (int bits = 0; bits < 16; ++bits) {
        Pattern pat = mod2_pattern(bits, 4);
        if (classify_pattern(pat) == PatternClass::LinearType) got.insert(pat.to_string());
    }
    c.check(got == expect, "four-entry LinearType set mismatch (got " +
                               std::to_string(got.size()) + " rows)");
}

// ---- 10: mod-3 table brackets, oracle agreement, exact rows -----------------

void crit_mod3(Criterion& c) {
    for (int bits = 0; bits < 8; ++bits) {
        Pattern pat = mod3_pattern(bits);
        for (int n = 1; n <= 7; ++n) {
            SearchResult r = solved(c, pat, n);
            auto ref = reference_value(pat, n);
            if (!ref) {
                c.fail(at(pat, n) + ": no tabulated value");
                continue;
            }
            c.check(r.best_size >= ref->lower, at(pat, n) + ": below the tabulated lower bound");
            if (ref->upper)
                c.check(r.best_size <= *ref->upper, at(pat, n) + ": above the tabulated upper bound");
            if (n <= 5) {
                SearchResult slow = oracle_max(pat, GroundSet(n));
                c.check(r.best_size == slow.best_size, at(pat, n) + ": search != oracle");
            }
            if (pat.to_string() == "*00")
                c.check(r.best_size == n, at(pat, n) + ": expected exactly n");
        }
    }

    const std::map<int, long long> exact_ss0 = {{4, 3}, {5, 3}, {6, 6}, {7, 6}};
    Pattern ss0 = Pattern::parse("**0", 3);
    for (const auto& [n, want] : exact_ss0) {
        SearchResult r = solved(c, ss0, n);
        c.check(r.best_size == want,
                at(ss0, n) + ": got " + std::to_string(r.best_size) + ", want " +
                    std::to_string(want));
    }

    // The two rows with exponential growth: the block-union construction
    // realizes 2^(n/3), checked as a pure lower bound.
    for (int n = 3; n <= 7; ++n) {
        SetFamily f = build({ConstructionId::PartitionTriples, {{"n", n}}});
        c.check(verify_pattern(f, Pattern::parse("000", 3)),
                "block unions@" + std::to_string(n) + " violate 000");
        c.check(f.size() == (1LL << (n / 3)),
                "block unions@" + std::to_string(n) + ": size != 2^(n/3)");
    }
}

} // namespace

int main() {
    struct Row {
        const char* label;
        void (*run)(Criterion&);
    };
    const Row rows[] = {
        {"catalog soundness", crit_catalog},
        {"three-entry mod-2 table", crit_table3},
        {"classical two-entry values", crit_classic2},
        {"four-entry linear rows", crit_table4_linear},
        {"four-entry sqrt rows", crit_table4_sqrt},
        {"oracle equivalence", crit_oracle},
        {"transform laws", crit_transforms},
        {"GF(2) reports", crit_gf2},
        {"growth classification", crit_classify},
        {"mod-3 table", crit_mod3},
    };

    int failed = 0;
    for (size_t i = 0; i < std::size(rows); ++i) {
        Criterion c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            rows[i].run(c);
        } catch (const std::exception& ex) {
            c.fail(std::string("unhandled exception: ") + ex.what());
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << (i + 1) << " (" << rows[i].label
                  << "): " << (c.failures ? "FAIL" : "PASS") << " [" << std::fixed;
        std::cout.precision(1);
        std::cout << secs << "s]" << std::endl;
        for (const auto& note : c.notes) std::cout << "  - " << note << std::endl;
        if (c.failures > static_cast<int>(c.notes.size()))
            std::cout << "  - ... and " << (c.failures - static_cast<int>(c.notes.size()))
                      << " more" << std::endl;
        if (c.failures) ++failed;
    }
    if (failed) {
        std::cout << failed << " of 10 criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all 10 criteria passed" << std::endl;
    return 0;
}
