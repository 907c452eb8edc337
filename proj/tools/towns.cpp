// Command-line front end: verification, construction, transforms, exact
// search, GF(2) reports, and bound tables for intersection-pattern families.
//
// Exit codes: 0 success / satisfied / optimal; 1 pattern violated or a
// table row outside its bracket; 2 usage, IO, or parameter errors; 3 time
// limit hit before optimality was proved.

#include "towns/constructions.hpp"
#include "towns/family_json.hpp"
#include "towns/gf2.hpp"
#include "towns/pattern_ops.hpp"
#include "towns/reference.hpp"
#include "towns/search.hpp"
#include "towns/transforms.hpp"
#include "towns/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

ordered_json masks_json(const std::vector<towns::SubsetMask>& masks) {
    ordered_json a = ordered_json::array();
    for (const auto& m : masks) a.push_back(m.elements());
    return a;
}

// The pattern to check a family file against: an explicit --pattern wins,
// otherwise the one embedded in the file.
towns::Pattern pick_pattern(const towns::FamilyFile& file, const std::string& pattern_str,
                            int modulus) {
    if (!pattern_str.empty()) return towns::Pattern::parse(pattern_str, modulus);
    if (file.pattern) return *file.pattern;
    throw std::invalid_argument("no --pattern given and none embedded in the family file");
}

int cmd_verify(const std::string& family_path, const std::string& pattern_str, int modulus) {
    towns::FamilyFile file = towns::read_family_file(family_path);
    towns::Pattern pattern = pick_pattern(file, pattern_str, modulus);
    auto violation = towns::find_violation(file.family, pattern);
    if (!violation) {
        std::cout << "SATISFIED\n";
        return 0;
    }
    ordered_json j;
    j["level"] = violation->level;
    j["indices"] = violation->indices;
    j["observed_size"] = violation->observed_size;
    j["required"] = violation->required.to_string();
    std::cout << j.dump() << "\n";
    return 1;
}

int cmd_construct(std::string name, const std::vector<std::string>& params,
                  const std::string& out_path) {
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    auto id = towns::construction_from_string(name);
    if (!id) throw std::invalid_argument("unknown construction \"" + name + "\"");

    towns::Params p;
    for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("parameter \"" + kv + "\" is not key=value");
        size_t used = 0;
        long long value = std::stoll(kv.substr(eq + 1), &used);
        if (used != kv.size() - eq - 1)
            throw std::invalid_argument("parameter \"" + kv + "\" has a non-integer value");
        p[kv.substr(0, eq)] = value;
    }

    towns::SetFamily family = towns::build({*id, p});
    if (!out_path.empty()) towns::write_family_file(out_path, family);

    ordered_json j;
    j["name"] = name;
    j["size"] = family.size();
    j["ground"] = family.ground_size();
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_search(const std::string& pattern_str, int modulus, int n, double time_limit,
               bool oracle, int workers) {
    towns::Pattern pattern = towns::Pattern::parse(pattern_str, modulus);
    towns::GroundSet ground(n);
    towns::SearchConfig config;
    if (time_limit > 0) config.time_limit_seconds = time_limit;
    config.worker_count = workers;

    towns::SearchResult r =
        oracle ? towns::oracle_max(pattern, ground, config) : towns::max_family(pattern, ground, config);

    ordered_json j;
    j["pattern"] = pattern.to_string();
    j["modulus"] = modulus;
    j["n"] = n;
    j["best_size"] = r.best_size;
    j["optimal"] = r.optimal;
    j["nodes_expanded"] = r.nodes_expanded;
    j["elapsed_ms"] = r.elapsed.count();
    j["witness"] = masks_json(r.witness);
    std::cout << j.dump() << "\n";
    return r.optimal ? 0 : 3;
}

std::vector<towns::Pattern> suite_patterns(const std::string& suite) {
    auto all_rows = [](int arity, int modulus) {
        std::vector<towns::Pattern> rows;
        for (int bits = 0; bits < (1 << arity); ++bits) {
            std::string text;
            for (int i = arity - 1; i >= 0; --i) {
                bool hot = bits >> i & 1;
                text += modulus == 2 ? (hot ? '1' : '0') : (hot ? '*' : '0');
            }
            rows.push_back(towns::Pattern::parse(text, modulus));
        }
        return rows;
    };
    if (suite == "mod2-k2") return all_rows(2, 2);
    if (suite == "mod2-k3") return all_rows(3, 2);
    if (suite == "mod2-k4") return all_rows(4, 2);
    if (suite == "mod3-k3") return all_rows(3, 3);
    throw std::invalid_argument("unknown suite \"" + suite + "\"");
}

struct TableRow {
    std::string suite;
    std::string pattern;
    int modulus = 0;
    int n = 0;
    std::optional<long long> ref_lower;
    std::optional<long long> ref_upper;
    std::optional<long long> search_value;
    std::optional<bool> optimal;
    std::string match;  // yes / no / untested
};

std::string cell(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string cell(const std::optional<bool>& v) {
    return v ? (*v ? "true" : "false") : std::string();
}

void print_rows(const std::vector<TableRow>& rows, const std::string& format) {
    static const char* kColumns[] = {"suite",     "pattern",      "modulus",
                                     "n",         "ref_lower",    "ref_upper",
                                     "search_value", "optimal",   "match"};
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["suite"] = r.suite;
            j["pattern"] = r.pattern;
            j["modulus"] = r.modulus;
            j["n"] = r.n;
            j["ref_lower"] = r.ref_lower ? ordered_json(*r.ref_lower) : ordered_json(nullptr);
            j["ref_upper"] = r.ref_upper ? ordered_json(*r.ref_upper) : ordered_json(nullptr);
            j["search_value"] =
                r.search_value ? ordered_json(*r.search_value) : ordered_json(nullptr);
            j["optimal"] = r.optimal ? ordered_json(*r.optimal) : ordered_json(nullptr);
            j["match"] = r.match;
            out.push_back(std::move(j));
        }
        std::cout << out.dump(2) << "\n";
        return;
    }

    auto fields = [](const TableRow& r) {
        return std::vector<std::string>{r.suite,
                                        r.pattern,
                                        std::to_string(r.modulus),
                                        std::to_string(r.n),
                                        cell(r.ref_lower),
                                        cell(r.ref_upper),
                                        cell(r.search_value),
                                        cell(r.optimal),
                                        r.match};
    };
    if (format == "csv") {
        for (size_t i = 0; i < std::size(kColumns); ++i)
            std::cout << (i ? "," : "") << kColumns[i];
        std::cout << "\n";
        for (const auto& r : rows) {
            auto f = fields(r);
            for (size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
            std::cout << "\n";
        }
        return;
    }
    // markdown
    for (size_t i = 0; i < std::size(kColumns); ++i) std::cout << "| " << kColumns[i] << " ";
    std::cout << "|\n";
    for (size_t i = 0; i < std::size(kColumns); ++i) std::cout << "|---";
    std::cout << "|\n";
    for (const auto& r : rows) {
        auto f = fields(r);
        for (const auto& v : f) std::cout << "| " << v << " ";
        std::cout << "|\n";
    }
}

int cmd_table(const std::string& suite, int n_min, int n_max, const std::string& format,
              double time_limit, int workers) {
    if (n_min < 1 || n_min > n_max)
        throw std::invalid_argument("need 1 <= n-min <= n-max");

    std::vector<TableRow> rows;
    bool any_mismatch = false;
    for (const auto& pattern : suite_patterns(suite)) {
        for (int n = n_min; n <= n_max; ++n) {
            TableRow row;
            row.suite = suite;
            row.pattern = pattern.to_string();
            row.modulus = pattern.modulus();
            row.n = n;

            try {
                if (auto ref = towns::reference_value(pattern, n)) {
                    row.ref_lower = ref->lower;
                    row.ref_upper = ref->upper;
                }
            } catch (const std::overflow_error&) {
                // exponential cell past the representable range: brackets stay blank
            }

            if (n <= 24) {
                towns::SearchConfig config;
                if (time_limit > 0) config.time_limit_seconds = time_limit;
                config.worker_count = workers;
                towns::SearchResult r = towns::max_family(pattern, towns::GroundSet(n), config);
                row.search_value = r.best_size;
                row.optimal = r.optimal;
            }

            if (!row.search_value || !*row.optimal) {
                row.match = "untested";
            } else {
                bool ok = true;
                if (row.ref_lower && *row.search_value < *row.ref_lower) ok = false;
                if (row.ref_upper && *row.search_value > *row.ref_upper) ok = false;
                row.match = ok ? "yes" : "no";
                if (!ok) any_mismatch = true;
            }
            rows.push_back(std::move(row));
        }
    }
    print_rows(rows, format);
    return any_mismatch ? 1 : 0;
}

int cmd_classify(const std::string& pattern_str, int modulus) {
    towns::Pattern pattern = towns::Pattern::parse(pattern_str, modulus);
    auto c = towns::classify_pattern(pattern);
    std::cout << (c == towns::PatternClass::LinearType ? "LinearType" : "SqrtBounded") << "\n";
    return 0;
}

std::vector<int> parse_member_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("member list entry \"" + item + "\" is not an integer");
        out.push_back(v);
    }
    return out;
}

int cmd_transform(const std::string& op, const std::string& family_path,
                  const std::string& family2_path, const std::string& pattern_str, int modulus,
                  const std::string& members_str, int pivot, const std::string& out_path) {
    towns::FamilyFile file = towns::read_family_file(family_path);

    ordered_json j;
    j["op"] = op;

    auto finish = [&](const towns::SetFamily& family, const towns::Pattern* pattern) {
        // Duplicate members cannot round-trip through a family file, so a
        // multiset result is written deduplicated; the summary keeps both sizes.
        towns::SetFamily distinct =
            family.members_distinct() ? family : family.deduplicated();
        if (!out_path.empty()) towns::write_family_file(out_path, distinct, pattern);
        j["size"] = family.size();
        if (!family.members_distinct()) j["distinct_size"] = distinct.size();
        j["ground"] = family.ground_size();
        if (pattern) {
            j["pattern"] = pattern->to_string();
            j["modulus"] = pattern->modulus();
        }
        std::cout << j.dump() << "\n";
        return 0;
    };

    if (op == "trace") {
        towns::Pattern pattern = pick_pattern(file, pattern_str, modulus);
        std::vector<int> chosen = parse_member_list(members_str);
        towns::TraceResult r = towns::trace(file.family, pattern, chosen);
        j["relabel"] = r.relabel;
        return finish(r.family, &r.suffix);
    }
    if (op == "dualize") {
        towns::SetFamily out = towns::dualize(file.family);
        std::optional<towns::Pattern> pattern;
        if (file.pattern && file.pattern->modulus() == 2)
            pattern = towns::pattern_dual(*file.pattern);
        return finish(out, pattern ? &*pattern : nullptr);
    }
    if (op == "partition-sum") {
        if (family2_path.empty())
            throw std::invalid_argument("partition-sum needs --family2");
        towns::FamilyFile other = towns::read_family_file(family2_path);
        if (!file.pattern || !other.pattern)
            throw std::invalid_argument(
                "partition-sum needs patterns embedded in both family files");
        towns::SetFamily out =
            towns::partition_sum(file.family, other.family, *file.pattern, *other.pattern);
        towns::Pattern sum = towns::pattern_sum(*file.pattern, *other.pattern);
        return finish(out, &sum);
    }
    if (op == "restrict-outside") {
        towns::RestrictResult r = towns::restrict_outside(file.family, pivot);
        j["relabel"] = r.relabel;
        return finish(r.family, nullptr);
    }
    if (op == "complement") {
        return finish(towns::complement_family(file.family), nullptr);
    }
    throw std::invalid_argument("unknown transform op \"" + op + "\"");
}

int cmd_gf2_report(const std::string& family_path) {
    towns::FamilyFile file = towns::read_family_file(family_path);
    towns::Gf2Matrix m = towns::characteristic_matrix(file.family);
    int r = towns::rank(m);
    auto dims = towns::span_dims(m);

    ordered_json j;
    j["rows"] = static_cast<long long>(m.rows.size());
    j["cols"] = m.cols;
    j["rank"] = r;
    j["span_dim"] = dims.first;
    j["complement_dim"] = dims.second;
    if (r <= 20) {
        auto ic = towns::isotropic_count(m);
        j["span_size"] = ic.span_size;
        j["isotropic"] = ic.isotropic;
    }
    j["half_dim_bound"] = towns::check_claim_a2(file.family);
    std::cout << j.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersection-pattern set families: verify, construct, transform, search"};
    app.require_subcommand(1);

    std::string family_path, family2_path, pattern_str, out_path, name, suite, format = "csv";
    std::string op, members_str;
    std::vector<std::string> params;
    int modulus = 2, n = 0, n_min = 0, n_max = 0, workers = 1, pivot = 0;
    double time_limit = 0;
    bool oracle = false;

    auto* verify = app.add_subcommand("verify", "check a family file against a pattern");
    verify->add_option("--family", family_path, "family JSON file")->required();
    verify->add_option("--pattern", pattern_str, "pattern string, e.g. 110 or 00*");
    verify->add_option("--mod", modulus, "modulus (default 2)");

    auto* construct = app.add_subcommand("construct", "materialize a named construction");
    construct->add_option("--name", name, "construction name, e.g. c110")->required();
    construct->add_option("--params", params, "integer parameters as key=value");
    construct->add_option("--out", out_path, "write the family JSON here");

    auto* search = app.add_subcommand("search", "exact maximum family size");
    search->add_option("--pattern", pattern_str, "pattern string")->required();
    search->add_option("--mod", modulus, "modulus (default 2)");
    search->add_option("--n", n, "ground-set size")->required();
    search->add_option("--time-limit", time_limit, "seconds; 0 = unlimited");
    search->add_flag("--oracle", oracle, "use the brute-force oracle (n <= 5)");
    search->add_option("--workers", workers, "parallel workers (default 1)");

    auto* table = app.add_subcommand("table", "bounds vs. search over a pattern suite");
    table->add_option("--suite", suite, "mod2-k2, mod2-k3, mod2-k4, or mod3-k3")
        ->required()
        ->check(CLI::IsMember({"mod2-k2", "mod2-k3", "mod2-k4", "mod3-k3"}));
    table->add_option("--n-min", n_min, "first ground size")->required();
    table->add_option("--n-max", n_max, "last ground size")->required();
    table->add_option("--format", format, "csv, md, or json (default csv)")
        ->check(CLI::IsMember({"csv", "md", "json"}));
    table->add_option("--time-limit", time_limit, "seconds per cell (default 60)");
    table->add_option("--workers", workers, "parallel workers per cell");

    auto* classify = app.add_subcommand("classify", "growth class of a pattern");
    classify->add_option("--pattern", pattern_str, "pattern string")->required();
    classify->add_option("--mod", modulus, "modulus (default 2)");

    auto* transform = app.add_subcommand("transform", "apply a family transform");
    transform->add_option("--op", op, "trace, dualize, partition-sum, restrict-outside, complement")
        ->required()
        ->check(CLI::IsMember({"trace", "dualize", "partition-sum", "restrict-outside",
                               "complement"}));
    transform->add_option("--family", family_path, "input family JSON file")->required();
    transform->add_option("--family2", family2_path, "second input (partition-sum)");
    transform->add_option("--pattern", pattern_str, "pattern (trace; overrides embedded)");
    transform->add_option("--mod", modulus, "modulus (default 2)");
    transform->add_option("--members", members_str, "chosen members for trace, e.g. 1,2");
    transform->add_option("--pivot", pivot, "pivot member for restrict-outside")->default_val(1);
    transform->add_option("--out", out_path, "write the result family here");

    auto* gf2 = app.add_subcommand("gf2-report", "rank and span report over GF(2)");
    gf2->add_option("--family", family_path, "family JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(family_path, pattern_str, modulus);
        if (app.got_subcommand(construct)) return cmd_construct(name, params, out_path);
        if (app.got_subcommand(search))
            return cmd_search(pattern_str, modulus, n, time_limit, oracle, workers);
        if (app.got_subcommand(table)) {
            if (!table->count("--time-limit")) time_limit = 60;
            return cmd_table(suite, n_min, n_max, format, time_limit, workers);
        }
        if (app.got_subcommand(classify)) return cmd_classify(pattern_str, modulus);
        if (app.got_subcommand(transform))
            return cmd_transform(op, family_path, family2_path, pattern_str, modulus,
                                 members_str, pivot, out_path);
        if (app.got_subcommand(gf2)) return cmd_gf2_report(family_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
