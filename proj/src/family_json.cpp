#include "towns/family_json.hpp"

#include <fstream>
#include <set>
#include <stdexcept>
#include <vector>

namespace towns {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

long long int_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) fail(std::string("missing field \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
    return v.get<long long>();
}

std::vector<SubsetMask> parse_sets(const nlohmann::json& j, int n) {
    if (!j.is_array()) fail("\"sets\" must be an array of arrays");
    std::vector<SubsetMask> members;
    std::set<std::vector<int>> seen;
    for (const auto& set_json : j) {
        if (!set_json.is_array()) fail("each set must be an array of elements");
        std::vector<int> elems;
        for (const auto& e : set_json) {
            if (!e.is_number_integer()) fail("set elements must be integers");
            long long v = e.get<long long>();
            if (v < 1 || v > n)
                fail("element " + std::to_string(v) + " outside ground [1, " +
                     std::to_string(n) + "]");
            if (!elems.empty() && elems.back() >= v)
                fail("set elements must be strictly increasing");
            elems.push_back(static_cast<int>(v));
        }
        if (!seen.insert(elems).second) fail("duplicate sets are not allowed");
        members.push_back(SubsetMask::from_elements(n, elems));
    }
    return members;
}

Pattern parse_pattern(const nlohmann::json& entries, int modulus) {
    if (!entries.is_array()) fail("\"pattern\" must be an array");
    if (entries.empty()) fail("\"pattern\" must not be empty");
    std::vector<ResidueConstraint> out;
    for (const auto& e : entries) {
        if (e.is_string()) {
            if (e.get<std::string>() != "*")
                fail("pattern entries must be residues or \"*\"");
            out.push_back(ResidueConstraint::nonzero());
        } else if (e.is_number_integer()) {
            long long r = e.get<long long>();
            if (r < 0 || r >= modulus)
                fail("pattern residue " + std::to_string(r) + " outside [0, " +
                     std::to_string(modulus) + ")");
            out.push_back(ResidueConstraint::exact(static_cast<int>(r)));
        } else {
            fail("pattern entries must be residues or \"*\"");
        }
    }
    return Pattern(modulus, std::move(out));
}

} // namespace

nlohmann::ordered_json family_to_json(const SetFamily& family, const Pattern* pattern) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["n"] = family.ground_size();
    if (pattern) {
        j["modulus"] = pattern->modulus();
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& e : pattern->entries()) {
            if (e.is_exact())
                entries.push_back(e.residue());
            else
                entries.push_back("*");
        }
        j["pattern"] = std::move(entries);
    }
    nlohmann::ordered_json sets = nlohmann::ordered_json::array();
    for (const auto& m : family.members()) sets.push_back(m.elements());
    j["sets"] = std::move(sets);
    return j;
}

FamilyFile family_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail("family file must be a JSON object");
    long long version = int_field(j, "version");
    if (version != 1) fail("unsupported version " + std::to_string(version));

    long long n = int_field(j, "n");
    if (n < 1 || n > ground_cap())
        fail("ground size " + std::to_string(n) + " outside [1, " +
             std::to_string(ground_cap()) + "]");

    if (!j.contains("sets")) fail("missing field \"sets\"");
    GroundSet ground(static_cast<int>(n));
    SetFamily family(ground, parse_sets(j.at("sets"), ground.n));

    std::optional<Pattern> pattern;
    const bool has_modulus = j.contains("modulus");
    const bool has_pattern = j.contains("pattern");
    if (has_modulus != has_pattern)
        fail("\"modulus\" and \"pattern\" must be given together");
    if (has_modulus) {
        long long modulus = int_field(j, "modulus");
        if (modulus < 2) fail("modulus must be at least 2");
        pattern = parse_pattern(j.at("pattern"), static_cast<int>(modulus));
    }
    return FamilyFile{std::move(family), std::move(pattern)};
}

FamilyFile read_family_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        fail(path + ": " + e.what());
    }
    return family_from_json(j);
}

void write_family_file(const std::string& path, const SetFamily& family,
                       const Pattern* pattern) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open " + path + " for writing");
    out << family_to_json(family, pattern).dump() << "\n";
    if (!out) fail("failed writing " + path);
}

} // namespace towns
