#pragma once

#include "towns/family.hpp"
#include "towns/pattern.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace towns {

struct FamilyFile {
    SetFamily family;
    std::optional<Pattern> pattern;
};

// Canonical form: {"version":1,"n":...,"modulus":...,"pattern":[...],
// "sets":[[...],...]} with keys in that order; modulus/pattern omitted when
// absent; each set strictly increasing 1-based; pattern entries are integer
// residues or the string "*".
nlohmann::ordered_json family_to_json(const SetFamily& family,
                                      const Pattern* pattern = nullptr);

// Strict load: version must be 1; duplicate sets, unsorted sets, or
// out-of-range elements are errors (std::invalid_argument).
FamilyFile family_from_json(const nlohmann::json& j);

FamilyFile read_family_file(const std::string& path);

// Writes compact JSON plus a trailing newline.
void write_family_file(const std::string& path, const SetFamily& family,
                       const Pattern* pattern = nullptr);

} // namespace towns
