#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "towns/family_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace towns;
using testutil::fam;
using testutil::pat;
using nlohmann::json;

TEST_CASE("serialization uses the canonical key order") {
    auto f = fam(3, {{1, 2}, {3}});
    auto p = pat("10");
    CHECK(family_to_json(f, &p).dump() ==
          R"({"version":1,"n":3,"modulus":2,"pattern":[1,0],"sets":[[1,2],[3]]})");
    CHECK(family_to_json(f).dump() == R"({"version":1,"n":3,"sets":[[1,2],[3]]})");

    auto q = pat("*0", 3);
    CHECK(family_to_json(fam(2, {{}}), &q).dump() ==
          R"({"version":1,"n":2,"modulus":3,"pattern":["*",0],"sets":[[]]})");
}

TEST_CASE("round-trip preserves family and pattern") {
    auto f = fam(5, {{}, {1, 3, 5}, {2, 4}});
    auto p = pat("0*1", 3);
    auto j = family_to_json(f, &p);
    auto back = family_from_json(j);
    CHECK(back.family.ground().size() == 5);
    REQUIRE(back.family.size() == 3);
    CHECK(back.family.members()[1].elements() == std::vector<int>{1, 3, 5});
    REQUIRE(back.pattern.has_value());
    CHECK(*back.pattern == p);

    auto bare = family_from_json(family_to_json(f));
    CHECK_FALSE(bare.pattern.has_value());
    CHECK(bare.family.size() == 3);
}

TEST_CASE("strict load rejects malformed input") {
    auto ok = json::parse(R"({"version":1,"n":3,"sets":[[1,2],[3]]})");
    CHECK_NOTHROW(family_from_json(ok));

    for (const char* text : {
             R"({"version":2,"n":3,"sets":[[1]]})",          // unknown version
             R"({"n":3,"sets":[[1]]})",                      // missing version
             R"({"version":1,"sets":[[1]]})",                // missing n
             R"({"version":1,"n":3})",                       // missing sets
             R"({"version":1,"n":0,"sets":[]})",             // bad ground
             R"({"version":1,"n":3,"sets":[[2,1]]})",        // not increasing
             R"({"version":1,"n":3,"sets":[[1,1]]})",        // repeated element
             R"({"version":1,"n":3,"sets":[[4]]})",          // out of range
             R"({"version":1,"n":3,"sets":[[0]]})",          // below range
             R"({"version":1,"n":3,"sets":[[1],[1]]})",      // duplicate sets
             R"({"version":1,"n":3,"sets":[["a"]]})",        // non-integer element
             R"({"version":1,"n":3,"modulus":2,"sets":[[1]]})",      // modulus alone
             R"({"version":1,"n":3,"pattern":[1,0],"sets":[[1]]})",  // pattern alone
             R"({"version":1,"n":3,"modulus":2,"pattern":[2,0],"sets":[[1]]})",
             R"({"version":1,"n":3,"modulus":1,"pattern":[0],"sets":[[1]]})",
             R"({"version":1,"n":3,"modulus":2,"pattern":[],"sets":[[1]]})",
             R"({"version":1,"n":3,"modulus":2,"pattern":["x"],"sets":[[1]]})",
         }) {
        CAPTURE(text);
        CHECK_THROWS_AS(family_from_json(json::parse(text)), std::invalid_argument);
    }
}

TEST_CASE("nonzero entries round-trip as stars") {
    auto j = json::parse(R"({"version":1,"n":4,"modulus":3,"pattern":[0,"*"],"sets":[[1,2,3]]})");
    auto f = family_from_json(j);
    REQUIRE(f.pattern.has_value());
    CHECK(f.pattern->entry(2) == ResidueConstraint::nonzero());
    CHECK(f.pattern->to_string() == "0*");
}

TEST_CASE("file round-trip writes compact JSON with a final newline") {
    std::string path = "test_family_json_tmp.json";
    auto f = fam(4, {{1, 4}, {2}});
    auto p = pat("00");
    write_family_file(path, f, &p);

    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    CHECK(text == R"({"version":1,"n":4,"modulus":2,"pattern":[0,0],"sets":[[1,4],[2]]})"
                      "\n");

    auto back = read_family_file(path);
    CHECK(back.family.size() == 2);
    REQUIRE(back.pattern.has_value());
    CHECK(*back.pattern == p);
    std::remove(path.c_str());

    CHECK_THROWS(read_family_file("does_not_exist_anywhere.json"));
}
