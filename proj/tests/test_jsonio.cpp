#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "springergreen/jsonio.hpp"

using namespace sg;

TEST_CASE("polynomial json round trip") {
    IntPoly p = IntPoly::monomial(3, Int("123456789012345678901234567890"));
    p += IntPoly(-7);
    const json j = poly_to_json(p);
    CHECK(j["coeffs"][0] == "-7");
    CHECK(poly_from_json(j) == p);
    CHECK(poly_from_json(poly_to_json(IntPoly())).is_zero());
    CHECK_THROWS_AS(poly_from_json(json::array()), ParseError);
}

TEST_CASE("symfunc json round trip") {
    const SymFunc f = qprime(Partition{2, 1});
    const json j = symfunc_to_json(f);
    CHECK(j["degree"] == 3);
    CHECK(symfunc_from_json(j) == f);
}

TEST_CASE("chartable json round trip reproduces the table") {
    for (auto [fam, n] : {std::pair{WeylFamily::A, 4}, {WeylFamily::BC, 3}, {WeylFamily::D, 3}}) {
        const WeylTable& t = weyl_table(fam, n);
        const json j = chartable_to_json(t);
        const auto back = chartable_from_json(j);
        REQUIRE(back.has_value());
        CHECK(back->family == t.family);
        CHECK(back->n == t.n);
        CHECK(back->order == t.order);
        CHECK(back->chi == t.chi);
        REQUIRE(back->classes.size() == t.classes.size());
        for (size_t i = 0; i < t.classes.size(); ++i) {
            CHECK(back->classes[i].label == t.classes[i].label);
            CHECK(back->classes[i].class_size == t.classes[i].class_size);
            CHECK(back->classes[i].centralizer_order == t.classes[i].centralizer_order);
        }
        CHECK(back->irreps == t.irreps);
    }
}

TEST_CASE("chartable corruption and version checks") {
    const WeylTable& t = weyl_table(WeylFamily::BC, 2);
    json j = chartable_to_json(t);
    json mutated = j;
    mutated["values"][0][0] = "999";
    CHECK(!chartable_from_json(mutated).has_value()); // checksum mismatch
    json reversioned = j;
    reversioned["format_version"] = 999;
    CHECK(!chartable_from_json(reversioned).has_value());
    CHECK(!chartable_from_json(json::object()).has_value());
    CHECK(chartable_from_json(j).has_value());
}

TEST_CASE("csv dump shape") {
    const std::string csv = chartable_to_csv(weyl_table(WeylFamily::BC, 2));
    // 3 header rows + 5 irreps
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
    CHECK(csv.rfind("label,", 0) == 0);
}

TEST_CASE("disk cache round trip") {
    const std::string dir = "sg_cache_test_dir";
    std::filesystem::remove_all(dir);
    const WeylTable& fresh = cached_weyl_table(WeylFamily::BC, 2, dir);
    CHECK(std::filesystem::exists(dir + "/BC2.json"));
    CHECK(fresh.order == 8);
    // corrupt the file; the loader must recompute rather than trust it
    {
        std::ofstream out(dir + "/BC2.json");
        out << "{\"format_version\": 1, \"junk\": true}";
    }
    // separate key to bypass the in-process memo of the first load
    const WeylTable& again = cached_weyl_table(WeylFamily::BC, 2, "./" + dir);
    CHECK(again.order == 8);
    CHECK(again.chi == fresh.chi);
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all("./" + dir);
}

TEST_CASE("report json schema") {
    const Report r = verify_main_consistency(LieType::C, 2);
    const json j = report_to_json(r);
    CHECK(j["suite"] == "main-consistency");
    CHECK(j["type"] == "C");
    CHECK(j["n"] == 2);
    CHECK(j["pass"] == true);
    CHECK(j["cases"].is_array());
    CHECK(!j["cases"].empty());
    for (const json& c : j["cases"]) {
        CHECK(c.contains("lambda"));
        CHECK(c.contains("pass"));
    }
}
