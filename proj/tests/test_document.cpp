#include "cdga/document.hpp"

#include <doctest.h>

using namespace cdga;

TEST_CASE("fnv1a64 known values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64_hex("") == "0xcbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "0xaf63dc4c8601ec8c");
    CHECK(fnv1a64_hex("abc") != fnv1a64_hex("acb"));
}

TEST_CASE("result documents serialize with stable key order") {
    ResultDocument doc;
    doc.command = {"cdga", "cohomology", "--input", "x.alg"};
    doc.inputs.push_back({"x.alg", fnv1a64_hex("content")});
    doc.result = Json{{"betti", {1, 0, 1}}};
    doc.warnings.push_back("note");
    doc.verdict_negative = true;

    Json j = doc.to_json();
    std::string dumped = j.dump();
    CHECK(doc.to_json().dump() == dumped); // bit-for-bit repeatable
    CHECK(j["command"].size() == 4);
    CHECK(j["inputs"][0]["fnv1a64"] == "0x420c75b526b35282");
    CHECK(j["verdict_negative"] == true);

    // key order is fixed by construction, not alphabetical
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"tool", "command", "inputs", "result",
                                           "warnings", "verdict_negative"});
}

TEST_CASE("report serializations carry their payloads") {
    SasakianVerdict v;
    v.possibly_sasakian = false;
    v.dimension = 5;
    v.half = 2;
    v.offending = {1, 3};
    Json jv = to_json(v);
    CHECK(jv["possibly_sasakian"] == false);
    CHECK(jv["offending_degrees"] == Json({1, 3}));
    CHECK(jv["checked_odd_degrees_up_to"] == 3);

    PartialBetti pb{1, std::nullopt, 2};
    Json jb = to_json(pb);
    REQUIRE(jb.is_array());
    CHECK(jb[0] == 1);
    CHECK(jb[1].is_null());
    CHECK(jb[2] == 2);

    FatnessCertificate fc;
    fc.certified = true;
    fc.bound = Rational(1) / 2;
    Json jf = to_json(fc);
    CHECK(jf["certified"] == true);
    CHECK(jf["bound"] == "1/2");

    CatalogEntry entry = catalog_lookup("cpn(2)");
    Json je = catalog_entry_json(entry);
    CHECK(je["name"] == "cpn(2)");
    CHECK(je["dimension"] == 4);
    REQUIRE(je.contains("model"));
    // the rendered model must parse back, with the name made identifier-safe
    AlgebraSpec spec = parse_algebra(je["model"].get<std::string>());
    CHECK(spec.name == "cpn_2_");
}
