#include "cdga/dsl.hpp"
#include "cdga/cohomology.hpp"
#include "cdga/errors.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace cdga;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(CDGA_FIXTURES) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// position of the ParseError a snippet produces
std::pair<int, int> error_at(const std::string& text) {
    try {
        parse_algebra_raw(text);
    } catch (const ParseError& e) {
        return {e.line(), e.col()};
    }
    FAIL("expected a parse error");
    return {0, 0};
}

} // namespace

TEST_CASE("fixture algebras parse") {
    for (const char* name : {"kt.alg", "s2.alg", "cp2.alg", "hopf.alg",
                             "contractible_pair.alg"}) {
        AlgebraSpec spec = parse_algebra(fixture(name));
        CHECK(!spec.name.empty());
    }
    AlgebraSpec kt = parse_algebra(fixture("kt.alg"));
    CHECK(kt.name == "kt");
    CHECK(kt.cdga.algebra().size() == 4);
    CHECK(kt.cdga.diff_of(2).str() == "a*b");

    // the broken fixture tokenizes and parses raw, but fails d*d = 0
    RawAlgebra raw = parse_algebra_raw(fixture("bad_d2.alg"));
    CHECK(raw.name == "broken");
    CHECK_THROWS_AS(parse_algebra(fixture("bad_d2.alg")), InputError);
}

TEST_CASE("rendering is canonical and parse inverts it") {
    AlgebraSpec kt = parse_algebra(fixture("kt.alg"));
    std::string text = render_algebra(kt);
    CHECK(text == "algebra kt\n"
                  "gen a : 1\n"
                  "gen b : 1\n"
                  "gen c : 1\n"
                  "gen e : 1\n"
                  "d c = a*b\n");
    AlgebraSpec again = parse_algebra(text);
    CHECK(render_algebra(again) == text);
}

TEST_CASE("differentials may reference later generators") {
    AlgebraSpec spec = parse_algebra("algebra fwd\nd y = v^2\ngen v : 2\ngen y : 3\n");
    CHECK(spec.cdga.diff_of(1).str() == "v^2");
}

TEST_CASE("a generator may be named d") {
    AlgebraSpec spec = parse_algebra("algebra odd\ngen d : 3\ngen v : 4\nd d = v\n");
    CHECK(spec.cdga.diff_of(0).str() == "v");
    CHECK(cohomology_table(spec.cdga, 5).betti() ==
          std::vector<long long>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("parse errors carry positions") {
    CHECK(error_at("") == std::pair{1, 1});
    CHECK(error_at("gen v : 2\n") == std::pair{1, 1}); // before 'algebra'
    CHECK(error_at("algebra a\nalgebra b\n") == std::pair{2, 1});
    CHECK(error_at("algebra t\ngen v 2\n") == std::pair{2, 7});   // missing ':'
    CHECK(error_at("algebra t\ngen v : 2\nd v = w\n") == std::pair{3, 7});
    CHECK(error_at("algebra t\ngen v : 2\nd v = v @ v\n") == std::pair{3, 9});
    CHECK(error_at("algebra t\ngen v : 2\nd v =\n") == std::pair{3, 6});
    CHECK(error_at("algebra t\ngen v : 2\nd w = v\n") == std::pair{3, 3});
    CHECK(error_at("algebra t\ngen v : 2\ngen y : 3\nd y = v^2\nd y = v^2\n") ==
          std::pair{5, 3});
    CHECK(error_at("algebra t\nfrobnicate v\n") == std::pair{2, 1});
    CHECK(error_at("algebra t\ngen v : 2\ngen v : 4\n") == std::pair{1, 1});
    CHECK(error_at("algebra t\ngen v : 0\n") == std::pair{1, 1});

    CHECK_THROWS_AS(parse_algebra_raw("algebra t\ngen v : 2\nd v = v^0\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_raw("algebra t\ngen v : 2\nd v = v^600\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_raw("algebra t\ngen v : 2\nd v = 1/0*v\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    AlgebraSpec spec = parse_algebra(
        "# leading comment\n\nalgebra c   # trailing comment\n\ngen v : 2  # degree two\n");
    CHECK(spec.name == "c");
    CHECK(spec.cdga.algebra().size() == 1);
}

TEST_CASE("expression parsing") {
    GradedAlgebra alg = GradedAlgebra::create({{"v", 2}, {"y", 3}, {"w", 1}});
    CHECK(parse_element(alg, "3/2*v^2*y - w").str() == "3/2*v^2*y - w");
    CHECK(parse_element(alg, "v*v").str() == "v^2");
    CHECK(parse_element(alg, "2*v + v").str() == "3*v");
    CHECK(parse_element(alg, "v - v").is_zero());
    CHECK(parse_element(alg, "-v").str() == "-v");
    CHECK(parse_element(alg, "w*y").str() == "-y*w"); // canonical order flips the sign
    CHECK(parse_element(alg, "1/2*2*v").str() == "v");

    std::vector<std::string> warnings;
    CHECK(parse_element(alg, "y*y + v", &warnings).str() == "v");
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("collapses to zero") != std::string::npos);

    CHECK_THROWS_AS(parse_element(alg, "v +"), ParseError);
    CHECK_THROWS_AS(parse_element(alg, "q"), ParseError);
    CHECK_THROWS_AS(parse_element(alg, "v v"), ParseError); // missing operator
    CHECK_THROWS_AS(parse_element(alg, ""), ParseError);
    CHECK_THROWS_AS(parse_element(alg, "3/"), ParseError);
}

TEST_CASE("ring class expressions") {
    FiniteRing ring = extract_ring(parse_algebra(fixture("cp2.alg")).cdga, 4);
    auto coords = parse_ring_class(ring, "h2_0 - 2*h4_0");
    CHECK(coords == std::vector<Rational>{0, 1, -2});
    CHECK(parse_ring_class(ring, "1/2*h2_0 + h2_0") ==
          std::vector<Rational>{0, Rational(3) / 2, 0});
    CHECK(parse_ring_class(ring, "-h0_0") == std::vector<Rational>{-1, 0, 0});

    CHECK_THROWS_AS(parse_ring_class(ring, "h9_0"), ParseError);
    CHECK_THROWS_AS(parse_ring_class(ring, ""), ParseError);
    CHECK_THROWS_AS(parse_ring_class(ring, "+h2_0"), ParseError);
    CHECK_THROWS_AS(parse_ring_class(ring, "2*"), ParseError);
    CHECK_THROWS_AS(parse_ring_class(ring, "h2_0 h4_0"), ParseError);
}
