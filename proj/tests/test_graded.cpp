#include "cdga/errors.hpp"
#include "cdga/graded.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cdga;

namespace {

GradedAlgebra two_three() {
    return GradedAlgebra::create({{"v", 2}, {"y", 3}});
}

GradedAlgebra four_ones() {
    return GradedAlgebra::create({{"a", 1}, {"b", 1}, {"c", 1}, {"e", 1}});
}

std::string basis_string(const GradedAlgebra& alg, int p) {
    std::string s;
    for (const auto& m : alg.basis(p)) {
        if (!s.empty()) s += " ";
        s += monomial_string(alg, m);
    }
    return s;
}

} // namespace

TEST_CASE("algebra creation validates input") {
    CHECK_THROWS_AS(GradedAlgebra::create({{"v", 0}}), InputError);
    CHECK_THROWS_AS(GradedAlgebra::create({{"v", -2}}), InputError);
    CHECK_THROWS_AS(GradedAlgebra::create({{"", 2}}), InputError);
    CHECK_THROWS_AS(GradedAlgebra::create({{"2v", 2}}), InputError);
    CHECK_THROWS_AS(GradedAlgebra::create({{"v", 2}, {"v", 3}}), InputError);
    GradedAlgebra a = two_three();
    CHECK(a.size() == 2);
    CHECK(a.find("y") == 1);
    CHECK(!a.find("z"));
}

TEST_CASE("normalize sorts words and tracks the odd-odd sign") {
    GradedAlgebra a = four_ones();
    // b*a = -a*b
    auto [s1, m1] = a.normalize(std::vector<int>{1, 0});
    CHECK(s1 == -1);
    CHECK(monomial_string(a, m1) == "a*b");
    // a*a = 0
    auto [s2, m2] = a.normalize(std::vector<int>{0, 0});
    CHECK(s2 == 0);
    // c*b*a: three inversions
    auto [s3, m3] = a.normalize(std::vector<int>{2, 1, 0});
    CHECK(s3 == -1);
    CHECK(monomial_string(a, m3) == "a*b*c");

    GradedAlgebra vy = two_three();
    // y*v = v*y: even degree commutes freely
    auto [s4, m4] = vy.normalize(std::vector<int>{1, 0});
    CHECK(s4 == 1);
    CHECK(monomial_string(vy, m4) == "v*y");
    // v*v*v stays v^3
    auto [s5, m5] = vy.normalize(std::vector<int>{0, 0, 0});
    CHECK(s5 == 1);
    CHECK(monomial_string(vy, m5) == "v^3");
}

TEST_CASE("monomial product merges with the right Koszul sign") {
    GradedAlgebra a = four_ones();
    auto word = [&](std::initializer_list<int> w) {
        return a.normalize(std::vector<int>(w)).second;
    };
    // (a*c) * (b*e): b crosses c (one odd-odd transposition)
    auto [s, m] = a.multiply(word({0, 2}), word({1, 3}));
    CHECK(s == -1);
    CHECK(monomial_string(a, m) == "a*b*c*e");
    // (a*b) * (a*e) hits the square a^2
    auto [s2, m2] = a.multiply(word({0, 1}), word({0, 3}));
    CHECK(s2 == 0);

    GradedAlgebra vy = two_three();
    auto [s3, m3] = vy.multiply(vy.normalize(std::vector<int>{0}).second,
                                vy.normalize(std::vector<int>{1, 0}).second);
    CHECK(s3 == 1);
    CHECK(monomial_string(vy, m3) == "v^2*y");
}

TEST_CASE("product against flattened normalize on random words") {
    GradedAlgebra a = GradedAlgebra::create({{"p", 1}, {"q", 2}, {"r", 3}, {"s", 4}});
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> gen(0, 3), len(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> u, w;
        for (int i = 0, n = len(rng); i < n; ++i) u.push_back(gen(rng));
        for (int i = 0, n = len(rng); i < n; ++i) w.push_back(gen(rng));
        auto [su, mu] = a.normalize(u);
        auto [sw, mw] = a.normalize(w);
        std::vector<int> uw = u;
        uw.insert(uw.end(), w.begin(), w.end());
        auto [suw, muw] = a.normalize(uw);
        if (su == 0 || sw == 0) {
            CHECK(suw == 0);
            continue;
        }
        auto [sp, mp] = a.multiply(mu, mw);
        CHECK(sp * su * sw == suw);
        if (suw != 0) CHECK(mp == muw);
    }
}

TEST_CASE("degree slices match the generating series and the quoted bases") {
    GradedAlgebra ones = four_ones();
    CHECK(basis_string(ones, 2) == "a*b a*c a*e b*c b*e c*e");
    GradedAlgebra vy = two_three();
    CHECK(basis_string(vy, 7) == "v^2*y");
    CHECK(basis_string(vy, 0) == "1");
    CHECK(vy.basis(1).empty());

    std::vector<Generator> gens{{"p", 1}, {"q", 2}, {"r", 3}, {"s", 4}, {"t", 2}};
    GradedAlgebra big = GradedAlgebra::create(gens);
    auto counts = oracles::slice_counts(gens, 12);
    for (int p = 0; p <= 12; ++p)
        CHECK(static_cast<long long>(big.basis(p).size()) == counts[p]);
}

TEST_CASE("monomial order puts higher powers first within a degree") {
    GradedAlgebra a = GradedAlgebra::create({{"v", 2}, {"w", 2}, {"y", 3}, {"z", 3}});
    CHECK(basis_string(a, 6) == "v^3 v^2*w v*w^2 w^3 y*z");
}

TEST_CASE("element arithmetic") {
    GradedAlgebra a = two_three();
    Element v = a.gen_element(0), y = a.gen_element(1);
    Element s = v + y;
    CHECK(!s.is_homogeneous());
    CHECK(!s.degree());
    Element sq = s * s;
    // y*y = 0 and v*y = y*v, so (v+y)^2 = v^2 + 2vy
    CHECK(sq.str() == "v^2 + 2*v*y");
    CHECK(sq == v * v + Rational(2) * (v * y));
    CHECK((v - v).is_zero());
    CHECK((v - v).is_homogeneous());
    CHECK(v.pow(3).str() == "v^3");
    CHECK(v.pow(0).str() == "1");
    CHECK((y * y).is_zero());
    CHECK((-v).str() == "-v");
    CHECK((Rational(3, 2) * v).str() == "3/2*v");
    CHECK_THROWS_AS(v.pow(-1), InputError);

    GradedAlgebra other = two_three();
    CHECK_THROWS_AS(v + other.gen_element(0), InputError);
}

TEST_CASE("element rendering is canonical") {
    GradedAlgebra a = four_ones();
    Element x = a.gen_element(0) * a.gen_element(1) - Rational(3, 2) * (a.gen_element(2) * a.gen_element(3));
    CHECK(x.str() == "a*b - 3/2*c*e");
    CHECK(a.zero().str() == "0");
    CHECK(a.one().str() == "1");
    CHECK((-a.one()).str() == "-1");
    CHECK((Rational(-1) * a.gen_element(0)).str() == "-a");
}
