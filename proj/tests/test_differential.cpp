#include "cdga/differential.hpp"
#include "cdga/dsl.hpp"
#include "cdga/errors.hpp"

#include <doctest.h>

using namespace cdga;

namespace {

Cdga kt() {
    GradedAlgebra a = GradedAlgebra::create({{"a", 1}, {"b", 1}, {"c", 1}, {"e", 1}});
    return Cdga::create(a, {a.zero(), a.zero(), a.gen_element(0) * a.gen_element(1),
                            a.zero()});
}

Cdga sphere2() {
    GradedAlgebra a = GradedAlgebra::create({{"v", 2}, {"y", 3}});
    Element v = a.gen_element(0);
    return Cdga::create(a, {a.zero(), v * v});
}

} // namespace

TEST_CASE("construction rejects bad differentials") {
    GradedAlgebra a = GradedAlgebra::create({{"v", 2}, {"y", 3}});
    Element v = a.gen_element(0);
    // wrong degree: d(y) must be degree 4
    CHECK_THROWS_AS(Cdga::create(a, {a.zero(), v}), InputError);
    // inhomogeneous
    CHECK_THROWS_AS(Cdga::create(a, {a.zero(), v * v + v}), InputError);
    // wrong arity
    CHECK_THROWS_AS(Cdga::create(a, {a.zero()}), InputError);
    // element of a different algebra
    GradedAlgebra b = GradedAlgebra::create({{"v", 2}, {"y", 3}});
    CHECK_THROWS_AS(Cdga::create(a, {a.zero(), b.gen_element(0) * b.gen_element(0)}),
                    InputError);
}

TEST_CASE("d squared failure is reported with the offending generator") {
    GradedAlgebra a = GradedAlgebra::create({{"a", 2}, {"b", 3}, {"c", 4}});
    Element x = a.gen_element(0);
    std::vector<Element> diffs{a.zero(), x * x, x * a.gen_element(1)};
    DSquaredReport report = check_differential(a, diffs);
    CHECK(!report.pass);
    CHECK(report.witness_generator == "c");
    // d(d(c)) = d(a*b) = a*a^2 = a^3
    CHECK(report.detail == "d(d(c)) = a^3");
    CHECK_THROWS_AS(Cdga::create(a, diffs), InputError);
}

TEST_CASE("Leibniz rule on words") {
    Cdga s2 = sphere2();
    const GradedAlgebra& a = s2.algebra();
    Element v = a.gen_element(0), y = a.gen_element(1);
    CHECK(s2.d(v).is_zero());
    CHECK(s2.d(y) == v * v);
    // d(v^k y) = v^(k+2)
    CHECK(s2.d(v * y) == v.pow(3));
    CHECK(s2.d(v.pow(4) * y) == v.pow(6));
    // d(y) on a sum, linearity
    CHECK(s2.d(y + v) == v * v);
    CHECK(s2.d(Rational(3, 2) * y) == Rational(3, 2) * (v * v));

    Cdga n = kt();
    const GradedAlgebra& g = n.algebra();
    Element A = g.gen_element(0), B = g.gen_element(1), C = g.gen_element(2),
            E = g.gen_element(3);
    // d(c*e) = (a*b)*e, sign +1 since dc hops over nothing
    CHECK(n.d(C * E) == A * B * E);
    // d(a*c) = -a*(a*b) = 0
    CHECK(n.d(A * C).is_zero());
    // d(e*c) = -e*(ab) = -abe... e*c = -c*e, so d(e*c) = -abe
    CHECK(n.d(E * C) == -(A * B * E));
    // graded Leibniz on a product of two elements
    Element u = A * C + B * E;
    Element w = C * E;
    CHECK(n.d(u * w) == n.d(u) * w + u * n.d(w)); // |u| even
}

TEST_CASE("check_d_squared expands monomials") {
    Cdga s2 = sphere2();
    DSquaredReport ok = check_d_squared(s2, 9);
    CHECK(ok.pass);
}

TEST_CASE("minimality witness") {
    GradedAlgebra a = GradedAlgebra::create({{"a", 2}, {"b", 4}, {"c", 3}});
    Cdga pair = Cdga::create(a, {a.zero(), a.zero(), a.gen_element(1)});
    MinimalityReport r = is_minimal(pair);
    CHECK(!r.minimal);
    CHECK(r.witness_generator == "c");

    CHECK(is_minimal(sphere2()).minimal);
    CHECK(is_minimal(kt()).minimal);
}

TEST_CASE("tensor renames colliding generators and keeps both differentials") {
    GradedAlgebra s3 = GradedAlgebra::create({{"z", 3}});
    Cdga a = Cdga::create(s3, {s3.zero()});
    Cdga t = tensor(a, a);
    REQUIRE(t.algebra().size() == 2);
    CHECK(t.algebra().gen(0).name == "z");
    CHECK(t.algebra().gen(1).name == "z_2");
    CHECK(t.d(t.algebra().gen_element(0) * t.algebra().gen_element(1)).is_zero());

    Cdga st = tensor(sphere2(), a);
    REQUIRE(st.algebra().size() == 3);
    Element v = st.algebra().gen_element(0), y = st.algebra().gen_element(1),
            z = st.algebra().gen_element(2);
    CHECK(st.d(y) == v * v);
    CHECK(st.d(z).is_zero());
    CHECK(st.d(y * z) == v * v * z);
}

TEST_CASE("filtration stages respect differential dependencies") {
    FiltrationReport kt_filt = sullivan_filtration(kt());
    CHECK(kt_filt.complete);
    REQUIRE(kt_filt.stages.size() == 2);
    CHECK(kt_filt.stages[0] == std::vector<std::string>{"a", "b", "e"});
    CHECK(kt_filt.stages[1] == std::vector<std::string>{"c"});

    // dx = x*y is a legal differential (d*d = 0) but can never be staged.
    GradedAlgebra g = GradedAlgebra::create({{"x", 1}, {"y", 1}});
    Cdga cyc = Cdga::create(g, {g.gen_element(0) * g.gen_element(1), g.zero()});
    FiltrationReport r = sullivan_filtration(cyc);
    CHECK(!r.complete);
    CHECK(r.unfiltered == std::vector<std::string>{"x"});
    CHECK(r.stages.size() == 1);
    CHECK(r.stages[0] == std::vector<std::string>{"y"});
}
