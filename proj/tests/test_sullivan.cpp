#include "cdga/sullivan.hpp"
#include "cdga/dsl.hpp"
#include "cdga/errors.hpp"
#include "cdga/ring.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace cdga;

namespace {

Cdga sphere2() {
    GradedAlgebra a = GradedAlgebra::create({{"v", 2}, {"y", 3}});
    Element v = a.gen_element(0);
    return Cdga::create(a, {a.zero(), v * v});
}

Cdga cpn(int n) {
    GradedAlgebra a = GradedAlgebra::create({{"v", 2}, {"y", 2 * n + 1}});
    return Cdga::create(a, {a.zero(), a.gen_element(0).pow(n + 1)});
}

Cdga free_gens(std::vector<Generator> gens) {
    GradedAlgebra a = GradedAlgebra::create(std::move(gens));
    std::vector<Element> d(a.size(), a.zero());
    return Cdga::create(a, d);
}

std::map<int, int> degree_histogram(const Cdga& a) {
    std::map<int, int> h;
    for (int i = 0; i < a.algebra().size(); ++i) ++h[a.algebra().gen(i).degree];
    return h;
}

} // namespace

TEST_CASE("adjoin validates its inputs") {
    Cdga s2 = sphere2();
    Element v = s2.algebra().gen_element(0);
    Element y = s2.algebra().gen_element(1);

    CHECK_THROWS_AS(adjoin(s2, "w", 3, v * y), InputError);    // not a cocycle
    CHECK_THROWS_AS(adjoin(s2, "v", 3, v * v), InputError);    // name collision
    CHECK_THROWS_AS(adjoin(s2, "w", 2, v * v), InputError);    // degree mismatch
    CHECK_THROWS_AS(adjoin(s2, "w w", 3, v * v), InputError);  // bad identifier
    CHECK_THROWS_AS(adjoin(s2, "w", 0, s2.algebra().zero()), InputError);

    RelativeExtension ext = adjoin(s2, "w", 3, v * v);
    CHECK(ext.total.algebra().size() == 3);
    CHECK(ext.total.algebra().gen(ext.new_generator).name == "w");
    CHECK(check_d_squared(ext.total, 8).pass);
}

TEST_CASE("adjoining with zero differential is a free factor") {
    Cdga s2 = sphere2();
    RelativeExtension ext = adjoin(s2, "z", 3, s2.algebra().zero());
    Cdga direct = tensor(s2, free_gens({{"z", 3}}));
    auto a = cohomology_table(ext.total, 6).betti();
    auto b = cohomology_table(direct, 6).betti();
    CHECK(a == b);
    CHECK(a == std::vector<long long>{1, 0, 1, 1, 0, 1, 0});
}

TEST_CASE("sphere bundle model picks fresh names and odd degrees") {
    Cdga s2 = sphere2();
    Element v = s2.algebra().gen_element(0);
    RelativeExtension e1 = sphere_bundle_model(s2, v * v, 3);
    // "y" is taken by the base, so the fiber generator becomes y2
    CHECK(e1.total.algebra().gen(e1.new_generator).name == "y2");
    CHECK(e1.total.algebra().gen(e1.new_generator).degree == 3);

    Cdga cp2 = cpn(2);
    Element w = cp2.algebra().gen_element(0);
    RelativeExtension e2 = sphere_bundle_model(cp2, w * w * w, 5);
    // w^3 is exact over this base, so the bundle is rationally a product
    CHECK(cohomology_table(e2.total, 9).betti() ==
          std::vector<long long>{1, 0, 1, 0, 1, 1, 0, 1, 0, 1});

    CHECK_THROWS_AS(sphere_bundle_model(s2, v * v, 4), InputError); // even fiber
}

TEST_CASE("degree-three invariance under a four-dimensional twist") {
    Cdga cp2 = cpn(2);
    Element v = cp2.algebra().gen_element(0);
    DegreeThreeReport r = verify_degree_three_invariance(cp2, v * v);
    CHECK(r.equal);
    CHECK(r.b3_base == 0);
    CHECK(r.b3_total == 0);
    CHECK(!r.fiber_generator.empty());

    // a base with nontrivial b3: free on v2 and z3, twist by [v^2]
    Cdga base = free_gens({{"v", 2}, {"z", 3}});
    Element bv = base.algebra().gen_element(0);
    DegreeThreeReport r2 = verify_degree_three_invariance(base, bv * bv);
    CHECK(r2.equal);
    CHECK(r2.b3_base == 1);
    CHECK(r2.b3_total == 1);
}

TEST_CASE("degree-three invariance rejects bad hypotheses") {
    // degree-1 generators excluded
    GradedAlgebra t = GradedAlgebra::create({{"a", 1}, {"b", 1}});
    Cdga torus = Cdga::create(t, {t.zero(), t.zero()});
    CHECK_THROWS_AS(
        verify_degree_three_invariance(torus, t.gen_element(0) * t.gen_element(1) *
                                                  t.gen_element(0)),
        InputError);

    // non-minimal base excluded (db = c is linear)
    AlgebraSpec nm = parse_algebra(R"(
algebra nm
gen a : 2
gen c : 4
gen b : 3
d b = c
)");
    Element a2 = nm.cdga.algebra().gen_element(0);
    CHECK_THROWS_AS(verify_degree_three_invariance(nm.cdga, a2 * a2), InputError);

    // exact twisting class excluded: on the s2 model, v^2 = d(y)
    Cdga s2 = sphere2();
    Element v = s2.algebra().gen_element(0);
    CHECK_THROWS_AS(verify_degree_three_invariance(s2, v * v), InputError);

    // wrong degree
    Cdga cp2 = cpn(2);
    Element w = cp2.algebra().gen_element(0);
    CHECK_THROWS_AS(verify_degree_three_invariance(cp2, w), InputError);
    // zero class
    CHECK_THROWS_AS(verify_degree_three_invariance(cp2, cp2.algebra().zero()),
                    InputError);
}

TEST_CASE("model morphisms validate and evaluate multiplicatively") {
    Cdga s2 = sphere2();
    Cdga cp2 = cpn(2);
    Element v = cp2.algebra().gen_element(0);

    // arity mismatch
    CHECK_THROWS_AS(ModelMorphism(s2, cp2, {v}), InputError);
    // degree mismatch: image of the degree-3 generator must be degree 3
    CHECK_THROWS_AS(ModelMorphism(s2, cp2, {v, v}), InputError);

    // v -> v, y -> 0 does not commute with d (d(y) = v^2 but d(0) = 0)
    ModelMorphism broken(s2, cp2, {v, cp2.algebra().zero()});
    CHECK(!broken.commutes_with_d());

    // identity on s2 commutes and is a quasi-isomorphism through degree 5
    Element sv = s2.algebra().gen_element(0), sy = s2.algebra().gen_element(1);
    ModelMorphism id(s2, s2, {sv, sy});
    CHECK(id.commutes_with_d());
    CHECK(id.evaluate(sv * sv + sy) == sv * sv + sy);
    auto certs = quasi_iso_certificates(id, 5);
    REQUIRE(certs.size() == 7);
    for (const auto& c : certs) CHECK(c.injective);
    for (int p = 0; p <= 5; ++p) CHECK(certs[p].isomorphism);
    CHECK(certs[2].rank == 1);
}

TEST_CASE("minimal model of a formal generator is itself") {
    Cdga in = free_gens({{"v", 2}});
    MinimalModelResult r = minimal_model(in, 6);
    CHECK(r.model.algebra().size() == 1);
    CHECK(r.model.algebra().gen(0).name == "x2_0");
    CHECK(r.model.algebra().gen(0).degree == 2);
    CHECK(r.model.diff_of(0).is_zero());
    for (const auto& c : r.certificates) {
        CHECK(c.injective);
        if (c.degree <= 6) CHECK(c.isomorphism);
    }
}

TEST_CASE("minimal model collapses a contractible pair") {
    AlgebraSpec spec = parse_algebra(R"(
algebra pair
gen a : 2
gen b : 4
gen c : 3
d c = b
)");
    MinimalModelResult r = minimal_model(spec.cdga, 8);
    // b and c cancel; only [a] survives
    CHECK(r.model.algebra().size() == 1);
    CHECK(r.model.algebra().gen(0).degree == 2);
    CHECK(r.morphism.images()[0].str() == "a");
    CHECK(cohomology_table(r.model, 8).betti() ==
          std::vector<long long>{1, 0, 1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("minimal model needs a relative generator for the sphere") {
    // input: the honest s2 model, already minimal. The rebuilt model must be
    // isomorphic: one closed degree-2 generator plus a degree-3 killer.
    Cdga s2 = sphere2();
    MinimalModelResult r = minimal_model(s2, 7);
    CHECK(degree_histogram(r.model) == degree_histogram(s2));
    CHECK(is_minimal(r.model).minimal);
    CHECK(r.morphism.commutes_with_d());
    auto mb = cohomology_table(r.model, 7).betti();
    CHECK(mb == cohomology_table(s2, 7).betti());
    // the degree-3 generator kills the square of the degree-2 one
    Element x = r.model.algebra().gen_element(0);
    CHECK(r.model.diff_of(1) == x * x);
}

TEST_CASE("minimal model of a sphere product") {
    Cdga in = tensor(free_gens({{"z", 3}}), free_gens({{"w", 3}}));
    MinimalModelResult r = minimal_model(in, 6);
    CHECK(degree_histogram(r.model) == std::map<int, int>{{3, 2}});
    CHECK(cohomology_table(r.model, 6).betti() ==
          std::vector<long long>{1, 0, 0, 2, 0, 0, 1});
}

TEST_CASE("minimal model rejects inputs outside its hypotheses") {
    GradedAlgebra t = GradedAlgebra::create({{"a", 1}});
    Cdga circle = Cdga::create(t, {t.zero()});
    CHECK_THROWS_AS(minimal_model(circle, 4), InputError); // b1 != 0
    CHECK_THROWS_AS(minimal_model(sphere2(), 1), InputError); // degree too low
}
