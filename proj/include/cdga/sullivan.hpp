#pragma once

#include "cdga/cohomology.hpp"
#include "cdga/differential.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cdga {

// A one-generator extension a ⊂ a ⊗ (y), dy = z. The base embeds as the
// generator prefix, so base elements stay valid index-for-index.
struct RelativeExtension {
    Cdga base;
    Cdga total;
    int new_generator = -1; // index in total
};

// Adjoins one generator of the given degree with differential z. z must be a
// cocycle in the base, zero or homogeneous of degree `degree` + 1.
RelativeExtension adjoin(const Cdga& base, const std::string& name, int degree,
                         const Element& z);

// Model of an odd-dimensional sphere bundle: degree k (odd) fiber generator
// with dy = euler. The generator name is chosen fresh ("y", "y2", ...).
RelativeExtension sphere_bundle_model(const Cdga& base, const Element& euler, int k);

struct DegreeThreeReport {
    long long b3_base = 0;
    long long b3_total = 0;
    bool equal = false;
    std::string fiber_generator;
};

// For a minimal base with no degree-1 generators and a degree-4 cocycle z
// with nonzero class: adjoining y3 with dy = z preserves b3. Verifies the
// hypotheses (throwing InputError with a reason when they fail), builds the
// extension, and compares both third Betti numbers.
DegreeThreeReport verify_degree_three_invariance(const Cdga& base, const Element& z);

// A generator-to-element assignment defining a map of differential algebras.
class ModelMorphism {
public:
    ModelMorphism(Cdga source, Cdga target, std::vector<Element> images);

    const Cdga& source() const { return source_; }
    const Cdga& target() const { return target_; }
    const std::vector<Element>& images() const { return images_; }

    Element evaluate(const Element& x) const;

    // d_target(evaluate(g)) == evaluate(d_source(g)) for every generator.
    bool commutes_with_d() const;

private:
    Cdga source_;
    Cdga target_;
    std::vector<Element> images_;
};

struct DegreeCertificate {
    int degree = 0;
    long long betti_source = 0;
    long long betti_target = 0;
    long long rank = 0; // rank of the induced map on cohomology
    bool isomorphism = false;
    bool injective = false;
};

struct MinimalModelResult {
    Cdga model;
    ModelMorphism morphism; // model -> input
    // Isomorphism certificates for degrees 0..N plus injectivity at N+1.
    std::vector<DegreeCertificate> certificates;
};

// Stage-by-stage minimal model of the input through degree max_degree:
// per degree k, first new closed generators x{k}_{i} covering the cokernel
// of H^k(model) -> H^k(input), then generators killing the kernel of
// H^{k+1}(model) -> H^{k+1}(input). Requires H^1(input) = 0.
MinimalModelResult minimal_model(const Cdga& input, int max_degree);

// Ranks of H^p(morphism) for p <= max_degree and injectivity at max_degree+1.
std::vector<DegreeCertificate> quasi_iso_certificates(const ModelMorphism& f,
                                                      int max_degree);

} // namespace cdga
