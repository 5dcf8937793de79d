#pragma once

#include "cdga/cohomology.hpp"
#include "cdga/rational.hpp"

#include <json.hpp>

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cdga {

using Json = nlohmann::ordered_json;

// A finite-dimensional graded-commutative Q-algebra given by a graded basis
// and structure constants. This is what cohomology collapses to once the
// differential has been divided out.
class FiniteRing {
public:
    struct BasisElement {
        std::string label;
        int degree = 0;
    };

    FiniteRing(std::vector<BasisElement> basis,
               std::map<std::pair<int, int>, std::vector<Rational>> products);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int top_degree() const { return top_degree_; }
    int unit_index() const { return unit_; }

    long long betti(int p) const; // number of basis elements in degree p
    std::vector<int> degree_indices(int p) const;

    // Structure constants for basis_i * basis_j; zero vector when absent.
    std::vector<Rational> product(int i, int j) const;

    // Bilinear extension to coordinate vectors over the full basis.
    std::vector<Rational> multiply(std::span<const Rational> a,
                                   std::span<const Rational> b) const;

    Json to_json() const;
    static FiniteRing from_json(const Json& j);

private:
    void validate();
    std::vector<BasisElement> basis_;
    std::map<std::pair<int, int>, std::vector<Rational>> products_;
    int top_degree_ = 0;
    int unit_ = -1;
};

// Collapses H^*(a) for degrees <= max_degree to a FiniteRing. Basis labels
// are "h{p}_{i}" matching representatives(p)[i]. Products landing above
// max_degree are dropped, so the result is the truncated ring.
FiniteRing extract_ring(const Cdga& a, int max_degree);
FiniteRing extract_ring(const CohomologyEngine& engine);

} // namespace cdga
