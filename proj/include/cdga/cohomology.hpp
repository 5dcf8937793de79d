#pragma once

#include "cdga/differential.hpp"
#include "cdga/linalg.hpp"

#include <string>
#include <vector>

namespace cdga {

struct CohomologyRow {
    int degree = 0;
    long long slice_dim = 0;  // monomial basis size
    long long cocycles = 0;   // dim ker d
    long long boundaries = 0; // rank of the incoming d
    long long betti = 0;
    std::vector<std::string> representatives; // canonical cocycle renderings
};

struct CohomologyTable {
    int max_degree = 0;
    std::vector<CohomologyRow> rows; // degrees 0..max_degree
    std::vector<long long> betti() const;
};

// Degree-by-degree cohomology of a Cdga, exact over Q. Representative
// cocycles are the echelon complement of the boundaries inside the cocycles
// with respect to the canonical monomial order, so they are deterministic.
class CohomologyEngine {
public:
    CohomologyEngine(Cdga a, int max_degree);

    const Cdga& cdga() const { return cdga_; }
    int max_degree() const { return max_degree_; }

    long long betti(int p) const;
    const std::vector<Element>& representatives(int p) const;
    CohomologyTable table() const;

    const std::vector<Monomial>& slice(int p) const; // p <= max_degree + 1
    std::vector<Rational> slice_coordinates(const Element& x) const;
    Element from_slice_coordinates(int p, std::span<const Rational> coords) const;

    // Coordinates of [x] over representatives(p); x must be a homogeneous
    // cocycle of degree p <= max_degree (zero counts as any degree).
    std::vector<Rational> class_coordinates(const Element& x) const;

    // The matrix of d from slice p to slice p+1, p <= max_degree.
    const RationalMatrix& d_matrix(int p) const;

private:
    struct Degree {
        long long betti = 0;
        long long cocycles = 0;
        long long boundaries = 0;
        std::vector<Element> reps;
        EchelonBasis span{0};       // boundaries first, then representatives
        std::vector<int> rep_index; // insertion index -> rep position, -1 for boundaries
    };

    Cdga cdga_;
    int max_degree_;
    std::vector<std::vector<Monomial>> slices_; // 0..max_degree+1
    std::vector<RationalMatrix> d_;             // 0..max_degree
    std::vector<Degree> degrees_;               // 0..max_degree
};

// Standalone checks that do not need a precomputed engine.
bool is_cocycle(const Cdga& a, const Element& x);

// True iff the homogeneous cocycle x is a coboundary. Throws InputError when
// x is not a homogeneous cocycle.
bool class_is_zero(const Cdga& a, const Element& x);

CohomologyTable cohomology_table(const Cdga& a, int max_degree);

} // namespace cdga
