#pragma once

#include "cdga/graded.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cdga {

// A free graded-commutative algebra with a degree +1 differential given on
// generators and extended by the graded Leibniz rule. Construction validates
// degrees and d*d = 0 on every generator, so instances are always coherent.
class Cdga {
public:
    static Cdga create(GradedAlgebra algebra, std::vector<Element> generator_diffs);

    const GradedAlgebra& algebra() const { return data_->algebra; }
    const Element& diff_of(int gen) const;
    const std::vector<Element>& generator_diffs() const { return data_->diffs; }

    Element d(const Element& x) const;

    bool is(const Cdga& other) const { return data_ == other.data_; }

private:
    struct Data {
        GradedAlgebra algebra;
        std::vector<Element> diffs;
    };
    std::shared_ptr<const Data> data_;
};

struct DSquaredReport {
    bool pass = true;
    std::optional<std::string> witness_generator; // first generator with d(d(g)) != 0
    std::string detail;                           // rendering of the nonzero residual
};

// Degree checks plus d*d on each generator, without requiring a Cdga yet.
DSquaredReport check_differential(const GradedAlgebra& algebra,
                                  const std::vector<Element>& generator_diffs);

// Re-verifies d*d = 0 on all basis monomials of degree <= max_degree.
// Generator-level validation already implies this; kept as a cross-check.
DSquaredReport check_d_squared(const Cdga& a, int max_degree);

struct MinimalityReport {
    bool minimal = true;
    std::optional<std::string> witness_generator; // has a length-one term in its image
};

// Minimal <=> every d(generator) is a sum of products of at least two
// generators (no linear terms).
MinimalityReport is_minimal(const Cdga& a);

// Tensor product. Generators of b whose names collide with a's get a
// "_2", "_3", ... suffix.
Cdga tensor(const Cdga& a, const Cdga& b);

struct FiltrationReport {
    // Stage k lists the generators whose differential only uses generators
    // from earlier stages; stage 0 is the closed ones.
    std::vector<std::vector<std::string>> stages;
    bool complete = true;
    std::vector<std::string> unfiltered; // nonempty iff !complete
};

// Greedy construction of the smallest stage for each generator. complete is
// false when some differentials form a cycle, i.e. the algebra fails to be a
// Sullivan algebra.
FiltrationReport sullivan_filtration(const Cdga& a);

} // namespace cdga
