#pragma once

#include "cdga/differential.hpp"
#include "cdga/errors.hpp"
#include "cdga/ring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cdga {

// Input error carrying a source position (1-based line and column).
class ParseError : public InputError {
public:
    ParseError(int line, int col, const std::string& what)
        : InputError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                     what),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Text format for an algebra with differential:
//
//   # comment
//   algebra name
//   gen v : 2
//   gen y : 3
//   d y = v^2
//
// Generators may appear in any differential regardless of declaration order;
// omitted d-lines mean zero. Expressions are sums of rational multiples of
// generator words, e.g. "v^2*y - 3/2*w".

struct AlgebraSpec {
    std::string name;
    Cdga cdga;
};

// Parsed but unvalidated: the differential may fail degree checks or d*d = 0.
struct RawAlgebra {
    std::string name;
    GradedAlgebra algebra;
    std::vector<Element> diffs;
};

RawAlgebra parse_algebra_raw(std::string_view text);

// parse_algebra_raw plus validation into a Cdga.
AlgebraSpec parse_algebra(std::string_view text);

// Parses one expression in an existing algebra. Powers of odd generators
// above 1 collapse to zero; a note lands in *warnings when provided.
Element parse_element(const GradedAlgebra& algebra, std::string_view text,
                      std::vector<std::string>* warnings = nullptr);

// Canonical rendering; parse_algebra inverts it.
std::string render_algebra(const AlgebraSpec& spec);

// Linear combination of ring basis labels, e.g. "h2_0 - 2*h2_1", as a
// coordinate vector over the full basis.
std::vector<Rational> parse_ring_class(const FiniteRing& ring, std::string_view text);

} // namespace cdga
