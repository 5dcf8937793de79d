#pragma once

#include "cdga/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdga {

struct Generator {
    std::string name;
    int degree = 0; // >= 1
};

struct MonomialFactor {
    int gen = 0; // index into the algebra's generator table
    int exp = 0; // >= 1; always 1 for odd-degree generators
    friend bool operator==(const MonomialFactor&, const MonomialFactor&) = default;
};

// A normal-form word: factors sorted by generator index, odd generators
// squarefree. The empty word is the unit.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<MonomialFactor> factors);

    bool is_unit() const { return factors_.empty(); }
    int length() const; // total exponent count
    std::span<const MonomialFactor> factors() const { return factors_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Canonical order: generator indices ascending; for equal generators a
    // higher power sorts first (so v^3 < v^2*y < v*y within one degree slice).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<MonomialFactor> factors_;
};

class Element;

// Free graded-commutative algebra over Q on named generators. Immutable and
// cheap to copy; two copies of the same creation share identity.
class GradedAlgebra {
public:
    static GradedAlgebra create(std::vector<Generator> generators);

    int size() const;
    const Generator& gen(int i) const;
    std::optional<int> find(std::string_view name) const;

    int degree_of(const Monomial& m) const;

    // Sorts a raw word of generator indices into normal form, tracking the
    // sign from odd-odd transpositions. Returns sign 0 if an odd generator
    // repeats.
    std::pair<int, Monomial> normalize(std::span<const int> word) const;

    // Product of two normal-form words with the induced sign.
    std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;

    // All normal-form words of the given total degree, in canonical order.
    std::vector<Monomial> basis(int degree) const;

    Element zero() const;
    Element one() const;
    Element gen_element(int i) const;

    // Identity, not structural equality.
    bool is(const GradedAlgebra& other) const { return data_ == other.data_; }

private:
    struct Data {
        std::vector<Generator> generators;
        std::map<std::string, int, std::less<>> index;
    };
    std::shared_ptr<const Data> data_;
};

// A finite Q-linear combination of normal-form monomials in one algebra.
class Element {
public:
    explicit Element(GradedAlgebra algebra) : algebra_(std::move(algebra)) {}
    Element(GradedAlgebra algebra, const Monomial& m, Rational coeff);

    const GradedAlgebra& algebra() const { return algebra_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Zero is homogeneous of every degree; reports nullopt for mixed terms.
    bool is_homogeneous() const;
    std::optional<int> degree() const;

    void add_term(const Monomial& m, const Rational& coeff);

    Element operator-() const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(const Element& lhs, const Element& rhs);
    friend Element operator*(const Rational& c, Element rhs);
    Element pow(int e) const; // e >= 0

    bool operator==(const Element& rhs) const;

    // Canonical rendering, e.g. "v^2*y - 3/2*w". parse_element() inverts it.
    std::string str() const;

private:
    GradedAlgebra algebra_;
    std::map<Monomial, Rational> terms_;
};

std::string monomial_string(const GradedAlgebra& algebra, const Monomial& m);

} // namespace cdga
