#pragma once

#include "cdga/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace cdga {

// Sparse matrix over Q, row-major.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, Rational value); // value 0 clears the entry
    Rational at(int r, int c) const;
    const std::map<int, Rational>& row(int r) const;

    RationalMatrix transposed() const;

private:
    void check(int r, int c) const;
    int rows_, cols_;
    std::vector<std::map<int, Rational>> data_;
};

struct RrefResult {
    RationalMatrix matrix;
    int rank = 0;
    std::vector<int> pivot_columns;
};

// Reduced row echelon form. Deterministic: columns are scanned left to right
// and the first available row with a nonzero entry becomes the pivot.
RrefResult rref(const RationalMatrix& m);

struct SubspaceBasis {
    int ambient = 0;
    std::vector<std::vector<Rational>> vectors;
    int dim() const { return static_cast<int>(vectors.size()); }
};

// Null space of m, one basis vector per free column, in column order.
SubspaceBasis kernel_basis(const RationalMatrix& m);

// Column space of m as echelon row vectors.
SubspaceBasis image_basis(const RationalMatrix& m);

// dim(big) - dim(sub). Throws InputError if either family is dependent or
// sub is not contained in the span of big.
int quotient_dim(const SubspaceBasis& big, const SubspaceBasis& sub);

// One solution x of m x = rhs, or nullopt when rhs is outside the column
// space. Deterministic (built from an echelon pass over the columns).
std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           std::span<const Rational> rhs);

// Incremental echelon span. Rows are kept with leading coefficient 1 and are
// never modified after insertion, so reduction coefficients always refer to
// the vectors originally inserted.
class EchelonBasis {
public:
    explicit EchelonBasis(int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the span. Both coefficient vectors are indexed by
    // insertion order: row_coefficients is over the stored echelon rows,
    // source_coefficients over the vectors as originally passed to insert().
    struct Reduction {
        std::vector<Rational> row_coefficients;
        std::vector<Rational> source_coefficients;
        std::vector<Rational> remainder;
        bool in_span = false;
    };
    Reduction reduce(std::span<const Rational> v) const;

    // Adds v if independent; returns the insertion index, or nullopt if v was
    // already in the span.
    std::optional<int> insert(std::span<const Rational> v);

    bool contains(std::span<const Rational> v) const;

    // The stored echelon rows sorted by pivot column, with insertion indices.
    struct Row {
        int inserted = 0;
        std::vector<Rational> vec;
        std::vector<Rational> combo; // row expressed in the inserted vectors
    };
    std::vector<Row> rows() const;

private:
    int ambient_;
    int inserted_ = 0;
    std::map<int, Row> rows_; // keyed by pivot column
};

} // namespace cdga
