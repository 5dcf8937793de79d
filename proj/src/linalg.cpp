#include "cdga/linalg.hpp"

#include "cdga/errors.hpp"

#include <algorithm>

namespace cdga {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw InternalError("negative matrix dimension");
}

void RationalMatrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw InternalError("matrix index out of range");
}

void RationalMatrix::set(int r, int c, Rational value) {
    check(r, c);
    if (value == 0)
        data_[r].erase(c);
    else
        data_[r][c] = std::move(value);
}

Rational RationalMatrix::at(int r, int c) const {
    check(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rational(0) : it->second;
}

const std::map<int, Rational>& RationalMatrix::row(int r) const {
    if (r < 0 || r >= rows_) throw InternalError("matrix row out of range");
    return data_[r];
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
    return t;
}

RrefResult rref(const RationalMatrix& m) {
    std::vector<std::map<int, Rational>> rows(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows[r] = m.row(r);

    std::vector<int> pivots;
    int next_row = 0;
    for (int col = 0; col < m.cols() && next_row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = next_row; r < m.rows(); ++r) {
            auto it = rows[r].find(col);
            if (it != rows[r].end()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[next_row]);
        Rational lead = rows[next_row].at(col);
        for (auto& [c, v] : rows[next_row]) v /= lead;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == next_row) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) continue;
            Rational factor = it->second;
            for (const auto& [c, v] : rows[next_row]) {
                Rational nv = (rows[r].count(c) ? rows[r][c] : Rational(0)) - factor * v;
                if (nv == 0)
                    rows[r].erase(c);
                else
                    rows[r][c] = std::move(nv);
            }
        }
        pivots.push_back(col);
        ++next_row;
    }

    RationalMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : rows[r]) out.set(r, c, v);
    return {std::move(out), static_cast<int>(pivots.size()), std::move(pivots)};
}

SubspaceBasis kernel_basis(const RationalMatrix& m) {
    RrefResult e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_columns) is_pivot[c] = true;

    SubspaceBasis out;
    out.ambient = m.cols();
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (int r = 0; r < e.rank; ++r) {
            Rational entry = e.matrix.at(r, free);
            if (entry != 0) v[e.pivot_columns[r]] = -entry;
        }
        out.vectors.push_back(std::move(v));
    }
    return out;
}

SubspaceBasis image_basis(const RationalMatrix& m) {
    EchelonBasis span(m.rows());
    RationalMatrix t = m.transposed(); // rows of t are columns of m
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<Rational> col(m.rows(), Rational(0));
        for (const auto& [r, v] : t.row(c)) col[r] = v;
        span.insert(col);
    }
    SubspaceBasis out;
    out.ambient = m.rows();
    for (const auto& row : span.rows()) out.vectors.push_back(row.vec);
    return out;
}

int quotient_dim(const SubspaceBasis& big, const SubspaceBasis& sub) {
    EchelonBasis span(big.ambient);
    for (const auto& v : big.vectors)
        if (!span.insert(v)) throw InputError("quotient: numerator vectors are dependent");
    EchelonBasis check(big.ambient);
    for (const auto& v : sub.vectors) {
        if (static_cast<int>(v.size()) != big.ambient)
            throw InputError("quotient: ambient dimensions differ");
        if (!span.contains(v))
            throw InputError("quotient: subspace vector outside the numerator span");
        if (!check.insert(v)) throw InputError("quotient: subspace vectors are dependent");
    }
    return big.dim() - sub.dim();
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           std::span<const Rational> rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw InternalError("solve: rhs length does not match row count");
    EchelonBasis span(m.rows());
    std::vector<int> inserted_col; // insertion index -> source column
    RationalMatrix t = m.transposed();
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<Rational> col(m.rows(), Rational(0));
        for (const auto& [r, v] : t.row(c)) col[r] = v;
        if (span.insert(col)) inserted_col.push_back(c);
    }
    auto red = span.reduce(rhs);
    if (!red.in_span) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t k = 0; k < inserted_col.size(); ++k)
        x[inserted_col[k]] = red.source_coefficients[k];
    return x;
}

EchelonBasis::EchelonBasis(int ambient) : ambient_(ambient) {
    if (ambient < 0) throw InternalError("negative ambient dimension");
}

EchelonBasis::Reduction EchelonBasis::reduce(std::span<const Rational> v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw InternalError("echelon reduce: vector has wrong length");
    Reduction red;
    red.row_coefficients.assign(inserted_, Rational(0));
    red.source_coefficients.assign(inserted_, Rational(0));
    red.remainder.assign(v.begin(), v.end());
    // Stored rows have support starting at their pivot, so one ascending pass
    // suffices and never revisits an already-cleared coordinate.
    for (const auto& [pivot, row] : rows_) {
        const Rational& c = red.remainder[pivot];
        if (c == 0) continue;
        Rational factor = c; // row has leading coefficient 1
        for (int i = pivot; i < ambient_; ++i)
            if (row.vec[i] != 0) red.remainder[i] -= factor * row.vec[i];
        red.row_coefficients[row.inserted] = factor;
        for (std::size_t k = 0; k < row.combo.size(); ++k)
            red.source_coefficients[k] += factor * row.combo[k];
    }
    red.in_span = std::all_of(red.remainder.begin(), red.remainder.end(),
                              [](const Rational& r) { return r == 0; });
    return red;
}

std::optional<int> EchelonBasis::insert(std::span<const Rational> v) {
    Reduction red = reduce(v);
    if (red.in_span) return std::nullopt;
    int pivot = 0;
    while (red.remainder[pivot] == 0) ++pivot;
    Rational lead = red.remainder[pivot];
    Row row;
    row.inserted = inserted_;
    row.vec = std::move(red.remainder);
    for (auto& c : row.vec) c /= lead;
    // row = (v - sum coeff_k * source_k) / lead
    row.combo.assign(inserted_ + 1, Rational(0));
    for (int k = 0; k < inserted_; ++k) row.combo[k] = -red.source_coefficients[k] / lead;
    row.combo[inserted_] = Rational(1) / lead;
    rows_.emplace(pivot, std::move(row));
    return inserted_++;
}

bool EchelonBasis::contains(std::span<const Rational> v) const {
    return reduce(v).in_span;
}

std::vector<EchelonBasis::Row> EchelonBasis::rows() const {
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) out.push_back(row);
    return out;
}

} // namespace cdga
