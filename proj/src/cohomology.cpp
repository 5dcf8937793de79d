#include "cdga/cohomology.hpp"

#include "cdga/errors.hpp"

#include <algorithm>

namespace cdga {

std::vector<long long> CohomologyTable::betti() const {
    std::vector<long long> b;
    b.reserve(rows.size());
    for (const auto& row : rows) b.push_back(row.betti);
    return b;
}

CohomologyEngine::CohomologyEngine(Cdga a, int max_degree)
    : cdga_(std::move(a)), max_degree_(max_degree) {
    if (max_degree < 0) throw InputError("max degree must be >= 0");
    const GradedAlgebra& alg = cdga_.algebra();

    slices_.reserve(max_degree_ + 2);
    for (int p = 0; p <= max_degree_ + 1; ++p) slices_.push_back(alg.basis(p));

    std::vector<std::map<Monomial, int>> index(max_degree_ + 2);
    for (int p = 0; p <= max_degree_ + 1; ++p)
        for (int i = 0; i < static_cast<int>(slices_[p].size()); ++i)
            index[p][slices_[p][i]] = i;

    d_.reserve(max_degree_ + 1);
    for (int p = 0; p <= max_degree_; ++p) {
        RationalMatrix m(static_cast<int>(slices_[p + 1].size()),
                         static_cast<int>(slices_[p].size()));
        for (int j = 0; j < static_cast<int>(slices_[p].size()); ++j) {
            Element dj = cdga_.d(Element(alg, slices_[p][j], 1));
            for (const auto& [mon, c] : dj.terms()) {
                auto it = index[p + 1].find(mon);
                if (it == index[p + 1].end())
                    throw InternalError("differential image misses the degree slice");
                m.set(it->second, j, c);
            }
        }
        d_.push_back(std::move(m));
    }

    degrees_.reserve(max_degree_ + 1);
    for (int p = 0; p <= max_degree_; ++p) {
        Degree deg;
        int n = static_cast<int>(slices_[p].size());
        deg.span = EchelonBasis(n);

        if (p > 0) {
            RationalMatrix t = d_[p - 1].transposed();
            for (int c = 0; c < d_[p - 1].cols(); ++c) {
                std::vector<Rational> col(n, Rational(0));
                for (const auto& [r, v] : t.row(c)) col[r] = v;
                if (deg.span.insert(col)) deg.rep_index.push_back(-1);
            }
        }
        deg.boundaries = deg.span.dim();

        SubspaceBasis kernel = kernel_basis(d_[p]);
        deg.cocycles = kernel.dim();
        for (const auto& v : kernel.vectors) {
            auto red = deg.span.reduce(v);
            if (red.in_span) continue;
            // The normalized remainder is exactly the echelon row insert()
            // will store; it is the canonical representative of the class.
            int pivot = 0;
            while (red.remainder[pivot] == 0) ++pivot;
            Rational lead = red.remainder[pivot];
            std::vector<Rational> rep_vec = std::move(red.remainder);
            for (auto& c : rep_vec) c /= lead;
            if (!deg.span.insert(v)) throw InternalError("echelon span rejected a new cocycle");
            deg.rep_index.push_back(static_cast<int>(deg.reps.size()));
            deg.reps.push_back(from_slice_coordinates(p, rep_vec));
        }
        deg.betti = static_cast<long long>(deg.reps.size());
        if (deg.betti != deg.cocycles - deg.boundaries)
            throw InternalError("rank bookkeeping mismatch in cohomology");
        degrees_.push_back(std::move(deg));
    }
}

long long CohomologyEngine::betti(int p) const {
    if (p < 0 || p > max_degree_) throw InputError("degree outside the computed range");
    return degrees_[p].betti;
}

const std::vector<Element>& CohomologyEngine::representatives(int p) const {
    if (p < 0 || p > max_degree_) throw InputError("degree outside the computed range");
    return degrees_[p].reps;
}

CohomologyTable CohomologyEngine::table() const {
    CohomologyTable t;
    t.max_degree = max_degree_;
    for (int p = 0; p <= max_degree_; ++p) {
        CohomologyRow row;
        row.degree = p;
        row.slice_dim = static_cast<long long>(slices_[p].size());
        row.cocycles = degrees_[p].cocycles;
        row.boundaries = degrees_[p].boundaries;
        row.betti = degrees_[p].betti;
        for (const auto& rep : degrees_[p].reps) row.representatives.push_back(rep.str());
        t.rows.push_back(std::move(row));
    }
    return t;
}

const std::vector<Monomial>& CohomologyEngine::slice(int p) const {
    if (p < 0 || p > max_degree_ + 1) throw InputError("degree outside the computed range");
    return slices_[p];
}

std::vector<Rational> CohomologyEngine::slice_coordinates(const Element& x) const {
    if (!x.algebra().is(cdga_.algebra()))
        throw InputError("element belongs to a different algebra");
    auto deg = x.degree();
    if (x.is_zero() || !deg)
        throw InputError("slice coordinates need a nonzero homogeneous element");
    if (*deg > max_degree_ + 1) throw InputError("degree outside the computed range");
    const auto& slice = slices_[*deg];
    std::vector<Rational> coords(slice.size(), Rational(0));
    for (const auto& [m, c] : x.terms()) {
        auto it = std::lower_bound(slice.begin(), slice.end(), m);
        if (it == slice.end() || !(*it == m))
            throw InternalError("monomial missing from its degree slice");
        coords[it - slice.begin()] = c;
    }
    return coords;
}

Element CohomologyEngine::from_slice_coordinates(int p, std::span<const Rational> coords) const {
    if (p < 0 || p > max_degree_ + 1) throw InputError("degree outside the computed range");
    if (coords.size() != slices_[p].size())
        throw InternalError("coordinate vector does not match the slice");
    Element x(cdga_.algebra());
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) x.add_term(slices_[p][i], coords[i]);
    return x;
}

std::vector<Rational> CohomologyEngine::class_coordinates(const Element& x) const {
    if (!x.algebra().is(cdga_.algebra()))
        throw InputError("element belongs to a different algebra");
    if (!cdga_.d(x).is_zero()) throw InputError("class coordinates need a cocycle");
    if (x.is_zero()) throw InputError("class coordinates of zero are degree-ambiguous");
    auto deg = x.degree();
    if (!deg) throw InputError("class coordinates need a homogeneous element");
    if (*deg > max_degree_) throw InputError("degree outside the computed range");

    const Degree& data = degrees_[*deg];
    auto red = data.span.reduce(slice_coordinates(x));
    if (!red.in_span) throw InternalError("cocycle escapes the computed cocycle span");
    std::vector<Rational> out(data.reps.size(), Rational(0));
    for (std::size_t k = 0; k < red.row_coefficients.size(); ++k) {
        int rep = data.rep_index[k];
        if (rep >= 0)
            out[rep] = red.row_coefficients[k];
        // Boundary contributions vanish in cohomology.
    }
    return out;
}

const RationalMatrix& CohomologyEngine::d_matrix(int p) const {
    if (p < 0 || p > max_degree_) throw InputError("degree outside the computed range");
    return d_[p];
}

bool is_cocycle(const Cdga& a, const Element& x) { return a.d(x).is_zero(); }

bool class_is_zero(const Cdga& a, const Element& x) {
    if (!x.algebra().is(a.algebra())) throw InputError("element belongs to a different algebra");
    if (!a.d(x).is_zero()) throw InputError("not a cocycle");
    if (x.is_zero()) return true;
    auto deg = x.degree();
    if (!deg) throw InputError("not homogeneous");
    int p = *deg;
    if (p == 0) return false; // nonzero multiples of 1 are never exact

    const GradedAlgebra& alg = x.algebra();
    std::vector<Monomial> below = alg.basis(p - 1);
    std::vector<Monomial> here = alg.basis(p);
    std::map<Monomial, int> index;
    for (int i = 0; i < static_cast<int>(here.size()); ++i) index[here[i]] = i;

    EchelonBasis image(static_cast<int>(here.size()));
    for (const auto& m : below) {
        Element dm = a.d(Element(alg, m, 1));
        std::vector<Rational> col(here.size(), Rational(0));
        for (const auto& [mon, c] : dm.terms()) col[index.at(mon)] = c;
        image.insert(col);
    }
    std::vector<Rational> coords(here.size(), Rational(0));
    for (const auto& [mon, c] : x.terms()) coords[index.at(mon)] = c;
    return image.contains(coords);
}

CohomologyTable cohomology_table(const Cdga& a, int max_degree) {
    return CohomologyEngine(a, max_degree).table();
}

} // namespace cdga
