#include "cdga/ring.hpp"

#include "cdga/errors.hpp"

#include <algorithm>
#include <set>

namespace cdga {

FiniteRing::FiniteRing(std::vector<BasisElement> basis,
                       std::map<std::pair<int, int>, std::vector<Rational>> products)
    : basis_(std::move(basis)), products_(std::move(products)) {
    validate();
}

void FiniteRing::validate() {
    if (basis_.empty()) throw InputError("ring basis is empty");
    std::set<std::string> names;
    for (const auto& b : basis_) {
        if (b.label.empty()) throw InputError("ring basis label is empty");
        if (b.degree < 0) throw InputError("ring basis degree is negative");
        if (!names.insert(b.label).second)
            throw InputError("duplicate ring basis label '" + b.label + "'");
    }
    top_degree_ = 0;
    for (const auto& b : basis_) top_degree_ = std::max(top_degree_, b.degree);

    for (const auto& [key, coords] : products_) {
        auto [i, j] = key;
        if (i < 0 || i >= dim() || j < 0 || j >= dim())
            throw InputError("ring product index out of range");
        if (static_cast<int>(coords.size()) != dim())
            throw InputError("ring product coordinate vector has wrong length");
        int target = basis_[i].degree + basis_[j].degree;
        for (int k = 0; k < dim(); ++k)
            if (coords[k] != 0 && basis_[k].degree != target)
                throw InputError("ring product of '" + basis_[i].label + "' and '" +
                                 basis_[j].label + "' is not degree-additive");
    }

    // Graded commutativity: c_ji = (-1)^(|i||j|) c_ij, including omitted rows.
    for (int i = 0; i < dim(); ++i) {
        for (int j = i; j < dim(); ++j) {
            std::vector<Rational> ij = product(i, j);
            std::vector<Rational> ji = product(j, i);
            int sign = (basis_[i].degree % 2 != 0 && basis_[j].degree % 2 != 0) ? -1 : 1;
            for (int k = 0; k < dim(); ++k)
                if (ji[k] != sign * ij[k])
                    throw InputError("ring is not graded-commutative at '" +
                                     basis_[i].label + "', '" + basis_[j].label + "'");
        }
    }

    // Exactly one degree-0 basis element, acting as the unit.
    unit_ = -1;
    for (int i = 0; i < dim(); ++i) {
        if (basis_[i].degree == 0) {
            if (unit_ >= 0) throw InputError("ring has more than one degree-0 basis element");
            unit_ = i;
        }
    }
    if (unit_ < 0) throw InputError("ring has no degree-0 basis element");
    for (int j = 0; j < dim(); ++j) {
        std::vector<Rational> row = product(unit_, j);
        for (int k = 0; k < dim(); ++k)
            if (row[k] != ((k == j) ? Rational(1) : Rational(0)))
                throw InputError("degree-0 basis element is not a unit");
    }
}

long long FiniteRing::betti(int p) const {
    long long n = 0;
    for (const auto& b : basis_)
        if (b.degree == p) ++n;
    return n;
}

std::vector<int> FiniteRing::degree_indices(int p) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].degree == p) out.push_back(i);
    return out;
}

std::vector<Rational> FiniteRing::product(int i, int j) const {
    if (i < 0 || i >= dim() || j < 0 || j >= dim())
        throw InternalError("ring product index out of range");
    auto it = products_.find({i, j});
    if (it == products_.end()) return std::vector<Rational>(dim(), Rational(0));
    return it->second;
}

std::vector<Rational> FiniteRing::multiply(std::span<const Rational> a,
                                           std::span<const Rational> b) const {
    if (static_cast<int>(a.size()) != dim() || static_cast<int>(b.size()) != dim())
        throw InputError("ring multiply: coordinate vectors must match the basis");
    std::vector<Rational> out(dim(), Rational(0));
    for (int i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j] == 0) continue;
            auto it = products_.find({i, j});
            if (it == products_.end()) continue;
            Rational c = a[i] * b[j];
            for (int k = 0; k < dim(); ++k)
                if (it->second[k] != 0) out[k] += c * it->second[k];
        }
    }
    return out;
}

Json FiniteRing::to_json() const {
    Json j;
    j["basis"] = Json::array();
    for (const auto& b : basis_) {
        Json e;
        e["label"] = b.label;
        e["degree"] = b.degree;
        j["basis"].push_back(std::move(e));
    }
    j["products"] = Json::array();
    for (const auto& [key, coords] : products_) {
        bool nonzero = std::any_of(coords.begin(), coords.end(),
                                   [](const Rational& c) { return c != 0; });
        if (!nonzero) continue;
        Json e;
        e["i"] = key.first;
        e["j"] = key.second;
        Json cs = Json::array();
        for (const auto& c : coords) cs.push_back(fraction_string(c));
        e["coords"] = std::move(cs);
        j["products"].push_back(std::move(e));
    }
    return j;
}

FiniteRing FiniteRing::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
        throw InputError("ring file: expected an object with a 'basis' array");
    std::vector<BasisElement> basis;
    for (const auto& e : j["basis"]) {
        if (!e.is_object() || !e.contains("label") || !e.contains("degree") ||
            !e["label"].is_string() || !e["degree"].is_number_integer())
            throw InputError("ring file: basis entries need a string 'label' and integer 'degree'");
        basis.push_back({e["label"].get<std::string>(), e["degree"].get<int>()});
    }
    std::map<std::pair<int, int>, std::vector<Rational>> products;
    if (j.contains("products")) {
        if (!j["products"].is_array()) throw InputError("ring file: 'products' must be an array");
        for (const auto& e : j["products"]) {
            if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("coords") ||
                !e["i"].is_number_integer() || !e["j"].is_number_integer() ||
                !e["coords"].is_array())
                throw InputError("ring file: product entries need 'i', 'j' and a 'coords' array");
            std::vector<Rational> coords;
            for (const auto& c : e["coords"]) {
                if (!c.is_string()) throw InputError("ring file: coords must be strings like \"3/2\"");
                coords.push_back(parse_rational(c.get<std::string>()));
            }
            auto key = std::make_pair(e["i"].get<int>(), e["j"].get<int>());
            if (!products.emplace(key, std::move(coords)).second)
                throw InputError("ring file: duplicate product entry");
        }
    }
    return FiniteRing(std::move(basis), std::move(products));
}

FiniteRing extract_ring(const CohomologyEngine& engine) {
    std::vector<FiniteRing::BasisElement> basis;
    std::vector<std::pair<int, int>> source; // flat index -> (degree, rep position)
    std::vector<std::map<int, int>> flat(engine.max_degree() + 1); // degree -> rep -> flat
    for (int p = 0; p <= engine.max_degree(); ++p) {
        for (int i = 0; i < static_cast<int>(engine.representatives(p).size()); ++i) {
            flat[p][i] = static_cast<int>(basis.size());
            basis.push_back({"h" + std::to_string(p) + "_" + std::to_string(i), p});
            source.push_back({p, i});
        }
    }
    int n = static_cast<int>(basis.size());
    std::map<std::pair<int, int>, std::vector<Rational>> products;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto [pi, ri] = source[i];
            auto [pj, rj] = source[j];
            int q = pi + pj;
            if (q > engine.max_degree()) continue; // truncated
            Element prod = engine.representatives(pi)[ri] * engine.representatives(pj)[rj];
            if (prod.is_zero()) continue;
            std::vector<Rational> cls = engine.class_coordinates(prod);
            std::vector<Rational> coords(n, Rational(0));
            bool nonzero = false;
            for (int k = 0; k < static_cast<int>(cls.size()); ++k) {
                if (cls[k] != 0) {
                    coords[flat[q].at(k)] = cls[k];
                    nonzero = true;
                }
            }
            if (nonzero) products.emplace(std::make_pair(i, j), std::move(coords));
        }
    }
    return FiniteRing(std::move(basis), std::move(products));
}

FiniteRing extract_ring(const Cdga& a, int max_degree) {
    return extract_ring(CohomologyEngine(a, max_degree));
}

} // namespace cdga
