#include "cdga/graded.hpp"

#include "cdga/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cdga {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

Monomial::Monomial(std::vector<MonomialFactor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].exp < 1) throw InternalError("monomial factor with exponent < 1");
        if (i > 0 && factors_[i - 1].gen >= factors_[i].gen)
            throw InternalError("monomial factors out of order");
    }
}

int Monomial::length() const {
    int n = 0;
    for (const auto& f : factors_) n += f.exp;
    return n;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors_;
    const auto& fb = b.factors_;
    for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
        if (auto c = fa[i].gen <=> fb[i].gen; c != 0) return c;
        if (auto c = fb[i].exp <=> fa[i].exp; c != 0) return c; // higher power first
    }
    return fa.size() <=> fb.size();
}

GradedAlgebra GradedAlgebra::create(std::vector<Generator> generators) {
    auto data = std::make_shared<Data>();
    for (int i = 0; i < static_cast<int>(generators.size()); ++i) {
        const auto& g = generators[i];
        if (!valid_name(g.name))
            throw InputError("invalid generator name '" + g.name + "'");
        if (g.degree < 1)
            throw InputError("generator '" + g.name + "' must have degree >= 1");
        if (!data->index.emplace(g.name, i).second)
            throw InputError("duplicate generator name '" + g.name + "'");
    }
    data->generators = std::move(generators);
    GradedAlgebra a;
    a.data_ = std::move(data);
    return a;
}

int GradedAlgebra::size() const { return static_cast<int>(data_->generators.size()); }

const Generator& GradedAlgebra::gen(int i) const {
    if (i < 0 || i >= size()) throw InternalError("generator index out of range");
    return data_->generators[i];
}

std::optional<int> GradedAlgebra::find(std::string_view name) const {
    auto it = data_->index.find(name);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

int GradedAlgebra::degree_of(const Monomial& m) const {
    int d = 0;
    for (const auto& f : m.factors()) d += gen(f.gen).degree * f.exp;
    return d;
}

std::pair<int, Monomial> GradedAlgebra::normalize(std::span<const int> word) const {
    std::vector<int> w(word.begin(), word.end());
    for (int g : w)
        if (g < 0 || g >= size()) throw InternalError("generator index out of range");
    // Insertion sort; each adjacent swap of two odd-degree letters flips the sign.
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
            if (gen(w[j - 1]).degree % 2 != 0 && gen(w[j]).degree % 2 != 0) sign = -sign;
            std::swap(w[j - 1], w[j]);
        }
    }
    std::vector<MonomialFactor> factors;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        int exp = static_cast<int>(j - i);
        if (exp > 1 && gen(w[i]).degree % 2 != 0) return {0, Monomial{}};
        factors.push_back({w[i], exp});
        i = j;
    }
    return {sign, Monomial(std::move(factors))};
}

std::pair<int, Monomial> GradedAlgebra::multiply(const Monomial& a, const Monomial& b) const {
    auto fa = a.factors();
    auto fb = b.factors();
    // Parity of the odd-letter count in the suffix fa[i..] for each i.
    std::vector<int> odd_suffix(fa.size() + 1, 0);
    for (std::size_t i = fa.size(); i-- > 0;) {
        int odd = (gen(fa[i].gen).degree % 2 != 0) ? fa[i].exp : 0;
        odd_suffix[i] = (odd_suffix[i + 1] + odd) % 2;
    }
    std::vector<MonomialFactor> out;
    out.reserve(fa.size() + fb.size());
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].gen < fb[j].gen)) {
            out.push_back(fa[i++]);
        } else if (i == fa.size() || fb[j].gen < fa[i].gen) {
            // fb[j] moves left across the remaining fa letters.
            if (gen(fb[j].gen).degree % 2 != 0 && fb[j].exp % 2 != 0 && odd_suffix[i] != 0)
                sign = -sign;
            out.push_back(fb[j++]);
        } else {
            if (gen(fa[i].gen).degree % 2 != 0) return {0, Monomial{}};
            out.push_back({fa[i].gen, fa[i].exp + fb[j].exp});
            ++i;
            ++j;
        }
    }
    return {sign, Monomial(std::move(out))};
}

namespace {

void basis_rec(const GradedAlgebra& alg, int gi, int remaining,
               std::vector<MonomialFactor>& acc, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (gi >= alg.size()) return;
    int d = alg.gen(gi).degree;
    int max_exp = (d % 2 != 0) ? 1 : remaining / d;
    if (d > remaining) max_exp = 0;
    for (int e = 0; e <= max_exp; ++e) {
        if (e > 0) acc.push_back({gi, e});
        basis_rec(alg, gi + 1, remaining - e * d, acc, out);
        if (e > 0) acc.pop_back();
    }
}

} // namespace

std::vector<Monomial> GradedAlgebra::basis(int degree) const {
    if (degree < 0) return {};
    std::vector<Monomial> out;
    std::vector<MonomialFactor> acc;
    basis_rec(*this, 0, degree, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

Element GradedAlgebra::zero() const { return Element(*this); }

Element GradedAlgebra::one() const { return Element(*this, Monomial{}, 1); }

Element GradedAlgebra::gen_element(int i) const {
    return Element(*this, Monomial({{i, 1}}), 1);
}

Element::Element(GradedAlgebra algebra, const Monomial& m, Rational coeff)
    : algebra_(std::move(algebra)) {
    add_term(m, coeff);
}

bool Element::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = algebra_.degree_of(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (algebra_.degree_of(m) != d) return false;
    return true;
}

std::optional<int> Element::degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return algebra_.degree_of(terms_.begin()->first);
}

void Element::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element r(algebra_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

namespace {

void require_same_algebra(const Element& a, const Element& b) {
    if (!a.algebra().is(b.algebra()))
        throw InputError("elements belong to different algebras");
}

} // namespace

Element& Element::operator+=(const Element& rhs) {
    require_same_algebra(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    require_same_algebra(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Element operator*(const Element& lhs, const Element& rhs) {
    require_same_algebra(lhs, rhs);
    Element r(lhs.algebra_);
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            auto [sign, m] = lhs.algebra_.multiply(ma, mb);
            if (sign != 0) r.add_term(m, sign * ca * cb);
        }
    }
    return r;
}

Element operator*(const Rational& c, Element rhs) {
    if (c == 0) return Element(rhs.algebra_);
    for (auto& [m, coeff] : rhs.terms_) coeff *= c;
    return rhs;
}

Element Element::pow(int e) const {
    if (e < 0) throw InputError("negative power of an algebra element");
    Element r = algebra_.one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Element::operator==(const Element& rhs) const {
    return algebra_.is(rhs.algebra_) && terms_ == rhs.terms_;
}

std::string monomial_string(const GradedAlgebra& algebra, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += "*";
        s += algebra.gen(f.gen).name;
        if (f.exp > 1) s += "^" + std::to_string(f.exp);
    }
    return s;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (m.is_unit()) {
            s += rational_string(a);
        } else {
            if (a != 1) s += rational_string(a) + "*";
            s += monomial_string(algebra_, m);
        }
    }
    return s;
}

} // namespace cdga
