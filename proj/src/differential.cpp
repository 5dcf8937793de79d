#include "cdga/differential.hpp"

#include "cdga/errors.hpp"

#include <algorithm>
#include <set>

namespace cdga {

namespace {

// d applied to one normal-form word, by Leibniz on the leading power:
//   d(g^e * m) = e * g^(e-1) * dg * m + (-1)^(e*|g|) * g^e * d(m)
Element d_monomial(const GradedAlgebra& alg, const std::vector<Element>& diffs,
                   const Monomial& m) {
    if (m.is_unit()) return alg.zero();
    auto factors = m.factors();
    MonomialFactor head = factors[0];
    Monomial rest(std::vector<MonomialFactor>(factors.begin() + 1, factors.end()));

    Element out = alg.zero();
    const Element& dg = diffs[head.gen];
    if (!dg.is_zero()) {
        std::vector<MonomialFactor> reduced;
        if (head.exp > 1) reduced.push_back({head.gen, head.exp - 1});
        Element prefix(alg, Monomial(std::move(reduced)), Rational(head.exp));
        out += prefix * dg * Element(alg, rest, 1);
    }
    Element drest = d_monomial(alg, diffs, rest);
    if (!drest.is_zero()) {
        int parity = (head.exp * alg.gen(head.gen).degree) % 2;
        Rational sign = (parity != 0) ? -1 : 1;
        out += sign * (Element(alg, Monomial({head}), 1) * drest);
    }
    return out;
}

Element apply_d(const GradedAlgebra& alg, const std::vector<Element>& diffs,
                const Element& x) {
    Element out = alg.zero();
    for (const auto& [m, c] : x.terms()) out += c * d_monomial(alg, diffs, m);
    return out;
}

} // namespace

DSquaredReport check_differential(const GradedAlgebra& algebra,
                                  const std::vector<Element>& generator_diffs) {
    if (static_cast<int>(generator_diffs.size()) != algebra.size())
        throw InputError("differential table size does not match generator count");
    for (int i = 0; i < algebra.size(); ++i) {
        const Element& di = generator_diffs[i];
        if (!di.algebra().is(algebra))
            throw InputError("differential of '" + algebra.gen(i).name +
                             "' lives in a different algebra");
        if (di.is_zero()) continue;
        auto deg = di.degree();
        if (!deg || *deg != algebra.gen(i).degree + 1)
            throw InputError("d(" + algebra.gen(i).name + ") must be homogeneous of degree " +
                             std::to_string(algebra.gen(i).degree + 1));
    }
    for (int i = 0; i < algebra.size(); ++i) {
        Element dd = apply_d(algebra, generator_diffs, generator_diffs[i]);
        if (!dd.is_zero()) {
            return {false, algebra.gen(i).name,
                    "d(d(" + algebra.gen(i).name + ")) = " + dd.str()};
        }
    }
    return {};
}

Cdga Cdga::create(GradedAlgebra algebra, std::vector<Element> generator_diffs) {
    DSquaredReport report = check_differential(algebra, generator_diffs);
    if (!report.pass)
        throw InputError("differential does not square to zero: " + report.detail);
    Cdga a;
    a.data_ = std::make_shared<Data>(Data{std::move(algebra), std::move(generator_diffs)});
    return a;
}

const Element& Cdga::diff_of(int gen) const {
    if (gen < 0 || gen >= algebra().size()) throw InternalError("generator index out of range");
    return data_->diffs[gen];
}

Element Cdga::d(const Element& x) const {
    if (!x.algebra().is(algebra())) throw InputError("element belongs to a different algebra");
    return apply_d(algebra(), data_->diffs, x);
}

DSquaredReport check_d_squared(const Cdga& a, int max_degree) {
    for (int p = 0; p <= max_degree; ++p) {
        for (const Monomial& m : a.algebra().basis(p)) {
            Element dd = a.d(a.d(Element(a.algebra(), m, 1)));
            if (!dd.is_zero()) {
                return {false, monomial_string(a.algebra(), m),
                        "d(d(" + monomial_string(a.algebra(), m) + ")) = " + dd.str()};
            }
        }
    }
    return {};
}

MinimalityReport is_minimal(const Cdga& a) {
    for (int i = 0; i < a.algebra().size(); ++i) {
        for (const auto& [m, c] : a.diff_of(i).terms()) {
            if (m.length() == 1) return {false, a.algebra().gen(i).name};
        }
    }
    return {};
}

Cdga tensor(const Cdga& a, const Cdga& b) {
    const GradedAlgebra& A = a.algebra();
    const GradedAlgebra& B = b.algebra();
    std::vector<Generator> gens;
    gens.reserve(A.size() + B.size());
    std::set<std::string> taken;
    for (int i = 0; i < A.size(); ++i) {
        gens.push_back(A.gen(i));
        taken.insert(A.gen(i).name);
    }
    for (int i = 0; i < B.size(); ++i) {
        std::string name = B.gen(i).name;
        for (int suffix = 2; taken.count(name); ++suffix)
            name = B.gen(i).name + "_" + std::to_string(suffix);
        taken.insert(name);
        gens.push_back({name, B.gen(i).degree});
    }
    GradedAlgebra alg = GradedAlgebra::create(std::move(gens));

    // Re-index an element along gen i -> i + offset. The map is monotone, so
    // normal forms and signs carry over unchanged.
    auto shift = [&alg](const Element& x, int offset) {
        Element out(alg);
        for (const auto& [m, c] : x.terms()) {
            std::vector<MonomialFactor> factors(m.factors().begin(), m.factors().end());
            for (auto& f : factors) f.gen += offset;
            out.add_term(Monomial(std::move(factors)), c);
        }
        return out;
    };

    std::vector<Element> diffs;
    diffs.reserve(alg.size());
    for (int i = 0; i < A.size(); ++i) diffs.push_back(shift(a.diff_of(i), 0));
    for (int i = 0; i < B.size(); ++i) diffs.push_back(shift(b.diff_of(i), A.size()));
    return Cdga::create(std::move(alg), std::move(diffs));
}

FiltrationReport sullivan_filtration(const Cdga& a) {
    const GradedAlgebra& alg = a.algebra();
    std::vector<bool> placed(alg.size(), false);
    FiltrationReport report;
    int remaining = alg.size();
    while (remaining > 0) {
        std::vector<std::string> stage;
        std::vector<int> stage_idx;
        for (int i = 0; i < alg.size(); ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (const auto& [m, c] : a.diff_of(i).terms()) {
                for (const auto& f : m.factors()) {
                    if (!placed[f.gen]) {
                        ready = false;
                        break;
                    }
                }
                if (!ready) break;
            }
            if (ready) {
                stage.push_back(alg.gen(i).name);
                stage_idx.push_back(i);
            }
        }
        if (stage.empty()) break; // cycle among the remaining differentials
        for (int i : stage_idx) placed[i] = true;
        remaining -= static_cast<int>(stage.size());
        report.stages.push_back(std::move(stage));
    }
    for (int i = 0; i < alg.size(); ++i)
        if (!placed[i]) report.unfiltered.push_back(alg.gen(i).name);
    report.complete = report.unfiltered.empty();
    return report;
}

} // namespace cdga
