#include "cdga/sullivan.hpp"

#include "cdga/errors.hpp"
#include "cdga/linalg.hpp"

#include <algorithm>

namespace cdga {

namespace {

// Re-reads an element in a larger algebra whose generator list starts with
// the element's own generators. Indices are preserved.
Element widen(const GradedAlgebra& bigger, const Element& x) {
    const GradedAlgebra& small = x.algebra();
    if (small.size() > bigger.size()) throw InternalError("widen: target algebra is smaller");
    for (int i = 0; i < small.size(); ++i) {
        if (small.gen(i).name != bigger.gen(i).name ||
            small.gen(i).degree != bigger.gen(i).degree)
            throw InternalError("widen: generator tables do not nest");
    }
    Element out(bigger);
    for (const auto& [m, c] : x.terms())
        out.add_term(Monomial({m.factors().begin(), m.factors().end()}), c);
    return out;
}

} // namespace

RelativeExtension adjoin(const Cdga& base, const std::string& name, int degree,
                         const Element& z) {
    if (!z.algebra().is(base.algebra()))
        throw InputError("adjoin: differential target lives in a different algebra");
    if (base.algebra().find(name))
        throw InputError("adjoin: generator name '" + name + "' already in use");
    if (degree < 1) throw InputError("adjoin: generator degree must be >= 1");
    if (!z.is_zero()) {
        auto deg = z.degree();
        if (!deg || *deg != degree + 1)
            throw InputError("adjoin: differential must be homogeneous of degree " +
                             std::to_string(degree + 1));
        if (!base.d(z).is_zero()) throw InputError("adjoin: differential is not a cocycle");
    }

    std::vector<Generator> gens;
    for (int i = 0; i < base.algebra().size(); ++i) gens.push_back(base.algebra().gen(i));
    gens.push_back({name, degree});
    GradedAlgebra alg = GradedAlgebra::create(std::move(gens));

    std::vector<Element> diffs;
    for (int i = 0; i < base.algebra().size(); ++i) diffs.push_back(widen(alg, base.diff_of(i)));
    diffs.push_back(widen(alg, z));
    RelativeExtension ext{base, Cdga::create(alg, std::move(diffs)), alg.size() - 1};
    return ext;
}

RelativeExtension sphere_bundle_model(const Cdga& base, const Element& euler, int k) {
    if (k < 1 || k % 2 == 0)
        throw InputError("sphere bundle model: fiber degree must be odd (even spheres "
                         "need a second generator and are not supported here)");
    std::string name = "y";
    for (int suffix = 2; base.algebra().find(name); ++suffix)
        name = "y" + std::to_string(suffix);
    return adjoin(base, name, k, euler);
}

DegreeThreeReport verify_degree_three_invariance(const Cdga& base, const Element& z) {
    for (int i = 0; i < base.algebra().size(); ++i)
        if (base.algebra().gen(i).degree == 1)
            throw InputError("degree-three invariance: base has a degree-1 generator ('" +
                             base.algebra().gen(i).name + "')");
    MinimalityReport min = is_minimal(base);
    if (!min.minimal)
        throw InputError("degree-three invariance: base is not minimal (witness '" +
                         *min.witness_generator + "')");
    FiltrationReport filt = sullivan_filtration(base);
    if (!filt.complete)
        throw InputError("degree-three invariance: base differentials are cyclic on '" +
                         filt.unfiltered.front() + "'");
    auto deg = z.degree();
    if (z.is_zero() || !deg || *deg != 4)
        throw InputError("degree-three invariance: z must be homogeneous of degree 4");
    if (!base.d(z).is_zero())
        throw InputError("degree-three invariance: z is not a cocycle");
    if (class_is_zero(base, z))
        throw InputError("degree-three invariance: z is exact, its class vanishes");

    RelativeExtension ext = sphere_bundle_model(base, z, 3);
    DegreeThreeReport report;
    report.b3_base = CohomologyEngine(base, 3).betti(3);
    report.b3_total = CohomologyEngine(ext.total, 3).betti(3);
    report.equal = report.b3_base == report.b3_total;
    report.fiber_generator = ext.total.algebra().gen(ext.new_generator).name;
    return report;
}

ModelMorphism::ModelMorphism(Cdga source, Cdga target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_.algebra().size())
        throw InputError("morphism: one image per source generator required");
    for (int i = 0; i < source_.algebra().size(); ++i) {
        const Element& img = images_[i];
        if (!img.algebra().is(target_.algebra()))
            throw InputError("morphism: image of '" + source_.algebra().gen(i).name +
                             "' lives outside the target algebra");
        if (!img.is_zero()) {
            auto deg = img.degree();
            if (!deg || *deg != source_.algebra().gen(i).degree)
                throw InputError("morphism: image of '" + source_.algebra().gen(i).name +
                                 "' is not homogeneous of the generator degree");
        }
    }
}

Element ModelMorphism::evaluate(const Element& x) const {
    if (!x.algebra().is(source_.algebra()))
        throw InputError("morphism: element belongs to a different algebra");
    Element out(target_.algebra());
    for (const auto& [m, c] : x.terms()) {
        Element term = target_.algebra().one();
        for (const auto& f : m.factors()) term = term * images_[f.gen].pow(f.exp);
        out += c * term;
    }
    return out;
}

bool ModelMorphism::commutes_with_d() const {
    for (int i = 0; i < source_.algebra().size(); ++i) {
        Element lhs = target_.d(images_[i]);
        Element rhs = evaluate(source_.diff_of(i));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::vector<DegreeCertificate> quasi_iso_certificates(const ModelMorphism& f,
                                                      int max_degree) {
    CohomologyEngine src(f.source(), max_degree + 1);
    CohomologyEngine tgt(f.target(), max_degree + 1);
    std::vector<DegreeCertificate> certs;
    for (int p = 0; p <= max_degree + 1; ++p) {
        DegreeCertificate cert;
        cert.degree = p;
        cert.betti_source = src.betti(p);
        cert.betti_target = tgt.betti(p);
        RationalMatrix m(static_cast<int>(tgt.betti(p)), static_cast<int>(src.betti(p)));
        for (int j = 0; j < src.betti(p); ++j) {
            Element image = f.evaluate(src.representatives(p)[j]);
            if (image.is_zero()) continue;
            std::vector<Rational> cls = tgt.class_coordinates(image);
            for (int r = 0; r < static_cast<int>(cls.size()); ++r)
                if (cls[r] != 0) m.set(r, j, cls[r]);
        }
        cert.rank = rref(m).rank;
        cert.injective = cert.rank == cert.betti_source;
        cert.isomorphism = cert.injective && cert.rank == cert.betti_target;
        certs.push_back(cert);
    }
    return certs;
}

namespace {

// Mutable build state for the staged model construction. Generators only ever
// get appended, so previously built elements widen into each new algebra.
struct ModelBuilder {
    std::vector<Generator> gens;
    std::vector<Element> diffs;   // in the current algebra
    std::vector<Element> images;  // in the input algebra
    Cdga current = Cdga::create(GradedAlgebra::create({}), {});

    void append(const Generator& g, const Element& diff_in_current_or_zero,
                const Element& image) {
        GradedAlgebra next = [&] {
            std::vector<Generator> gs = gens;
            gs.push_back(g);
            return GradedAlgebra::create(std::move(gs));
        }();
        std::vector<Element> nds;
        for (const auto& d : diffs) nds.push_back(widen(next, d));
        nds.push_back(widen(next, diff_in_current_or_zero));
        gens.push_back(g);
        diffs = std::move(nds);
        images.push_back(image);
        current = Cdga::create(next, diffs);
    }
};

} // namespace

MinimalModelResult minimal_model(const Cdga& input, int max_degree) {
    if (max_degree < 2) throw InputError("minimal model: max degree must be >= 2");
    CohomologyEngine in(input, max_degree + 1);
    if (in.betti(1) != 0)
        throw InputError("minimal model: input has nonzero first cohomology");
    if (in.betti(0) != 1)
        throw InternalError("minimal model: connected input expected");

    ModelBuilder mb;

    for (int k = 2; k <= max_degree; ++k) {
        CohomologyEngine model(mb.current, k + 1);
        ModelMorphism phi(mb.current, input, mb.images);

        // Cover the cokernel of H^k(model) -> H^k(input) with closed
        // generators mapping to input representatives.
        EchelonBasis hit(static_cast<int>(in.betti(k)));
        for (const auto& rep : model.representatives(k)) {
            Element img = phi.evaluate(rep);
            if (img.is_zero()) continue;
            hit.insert(in.class_coordinates(img));
        }
        int fresh = 0;
        auto fresh_name = [&] { return "x" + std::to_string(k) + "_" + std::to_string(fresh); };
        for (int j = 0; j < in.betti(k); ++j) {
            std::vector<Rational> e(in.betti(k), Rational(0));
            e[j] = 1;
            if (!hit.insert(e)) continue; // already covered
            mb.append({fresh_name(), k}, mb.current.algebra().zero(),
                      in.representatives(k)[j]);
            ++fresh;
        }

        // New closed degree-k generators change neither Z^{k+1} nor B^{k+1},
        // so the kernel of H^{k+1}(model) -> H^{k+1}(input) can be computed
        // on the pre-extension model and its classes widened afterwards.
        RationalMatrix m(static_cast<int>(in.betti(k + 1)),
                         static_cast<int>(model.betti(k + 1)));
        for (int j = 0; j < model.betti(k + 1); ++j) {
            Element img = phi.evaluate(model.representatives(k + 1)[j]);
            if (img.is_zero()) continue;
            std::vector<Rational> cls = in.class_coordinates(img);
            for (int r = 0; r < static_cast<int>(cls.size()); ++r)
                if (cls[r] != 0) m.set(r, j, cls[r]);
        }
        for (const auto& kv : kernel_basis(m).vectors) {
            // zeta: a model cocycle of degree k+1 whose image in the input is
            // exact. Killing it needs a generator y with dy = zeta mapping to
            // a primitive of the image.
            Element zeta(model.cdga().algebra());
            for (int j = 0; j < model.betti(k + 1); ++j)
                if (kv[j] != 0) zeta += kv[j] * model.representatives(k + 1)[j];
            Element img = phi.evaluate(zeta);
            Element primitive(input.algebra());
            if (!img.is_zero()) {
                auto x = solve(in.d_matrix(k), in.slice_coordinates(img));
                if (!x) throw InternalError("minimal model: exact class has no primitive");
                primitive = in.from_slice_coordinates(k, *x);
            }
            mb.append({fresh_name(), k}, widen(mb.current.algebra(), zeta), primitive);
            ++fresh;
        }
    }

    ModelMorphism phi(mb.current, input, mb.images);
    if (!phi.commutes_with_d())
        throw InternalError("minimal model: constructed morphism fails to commute with d");
    if (!is_minimal(mb.current).minimal)
        throw InternalError("minimal model: constructed algebra is not minimal");
    MinimalModelResult result{mb.current, phi, quasi_iso_certificates(phi, max_degree)};
    return result;
}

} // namespace cdga
