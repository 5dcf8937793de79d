#include "cdga/catalog.hpp"

#include "cdga/cohomology.hpp"
#include "cdga/dsl.hpp"
#include "cdga/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cdga {

namespace {

PartialBetti betti_from_model(const Cdga& model, int up_to) {
    CohomologyEngine engine(model, up_to);
    PartialBetti out;
    for (int p = 0; p <= up_to; ++p) out.push_back(engine.betti(p));
    return out;
}

CatalogEntry model_entry(std::string name, std::string description, int dimension,
                         Cdga model) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.dimension = dimension;
    e.betti = betti_from_model(model, dimension);
    e.model = std::move(model);
    return e;
}

} // namespace

CatalogEntry sphere_entry(int n) {
    if (n < 1) throw InputError("sphere: dimension must be >= 1");
    if (n % 2 != 0) {
        GradedAlgebra alg = GradedAlgebra::create({{"z", n}});
        Cdga model = Cdga::create(alg, {alg.zero()});
        return model_entry("sphere(" + std::to_string(n) + ")",
                           "odd-dimensional sphere", n, std::move(model));
    }
    GradedAlgebra alg = GradedAlgebra::create({{"v", n}, {"y", 2 * n - 1}});
    Element v = alg.gen_element(0);
    Cdga model = Cdga::create(alg, {alg.zero(), v * v});
    return model_entry("sphere(" + std::to_string(n) + ")",
                       "even-dimensional sphere", n, std::move(model));
}

CatalogEntry cpn_entry(int n) {
    if (n < 1) throw InputError("cpn: index must be >= 1");
    GradedAlgebra alg = GradedAlgebra::create({{"v", 2}, {"y", 2 * n + 1}});
    Element v = alg.gen_element(0);
    Cdga model = Cdga::create(alg, {alg.zero(), v.pow(n + 1)});
    return model_entry("cpn(" + std::to_string(n) + ")",
                       "complex projective space of complex dimension " + std::to_string(n),
                       2 * n, std::move(model));
}

CatalogEntry kodaira_thurston_entry() {
    GradedAlgebra alg = GradedAlgebra::create({{"a", 1}, {"b", 1}, {"c", 1}, {"e", 1}});
    Element ab = alg.gen_element(0) * alg.gen_element(1);
    Cdga model = Cdga::create(alg, {alg.zero(), alg.zero(), ab, alg.zero()});
    return model_entry("kodaira_thurston",
                       "Kodaira-Thurston nilmanifold: symplectic, not formal", 4,
                       std::move(model));
}

CatalogEntry product_entry(const CatalogEntry& a, const CatalogEntry& b) {
    if (!a.model || !b.model)
        throw InputError("product: both factors need models ('" + a.name + "', '" +
                         b.name + "')");
    CatalogEntry e = model_entry("product(" + a.name + "," + b.name + ")",
                                 "product of " + a.name + " and " + b.name,
                                 a.dimension + b.dimension, tensor(*a.model, *b.model));
    return e;
}

namespace {

CatalogEntry blowup_entry(int complex_dim) {
    // Blow-up of CP^n along a symplectically embedded 4-nilmanifold; only a
    // few Betti numbers are forced by the construction.
    CatalogEntry e;
    e.name = "blowup_cp" + std::to_string(complex_dim);
    e.description = "blow-up of cpn(" + std::to_string(complex_dim) +
                    ") along an embedded Kodaira-Thurston manifold";
    e.dimension = 2 * complex_dim;
    e.betti.assign(e.dimension + 1, std::nullopt);
    e.betti[0] = 1;
    e.betti[1] = 0;
    e.betti[3] = 3; // first Betti number of the blown-up submanifold
    return e;
}

struct NameParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw InputError("catalog name: " + msg + " at position " +
                         std::to_string(pos + 1) + " in '" + std::string(text) + "'");
    }
    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected a name");
        return std::string(text.substr(start, pos - start));
    }
    int number() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos || pos - start > 4) fail("expected a small number");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    CatalogEntry entry() {
        std::string head = ident();
        if (head == "sphere" || head == "cpn") {
            if (!eat('(')) fail("expected '('");
            int n = number();
            if (!eat(')')) fail("expected ')'");
            return head == "sphere" ? sphere_entry(n) : cpn_entry(n);
        }
        if (head == "kodaira_thurston") return kodaira_thurston_entry();
        if (head == "blowup_cp5") return blowup_entry(5);
        if (head == "blowup_cp6") return blowup_entry(6);
        if (head == "product") {
            if (!eat('(')) fail("expected '('");
            CatalogEntry a = entry();
            if (!eat(',')) fail("expected ','");
            CatalogEntry b = entry();
            if (!eat(')')) fail("expected ')'");
            return product_entry(a, b);
        }
        fail("unknown entry '" + head + "'");
    }
};

} // namespace

CatalogEntry catalog_lookup(const std::string& name) {
    NameParser p{name};
    CatalogEntry e = p.entry();
    p.skip_space();
    if (p.pos != name.size()) p.fail("unexpected trailing input");
    return e;
}

std::vector<std::string> catalog_names() {
    return {"sphere(n)", "cpn(n)", "kodaira_thurston", "blowup_cp5", "blowup_cp6",
            "product(a,b)"};
}

PipelineReport k_contact_pipeline(const CatalogEntry& base, const PipelineOptions& options) {
    int k = options.fiber_degree;
    if (k < 1 || k % 2 == 0) throw InputError("pipeline: fiber degree must be odd");
    int half = (k + 1) / 2;

    PipelineReport report;
    report.base_name = base.name;
    report.base_dimension = base.dimension;
    report.fiber_degree = k;
    report.total_dimension = base.dimension + k;

    report.weights.w = options.weights;
    if (report.weights.w.empty()) report.weights.w.assign(half, Rational(1));
    if (static_cast<int>(report.weights.w.size()) != half)
        throw InputError("pipeline: expected " + std::to_string(half) +
                         " weights for fiber degree " + std::to_string(k));
    report.fatness = fatness_weight_certificate(report.weights);

    int max_degree = options.max_degree >= 0 ? options.max_degree : report.total_dimension;
    report.max_degree = max_degree;

    if (base.model) {
        report.model_mode = true;
        const Cdga& X = *base.model;

        // The symplectic class: explicit, or the unique closed degree-2 generator.
        Element omega(X.algebra());
        if (!options.omega.empty()) {
            omega = parse_element(X.algebra(), options.omega);
        } else {
            int found = -1;
            for (int i = 0; i < X.algebra().size(); ++i) {
                if (X.algebra().gen(i).degree == 2 && X.diff_of(i).is_zero()) {
                    if (found >= 0)
                        throw InputError("pipeline: several closed degree-2 generators; "
                                         "pass the symplectic class explicitly");
                    found = i;
                }
            }
            if (found < 0)
                throw InputError("pipeline: no closed degree-2 generator; pass the "
                                 "symplectic class explicitly");
            omega = X.algebra().gen_element(found);
        }
        auto deg = omega.degree();
        if (omega.is_zero() || !deg || *deg != 2)
            throw InputError("pipeline: the symplectic class must be homogeneous of degree 2");
        if (!X.d(omega).is_zero())
            throw InputError("pipeline: the symplectic class must be closed");
        report.omega = omega.str();

        if (CohomologyEngine(X, 1).betti(1) != 0)
            throw InputError("pipeline: base has nonzero first cohomology");

        Rational scale = 1;
        for (const auto& w : report.weights.w) scale *= w;
        Element euler = scale * omega.pow(half);
        if (euler.is_zero() || class_is_zero(X, euler))
            throw InputError("pipeline: the Euler class omega^" + std::to_string(half) +
                             " is exact; the base fails the cohomological hypothesis");
        report.euler = euler.str();

        RelativeExtension ext = sphere_bundle_model(X, euler, k);
        CohomologyEngine engine(ext.total, max_degree);
        for (int p = 0; p <= max_degree; ++p) report.betti.push_back(engine.betti(p));

        // Degree-3 invariance of the extension, when its hypotheses hold.
        if (k == 3) {
            try {
                report.degree_three = verify_degree_three_invariance(X, euler);
                report.degree_three_checked = true;
            } catch (const InputError& e) {
                report.degree_three_note = e.what();
            }
        } else {
            report.degree_three_note = "only defined for fiber degree 3";
        }
    } else {
        // Betti transfer along an odd sphere bundle with nonzero Euler class:
        // degrees below the fiber degree carry over, and the fiber degree
        // itself picks up no correction because the Euler class is nonzero
        // on the unit.
        report.model_mode = false;
        report.notes.push_back("no model: Betti numbers transferred along the bundle for "
                               "degrees <= " + std::to_string(k));
        auto base_b = [&](int p) -> std::optional<long long> {
            if (p < 0 || p > base.dimension) return 0;
            if (p >= static_cast<int>(base.betti.size())) return 0;
            return base.betti[p];
        };
        for (int p = 0; p <= max_degree; ++p) {
            if (p <= k)
                report.betti.push_back(base_b(p));
            else
                report.betti.push_back(std::nullopt);
        }
        report.notes.push_back("transfer assumes the Euler class is nonzero, which the "
                               "weighted construction guarantees");
        report.degree_three_note = "no model available";
    }

    // Degrees beyond the computed window are unknown, not zero.
    PartialBetti padded = report.betti;
    padded.resize(report.total_dimension + 1, std::nullopt);
    report.parity = sasaki_parity_test(padded, report.total_dimension);
    return report;
}

WeinsteinReport weinstein_example(int degree) {
    if (degree < 0) throw InputError("weinstein example: degree must be >= 0");
    CatalogEntry fiber = sphere_entry(2);
    CatalogEntry base = catalog_lookup("blowup_cp6");
    WeinsteinReport report;
    report.degree = degree;
    report.fiber = fiber.name;
    report.base = base.name;
    report.betti = c_splitting_betti(fiber.betti, base.betti, degree);
    return report;
}

} // namespace cdga
