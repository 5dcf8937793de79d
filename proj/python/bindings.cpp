// Python bindings. Reports cross the boundary as JSON strings; the package
// __init__ turns them into dicts so the C++ surface stays small.

#include "cdga/catalog.hpp"
#include "cdga/cohomology.hpp"
#include "cdga/document.hpp"
#include "cdga/dsl.hpp"
#include "cdga/errors.hpp"
#include "cdga/obstructions.hpp"
#include "cdga/ring.hpp"
#include "cdga/sullivan.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace cdga;

namespace {

struct PyAlgebra {
    std::string name;
    Cdga cdga;
};

struct PyRing {
    FiniteRing ring;
};

PartialBetti to_partial(const std::vector<std::optional<long long>>& v) { return v; }

std::vector<Rational> parse_weights(const std::vector<std::string>& w) {
    std::vector<Rational> out;
    out.reserve(w.size());
    for (const auto& s : w) out.push_back(parse_rational(s));
    return out;
}

std::vector<Rational> ring_class(const FiniteRing& ring, const std::string& cls,
                                 const char* what) {
    if (!cls.empty()) return parse_ring_class(ring, cls);
    auto idx = ring.degree_indices(2);
    if (idx.size() != 1)
        throw InputError(std::string(what) +
                         ": pass the class explicitly, the ring has " +
                         std::to_string(idx.size()) + " degree-2 basis elements");
    std::vector<Rational> v(ring.dim(), Rational(0));
    v[idx.front()] = 1;
    return v;
}

} // namespace

PYBIND11_MODULE(_cdga, m) {
    m.doc() = "exact rational-homotopy computations for graded algebra models";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<PyAlgebra>(m, "Algebra")
        .def_readonly("name", &PyAlgebra::name)
        .def("render", [](const PyAlgebra& a) {
            return render_algebra({a.name, a.cdga});
        })
        .def("generators", [](const PyAlgebra& a) {
            std::vector<std::pair<std::string, int>> out;
            for (int i = 0; i < a.cdga.algebra().size(); ++i)
                out.emplace_back(a.cdga.algebra().gen(i).name,
                                 a.cdga.algebra().gen(i).degree);
            return out;
        })
        .def("d", [](const PyAlgebra& a, const std::string& expr) {
            return a.cdga.d(parse_element(a.cdga.algebra(), expr)).str();
        }, py::arg("expr"))
        .def("betti", [](const PyAlgebra& a, int max_degree) {
            CohomologyEngine engine(a.cdga, max_degree);
            std::vector<long long> out;
            for (int p = 0; p <= max_degree; ++p) out.push_back(engine.betti(p));
            return out;
        }, py::arg("max_degree"))
        .def("cohomology", [](const PyAlgebra& a, int max_degree) {
            return to_json(cohomology_table(a.cdga, max_degree)).dump();
        }, py::arg("max_degree"))
        .def("is_minimal", [](const PyAlgebra& a) {
            MinimalityReport r = is_minimal(a.cdga);
            return std::make_pair(r.minimal, r.witness_generator);
        })
        .def("filtration", [](const PyAlgebra& a) {
            return to_json(sullivan_filtration(a.cdga)).dump();
        })
        .def("is_cocycle", [](const PyAlgebra& a, const std::string& expr) {
            return is_cocycle(a.cdga, parse_element(a.cdga.algebra(), expr));
        }, py::arg("expr"))
        .def("class_is_zero", [](const PyAlgebra& a, const std::string& expr) {
            return class_is_zero(a.cdga, parse_element(a.cdga.algebra(), expr));
        }, py::arg("expr"))
        .def("tensor", [](const PyAlgebra& a, const PyAlgebra& b) {
            return PyAlgebra{a.name + "_x_" + b.name, tensor(a.cdga, b.cdga)};
        }, py::arg("other"))
        .def("adjoin", [](const PyAlgebra& a, const std::string& name, int degree,
                          const std::string& z) {
            Element e = z.empty() ? a.cdga.algebra().zero()
                                  : parse_element(a.cdga.algebra(), z);
            return PyAlgebra{a.name, adjoin(a.cdga, name, degree, e).total};
        }, py::arg("name"), py::arg("degree"), py::arg("d") = "")
        .def("sphere_bundle", [](const PyAlgebra& a, const std::string& euler, int degree) {
            Element e = parse_element(a.cdga.algebra(), euler);
            return PyAlgebra{a.name + "_total", sphere_bundle_model(a.cdga, e, degree).total};
        }, py::arg("euler"), py::arg("degree") = 3)
        .def("minimal_model", [](const PyAlgebra& a, int max_degree) {
            MinimalModelResult res = minimal_model(a.cdga, max_degree);
            Json j;
            j["certificates"] = Json::array();
            bool ok = true;
            for (const auto& c : res.certificates) {
                j["certificates"].push_back(to_json(c));
                ok = ok && ((c.degree <= max_degree) ? c.isomorphism : c.injective);
            }
            j["verified"] = ok;
            Json images = Json::array();
            for (int i = 0; i < res.model.algebra().size(); ++i) {
                Json e;
                e["generator"] = res.model.algebra().gen(i).name;
                e["image"] = res.morphism.images()[i].str();
                images.push_back(std::move(e));
            }
            j["images"] = std::move(images);
            return std::make_pair(PyAlgebra{a.name + "_minimal", res.model}, j.dump());
        }, py::arg("max_degree"))
        .def("extract_ring", [](const PyAlgebra& a, int max_degree) {
            return PyRing{extract_ring(a.cdga, max_degree)};
        }, py::arg("max_degree"))
        .def("verify_degree_three_invariance", [](const PyAlgebra& a, const std::string& z) {
            Element e = parse_element(a.cdga.algebra(), z);
            return to_json(verify_degree_three_invariance(a.cdga, e)).dump();
        }, py::arg("z"));

    py::class_<PyRing>(m, "Ring")
        .def("dim", [](const PyRing& r) { return r.ring.dim(); })
        .def("top_degree", [](const PyRing& r) { return r.ring.top_degree(); })
        .def("basis", [](const PyRing& r) {
            std::vector<std::pair<std::string, int>> out;
            for (const auto& b : r.ring.basis()) out.emplace_back(b.label, b.degree);
            return out;
        })
        .def("betti", [](const PyRing& r, int p) { return r.ring.betti(p); }, py::arg("p"))
        .def("to_json", [](const PyRing& r) { return r.ring.to_json().dump(2); })
        .def_static("from_json", [](const std::string& text) {
            Json j = Json::parse(text, nullptr, false);
            if (j.is_discarded()) throw InputError("not valid JSON");
            return PyRing{FiniteRing::from_json(j)};
        }, py::arg("text"))
        .def("lefschetz", [](const PyRing& r, const std::string& cls) {
            return to_json(hard_lefschetz_check(r.ring,
                                                ring_class(r.ring, cls, "lefschetz"))).dump();
        }, py::arg("cls") = "")
        .def("gysin", [](const PyRing& r, const std::string& euler, int max_degree) {
            if (max_degree < 0) max_degree = r.ring.top_degree() + 1;
            BettiVector b = gysin_betti(r.ring, ring_class(r.ring, euler, "gysin"),
                                        max_degree);
            return b.b;
        }, py::arg("euler") = "", py::arg("max_degree") = -1);

    m.def("parse_algebra", [](const std::string& text) {
        AlgebraSpec spec = parse_algebra(text);
        return PyAlgebra{spec.name, spec.cdga};
    }, py::arg("text"));

    m.def("check", [](const std::string& text) {
        RawAlgebra raw = parse_algebra_raw(text);
        Json j;
        j["algebra"] = raw.name;
        j["d_squared"] = to_json(check_differential(raw.algebra, raw.diffs));
        return j.dump();
    }, py::arg("text"), "validate a possibly-inconsistent algebra file");

    m.def("sasaki_check", [](const std::vector<std::optional<long long>>& betti,
                             int dimension) {
        return to_json(sasaki_parity_test(to_partial(betti), dimension)).dump();
    }, py::arg("betti"), py::arg("dimension"));

    m.def("csplit", [](const std::vector<std::optional<long long>>& fiber,
                       const std::vector<std::optional<long long>>& base, int degree) {
        return c_splitting_betti(to_partial(fiber), to_partial(base), degree);
    }, py::arg("fiber"), py::arg("base"), py::arg("degree"));

    m.def("fat_weights", [](const std::vector<std::string>& weights) {
        WeightVector w{parse_weights(weights)};
        return to_json(fatness_weight_certificate(w)).dump();
    }, py::arg("weights"));

    m.def("catalog", [](const std::string& name) {
        if (name.empty()) {
            Json j;
            j["entries"] = catalog_names();
            return j.dump();
        }
        return catalog_entry_json(catalog_lookup(name)).dump();
    }, py::arg("name") = "");

    m.def("catalog_model", [](const std::string& name) -> std::optional<PyAlgebra> {
        CatalogEntry e = catalog_lookup(name);
        if (!e.model) return std::nullopt;
        std::string id;
        for (char c : e.name)
            id += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
        return PyAlgebra{id, *e.model};
    }, py::arg("name"));

    m.def("pipeline", [](const std::string& base, int fiber_degree,
                         const std::vector<std::string>& weights, const std::string& omega,
                         int max_degree) {
        PipelineOptions opt;
        opt.fiber_degree = fiber_degree;
        opt.weights = parse_weights(weights);
        opt.omega = omega;
        opt.max_degree = max_degree;
        return to_json(k_contact_pipeline(catalog_lookup(base), opt)).dump();
    }, py::arg("base"), py::arg("fiber_degree") = 3,
       py::arg("weights") = std::vector<std::string>{}, py::arg("omega") = "",
       py::arg("max_degree") = -1);

    m.def("weinstein_example", [](int degree) {
        return to_json(weinstein_example(degree)).dump();
    }, py::arg("degree"));
}
