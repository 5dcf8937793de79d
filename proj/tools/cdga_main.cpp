// Command-line front end: parses algebra files, runs the computations and
// prints either human-readable text or a machine-readable JSON document.
//
// Exit codes: 0 success, 1 negative verdict (an obstruction fired or a check
// failed), 2 bad input, 64 internal invariant violation.

#include "cdga/catalog.hpp"
#include "cdga/cohomology.hpp"
#include "cdga/document.hpp"
#include "cdga/dsl.hpp"
#include "cdga/errors.hpp"
#include "cdga/obstructions.hpp"
#include "cdga/ring.hpp"
#include "cdga/sullivan.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace cdga;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 64;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

// Shared state for one invocation.
struct Invocation {
    bool json = false;
    ResultDocument doc;
    std::ostringstream text;
    int exit_code = kExitOk;

    std::string load(const std::string& path) {
        std::string content = read_file(path);
        doc.inputs.push_back({path, fnv1a64_hex(content)});
        return content;
    }

    void wrote(const std::string& path, const std::string& content) {
        write_file(path, content);
        Json note;
        note["path"] = path;
        note["fnv1a64"] = fnv1a64_hex(content);
        if (!doc.result.contains("outputs")) doc.result["outputs"] = Json::array();
        doc.result["outputs"].push_back(std::move(note));
    }

    void negative() {
        doc.verdict_negative = true;
        exit_code = kExitVerdict;
    }

    int finish() {
        if (json)
            std::cout << doc.to_json().dump(2) << "\n";
        else
            std::cout << text.str();
        return exit_code;
    }
};

AlgebraSpec load_algebra(Invocation& inv, const std::string& path) {
    return parse_algebra(inv.load(path));
}

FiniteRing load_ring(Invocation& inv, const std::string& path) {
    std::string content = inv.load(path);
    Json j = Json::parse(content, nullptr, false);
    if (j.is_discarded()) throw InputError("'" + path + "' is not valid JSON");
    return FiniteRing::from_json(j);
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument("trailing");
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("not an integer list: '" + text + "'");
        }
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string trimmed;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        out.push_back(parse_rational(trimmed));
    }
    if (out.empty()) throw InputError("empty weight list");
    return out;
}

std::string betti_line(const std::vector<long long>& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(b[i]);
    }
    return s + ")";
}

std::string partial_betti_line(const PartialBetti& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ", ";
        s += b[i] ? std::to_string(*b[i]) : std::string("?");
    }
    return s + ")";
}

// The default class for ring commands: the only degree-2 basis element.
std::vector<Rational> default_degree2_class(const FiniteRing& ring, const char* what) {
    auto idx = ring.degree_indices(2);
    if (idx.size() != 1)
        throw InputError(std::string(what) + ": the ring has " + std::to_string(idx.size()) +
                         " degree-2 basis elements; pass the class explicitly");
    std::vector<Rational> v(ring.dim(), Rational(0));
    v[idx.front()] = 1;
    return v;
}

int top_generator_degree(const Cdga& a) {
    int top = 0;
    for (int i = 0; i < a.algebra().size(); ++i)
        top = std::max(top, a.algebra().gen(i).degree);
    return top;
}

// ---------------------------------------------------------------- commands

void cmd_cohomology(Invocation& inv, const std::string& input, int max_degree,
                    const std::string& ring_out) {
    AlgebraSpec spec = load_algebra(inv, input);
    if (max_degree < 0) max_degree = top_generator_degree(spec.cdga) + 2;
    CohomologyEngine engine(spec.cdga, max_degree);
    CohomologyTable table = engine.table();

    inv.doc.result["algebra"] = spec.name;
    inv.doc.result["cohomology"] = to_json(table);

    inv.text << "algebra " << spec.name << ", degrees 0.." << max_degree << "\n";
    inv.text << "betti " << betti_line(table.betti()) << "\n";
    for (const auto& row : table.rows) {
        inv.text << "  H^" << row.degree << "  dim " << row.betti;
        if (!row.representatives.empty()) {
            inv.text << "  [";
            for (std::size_t i = 0; i < row.representatives.size(); ++i) {
                if (i) inv.text << ", ";
                inv.text << row.representatives[i];
            }
            inv.text << "]";
        }
        inv.text << "\n";
    }

    if (!ring_out.empty()) {
        FiniteRing ring = extract_ring(engine);
        inv.wrote(ring_out, ring.to_json().dump(2) + "\n");
        inv.text << "ring with " << ring.dim() << " basis elements written to " << ring_out
                 << "\n";
    }
}

void cmd_check(Invocation& inv, const std::string& input, int max_degree) {
    RawAlgebra raw = parse_algebra_raw(inv.load(input));
    DSquaredReport d2 = check_differential(raw.algebra, raw.diffs);
    inv.doc.result["algebra"] = raw.name;
    inv.doc.result["d_squared"] = to_json(d2);
    if (!d2.pass) {
        inv.text << "d*d != 0: " << d2.detail << "\n";
        inv.negative();
        return;
    }

    Cdga a = Cdga::create(raw.algebra, raw.diffs);
    if (max_degree >= 0) {
        DSquaredReport again = check_d_squared(a, max_degree);
        inv.doc.result["d_squared_monomials"] = to_json(again);
        if (!again.pass) {
            inv.text << "d*d != 0 on a monomial: " << again.detail << "\n";
            inv.negative();
            return;
        }
    }
    MinimalityReport min = is_minimal(a);
    FiltrationReport filt = sullivan_filtration(a);
    inv.doc.result["minimal"] = to_json(min);
    inv.doc.result["filtration"] = to_json(filt);

    inv.text << "algebra " << raw.name << "\n";
    inv.text << "d*d = 0 on all generators\n";
    inv.text << (min.minimal ? "minimal\n"
                             : "not minimal (witness " + *min.witness_generator + ")\n");
    inv.text << (filt.complete ? "staged generator filtration complete\n"
                               : "no staged filtration: cycle through '" +
                                     filt.unfiltered.front() + "'\n");
}

void cmd_sphere_bundle(Invocation& inv, const std::string& input, const std::string& euler,
                       int degree, const std::string& name, const std::string& output,
                       int max_degree) {
    AlgebraSpec spec = load_algebra(inv, input);
    Element e = parse_element(spec.cdga.algebra(), euler, &inv.doc.warnings);
    RelativeExtension ext =
        name.empty() ? sphere_bundle_model(spec.cdga, e, degree)
                     : adjoin(spec.cdga, name, degree, e);
    const std::string fiber = ext.total.algebra().gen(ext.new_generator).name;

    AlgebraSpec total{spec.name + "_total", ext.total};
    inv.doc.result["fiber_generator"] = fiber;
    inv.doc.result["total"] = render_algebra(total);
    inv.text << "adjoined " << fiber << " (degree " << degree << ") with d" << fiber << " = "
             << e.str() << "\n";

    if (max_degree >= 0) {
        CohomologyTable table = cohomology_table(ext.total, max_degree);
        inv.doc.result["cohomology"] = to_json(table);
        inv.text << "betti " << betti_line(table.betti()) << "\n";
    }
    if (!output.empty()) inv.wrote(output, render_algebra(total));
}

void cmd_minimal_model(Invocation& inv, const std::string& input, int max_degree,
                       const std::string& output) {
    AlgebraSpec spec = load_algebra(inv, input);
    MinimalModelResult res = minimal_model(spec.cdga, max_degree);
    AlgebraSpec model{spec.name + "_minimal", res.model};

    inv.doc.result["model"] = render_algebra(model);
    Json certs = Json::array();
    bool all_ok = true;
    for (const auto& c : res.certificates) {
        bool ok = (c.degree <= max_degree) ? c.isomorphism : c.injective;
        all_ok = all_ok && ok;
        certs.push_back(to_json(c));
    }
    inv.doc.result["certificates"] = std::move(certs);
    inv.doc.result["quasi_isomorphism_up_to"] = max_degree;
    inv.doc.result["verified"] = all_ok;

    Json images = Json::array();
    for (int i = 0; i < res.model.algebra().size(); ++i) {
        Json e;
        e["generator"] = res.model.algebra().gen(i).name;
        e["image"] = res.morphism.images()[i].str();
        images.push_back(std::move(e));
    }
    inv.doc.result["images"] = std::move(images);

    inv.text << render_algebra(model);
    inv.text << (all_ok ? "quasi-isomorphism certified through degree "
                        : "CERTIFICATE INCOMPLETE through degree ")
             << max_degree << "\n";
    if (!all_ok) inv.negative();
    if (!output.empty()) inv.wrote(output, render_algebra(model));
}

void cmd_sasaki_check(Invocation& inv, const std::string& input, const std::string& betti_list,
                      int dimension, int max_degree) {
    PartialBetti betti;
    if (!input.empty()) {
        AlgebraSpec spec = load_algebra(inv, input);
        int upto = max_degree >= 0 ? std::min(max_degree, dimension) : dimension;
        CohomologyEngine engine(spec.cdga, upto);
        for (int p = 0; p <= upto; ++p) betti.push_back(engine.betti(p));
        for (int p = upto + 1; p <= dimension; ++p) betti.push_back(std::nullopt);
        inv.doc.result["algebra"] = spec.name;
    } else {
        // Short lists are padded with zeros: the caller asserts the space has
        // no cohomology beyond the listed degrees.
        for (long long v : parse_int_list(betti_list)) betti.push_back(v);
        if (static_cast<int>(betti.size()) > dimension + 1)
            throw InputError("more Betti numbers than dimension+1");
        betti.resize(dimension + 1, 0);
    }
    SasakianVerdict v = sasaki_parity_test(betti, dimension);
    inv.doc.result["betti"] = to_json(betti);
    inv.doc.result["parity"] = to_json(v);

    inv.text << "betti " << partial_betti_line(betti) << "\n";
    if (v.possibly_sasakian) {
        inv.text << "no parity obstruction (odd p <= " << v.half + 1 << " all even)\n";
    } else {
        inv.text << "NOT Sasakian: odd Betti number in odd degree(s)";
        for (int p : v.offending) inv.text << " " << p;
        inv.text << "\n";
    }
    if (!v.unknown_in_range.empty()) {
        inv.text << "unknown Betti numbers in the checked range:";
        for (int p : v.unknown_in_range) inv.text << " " << p;
        inv.text << "\n";
    }
    if (!v.possibly_sasakian) inv.negative();
}

void cmd_lefschetz(Invocation& inv, const std::string& ring_path, const std::string& cls) {
    FiniteRing ring = load_ring(inv, ring_path);
    std::vector<Rational> v = cls.empty() ? default_degree2_class(ring, "lefschetz")
                                          : parse_ring_class(ring, cls);
    LefschetzReport report = hard_lefschetz_check(ring, v);
    inv.doc.result["lefschetz"] = to_json(report);

    for (const auto& s : report.steps) {
        inv.text << "  p=" << s.p << "  H^" << (report.half - s.p) << " -> H^"
                 << (report.half + s.p) << "  dims " << s.dim_lower << "/" << s.dim_upper
                 << " rank " << s.rank << (s.isomorphism ? "  iso" : "  NOT iso") << "\n";
    }
    inv.text << (report.passes ? "hard Lefschetz holds\n" : "hard Lefschetz fails\n");
    if (!report.passes) inv.negative();
}

void cmd_gysin(Invocation& inv, const std::string& ring_path, const std::string& euler,
               int max_degree) {
    FiniteRing ring = load_ring(inv, ring_path);
    std::vector<Rational> e = euler.empty() ? default_degree2_class(ring, "gysin")
                                            : parse_ring_class(ring, euler);
    if (max_degree < 0) max_degree = ring.top_degree() + 1;
    BettiVector b = gysin_betti(ring, e, max_degree);
    inv.doc.result["betti"] = to_json(b);
    inv.text << "total space betti " << betti_line(b.b) << "\n";
}

void cmd_csplit(Invocation& inv, const std::string& fiber_name, const std::string& base_name,
                const std::string& fiber_betti, const std::string& base_betti, int degree) {
    auto side = [&](const std::string& name, const std::string& betti,
                    const char* which) -> std::pair<PartialBetti, std::string> {
        if (!name.empty() && !betti.empty())
            throw InputError(std::string(which) + ": pass a catalog name or a Betti list, "
                                                  "not both");
        if (!name.empty()) {
            CatalogEntry e = catalog_lookup(name);
            return {e.betti, e.name};
        }
        if (!betti.empty()) {
            PartialBetti out;
            for (long long v : parse_int_list(betti)) out.push_back(v);
            return {out, "(" + betti + ")"};
        }
        throw InputError(std::string(which) + ": required (catalog name or Betti list)");
    };
    auto [fb, fdesc] = side(fiber_name, fiber_betti, "fiber");
    auto [bb, bdesc] = side(base_name, base_betti, "base");
    std::optional<long long> result = c_splitting_betti(fb, bb, degree);

    inv.doc.result["fiber"] = fdesc;
    inv.doc.result["base"] = bdesc;
    inv.doc.result["degree"] = degree;
    if (result)
        inv.doc.result["betti"] = *result;
    else
        inv.doc.result["betti"] = nullptr;

    inv.text << "b_" << degree << "(total) = ";
    if (result)
        inv.text << *result << "\n";
    else
        inv.text << "unknown (base data too partial)\n";
}

void cmd_fat_weights(Invocation& inv, const std::string& weights) {
    WeightVector w{parse_rational_list(weights)};
    FatnessCertificate cert = fatness_weight_certificate(w);
    Json ws = Json::array();
    for (const auto& x : w.w) ws.push_back(fraction_string(x));
    inv.doc.result["weights"] = std::move(ws);
    inv.doc.result["fatness"] = to_json(cert);

    if (cert.certified) {
        inv.text << "fat: all " << w.w.size() << " weights positive, bound "
                 << rational_string(*cert.bound) << "\n";
    } else {
        inv.text << "not fat: " << cert.failing.size() << " nonpositive weight(s)\n";
        inv.negative();
    }
}

void cmd_pipeline(Invocation& inv, const std::string& base, int fiber_degree,
                  const std::string& weights, const std::string& omega, int max_degree) {
    PipelineOptions opt;
    opt.fiber_degree = fiber_degree;
    if (!weights.empty()) opt.weights = parse_rational_list(weights);
    opt.omega = omega;
    opt.max_degree = max_degree;

    CatalogEntry entry;
    if (base.find(".alg") != std::string::npos || base.find('/') != std::string::npos) {
        AlgebraSpec spec = load_algebra(inv, base);
        entry.name = spec.name;
        entry.description = "user algebra from " + base;
        entry.model = spec.cdga;
        // Dimension: the top degree with nonzero cohomology within range.
        int probe = max_degree >= 0 ? max_degree : top_generator_degree(spec.cdga) + 2;
        CohomologyEngine engine(spec.cdga, probe);
        int top = 0;
        for (int p = 0; p <= probe; ++p)
            if (engine.betti(p) > 0) top = p;
        entry.dimension = top;
        for (int p = 0; p <= top; ++p) entry.betti.push_back(engine.betti(p));
    } else {
        entry = catalog_lookup(base);
    }

    PipelineReport report = k_contact_pipeline(entry, opt);
    inv.doc.result["pipeline"] = to_json(report);

    inv.text << "base " << report.base_name << " (dim " << report.base_dimension
             << "), fiber degree " << report.fiber_degree << ", total dim "
             << report.total_dimension << "\n";
    if (report.model_mode)
        inv.text << "omega = " << report.omega << ", euler = " << report.euler << "\n";
    inv.text << "betti " << partial_betti_line(report.betti) << "\n";
    if (report.degree_three)
        inv.text << "b3 preserved under the extension: " << report.degree_three->b3_base
                 << " -> " << report.degree_three->b3_total << "\n";
    inv.text << (report.parity.possibly_sasakian
                     ? "parity test: no obstruction\n"
                     : "parity test: NOT Sasakian (odd b_p in checked range)\n");
    inv.text << (report.fatness.certified ? "fatness certified, bound " +
                                                rational_string(*report.fatness.bound) + "\n"
                                          : "fatness NOT certified\n");
    if (!report.parity.possibly_sasakian || !report.fatness.certified) inv.negative();
}

void cmd_catalog(Invocation& inv, const std::string& name) {
    if (name.empty()) {
        Json entries = Json::array();
        for (const auto& n : catalog_names()) entries.push_back(n);
        inv.doc.result["entries"] = std::move(entries);
        for (const auto& n : catalog_names()) inv.text << n << "\n";
        return;
    }
    CatalogEntry e = catalog_lookup(name);
    inv.doc.result["entry"] = catalog_entry_json(e);
    inv.text << e.name << ": " << e.description << "\n";
    inv.text << "dimension " << e.dimension << ", betti " << partial_betti_line(e.betti)
             << "\n";
    if (e.model) inv.text << catalog_entry_json(e)["model"].get<std::string>();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational-homotopy computations for graded algebra models"};
    app.require_subcommand(1);

    Invocation inv;
    for (int i = 1; i < argc; ++i) inv.doc.command.push_back(argv[i]);
    app.add_flag("--json", inv.json, "emit a machine-readable JSON document");

    // cohomology
    std::string in_path, ring_out;
    int max_degree = -1;
    auto* c_coh = app.add_subcommand("cohomology", "Betti numbers and representatives");
    c_coh->add_option("--input", in_path, "algebra file")->required();
    c_coh->add_option("--max-degree", max_degree, "top degree (default: top generator + 2)");
    c_coh->add_option("--ring", ring_out, "write the cohomology ring as JSON");

    // check
    std::string chk_path;
    int chk_degree = -1;
    auto* c_chk = app.add_subcommand("check", "validate d*d = 0, minimality, filtration");
    c_chk->add_option("--input", chk_path, "algebra file")->required();
    c_chk->add_option("--max-degree", chk_degree, "also expand d*d on monomials up to here");

    // sphere-bundle
    std::string sb_path, sb_euler, sb_name, sb_out;
    int sb_degree = 3, sb_max = -1;
    auto* c_sb = app.add_subcommand("sphere-bundle", "adjoin an odd fiber generator");
    c_sb->add_option("--input", sb_path, "base algebra file")->required();
    c_sb->add_option("--euler", sb_euler, "Euler class expression")->required();
    c_sb->add_option("--degree", sb_degree, "fiber degree (odd, default 3)");
    c_sb->add_option("--name", sb_name, "fiber generator name (default: fresh y)");
    c_sb->add_option("--output", sb_out, "write the total algebra file");
    c_sb->add_option("--max-degree", sb_max, "also print Betti numbers up to here");

    // minimal-model
    std::string mm_path, mm_out;
    int mm_degree = -1;
    auto* c_mm = app.add_subcommand("minimal-model", "staged minimal model with certificates");
    c_mm->add_option("--input", mm_path, "algebra file")->required();
    c_mm->add_option("--max-degree", mm_degree, "model degree range")->required();
    c_mm->add_option("--output", mm_out, "write the model algebra file");

    // sasaki-check
    std::string sk_path, sk_betti;
    int sk_dim = 0, sk_max = -1;
    auto* c_sk = app.add_subcommand("sasaki-check", "odd-degree Betti parity obstruction");
    c_sk->add_option("--input", sk_path, "algebra file");
    c_sk->add_option("--betti", sk_betti, "comma-separated Betti numbers (padded with zeros)");
    c_sk->add_option("--dimension", sk_dim, "odd manifold dimension")->required();
    c_sk->add_option("--max-degree", sk_max, "compute cohomology only up to here");

    // lefschetz
    std::string lf_ring, lf_class;
    auto* c_lf = app.add_subcommand("lefschetz", "hard Lefschetz property of a ring");
    c_lf->add_option("--ring", lf_ring, "ring JSON file")->required();
    c_lf->add_option("--class", lf_class, "degree-2 class (default: the unique one)");

    // gysin
    std::string gy_ring, gy_euler;
    int gy_max = -1;
    auto* c_gy = app.add_subcommand("gysin", "circle-bundle Betti numbers over a ring");
    c_gy->add_option("--ring", gy_ring, "ring JSON file")->required();
    c_gy->add_option("--euler", gy_euler, "degree-2 Euler class (default: the unique one)");
    c_gy->add_option("--max-degree", gy_max, "top degree (default: ring top + 1)");

    // csplit
    std::string cs_fiber, cs_base, cs_fb, cs_bb;
    int cs_degree = 0;
    auto* c_cs = app.add_subcommand("csplit", "Betti number of a cohomologically split bundle");
    c_cs->add_option("--fiber", cs_fiber, "catalog name of the fiber");
    c_cs->add_option("--base", cs_base, "catalog name of the base");
    c_cs->add_option("--fiber-betti", cs_fb, "comma-separated fiber Betti numbers");
    c_cs->add_option("--base-betti", cs_bb, "comma-separated base Betti numbers");
    c_cs->add_option("--degree", cs_degree, "degree to evaluate")->required();

    // fat-weights
    std::string fw_weights;
    auto* c_fw = app.add_subcommand("fat-weights", "fatness certificate from weights");
    c_fw->add_option("--weights", fw_weights, "comma-separated rational weights")->required();

    // pipeline
    std::string pl_base, pl_weights, pl_omega;
    int pl_fiber = 3, pl_max = -1;
    auto* c_pl = app.add_subcommand("pipeline",
                                    "weighted odd-sphere bundle over a base: model or "
                                    "transfer, parity test, fatness");
    c_pl->add_option("--base", pl_base, "catalog name or algebra file")->required();
    c_pl->add_option("--fiber-degree", pl_fiber, "odd fiber degree (default 3)");
    c_pl->add_option("--weights", pl_weights, "comma-separated rational weights");
    c_pl->add_option("--omega", pl_omega, "symplectic class expression (model mode)");
    c_pl->add_option("--max-degree", pl_max, "Betti range for the total space");

    // catalog
    std::string cat_name;
    auto* c_cat = app.add_subcommand("catalog", "list or show built-in spaces");
    c_cat->add_option("--name", cat_name, "entry to show");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (c_coh->parsed()) cmd_cohomology(inv, in_path, max_degree, ring_out);
        else if (c_chk->parsed()) cmd_check(inv, chk_path, chk_degree);
        else if (c_sb->parsed())
            cmd_sphere_bundle(inv, sb_path, sb_euler, sb_degree, sb_name, sb_out, sb_max);
        else if (c_mm->parsed()) cmd_minimal_model(inv, mm_path, mm_degree, mm_out);
        else if (c_sk->parsed()) cmd_sasaki_check(inv, sk_path, sk_betti, sk_dim, sk_max);
        else if (c_lf->parsed()) cmd_lefschetz(inv, lf_ring, lf_class);
        else if (c_gy->parsed()) cmd_gysin(inv, gy_ring, gy_euler, gy_max);
        else if (c_cs->parsed()) cmd_csplit(inv, cs_fiber, cs_base, cs_fb, cs_bb, cs_degree);
        else if (c_fw->parsed()) cmd_fat_weights(inv, fw_weights);
        else if (c_pl->parsed()) cmd_pipeline(inv, pl_base, pl_fiber, pl_weights, pl_omega, pl_max);
        else if (c_cat->parsed()) cmd_catalog(inv, cat_name);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return inv.finish();
}
