#include "cdga/document.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

namespace cdga {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data) {
    std::ostringstream os;
    os << "0x" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data);
    return os.str();
}

Json ResultDocument::to_json() const {
    Json j;
    j["tool"] = "cdga";
    j["command"] = command;
    j["inputs"] = Json::array();
    for (const auto& in : inputs) {
        Json e;
        e["path"] = in.path;
        e["fnv1a64"] = in.digest;
        j["inputs"].push_back(std::move(e));
    }
    j["result"] = result;
    j["warnings"] = warnings;
    j["verdict_negative"] = verdict_negative;
    return j;
}

Json to_json(const CohomologyTable& table) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json r;
        r["degree"] = row.degree;
        r["slice_dim"] = row.slice_dim;
        r["cocycles"] = row.cocycles;
        r["boundaries"] = row.boundaries;
        r["betti"] = row.betti;
        r["representatives"] = row.representatives;
        rows.push_back(std::move(r));
    }
    Json j;
    j["max_degree"] = table.max_degree;
    j["betti"] = table.betti();
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const DSquaredReport& report) {
    Json j;
    j["pass"] = report.pass;
    if (report.witness_generator) {
        j["witness"] = *report.witness_generator;
        j["detail"] = report.detail;
    }
    return j;
}

Json to_json(const MinimalityReport& report) {
    Json j;
    j["minimal"] = report.minimal;
    if (report.witness_generator) j["witness"] = *report.witness_generator;
    return j;
}

Json to_json(const FiltrationReport& report) {
    Json j;
    j["complete"] = report.complete;
    j["stages"] = report.stages;
    if (!report.complete) j["unfiltered"] = report.unfiltered;
    return j;
}

Json to_json(const SasakianVerdict& verdict) {
    Json j;
    j["possibly_sasakian"] = verdict.possibly_sasakian;
    j["dimension"] = verdict.dimension;
    j["checked_odd_degrees_up_to"] = verdict.half + 1;
    j["offending_degrees"] = verdict.offending;
    j["unknown_in_range"] = verdict.unknown_in_range;
    j["odd_above_range"] = verdict.odd_above_range;
    return j;
}

Json to_json(const LefschetzReport& report) {
    Json j;
    j["passes"] = report.passes;
    j["half"] = report.half;
    if (report.first_failure) j["first_failure"] = *report.first_failure;
    Json steps = Json::array();
    for (const auto& s : report.steps) {
        Json e;
        e["p"] = s.p;
        e["dim_lower"] = s.dim_lower;
        e["dim_upper"] = s.dim_upper;
        e["rank"] = s.rank;
        e["isomorphism"] = s.isomorphism;
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    return j;
}

Json to_json(const BettiVector& betti) {
    Json j;
    j["dimension"] = betti.dimension;
    j["betti"] = betti.b;
    return j;
}

Json to_json(const PartialBetti& betti) {
    Json values = Json::array();
    for (const auto& b : betti) {
        if (b)
            values.push_back(*b);
        else
            values.push_back(nullptr);
    }
    return values;
}

Json to_json(const FatnessCertificate& cert) {
    Json j;
    j["certified"] = cert.certified;
    if (cert.bound) j["bound"] = fraction_string(*cert.bound);
    j["failing_indices"] = cert.failing;
    return j;
}

Json to_json(const DegreeThreeReport& report) {
    Json j;
    j["b3_base"] = report.b3_base;
    j["b3_total"] = report.b3_total;
    j["equal"] = report.equal;
    j["fiber_generator"] = report.fiber_generator;
    return j;
}

Json to_json(const DegreeCertificate& cert) {
    Json j;
    j["degree"] = cert.degree;
    j["betti_source"] = cert.betti_source;
    j["betti_target"] = cert.betti_target;
    j["rank"] = cert.rank;
    j["isomorphism"] = cert.isomorphism;
    j["injective"] = cert.injective;
    return j;
}

Json to_json(const PipelineReport& report) {
    Json j;
    j["base"] = report.base_name;
    j["mode"] = report.model_mode ? "model" : "betti_transfer";
    j["base_dimension"] = report.base_dimension;
    j["fiber_degree"] = report.fiber_degree;
    j["total_dimension"] = report.total_dimension;
    if (report.model_mode) {
        j["omega"] = report.omega;
        j["euler"] = report.euler;
    }
    j["max_degree"] = report.max_degree;
    j["betti"] = to_json(report.betti);
    j["degree_three_checked"] = report.degree_three_checked;
    if (report.degree_three) j["degree_three"] = to_json(*report.degree_three);
    if (!report.degree_three_note.empty()) j["degree_three_note"] = report.degree_three_note;
    j["parity"] = to_json(report.parity);
    Json weights = Json::array();
    for (const auto& w : report.weights.w) weights.push_back(fraction_string(w));
    j["weights"] = std::move(weights);
    j["fatness"] = to_json(report.fatness);
    j["notes"] = report.notes;
    return j;
}

Json to_json(const WeinsteinReport& report) {
    Json j;
    j["degree"] = report.degree;
    if (report.betti)
        j["betti"] = *report.betti;
    else
        j["betti"] = nullptr;
    j["fiber"] = report.fiber;
    j["base"] = report.base;
    return j;
}

Json catalog_entry_json(const CatalogEntry& entry) {
    Json j;
    j["name"] = entry.name;
    j["description"] = entry.description;
    j["dimension"] = entry.dimension;
    j["has_model"] = entry.model.has_value();
    j["betti"] = to_json(entry.betti);
    if (entry.model) {
        // Entry names like "cpn(3)" are not identifiers; keep renders parseable.
        std::string id;
        for (char c : entry.name)
            id += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
        if (id.empty() || std::isdigit(static_cast<unsigned char>(id[0]))) id = "m_" + id;
        AlgebraSpec spec{id, *entry.model};
        j["model"] = render_algebra(spec);
    }
    return j;
}

} // namespace cdga
