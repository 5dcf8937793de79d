#pragma once

#include "cdga/catalog.hpp"
#include "cdga/cohomology.hpp"
#include "cdga/dsl.hpp"
#include "cdga/obstructions.hpp"
#include "cdga/ring.hpp"
#include "cdga/sullivan.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cdga {

// FNV-1a, 64-bit, as "0x"-prefixed lowercase hex.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

// Envelope for machine-readable command output. Re-running the echoed
// command on inputs with the echoed digests reproduces the document exactly:
// nothing in it depends on time, environment or addresses.
struct ResultDocument {
    std::vector<std::string> command;
    struct InputFile {
        std::string path;
        std::string digest;
    };
    std::vector<InputFile> inputs;
    Json result;
    std::vector<std::string> warnings;
    bool verdict_negative = false;

    Json to_json() const;
};

Json to_json(const CohomologyTable& table);
Json to_json(const DSquaredReport& report);
Json to_json(const MinimalityReport& report);
Json to_json(const FiltrationReport& report);
Json to_json(const SasakianVerdict& verdict);
Json to_json(const LefschetzReport& report);
Json to_json(const BettiVector& betti);
Json to_json(const PartialBetti& betti);
Json to_json(const FatnessCertificate& cert);
Json to_json(const DegreeThreeReport& report);
Json to_json(const DegreeCertificate& cert);
Json to_json(const PipelineReport& report);
Json to_json(const WeinsteinReport& report);
Json catalog_entry_json(const CatalogEntry& entry);

} // namespace cdga
