#pragma once

#include "cdga/obstructions.hpp"
#include "cdga/sullivan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cdga {

// A named space: either a finite model (so everything is computable) or a
// partial table of known Betti numbers for spaces without a small model.
struct CatalogEntry {
    std::string name;
    std::string description;
    int dimension = 0;
    std::optional<Cdga> model;
    PartialBetti betti; // degrees 0..dimension; entries may be unknown
};

// Entries by constructor name: "sphere(n)", "cpn(n)", "kodaira_thurston",
// "blowup_cp5", "blowup_cp6", and "product(a,b)" of any two entries.
CatalogEntry catalog_lookup(const std::string& name);

// The fixed catalog names (product forms excluded).
std::vector<std::string> catalog_names();

CatalogEntry sphere_entry(int n);
CatalogEntry cpn_entry(int n);
CatalogEntry kodaira_thurston_entry();
CatalogEntry product_entry(const CatalogEntry& a, const CatalogEntry& b);

struct PipelineOptions {
    int fiber_degree = 3;          // odd
    std::vector<Rational> weights; // (fiber_degree+1)/2 of them; default all 1
    std::string omega;             // base DSL expression; empty = unique closed degree-2 generator
    int max_degree = -1;           // Betti range for the total space; default its dimension
};

struct PipelineReport {
    std::string base_name;
    bool model_mode = false; // false: transferred Betti numbers only
    int base_dimension = 0;
    int total_dimension = 0;
    int fiber_degree = 3;
    std::string omega;     // rendered class (model mode)
    std::string euler;     // rendered Euler class of the fiber generator
    PartialBetti betti;    // of the total space, degrees 0..max_degree
    int max_degree = 0;

    bool degree_three_checked = false;
    std::string degree_three_note; // reason when skipped
    std::optional<DegreeThreeReport> degree_three;

    SasakianVerdict parity;
    WeightVector weights;
    FatnessCertificate fatness;
    std::vector<std::string> notes;
};

// Builds the total space of the weighted odd-sphere bundle over the base
// (model mode: fiber generator y with dy = (prod w_i) * omega^((k+1)/2);
// Betti mode: transfers b_0..b_3 along the bundle), then runs the parity
// obstruction and the fatness certificate.
PipelineReport k_contact_pipeline(const CatalogEntry& base, const PipelineOptions& options);

struct WeinsteinReport {
    int degree = 0;
    std::optional<long long> betti; // unknown when the base data is too partial
    std::string fiber;
    std::string base;
};

// Betti numbers of the c-split 2-sphere bundle over the degree-6 blow-up.
WeinsteinReport weinstein_example(int degree);

} // namespace cdga
