#pragma once

#include "cdga/rational.hpp"
#include "cdga/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cdga {

struct BettiVector {
    std::vector<long long> b; // degrees 0..dimension (or a truncation)
    int dimension = 0;

    long long at(int p) const; // 0 outside the stored range
};

// Betti numbers that may be unknown in some degrees.
using PartialBetti = std::vector<std::optional<long long>>;

struct SasakianVerdict {
    bool possibly_sasakian = true;
    int dimension = 0;
    int half = 0; // n for dimension 2n+1; the tested range is odd p <= n+1
    std::vector<int> offending;        // odd p in range with odd b_p
    std::vector<int> unknown_in_range; // odd p in range with unknown b_p
    std::vector<int> odd_above_range;  // informational only
};

// Parity obstruction: a closed manifold of dimension 2n+1 carrying a Sasakian
// structure has even b_p for every odd p <= n+1. Degrees above that range are
// reported but never affect the verdict.
SasakianVerdict sasaki_parity_test(const PartialBetti& betti, int dimension);
SasakianVerdict sasaki_parity_test(const BettiVector& betti);

struct LefschetzStep {
    int p = 0; // map H^(n-p) -> H^(n+p)
    long long dim_lower = 0;
    long long dim_upper = 0;
    long long rank = 0;
    bool isomorphism = false;
};

struct LefschetzReport {
    bool passes = true;
    int half = 0;                  // n for top degree 2n
    std::optional<int> first_failure; // smallest failing p
    std::vector<LefschetzStep> steps;
};

// Whether multiplication by powers of the degree-2 class v induces
// isomorphisms H^(n-p) -> H^(n+p) for p = 0..n.
LefschetzReport hard_lefschetz_check(const FiniteRing& ring, std::span<const Rational> v);

// Betti numbers of the total space of an odd sphere bundle with Euler class e
// over a space with cohomology `ring`, from the long exact multiplication
// sequence: b_p(E) = dim coker(e: H^(p-2) -> H^p) + dim ker(e: H^(p-1) -> H^(p+1)).
BettiVector gysin_betti(const FiniteRing& ring, std::span<const Rational> euler,
                        int max_degree);

// Degree-k Betti number sum_i b_i(fiber) * b_(k-i)(base) of a c-split bundle.
long long c_splitting_betti(const BettiVector& fiber, const BettiVector& base, int k);
// Partial version: unknown entries are tolerated when the paired factor is 0;
// otherwise the result is unknown.
std::optional<long long> c_splitting_betti(const PartialBetti& fiber,
                                           const PartialBetti& base, int k);

struct WeightVector {
    std::vector<Rational> w;
};

struct FatnessCertificate {
    bool certified = false;
    std::optional<Rational> bound; // min weight when certified
    std::vector<int> failing;      // indices with w_i <= 0
};

// A weighted structure is fat iff every weight is positive; the certificate
// bound is the smallest weight.
FatnessCertificate fatness_weight_certificate(const WeightVector& weights);

} // namespace cdga
