#include "cdga/obstructions.hpp"

#include "cdga/errors.hpp"
#include "cdga/linalg.hpp"

#include <algorithm>

namespace cdga {

long long BettiVector::at(int p) const {
    if (p < 0 || p >= static_cast<int>(b.size())) return 0;
    return b[p];
}

SasakianVerdict sasaki_parity_test(const PartialBetti& betti, int dimension) {
    if (dimension < 1 || dimension % 2 == 0)
        throw InputError("parity test: dimension must be odd and positive");
    SasakianVerdict v;
    v.dimension = dimension;
    v.half = (dimension - 1) / 2;
    auto known = [&](int p) -> std::optional<long long> {
        if (p < 0 || p >= static_cast<int>(betti.size())) return 0; // outside: zero
        return betti[p];
    };
    for (int p = 1; p <= dimension; p += 2) {
        auto bp = known(p);
        if (p <= v.half + 1) {
            if (!bp)
                v.unknown_in_range.push_back(p);
            else if (*bp % 2 != 0)
                v.offending.push_back(p);
        } else if (bp && *bp % 2 != 0) {
            v.odd_above_range.push_back(p);
        }
    }
    v.possibly_sasakian = v.offending.empty();
    return v;
}

SasakianVerdict sasaki_parity_test(const BettiVector& betti) {
    PartialBetti pb;
    pb.reserve(betti.b.size());
    for (long long x : betti.b) pb.push_back(x);
    return sasaki_parity_test(pb, betti.dimension);
}

namespace {

// Rank of multiplication by `cls` from degree p to degree p + |cls|.
long long multiplication_rank(const FiniteRing& ring, std::span<const Rational> cls,
                              int p, int q) {
    std::vector<int> lower = ring.degree_indices(p);
    std::vector<int> upper = ring.degree_indices(q);
    std::map<int, int> upper_pos;
    for (int i = 0; i < static_cast<int>(upper.size()); ++i) upper_pos[upper[i]] = i;

    RationalMatrix m(static_cast<int>(upper.size()), static_cast<int>(lower.size()));
    for (int j = 0; j < static_cast<int>(lower.size()); ++j) {
        std::vector<Rational> e(ring.dim(), Rational(0));
        e[lower[j]] = 1;
        std::vector<Rational> prod = ring.multiply(cls, e);
        for (int k = 0; k < ring.dim(); ++k) {
            if (prod[k] == 0) continue;
            auto it = upper_pos.find(k);
            if (it == upper_pos.end())
                throw InternalError("ring product escaped its degree slice");
            m.set(it->second, j, prod[k]);
        }
    }
    return rref(m).rank;
}

void require_degree_support(const FiniteRing& ring, std::span<const Rational> cls,
                            int degree, const char* who) {
    if (static_cast<int>(cls.size()) != ring.dim())
        throw InputError(std::string(who) + ": coordinate vector must match the ring basis");
    for (int i = 0; i < ring.dim(); ++i)
        if (cls[i] != 0 && ring.basis()[i].degree != degree)
            throw InputError(std::string(who) + ": class must be concentrated in degree " +
                             std::to_string(degree));
}

} // namespace

LefschetzReport hard_lefschetz_check(const FiniteRing& ring, std::span<const Rational> v) {
    if (ring.top_degree() % 2 != 0)
        throw InputError("hard Lefschetz: ring top degree must be even");
    require_degree_support(ring, v, 2, "hard Lefschetz");

    LefschetzReport report;
    report.half = ring.top_degree() / 2;
    int n = report.half;

    // v^p as ring coordinates, built incrementally.
    std::vector<Rational> vpow(ring.dim(), Rational(0));
    vpow[ring.unit_index()] = 1;
    for (int p = 0; p <= n; ++p) {
        LefschetzStep step;
        step.p = p;
        step.dim_lower = ring.betti(n - p);
        step.dim_upper = ring.betti(n + p);
        step.rank = multiplication_rank(ring, vpow, n - p, n + p);
        step.isomorphism =
            step.dim_lower == step.dim_upper && step.rank == step.dim_lower;
        if (!step.isomorphism && !report.first_failure) {
            report.passes = false;
            report.first_failure = p;
        }
        report.steps.push_back(step);
        if (p < n) vpow = ring.multiply(vpow, v);
    }
    return report;
}

BettiVector gysin_betti(const FiniteRing& ring, std::span<const Rational> euler,
                        int max_degree) {
    require_degree_support(ring, euler, 2, "Gysin");
    if (max_degree < 0) throw InputError("Gysin: max degree must be >= 0");

    // rank of multiplication by euler out of each degree
    auto rank_from = [&](int p) -> long long {
        if (p < 0 || p > ring.top_degree()) return 0;
        if (p + 2 > ring.top_degree()) return 0;
        return multiplication_rank(ring, euler, p, p + 2);
    };
    auto b = [&](int p) -> long long {
        if (p < 0 || p > ring.top_degree()) return 0;
        return ring.betti(p);
    };

    BettiVector out;
    out.dimension = max_degree;
    for (int p = 0; p <= max_degree; ++p) {
        long long coker = b(p) - rank_from(p - 2);
        long long ker = b(p - 1) - rank_from(p - 1);
        out.b.push_back(coker + ker);
    }
    return out;
}

long long c_splitting_betti(const BettiVector& fiber, const BettiVector& base, int k) {
    if (k < 0) throw InputError("c-splitting: degree must be >= 0");
    long long sum = 0;
    for (int i = 0; i <= k; ++i) sum += fiber.at(i) * base.at(k - i);
    return sum;
}

std::optional<long long> c_splitting_betti(const PartialBetti& fiber,
                                           const PartialBetti& base, int k) {
    if (k < 0) throw InputError("c-splitting: degree must be >= 0");
    auto at = [](const PartialBetti& v, int p) -> std::optional<long long> {
        if (p < 0 || p >= static_cast<int>(v.size())) return 0;
        return v[p];
    };
    long long sum = 0;
    for (int i = 0; i <= k; ++i) {
        auto f = at(fiber, i);
        auto g = at(base, k - i);
        if (f && g) {
            sum += *f * *g;
        } else if ((f && *f == 0) || (g && *g == 0)) {
            // unknown times zero contributes zero
        } else {
            return std::nullopt;
        }
    }
    return sum;
}

FatnessCertificate fatness_weight_certificate(const WeightVector& weights) {
    if (weights.w.empty()) throw InputError("fatness: weight vector is empty");
    FatnessCertificate cert;
    for (int i = 0; i < static_cast<int>(weights.w.size()); ++i)
        if (weights.w[i] <= 0) cert.failing.push_back(i);
    cert.certified = cert.failing.empty();
    if (cert.certified)
        cert.bound = *std::min_element(weights.w.begin(), weights.w.end());
    return cert;
}

} // namespace cdga
