#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "equindex/errors.hpp"
#include "equindex/modp.hpp"

namespace equindex {

// F_2[u]/(u^t), the mod-2 cohomology of RP^{t-1}; deg u = 1.
struct TruncatedPolyRing {
    int truncation;

    explicit TruncatedPolyRing(int t) : truncation(t) {
        if (t < 1) throw parameter_error("truncation must be >= 1");
    }

    bool nonzero(int exponent) const { return 0 <= exponent && exponent < truncation; }
};

// Sq^k(u^m) = C(m,k) u^{m+k}: the exponent of the image class, or nullopt for
// zero (even binomial, or the class truncates away). Sq^0 is the identity.
inline std::optional<int> sq(int k, int m, const TruncatedPolyRing& ring) {
    if (k < 0 || m < 0) throw parameter_error("sq: arguments must be non-negative");
    if (binom_mod_p(m, k, 2) == 0) return std::nullopt;
    if (m + k >= ring.truncation) return std::nullopt;
    return m + k;
}

// All nonzero Sq^k(u^m) for 0 <= k <= m, as (exponent, coefficient) pairs in
// increasing exponent order. Coefficients are 1 in F_2.
inline std::vector<std::pair<int, int>> total_square(int m, const TruncatedPolyRing& ring) {
    if (m < 0) throw parameter_error("total_square: m must be non-negative");
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k <= m; ++k)
        if (const auto e = sq(k, m, ring)) out.emplace_back(*e, 1);
    return out;
}

// Cartan audit: Sq(u^{m1+m2}) must equal the truncated convolution product
// Sq(u^{m1}) * Sq(u^{m2}).
inline bool cartan_check(int m1, int m2, const TruncatedPolyRing& ring) {
    if (m1 < 0 || m2 < 0) throw parameter_error("cartan_check: arguments must be non-negative");
    const auto f = total_square(m1, ring);
    const auto g = total_square(m2, ring);
    std::vector<int> conv(ring.truncation, 0);
    for (const auto& [e1, c1] : f)
        for (const auto& [e2, c2] : g)
            if (e1 + e2 < ring.truncation) conv[e1 + e2] ^= (c1 * c2) & 1;
    std::vector<int> lhs(ring.truncation, 0);
    for (const auto& [e, c] : total_square(m1 + m2, ring)) lhs[e] = c;
    return conv == lhs;
}

}  // namespace equindex
