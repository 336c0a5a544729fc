#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "equindex/errors.hpp"
#include "equindex/index_ideal.hpp"
#include "equindex/modp.hpp"

namespace equindex {

// V(l,k): k orthonormal frames in R^l, with the antipodal C_2-action.
// The action is free and V(l,k) is (l-k-1)-connected.
struct StiefelParams {
    int l;
    int k;

    StiefelParams(int l_, int k_) : l(l_), k(k_) {
        if (l < 2 || k < 1 || k > l - 1)
            throw parameter_error("stiefel: k must satisfy 1 <= k <= l-1 (and l >= 2)");
    }

    friend bool operator==(const StiefelParams&, const StiefelParams&) = default;
};

// Truncation exponent N: the least j in [l-k+1, l] with C(l,j) odd. Always
// exists because C(l,l) = 1.
inline int compute_N(const StiefelParams& params) {
    for (int j = params.l - params.k + 1; j <= params.l; ++j)
        if (binom_mod_p(params.l, j, 2) == 1) return j;
    throw internal_error("compute_N: scan missed C(l,l) = 1");
}

inline IndexIdeal index_ideal(const StiefelParams& params) {
    return IndexIdeal::principal(2, compute_N(params));
}

inline int cindex(const StiefelParams& params) { return compute_N(params) - 1; }

// (connectivity bound, cohomological index): coind lies between these.
inline std::pair<int, int> coind_bounds(const StiefelParams& params) {
    return {params.l - params.k - 1, compute_N(params) - 1};
}

// l = k-1+alpha*2^s with s minimal for k and alpha >= 1.
struct FamilyDecomposition {
    int k = 0;
    int s = 0;
    std::optional<int> alpha;
    bool in_family = false;

    friend bool operator==(const FamilyDecomposition&, const FamilyDecomposition&) = default;
};

inline FamilyDecomposition family_decompose(const StiefelParams& params) {
    FamilyDecomposition fam;
    fam.k = params.k;
    fam.s = minimal_s(params.k);
    const std::int64_t pow2s = std::int64_t(1) << fam.s;
    const int m = params.l - params.k + 1;
    if (m % pow2s == 0 && m / pow2s >= 1) {
        fam.in_family = true;
        fam.alpha = static_cast<int>(m / pow2s);
    }
    return fam;
}

enum class CaseFlag { two_k_less_l, two_k_greater_l, two_k_equals_l };

enum class Certification { theorem_certified, obstruction_search, none };

// C(top, bottom) = parity (mod 2).
struct BinomialWitness {
    int top = 0;
    int bottom = 0;
    int parity = 0;

    friend bool operator==(const BinomialWitness&, const BinomialWitness&) = default;
};

// Full audit trail for the claim coind < ind on V(l,k). A certificate with
// certification != none asserts non-tidiness through the nonvanishing of
// Sq^d on u^{N-1} in F_2[u]/(u^l); theorem_certified additionally means the
// family hypotheses held, obstruction_search means only the generalized
// degree scan fired.
struct NonTidyCertificate {
    StiefelParams params;
    int truncation_exponent = 0;  // N
    int cindex = 0;               // N-1
    int coind_lower = 0;          // l-k-1
    int coind_upper = 0;          // N-1
    FamilyDecomposition family;
    std::optional<int> sq_degree;
    std::optional<BinomialWitness> binom_witness;
    std::optional<bool> range_witness;  // N-1+d <= l-1
    CaseFlag case_flag = CaseFlag::two_k_less_l;
    Certification certification = Certification::none;

    explicit NonTidyCertificate(StiefelParams p) : params(p) {}
};

inline NonTidyCertificate nontidy_certificate(const StiefelParams& params) {
    NonTidyCertificate cert(params);
    const int l = params.l;
    const int N = compute_N(params);
    cert.truncation_exponent = N;
    cert.cindex = N - 1;
    cert.coind_lower = l - params.k - 1;
    cert.coind_upper = N - 1;
    cert.family = family_decompose(params);
    cert.case_flag = (2 * params.k < l)   ? CaseFlag::two_k_less_l
                     : (2 * params.k > l) ? CaseFlag::two_k_greater_l
                                          : CaseFlag::two_k_equals_l;

    const auto install = [&](int d, Certification how) {
        cert.sq_degree = d;
        cert.binom_witness = BinomialWitness{N - 1, d, 1};
        cert.range_witness = (N - 1 + d <= l - 1);
        cert.certification = how;
    };

    if (cert.family.in_family) {
        const int d = 1 << (cert.family.s - 1);
        const bool c1 = binom_mod_p(N - 1, d, 2) == 1;
        const bool c2 = N + d <= l;
        if (c1 && c2) {
            install(d, Certification::theorem_certified);
            return cert;
        }
    }
    // Generalized scan: the smallest d with C(N-1,d) odd inside the range
    // where u^{N-1+d} survives the truncation.
    for (int d = 1; d <= l - N; ++d) {
        if (binom_mod_p(N - 1, d, 2) == 1) {
            install(d, Certification::obstruction_search);
            return cert;
        }
    }
    return cert;
}

}  // namespace equindex
