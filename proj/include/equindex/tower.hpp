#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "equindex/algebra.hpp"
#include "equindex/errors.hpp"
#include "equindex/index_ideal.hpp"

namespace equindex {

// R_k = H*(X(k)/C_p; F_p) for the iterated S^3-bundle tower
// X(k+1) = X(k) x_{C_p} S^3 over X(0) = S^3:
//   e_0..e_k   exterior, degree 1
//   z_0        truncated (z_0^2 = 0), degree 2
//   z_i, i>=1  rewrite z_i^2 -> (p-1) z_{i-1} z_i, degree 2
// R_0 is Lambda(e_0) (x) F_p[z_0]/(z_0^2), the cohomology of the lens
// space L_p(3).
struct TowerLevel {
    int k = 0;
    std::int64_t p = 3;
    PresentationPtr ring;
};

inline TowerLevel build_tower(int k, std::int64_t p) {
    if (k < 0) throw parameter_error("tower: level must be >= 0");
    if (p == 2 || !is_prime(p)) throw parameter_error("tower: p must be an odd prime");
    auto pres = std::make_shared<AlgebraPresentation>(p, "R_" + std::to_string(k));
    for (int i = 0; i <= k; ++i) {
        const std::string zi = "z" + std::to_string(i);
        pres->add_exterior("e" + std::to_string(i), 1);
        if (i == 0)
            pres->add_truncated(zi, 2, 2);
        else
            pres->add_rewrite(zi, 2, p - 1, {{"z" + std::to_string(i - 1), 1}, {zi, 1}});
    }
    pres->set_annotation("bockstein pairing: beta(e_i) = z_i");
    return {k, p, std::move(pres)};
}

inline AlgebraElement tower_generator(const TowerLevel& level, const std::string& name) {
    return AlgebraElement::generator(level.ring, name);
}

// ht(z_k) in R_k, capped at k+4. Exceeding the cap means the rewrite engine
// regressed, not that the input was bad.
inline int height_of_z(int k, std::int64_t p) {
    const TowerLevel level = build_tower(k, p);
    const auto z = tower_generator(level, "z" + std::to_string(k));
    const auto h = height(z, k + 4);
    if (!h) throw internal_error("ht(z_k) exceeded the cap k+4 in R_" + std::to_string(k));
    return *h;
}

struct TowerReport {
    int k = 0;
    std::int64_t p = 3;
    int ht_z = 0;                             // height of z_k
    int ht_ez = 0;                            // min b with e_k z_k^b = 0
    int cindex_exact = 0;                     // from the kernel scan
    int paper_lower = 0;                      // 2k+2
    std::array<int, 2> paper_alternatives{};  // {2k+2, 2k+3}
    int coind = 3;
    std::string coind_provenance = "paper-asserted";
};

// Kernel scan for psi_k*: F_p[y] (x) Lambda(eps) -> R_k with eps -> e_k,
// y -> z_k. Every graded piece of the source is spanned by one monomial
// eps^a y^b, so zero-testing single images by increasing total degree finds
// the minimal kernel degree; cindex_exact is that degree minus one.
inline TowerReport tower_cindex(int k, std::int64_t p) {
    const TowerLevel level = build_tower(k, p);
    const auto e = tower_generator(level, "e" + std::to_string(k));
    const auto z = tower_generator(level, "z" + std::to_string(k));
    const int cap = k + 4;

    TowerReport report;
    report.k = k;
    report.p = p;

    const auto hz = height(z, cap);
    if (!hz) throw internal_error("ht(z_k) exceeded the cap k+4 in R_" + std::to_string(k));
    report.ht_z = *hz;

    report.ht_ez = -1;
    AlgebraElement ez = e;  // e_k z_k^b as b grows
    for (int b = 0; b <= cap; ++b) {
        if (ez.is_zero()) {
            report.ht_ez = b;
            break;
        }
        ez = multiply(ez, z);
    }
    if (report.ht_ez < 0)
        throw internal_error("e_k z_k^b never vanished within the cap in R_" + std::to_string(k));

    int first_kernel_degree = -1;
    for (int deg = 1; deg <= 2 * (k + 4); ++deg) {
        const int b = deg / 2;
        AlgebraElement image = power(z, b);
        if (deg % 2 != 0) image = multiply(e, image);
        if (image.is_zero()) {
            first_kernel_degree = deg;
            break;
        }
    }
    if (first_kernel_degree < 0)
        throw internal_error("no kernel element within degree 2(k+4) in R_" + std::to_string(k));

    report.cindex_exact = first_kernel_degree - 1;
    report.paper_lower = 2 * k + 2;
    report.paper_alternatives = {2 * k + 2, 2 * k + 3};
    report.coind = 3;
    report.coind_provenance = "paper-asserted";
    return report;
}

// Odd-p index ideal descriptor read off a tower report.
inline IndexIdeal tower_index_ideal(const TowerReport& report) {
    IndexIdeal ideal;
    ideal.prime = report.p;
    ideal.min_even_kernel = report.ht_z;
    ideal.min_odd_kernel = report.ht_ez;
    return ideal;
}

}  // namespace equindex
