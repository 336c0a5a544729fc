#pragma once

#include <cstdint>
#include <optional>

#include "equindex/errors.hpp"

namespace equindex {

// Descriptor of a Fadell-Husseini index ideal in H*(BC_p).
// For p = 2 the ideal is principal, <u^N>. For odd p we record the least
// kernel exponents in F_p[y] (x) Lambda(eps); nullopt means none was found
// within the scan cap.
struct IndexIdeal {
    std::int64_t prime = 2;
    std::optional<int> principal_exponent;
    std::optional<int> min_even_kernel;  // least h with y^h in the kernel
    std::optional<int> min_odd_kernel;   // least b with eps*y^b in the kernel

    static IndexIdeal principal(std::int64_t p, int exponent) {
        if (exponent < 0) throw parameter_error("principal exponent must be >= 0");
        IndexIdeal ideal;
        ideal.prime = p;
        ideal.principal_exponent = exponent;
        return ideal;
    }

    bool is_principal() const { return principal_exponent.has_value(); }

    friend bool operator==(const IndexIdeal&, const IndexIdeal&) = default;
};

// True when the containment Index(target) <= Index(source) fails, i.e.
// monotonicity rules out an equivariant map source-space -> target-space.
inline bool rule_out_map(const IndexIdeal& source, const IndexIdeal& target) {
    if (source.prime != target.prime) throw structural_error("rule_out_map: mixed primes");
    if (!source.is_principal() || !target.is_principal())
        throw structural_error("rule_out_map: both ideals must be principal");
    return *target.principal_exponent < *source.principal_exponent;
}

// Product ideal <u^{Na+Nb}>, a lower-bound descriptor for the index of a join.
inline IndexIdeal join_ideal(const IndexIdeal& a, const IndexIdeal& b) {
    if (a.prime != b.prime) throw structural_error("join_ideal: mixed primes");
    if (!a.is_principal() || !b.is_principal())
        throw structural_error("join_ideal: both ideals must be principal");
    return IndexIdeal::principal(a.prime, *a.principal_exponent + *b.principal_exponent);
}

}  // namespace equindex
