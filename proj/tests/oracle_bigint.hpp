#pragma once

// Test-only reference arithmetic, kept independent of the library's Lucas
// path: an arbitrary-precision unsigned integer with just enough operations
// (addition, small-modulus reduction, equality) to build Pascal's triangle
// exactly and compare residues.

#include <cstdint>
#include <vector>

namespace oracle {

class BigUint {
public:
    BigUint() = default;

    BigUint(std::uint64_t v) {  // NOLINT: implicit by design for test literals
        while (v > 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
            v >>= 32;
        }
    }

    friend BigUint operator+(const BigUint& a, const BigUint& b) {
        BigUint out;
        const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry;
            if (i < a.limbs_.size()) s += a.limbs_[i];
            if (i < b.limbs_.size()) s += b.limbs_[i];
            out.limbs_.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
            carry = s >> 32;
        }
        if (carry > 0) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
        return out;
    }

    std::uint64_t mod_small(std::uint64_t m) const {
        unsigned __int128 r = 0;
        for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
            r = ((r << 32) | *it) % m;
        return static_cast<std::uint64_t>(r);
    }

    friend bool operator==(const BigUint&, const BigUint&) = default;

private:
    std::vector<std::uint32_t> limbs_;  // little-endian base 2^32
};

// Exact C(n,k) via Pascal's triangle, memoized row by row.
inline const BigUint& big_binomial(int n, int k) {
    static std::vector<std::vector<BigUint>> rows = {{BigUint(1)}};
    static const BigUint zero(0);
    if (n < 0 || k < 0 || k > n) return zero;
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<BigUint> row(prev.size() + 1, BigUint(0));
        row.front() = BigUint(1);
        row.back() = BigUint(1);
        for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

}  // namespace oracle
