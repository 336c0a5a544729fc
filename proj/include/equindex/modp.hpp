#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equindex/errors.hpp"

namespace equindex {

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// All residue arithmetic below stays inside int64, so the modulus is capped.
inline void require_prime(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31))
        throw parameter_error("modulus " + std::to_string(p) + " is too large");
    if (!is_prime(p))
        throw parameter_error("modulus " + std::to_string(p) + " is not prime");
}

inline std::int64_t mod_pow(std::int64_t x, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    x %= p;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * x % p;
        x = x * x % p;
    }
    return r;
}

inline std::int64_t mod_inv(std::int64_t x, std::int64_t p) {
    return mod_pow(x, p - 2, p);
}

// Base-p digits, little-endian, no trailing zeros; zero is the empty sequence.
struct DigitVector {
    std::int64_t prime = 2;
    std::vector<int> digits;

    std::int64_t value() const {
        std::int64_t v = 0;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * prime + *it;
        return v;
    }

    friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

inline DigitVector to_digits(std::int64_t n, std::int64_t p) {
    require_prime(p);
    if (n < 0) throw parameter_error("to_digits: n must be non-negative");
    DigitVector dv;
    dv.prime = p;
    for (; n > 0; n /= p) dv.digits.push_back(static_cast<int>(n % p));
    return dv;
}

namespace detail {

// C(a,b) mod p for digits 0 <= b <= a < p.
inline std::int64_t digit_binom(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t num = 1, den = 1;
    for (std::int64_t i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return num * mod_inv(den, p) % p;
}

}  // namespace detail

// C(n,k) mod p by Lucas' theorem: the product of digit-wise binomials in
// base p, zero as soon as a digit of k exceeds the matching digit of n.
inline int binom_mod_p(std::int64_t n, std::int64_t k, std::int64_t p) {
    require_prime(p);
    if (n < 0 || k < 0) throw parameter_error("binom_mod_p: arguments must be non-negative");
    if (k > n) return 0;
    const DigitVector nd = to_digits(n, p);
    const DigitVector kd = to_digits(k, p);
    std::int64_t r = 1;
    for (std::size_t i = 0; i < kd.digits.size(); ++i) {
        const int a = nd.digits[i];  // kd is no longer than nd since k <= n
        const int b = kd.digits[i];
        if (b > a) return 0;
        r = r * detail::digit_binom(a, b, p) % p;
    }
    return static_cast<int>(r);
}

// Least s >= 1 with k < 2^s.
inline int minimal_s(std::int64_t k) {
    if (k < 1) throw parameter_error("minimal_s: k must be >= 1");
    if (k >= (std::int64_t(1) << 62)) throw parameter_error("minimal_s: k is too large");
    int s = 1;
    while (k >= (std::int64_t(1) << s)) ++s;
    return s;
}

}  // namespace equindex
