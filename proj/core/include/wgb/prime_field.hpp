#pragma once

#include <cstdint>

namespace wgb {

// Default modulus: the largest prime below 2^16.
inline constexpr std::uint32_t kDefaultPrime = 65521;

// Arithmetic context for GF(p), p an odd prime below 2^31.
// Elements are least nonnegative residues stored as uint32_t.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    // Reduces an arbitrary signed integer into [0, p).
    std::uint32_t reduce(std::int64_t x) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }
    // a^e by binary exponentiation.
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    // Multiplicative inverse; throws std::domain_error on zero.
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint32_t p_;
};

// Trial-division primality test for 32-bit values.
bool is_prime_u32(std::uint32_t n);

}  // namespace wgb
