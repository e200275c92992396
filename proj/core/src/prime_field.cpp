#include "wgb/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace wgb {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31) || p % 2 == 0 || !is_prime_u32(p)) {
        throw std::invalid_argument("modulus must be an odd prime below 2^31: " +
                                    std::to_string(p));
    }
}

std::uint32_t PrimeField::reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t base = a % p_;
    std::uint32_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    // p is prime, so a^(p-2) is the inverse.
    return pow(a, p_ - 2);
}

}  // namespace wgb
