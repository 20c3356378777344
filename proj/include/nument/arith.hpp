#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nument/error.hpp"

namespace nument {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
    bool operator==(const PrimePower &) const = default;
};

/* Unique prime factorization, primes strictly ascending; 1 factors into nothing. */
struct Factorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;

    std::uint64_t big_omega() const;   // sum of exponents
    std::size_t little_omega() const { return factors.size(); }
    std::vector<std::uint64_t> exponents() const;
};

// default guardrail for factorize(); raise explicitly for bigger inputs
inline constexpr std::uint64_t kFactorizeBound = 1'000'000'000'000ull; // 10^12

// exact for every 64-bit n (Miller-Rabin with a proven base set)
bool is_prime(std::uint64_t n);

// throws "input-too-large" when n > bound
Factorization factorize(std::uint64_t n, std::uint64_t bound = kFactorizeBound);

std::uint64_t euler_phi(std::uint64_t n);

// least f >= 1 with p^f = 1 (mod n); n >= 2, gcd(p, n) = 1
std::uint64_t mult_order(std::uint64_t p, std::uint64_t n);

// largest k with p^k | m, sign of m ignored; m = 0 is an error
std::uint32_t valuation(std::uint64_t p, std::int64_t m);

// (base^exp) mod m, 128-bit intermediate
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

} // namespace nument
