#pragma once

#include <cstdint>
#include <vector>

#include "nument/ideal.hpp"

namespace nument {

/* Decomposition shape of a rational prime in the n-th cyclotomic ring:
 * p factors as (P1...Pg)^e with residue degree f, and e*f*g = phi(n). */
struct SplittingType {
    std::uint64_t e; // ramification index
    std::uint64_t f; // residue degree
    std::uint64_t g; // number of primes above p
    std::uint64_t n; // conductor
    std::uint64_t phi;

    bool operator==(const SplittingType &) const = default;
};

SplittingType splitting_type(std::uint64_t p, std::uint64_t n);

// p = 1 (mod n); independent of splitting_type on purpose
bool splits_completely(std::uint64_t p, std::uint64_t n);

// odd p: p | n; p = 2: 4 | n; independent of splitting_type on purpose
bool is_ramified(std::uint64_t p, std::uint64_t n);

/* Generator of an ideal in Z[xi_q], q prime: a product of rational primes
 * p^k (p != q) and a power of (1 - xi). */
struct RationalPart {
    std::uint64_t p;
    std::uint64_t k;
};
struct CyclotomicGeneratorSpec {
    std::uint64_t conductor = 0;
    std::vector<RationalPart> rational_parts;
    std::uint64_t lambda_exponent = 0;
};

/* Each rational part (p, k) contributes its g primes above p with exponent k
 * (one RationalInert entry when g = 1); lambda_exponent t >= 1 adds (Lambda, t). */
IdealFactorization ideal_of_generator(const CyclotomicGeneratorSpec &spec);

struct GapBound {
    double gap;
    double bound;
};

/* Entropy cost of trading one (1 - xi) factor for one extra inert-prime power:
 * compares H of inert^2 * Lambda^(q-2) * (splits) against inert * Lambda^(q-1) * (splits),
 * where each auxiliary split prime contributes s_i exponent-1 entries.
 * Returns the gap plus the closed-form bound ((q-1) log(q-1))/q - log(q/2);
 * with S = sum s_i the gap equals q/(q+S) times the empty-list gap. */
GapBound inert_lambda_gap(std::uint64_t q, const std::vector<std::uint64_t> &split_counts);

} // namespace nument
