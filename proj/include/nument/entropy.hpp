#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "nument/arith.hpp"
#include "nument/error.hpp"

namespace nument {

/* The distribution p(alpha_i) = alpha_i / Omega carried by an exponent multiset.
 * Order of the exponents is kept exactly as supplied. */
class ExponentProfile {
  public:
    explicit ExponentProfile(std::vector<std::uint64_t> exponents);

    const std::vector<std::uint64_t> &exponents() const { return exponents_; }
    std::uint64_t big_omega() const { return big_omega_; }
    std::size_t little_omega() const { return exponents_.size(); }
    std::vector<mpq_class> distribution() const; // exact rationals, sum 1

  private:
    std::vector<std::uint64_t> exponents_;
    std::uint64_t big_omega_ = 0;
};

/* Positive exact rationals summing to exactly 1; the sum is a constructor invariant. */
class ProbabilityVector {
  public:
    explicit ProbabilityVector(std::vector<mpq_class> entries);

    const std::vector<mpq_class> &entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    bool operator==(const ProbabilityVector &) const = default;

  private:
    std::vector<mpq_class> entries_;
};

// -sum p_i log p_i, natural log
double shannon_entropy(const ProbabilityVector &p);

// sum p_i log(p_i / q_i); vectors must have equal length
double kl_divergence(const ProbabilityVector &p, const ProbabilityVector &q);

// log Omega - (1/Omega) sum alpha_i log alpha_i; equals the Shannon entropy of the distribution
double entropy_of_profile(const ExponentProfile &e);

// H(n) from the prime factorization of n; H(1) = 0
double integer_entropy(std::uint64_t n);

// D(n||m), exponents paired by ascending prime on each side; n, m >= 2, omega(n) = omega(m)
double integer_divergence(std::uint64_t n, std::uint64_t m);

// log(Omega_b/Omega_a) - (1/Omega_a) sum a_i log(b_i/a_i), pairing the lists as given
double divergence_of_exponents(const std::vector<std::uint64_t> &a, const std::vector<std::uint64_t> &b);

} // namespace nument
