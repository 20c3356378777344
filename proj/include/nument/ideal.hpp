#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nument/entropy.hpp"

namespace nument {

/* Symbolic names for the prime ideals appearing in a factorization.
 * Lambda stands for the ideal generated by (1 - xi) in a prime-conductor
 * cyclotomic ring; PrimeAbove(p, i) is the i-th (synthetic) prime over p. */
struct RationalInert {
    std::uint64_t p;
    auto operator<=>(const RationalInert &) const = default;
};
struct PrimeAbove {
    std::uint64_t p;
    std::uint32_t index; // 1..g
    auto operator<=>(const PrimeAbove &) const = default;
};
struct Lambda {
    auto operator<=>(const Lambda &) const = default;
};
struct NamedLabel {
    std::string name;
    auto operator<=>(const NamedLabel &) const = default;
};

using PrimeIdealLabel = std::variant<RationalInert, PrimeAbove, Lambda, NamedLabel>;

std::string label_text(const PrimeIdealLabel &label);

struct IdealEntry {
    PrimeIdealLabel label;
    std::uint64_t exponent; // >= 1
};

/* I = P1^e1 * ... * Pg^eg with pairwise distinct labels. */
class IdealFactorization {
  public:
    explicit IdealFactorization(std::vector<IdealEntry> entries);

    // synthetic labels P1..Pg for a bare exponent profile
    static IdealFactorization from_exponents(const std::vector<std::uint64_t> &exponents);

    const std::vector<IdealEntry> &entries() const { return entries_; }
    std::uint64_t big_omega() const { return big_omega_; }
    std::size_t little_omega() const { return entries_.size(); }
    std::vector<std::uint64_t> exponents() const;

  private:
    std::vector<IdealEntry> entries_;
    std::uint64_t big_omega_ = 0;
};

// entropy of the exponent profile; labels do not matter
double ideal_entropy(const IdealFactorization &ideal);

// exponent lists of both sides sorted ascending before pairing; omegas must match
double ideal_divergence(const IdealFactorization &lhs, const IdealFactorization &rhs);

// true iff H(I) reaches log omega(I) (within 1e-12); requires omega(I) >= 2
bool max_entropy_witness(const IdealFactorization &ideal);

/* Text form: either bare exponents "1,4" (synthetic labels) or labeled tokens
 * "2^1,lambda^4"; labels "lambda", "<p>", "<p>_<i>" map to the structured kinds. */
IdealFactorization parse_ideal(const std::string &text);
std::string format_ideal(const IdealFactorization &ideal);

} // namespace nument
