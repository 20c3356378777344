#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nument/ideal.hpp"

namespace nument {

/* The field Q[X]/(X^3 - aX + b); construction rejects reducible polynomials. */
struct CubicField {
    std::int64_t a;
    std::int64_t b;
    mpz_class delta; // 4a^3 - 27b^2, never zero for an irreducible cubic

    CubicField(std::int64_t a, std::int64_t b);
};

// which closed-form hypothesis fired
enum class Condition {
    None,
    Valuation,   // p | a, p | b, v_p(a) = 1 < v_p(b)
    OddFreePart, // p does not divide ab and delta / p^{v_p(delta)} is odd
};

enum class CubicOutcome { PartiallyRamified12, NotCovered };

struct CubicClassification {
    CubicOutcome outcome;
    Condition condition;
};

const char *condition_name(Condition c);

/* Shape of pO_K as exponent/degree pairs; sum of e*f is always 3. */
struct PatternPart {
    std::uint32_t e;
    std::uint32_t f;
    auto operator<=>(const PatternPart &) const = default;
};
enum class PatternSource { Rule, Oracle };
struct SplittingPattern {
    std::vector<PatternPart> parts; // sorted ascending by (e, f)
    PatternSource source;

    bool is_partially_ramified_12() const;
};

// closed-form classification; p must be a prime >= 5
CubicClassification classify_prime(const CubicField &field, std::uint64_t p);

/* Factor X^3 - aX + b mod p and run the index test
 * (g = prod g_i, h = prod g_i^(e_i - 1), T = (g*h - f)/p; the test fails
 * iff gcd(T mod p, g mod p, h mod p) is non-constant). Returns the pattern,
 * or nullopt when p divides the index and the factorization proves nothing. */
std::optional<SplittingPattern> dedekind_oracle(const CubicField &field, std::uint64_t p);

struct CrossCheckRecord {
    std::int64_t a;
    std::int64_t b;
    std::uint64_t p;
    Condition condition;
    bool rule_verdict;   // closed-form rule says pO_K = P1 * P2^2
    bool oracle_verdict; // oracle pattern equals {(1,1),(2,1)}
    bool agree;
    std::uint32_t delta_valuation; // v_p(delta)
};

struct CrossCheckSummary {
    std::uint64_t fields = 0;            // irreducible (a, b) pairs visited
    std::uint64_t compared = 0;          // oracle gave a verdict
    std::uint64_t abstained = 0;         // p divides the index
    std::uint64_t agreements = 0;
    std::uint64_t disagreements = 0;
    // known gaps of the literal odd-free-part rule, kept separate on purpose:
    std::uint64_t odd_free_part_vp0 = 0;   // rule fired, v_p(delta) = 0, oracle sees no ramification
    std::uint64_t covered_by_oracle_only = 0; // no condition fired, oracle still sees P1 * P2^2
};

struct CrossCheckReport {
    CrossCheckSummary summary;
    std::vector<CrossCheckRecord> records;      // only non-abstaining triples, (a, b, p) ascending
    std::vector<CrossCheckRecord> disagreement_records() const;
};

struct IntRange {
    std::int64_t lo;
    std::int64_t hi; // inclusive
};

/* Runs classify_prime against the oracle for every irreducible (a, b) in the
 * ranges and every prime 5 <= p <= p_max; deterministic record order. */
CrossCheckReport cross_check(IntRange a_range, IntRange b_range, std::uint64_t p_max);

struct RamifiedPairResult {
    double entropy_p;
    double entropy_q;
    double divergence;
};

/* Both primes must classify as PartiallyRamified12; builds the two (1,2)
 * profiles and evaluates their entropies and divergence (exactly zero). */
RamifiedPairResult partially_ramified_pair(const CubicField &field, std::uint64_t p, std::uint64_t q);

} // namespace nument
