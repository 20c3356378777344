#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "nument/error.hpp"

namespace nument {

/* Closed form g(s, r) = log((s+r+2)/(s+r+1)) - 2 log 2 * (r+1)/((s+r+1)(s+r+2)),
   the entropy difference H(n p^2) - H(n p) for n with s squared and r-s simple
   prime factors and p a fresh prime. */
double gap_value(std::uint64_t s, std::uint64_t r);

// checked variant: requires 1 <= s <= r
double entropy_gap(std::uint64_t s, std::uint64_t r);

// smallest r >= s with entropy_gap(s, r) < 0; the scan cap 8s + 10 is safe
// because the gap is provably negative from r = ceil((8s+5)/3) on
std::uint64_t min_r_negative(std::uint64_t s);

// rows "s,r,f" over [0, s_max] x [0, r_max], row-major, 12 significant digits
void grid_csv(std::uint64_t s_max, std::uint64_t r_max, std::ostream &out);

struct SystemSolution {
    std::int64_t x;
    std::int64_t y;
    std::int64_t u;
    std::int64_t v;

    auto operator<=>(const SystemSolution &) const = default;
};

struct ScanOptions {
    bool allow_negative_v = false;
    bool use_float_filter = true; // exact arithmetic always confirms; this only prunes
    unsigned threads = 0;         // 0 = worker_count()
};

/* All (x, y, u, v) with x, y, u in [1, bound], v = x + y - u, x != u,
   v >= 1 (or v != 0 when negatives are allowed) satisfying
   x^x y^y = u^x v^y exactly, in lexicographic order. */
std::vector<SystemSolution> scan_system(std::uint64_t bound, const ScanOptions &options = {});

struct ExponentQuadruple {
    std::uint64_t a1;
    std::uint64_t a2;
    std::uint64_t b1;
    std::uint64_t b2;

    auto operator<=>(const ExponentQuadruple &) const = default;
};

/* All (a1, a2, b1, b2) >= 1 with a1 + a2 = b1 + b2 <= omega_budget and
   a1^a1 a2^a2 = b1^a1 b2^a2 exactly; only diagonal tuples are expected. */
std::vector<ExponentQuadruple> divergence_zero_scan(std::uint64_t omega_budget);

// NUMENT_THREADS override, else hardware concurrency (at least 1)
unsigned worker_count();

} // namespace nument
