#include "nument/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include <gmpxx.h>

namespace nument {

double gap_value(std::uint64_t s, std::uint64_t r) {
    const std::uint64_t m = s + r + 1;
    return std::log(static_cast<double>(m + 1) / static_cast<double>(m)) -
           2.0 * std::log(2.0) * static_cast<double>(r + 1) / static_cast<double>(m * (m + 1));
}

double entropy_gap(std::uint64_t s, std::uint64_t r) {
    if (s < 1 || s > r) throw Error("domain-error", "entropy_gap needs 1 <= s <= r");
    return gap_value(s, r);
}

std::uint64_t min_r_negative(std::uint64_t s) {
    if (s < 1) throw Error("domain-error", "min_r_negative needs s >= 1");
    for (std::uint64_t r = s; r <= 8 * s + 10; ++r)
        if (gap_value(s, r) < 0.0) return r;
    throw Error("domain-error", "no sign change within the r <= 8s + 10 window"); // unreachable
}

void grid_csv(std::uint64_t s_max, std::uint64_t r_max, std::ostream &out) {
    out << "s,r,f\n";
    char buf[64];
    for (std::uint64_t s = 0; s <= s_max; ++s)
        for (std::uint64_t r = 0; r <= r_max; ++r) {
            std::snprintf(buf, sizeof buf, "%llu,%llu,%.12g\n", static_cast<unsigned long long>(s),
                          static_cast<unsigned long long>(r), gap_value(s, r));
            out << buf;
        }
}

unsigned worker_count() {
    if (const char *env = std::getenv("NUMENT_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1 && n <= 256) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

// factorizations of 1..limit via smallest-prime-factor table; every n has at
// most five distinct primes below 2·4000
struct SmallFactors {
    std::uint32_t prime[5];
    std::uint32_t exp[5];
    int count;
};

std::vector<SmallFactors> factor_table(std::uint64_t limit) {
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (spf[i] == 0)
            for (std::uint64_t j = i; j <= limit; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    std::vector<SmallFactors> table(limit + 1, SmallFactors{{}, {}, 0});
    for (std::uint64_t i = 2; i <= limit; ++i) {
        std::uint64_t n = i;
        SmallFactors &f = table[i];
        while (n > 1) {
            const std::uint32_t p = spf[n];
            std::uint32_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.prime[f.count] = p;
            f.exp[f.count] = e;
            ++f.count;
        }
    }
    return table;
}

// exact test of x^x y^y = u^x |v|^y by comparing merged exponent vectors
bool exponent_vectors_equal(const std::vector<SmallFactors> &t, std::uint64_t x, std::uint64_t y,
                            std::uint64_t u, std::uint64_t av) {
    const SmallFactors *lhs[2] = {&t[x], &t[y]};
    const SmallFactors *rhs[2] = {&t[u], &t[av]};
    const std::uint64_t lmul[2] = {x, y}, rmul[2] = {x, y};
    int li[2] = {0, 0}, ri[2] = {0, 0};
    while (true) {
        std::uint32_t p = UINT32_MAX;
        for (int k = 0; k < 2; ++k) {
            if (li[k] < lhs[k]->count) p = std::min(p, lhs[k]->prime[li[k]]);
            if (ri[k] < rhs[k]->count) p = std::min(p, rhs[k]->prime[ri[k]]);
        }
        if (p == UINT32_MAX) return true;
        std::uint64_t le = 0, re = 0;
        for (int k = 0; k < 2; ++k) {
            if (li[k] < lhs[k]->count && lhs[k]->prime[li[k]] == p) le += lmul[k] * lhs[k]->exp[li[k]++];
            if (ri[k] < rhs[k]->count && rhs[k]->prime[ri[k]] == p) re += rmul[k] * rhs[k]->exp[ri[k]++];
        }
        if (le != re) return false;
    }
}

bool confirm_exact(std::uint64_t x, std::uint64_t y, std::uint64_t u, std::int64_t v) {
    if (v < 0 && y % 2 != 0) return false; // left side positive, right side negative
    const std::uint64_t av = v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
    mpz_class lhs, rhs, t;
    mpz_ui_pow_ui(lhs.get_mpz_t(), x, x);
    mpz_ui_pow_ui(t.get_mpz_t(), y, y);
    lhs *= t;
    mpz_ui_pow_ui(rhs.get_mpz_t(), u, x);
    mpz_ui_pow_ui(t.get_mpz_t(), av, y);
    rhs *= t;
    return lhs == rhs;
}

} // namespace

std::vector<SystemSolution> scan_system(std::uint64_t bound, const ScanOptions &options) {
    if (bound < 1) throw Error("domain-error", "scan_system needs bound >= 1");

    std::vector<double> ln(2 * bound + 1, 0.0), nlogn(bound + 1, 0.0);
    for (std::uint64_t i = 1; i < ln.size(); ++i) ln[i] = std::log(static_cast<double>(i));
    for (std::uint64_t i = 1; i < nlogn.size(); ++i) nlogn[i] = static_cast<double>(i) * ln[i];

    std::vector<SmallFactors> table;
    if (!options.use_float_filter) table = factor_table(2 * bound);

    const unsigned workers = std::max(1u, options.threads ? options.threads : worker_count());
    std::vector<std::vector<SystemSolution>> found(workers);

    auto scan_stripe = [&](unsigned w) {
        std::vector<SystemSolution> &out = found[w];
        for (std::uint64_t x = 1 + w; x <= bound; x += workers) {
            for (std::uint64_t y = 1; y <= bound; ++y) {
                const std::uint64_t sum = x + y;
                const double lhs = nlogn[x] + nlogn[y];
                const double margin = 1e-6 * lhs;
                const std::uint64_t u_hi = options.allow_negative_v ? bound : std::min(bound, sum - 1);
                for (std::uint64_t u = 1; u <= u_hi; ++u) {
                    if (u == x || u == sum) continue;
                    const std::int64_t v = static_cast<std::int64_t>(sum) - static_cast<std::int64_t>(u);
                    const std::uint64_t av = v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
                    if (options.use_float_filter) {
                        const double rhs = static_cast<double>(x) * ln[u] + static_cast<double>(y) * ln[av];
                        if (std::fabs(lhs - rhs) > margin) continue;
                        if (!confirm_exact(x, y, u, v)) continue;
                    } else {
                        if (v < 0 && y % 2 != 0) continue;
                        if (!exponent_vectors_equal(table, x, y, u, av)) continue;
                    }
                    out.push_back({static_cast<std::int64_t>(x), static_cast<std::int64_t>(y),
                                   static_cast<std::int64_t>(u), v});
                }
            }
        }
    };

    if (workers == 1) {
        scan_stripe(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan_stripe, w);
        for (std::thread &t : pool) t.join();
    }

    std::vector<SystemSolution> merged;
    for (const auto &part : found) merged.insert(merged.end(), part.begin(), part.end());
    std::sort(merged.begin(), merged.end());
    return merged;
}

std::vector<ExponentQuadruple> divergence_zero_scan(std::uint64_t omega_budget) {
    std::vector<double> nlogn(omega_budget + 1, 0.0), ln(omega_budget + 1, 0.0);
    for (std::uint64_t i = 1; i < ln.size(); ++i) {
        ln[i] = std::log(static_cast<double>(i));
        nlogn[i] = static_cast<double>(i) * ln[i];
    }
    std::vector<ExponentQuadruple> out;
    mpz_class lhs, rhs, t;
    for (std::uint64_t total = 2; total <= omega_budget; ++total) {
        for (std::uint64_t a1 = 1; a1 < total; ++a1) {
            const std::uint64_t a2 = total - a1;
            const double left = nlogn[a1] + nlogn[a2];
            for (std::uint64_t b1 = 1; b1 < total; ++b1) {
                const std::uint64_t b2 = total - b1;
                const double right = static_cast<double>(a1) * ln[b1] + static_cast<double>(a2) * ln[b2];
                if (std::fabs(left - right) > 1e-6 * left) continue;
                mpz_ui_pow_ui(lhs.get_mpz_t(), a1, a1);
                mpz_ui_pow_ui(t.get_mpz_t(), a2, a2);
                lhs *= t;
                mpz_ui_pow_ui(rhs.get_mpz_t(), b1, a1);
                mpz_ui_pow_ui(t.get_mpz_t(), b2, a2);
                rhs *= t;
                if (lhs == rhs) out.push_back({a1, a2, b1, b2});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nument
