#include "nument/arith.hpp"

#include <algorithm>
#include <numeric>

namespace nument {

std::uint64_t Factorization::big_omega() const {
    std::uint64_t sum = 0;
    for (const auto &pp : factors) sum += pp.exponent;
    return sum;
}

std::vector<std::uint64_t> Factorization::exponents() const {
    std::vector<std::uint64_t> out;
    out.reserve(factors.size());
    for (const auto &pp : factors) out.push_back(pp.exponent);
    return out;
}

static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this base set decides primality for all n < 3.3 * 10^24, so for all 64-bit n
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

static const std::vector<std::uint32_t> &small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 1'000'000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// rho cycle splitter (x -> x^2 + c), Floyd tortoise/hare; n composite and odd
static std::uint64_t rho_split(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t v) {
            std::uint64_t r = mul_mod(v, v, n) + c;
            return r >= n ? r - n : r;
        };
        std::uint64_t x = 2, y = step(2), d = 1;
        while (d == 1) {
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) { d = n; break; } // cycle closed; retry with a new polynomial
            d = std::gcd(diff, n);
            x = step(x);
            y = step(step(y));
        }
        if (d != n) return d;
    }
}

static void factor_collect(std::uint64_t n, std::vector<std::uint64_t> &out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    std::uint64_t d = rho_split(n);
    factor_collect(d, out);
    factor_collect(n / d, out);
}

Factorization factorize(std::uint64_t n, std::uint64_t bound) {
    if (n < 1) throw Error("domain-error", "factorize requires n >= 1");
    if (n > bound) throw Error("input-too-large", "n exceeds the factorization bound " + std::to_string(bound));
    Factorization f;
    f.value = n;
    std::uint64_t rem = n;
    for (std::uint32_t p : small_primes()) {
        if (static_cast<std::uint64_t>(p) * p > rem) break;
        if (rem % p != 0) continue;
        std::uint32_t e = 0;
        while (rem % p == 0) { rem /= p; ++e; }
        f.factors.push_back({p, e});
        if (rem == 1 || is_prime(rem)) break;
    }
    if (rem > 1) {
        if (is_prime(rem)) {
            f.factors.push_back({rem, 1});
        } else {
            // cofactor beyond the trial range (only reachable with a raised bound)
            std::vector<std::uint64_t> primes;
            factor_collect(rem, primes);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                f.factors.push_back({primes[i], static_cast<std::uint32_t>(j - i)});
                i = j;
            }
        }
    }
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = 1;
    for (const auto &pp : factorize(n).factors) {
        phi *= pp.prime - 1;
        for (std::uint32_t i = 1; i < pp.exponent; ++i) phi *= pp.prime;
    }
    return phi;
}

std::uint64_t mult_order(std::uint64_t p, std::uint64_t n) {
    if (n < 2) throw Error("domain-error", "mult_order requires modulus n >= 2");
    if (std::gcd(p, n) != 1) throw Error("not-coprime", "gcd(" + std::to_string(p) + ", " + std::to_string(n) + ") > 1");
    std::uint64_t f = euler_phi(n);
    for (const auto &pp : factorize(f).factors)
        while (f % pp.prime == 0 && pow_mod(p, f / pp.prime, n) == 1) f /= pp.prime;
    return f;
}

std::uint32_t valuation(std::uint64_t p, std::int64_t m) {
    if (m == 0) throw Error("zero-input", "valuation of 0 is undefined");
    if (p < 2 || !is_prime(p)) throw Error("domain-error", "valuation requires a prime p");
    std::uint64_t mag = m < 0 ? 0ull - static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m);
    std::uint32_t k = 0;
    while (mag % p == 0) { mag /= p; ++k; }
    return k;
}

} // namespace nument
