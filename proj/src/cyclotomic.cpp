#include "nument/cyclotomic.hpp"

#include <cmath>

namespace nument {

static void require_prime_and_conductor(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) throw Error("domain-error", std::to_string(p) + " is not prime");
    if (n < 3) throw Error("domain-error", "conductor must be >= 3");
}

SplittingType splitting_type(std::uint64_t p, std::uint64_t n) {
    require_prime_and_conductor(p, n);
    std::uint64_t v = 0, n_prime = n;
    while (n_prime % p == 0) { n_prime /= p; ++v; }
    std::uint64_t ppow = 1;
    for (std::uint64_t i = 0; i < v; ++i) ppow *= p;
    const std::uint64_t e = euler_phi(ppow);
    const std::uint64_t f = n_prime > 1 ? mult_order(p, n_prime) : 1;
    const std::uint64_t g = euler_phi(n_prime) / f;
    return {e, f, g, n, euler_phi(n)};
}

bool splits_completely(std::uint64_t p, std::uint64_t n) {
    require_prime_and_conductor(p, n);
    return p % n == 1;
}

bool is_ramified(std::uint64_t p, std::uint64_t n) {
    require_prime_and_conductor(p, n);
    if (p == 2) return n % 4 == 0;
    return n % p == 0;
}

IdealFactorization ideal_of_generator(const CyclotomicGeneratorSpec &spec) {
    const std::uint64_t q = spec.conductor;
    if (!is_prime(q) || q < 3) throw Error("conductor-not-prime", "conductor must be a prime >= 3");
    std::vector<IdealEntry> entries;
    for (std::size_t i = 0; i < spec.rational_parts.size(); ++i) {
        const auto &[p, k] = spec.rational_parts[i];
        if (p == q) throw Error("rational-part-equals-conductor", "rewrite q^k as a lambda exponent k*(q-1) instead");
        if (!is_prime(p)) throw Error("domain-error", "rational part " + std::to_string(p) + " is not prime");
        if (k < 1) throw Error("domain-error", "rational part exponents must be >= 1");
        for (std::size_t j = i + 1; j < spec.rational_parts.size(); ++j)
            if (spec.rational_parts[j].p == p)
                throw Error("domain-error", "rational primes must be distinct");
        const std::uint64_t g = splitting_type(p, q).g; // p != q, so p is unramified here
        if (g == 1) {
            entries.push_back({RationalInert{p}, k});
        } else {
            for (std::uint32_t idx = 1; idx <= g; ++idx) entries.push_back({PrimeAbove{p, idx}, k});
        }
    }
    if (spec.lambda_exponent >= 1) entries.push_back({Lambda{}, spec.lambda_exponent});
    return IdealFactorization(std::move(entries));
}

GapBound inert_lambda_gap(std::uint64_t q, const std::vector<std::uint64_t> &split_counts) {
    if (!is_prime(q) || q < 5) throw Error("domain-error", "q must be a prime >= 5");
    const std::uint64_t phi_q = q - 1;
    for (std::uint64_t s : split_counts)
        if (s < 1 || phi_q % s != 0)
            throw Error("invalid-split-count", std::to_string(s) + " does not divide " + std::to_string(phi_q));

    auto family = [&](std::uint64_t inert_exp, std::uint64_t lambda_exp) {
        std::vector<IdealEntry> entries;
        entries.push_back({NamedLabel{"p"}, inert_exp});
        entries.push_back({Lambda{}, lambda_exp});
        for (std::size_t i = 0; i < split_counts.size(); ++i)
            for (std::uint64_t j = 1; j <= split_counts[i]; ++j)
                entries.push_back({PrimeAbove{/*p=*/static_cast<std::uint64_t>(i + 1), static_cast<std::uint32_t>(j)}, 1});
        return IdealFactorization(std::move(entries));
    };
    const double gap = ideal_entropy(family(2, q - 2)) - ideal_entropy(family(1, q - 1));
    const double qd = static_cast<double>(q);
    const double bound = (qd - 1.0) * std::log(qd - 1.0) / qd - std::log(qd / 2.0);
    return {gap, bound};
}

} // namespace nument
