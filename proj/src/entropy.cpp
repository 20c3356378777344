#include "nument/entropy.hpp"

#include <cmath>

namespace nument {

ExponentProfile::ExponentProfile(std::vector<std::uint64_t> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw Error("domain-error", "an exponent profile needs at least one exponent");
    for (std::uint64_t a : exponents_) {
        if (a < 1) throw Error("domain-error", "exponents must be >= 1");
        big_omega_ += a;
    }
}

std::vector<mpq_class> ExponentProfile::distribution() const {
    std::vector<mpq_class> dist;
    dist.reserve(exponents_.size());
    for (std::uint64_t a : exponents_) {
        mpq_class q(static_cast<unsigned long>(a), static_cast<unsigned long>(big_omega_));
        q.canonicalize();
        dist.push_back(q);
    }
    return dist;
}

ProbabilityVector::ProbabilityVector(std::vector<mpq_class> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error("domain-error", "a probability vector needs at least one entry");
    mpq_class sum = 0;
    for (const mpq_class &e : entries_) {
        if (e <= 0 || e > 1) throw Error("domain-error", "probabilities must lie in (0, 1]");
        sum += e;
    }
    if (sum != 1) throw Error("domain-error", "probabilities must sum to exactly 1");
}

double shannon_entropy(const ProbabilityVector &p) {
    double h = 0.0;
    for (const mpq_class &e : p.entries()) {
        double pe = e.get_d();
        h -= pe * std::log(pe);
    }
    return h;
}

double kl_divergence(const ProbabilityVector &p, const ProbabilityVector &q) {
    if (p.size() != q.size())
        throw Error("length-mismatch", "probability vectors have lengths " + std::to_string(p.size()) + " and " +
                                           std::to_string(q.size()));
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        mpq_class ratio = p.entries()[i] / q.entries()[i]; // exact, so identical vectors give log(1) = 0 exactly
        d += p.entries()[i].get_d() * std::log(ratio.get_d());
    }
    return d;
}

double entropy_of_profile(const ExponentProfile &e) {
    if (e.little_omega() == 1) return 0.0; // log a - (a log a)/a, identically zero
    const double omega = static_cast<double>(e.big_omega());
    double weighted = 0.0;
    for (std::uint64_t a : e.exponents()) weighted += static_cast<double>(a) * std::log(static_cast<double>(a));
    return std::log(omega) - weighted / omega;
}

double integer_entropy(std::uint64_t n) {
    if (n < 1) throw Error("domain-error", "integer_entropy requires n >= 1");
    if (n == 1) return 0.0; // convention
    return entropy_of_profile(ExponentProfile(factorize(n).exponents()));
}

double divergence_of_exponents(const std::vector<std::uint64_t> &a, const std::vector<std::uint64_t> &b) {
    if (a.size() != b.size())
        throw Error("length-mismatch", "exponent lists have lengths " + std::to_string(a.size()) + " and " +
                                           std::to_string(b.size()));
    const ExponentProfile pa(a), pb(b);
    const double omega_a = static_cast<double>(pa.big_omega());
    const double omega_b = static_cast<double>(pb.big_omega());
    double weighted = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        weighted += static_cast<double>(a[i]) * std::log(static_cast<double>(b[i]) / static_cast<double>(a[i]));
    return std::log(omega_b / omega_a) - weighted / omega_a;
}

double integer_divergence(std::uint64_t n, std::uint64_t m) {
    if (n < 2 || m < 2) throw Error("unit-input", "divergence requires n, m >= 2");
    const Factorization fn = factorize(n), fm = factorize(m);
    if (fn.little_omega() != fm.little_omega())
        throw Error("omega-mismatch", "omega(" + std::to_string(n) + ") = " + std::to_string(fn.little_omega()) +
                                          " but omega(" + std::to_string(m) + ") = " + std::to_string(fm.little_omega()));
    // factorize lists primes in ascending order, which is exactly the required pairing
    return divergence_of_exponents(fn.exponents(), fm.exponents());
}

} // namespace nument
