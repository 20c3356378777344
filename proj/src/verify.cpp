#include "nument/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include <gmpxx.h>

#include "nument/arith.hpp"
#include "nument/cubic.hpp"
#include "nument/cyclotomic.hpp"
#include "nument/entropy.hpp"
#include "nument/ideal.hpp"
#include "nument/search.hpp"

namespace nument {

std::uint64_t VerificationReport::passed() const {
    return static_cast<std::uint64_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check &c) { return c.status == CheckStatus::Pass; }));
}

std::uint64_t VerificationReport::failed() const {
    return static_cast<std::uint64_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check &c) { return c.status == CheckStatus::Fail; }));
}

std::uint64_t VerificationReport::informational() const {
    return static_cast<std::uint64_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check &c) { return c.status == CheckStatus::Info; }));
}

bool VerificationReport::all_passed() const { return failed() == 0; }

static const char *status_text(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "info";
    }
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json out;
    out["checks"] = nlohmann::ordered_json::array();
    for (const Check &c : checks) {
        nlohmann::ordered_json row;
        row["name"] = c.name;
        row["status"] = status_text(c.status);
        row["computed"] = c.computed;
        row["expected"] = c.expected;
        row["citation"] = c.citation;
        out["checks"].push_back(row);
    }
    out["summary"] = {{"pass", passed()}, {"fail", failed()}, {"info", informational()}};
    return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

// fully deterministic across platforms, unlike uniform_int_distribution
std::uint64_t rnd(std::mt19937_64 &rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

double rnd_real(std::mt19937_64 &rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

void add(VerificationReport &r, std::string name, bool ok, ordered_json computed, ordered_json expected,
         std::string citation) {
    r.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(computed),
                        std::move(expected), std::move(citation)});
}

void add_suite(VerificationReport &r, std::string name, std::uint64_t cases, std::uint64_t failures,
               std::string citation) {
    add(r, std::move(name), failures == 0, ordered_json{{"cases", cases}, {"failures", failures}},
        ordered_json{{"failures", 0}}, std::move(citation));
}

ordered_json solutions_json(const std::vector<SystemSolution> &sols) {
    ordered_json out = ordered_json::array();
    for (const SystemSolution &s : sols) out.push_back({s.x, s.y, s.u, s.v});
    return out;
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::uint32_t delta_valuation_of(std::uint64_t p, const mpz_class &delta) {
    mpz_class mag = abs(delta);
    std::uint32_t v = 0;
    while (mpz_divisible_ui_p(mag.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(mag.get_mpz_t(), mag.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

void criterion1(VerificationReport &r) {
    const double tol = 1e-9;

    const IdealFactorization ten = ideal_of_generator({5, {{2, 1}}, 4});
    const double h_ten = ideal_entropy(ten);
    const double e_ten = std::log(5.0) - std::log(256.0) / 5.0;
    add(r, "c1 entropy of the conductor-5 ideal generated by 10", close(h_ten, e_ten, tol), h_ten, e_ten,
        "10 = 2 * 5 factors as P * L^4 in the 5th cyclotomic ring, so H = log 5 - (1/5) log 256");

    const IdealFactorization four_l3 = ideal_of_generator({5, {{2, 2}}, 3});
    const double h_fl = ideal_entropy(four_l3);
    const double e_fl = std::log(5.0) - std::log(108.0) / 5.0;
    add(r, "c1 entropy of the conductor-5 ideal generated by 4 times the third lambda power",
        close(h_fl, e_fl, tol), h_fl, e_fl,
        "4 (1 - xi)^3 generates P^2 * L^3, so H = log 5 - (1/5) log 108");

    const double diff = h_fl - h_ten;
    const double e_diff = std::log(64.0 / 27.0) / 5.0;
    add(r, "c1 entropy difference between the two conductor-5 ideals", close(diff, e_diff, tol), diff, e_diff,
        "H(P^2 L^3) - H(P L^4) = (1/5) log(64/27)");

    const double bound5 = inert_lambda_gap(5, {}).bound;
    const double e_bound5 = std::log(8192.0 / 3125.0) / 5.0;
    add(r, "c1 inert-for-lambda trade bound at q = 5",
        close(bound5, e_bound5, tol) && bound5 >= 0.1927 && bound5 < 0.1928, bound5, e_bound5,
        "(q-1) log(q-1) / q - log(q/2) at q = 5 equals (1/5) log(8192/3125) = 0.1927...");

    const double gap21 = inert_lambda_gap(5, {4, 4, 4, 4}).gap;
    const double e_gap21 = std::log(64.0 / 27.0) / 21.0;
    add(r, "c1 inert-for-lambda gap at q = 5 with four fully split primes",
        close(gap21, e_gap21, tol) && gap21 < 0.046, gap21, e_gap21,
        "sixteen extra exponent-1 entries dilute the gap to (1/21) log(64/27) = 0.0411 < 0.046");
}

void criterion2(VerificationReport &r) {
    const std::vector<std::uint64_t> expected = {3, 6, 9, 11, 14, 16, 19, 21, 24, 27};
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> table;
    for (std::uint64_t s = 1; s <= 10; ++s) table.push_back(min_r_negative(s));
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    add(r, "c2 smallest r with a negative gap, s = 1..10", table == expected, table, expected,
        "first r >= s where log((s+r+2)/(s+r+1)) < 2 log 2 (r+1)/((s+r+1)(s+r+2))");
    add(r, "c2 threshold scan finishes within one second", elapsed < 1.0, elapsed < 1.0, true,
        "the r <= 8s + 10 cap keeps the scan trivially fast");
}

void criterion3(VerificationReport &r) {
    const auto start = std::chrono::steady_clock::now();

    const auto positive = scan_system(500, {});
    add(r, "c3 positive scan to bound 500 finds no solution", positive.empty(), solutions_json(positive),
        ordered_json::array(), "x + y = u + v, x^x y^y = u^x v^y, x != u has no positive solution with x, y, u <= 500");

    ScanOptions neg;
    neg.allow_negative_v = true;
    const auto at10 = scan_system(10, neg);
    const std::vector<SystemSolution> want10 = {{1, 2, 4, -1}, {2, 4, 8, -2}};
    add(r, "c3 negative-v scan to bound 10 is exactly the (a, 2a, 4a, -a) members that fit", at10 == want10,
        solutions_json(at10), solutions_json(want10),
        "with u <= 10 the family (a, 2a, 4a, -a) admits a = 1, 2 and nothing else solves the system");

    const auto at12 = scan_system(12, neg);
    const std::vector<SystemSolution> want12 = {{1, 2, 4, -1}, {2, 4, 8, -2}, {3, 6, 12, -3}};
    add(r, "c3 negative-v scan to bound 12 is exactly the family for a <= 3", at12 == want12,
        solutions_json(at12), solutions_json(want12),
        "raising the u range to 12 admits the a = 3 family member and still nothing else");

    const auto quads = divergence_zero_scan(120);
    std::uint64_t off_diagonal = 0;
    for (const auto &q : quads)
        if (q.a1 != q.b1 || q.a2 != q.b2) ++off_diagonal;
    add(r, "c3 exponent product identity scan to budget 120 yields only diagonal tuples",
        off_diagonal == 0 && quads.size() == 7140,
        ordered_json{{"tuples", quads.size()}, {"off_diagonal", off_diagonal}},
        ordered_json{{"tuples", 7140}, {"off_diagonal", 0}},
        "a1^a1 a2^a2 = b1^a1 b2^a2 with a1 + a2 = b1 + b2 forces (a1, a2) = (b1, b2)");

    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    add(r, "c3 scans finish within three minutes", elapsed < 180.0, elapsed < 180.0, true,
        "the log-domain filter keeps exact big-integer confirmation off the hot path");
}

void criterion4(VerificationReport &r) {
    // entropy bounds on random integers
    {
        std::mt19937_64 rng(1001);
        std::uint64_t failures = 0;
        const std::uint64_t cases = 10000;
        for (std::uint64_t i = 0; i < cases; ++i) {
            const std::uint64_t n = rnd(rng, 2, kFactorizeBound);
            const double h = integer_entropy(n);
            const double cap = std::log(static_cast<double>(factorize(n).little_omega()));
            if (!(h >= 0.0 && h <= cap + 1e-12)) ++failures;
        }
        add_suite(r, "c4 entropy of 10^4 random integers stays within [0, log omega]", cases, failures,
                  "0 <= H(n) <= log omega(n) for every n >= 2");
    }
    // zero characterization, integers
    {
        std::uint64_t failures = 0;
        for (std::uint64_t n = 2; n <= 100000; ++n)
            if ((integer_entropy(n) == 0.0) != (factorize(n).little_omega() == 1)) ++failures;
        add_suite(r, "c4 zero entropy characterizes prime powers (exhaustive to 10^5)", 99999, failures,
                  "H(n) = 0 exactly when n = p^a");
    }
    // zero characterization, ideals; and entropy bounds on the same box
    {
        std::uint64_t failures = 0, cases = 0;
        std::vector<std::uint64_t> exps;
        for (std::size_t g = 1; g <= 5; ++g) {
            exps.assign(g, 1);
            while (true) {
                ++cases;
                const IdealFactorization ideal = IdealFactorization::from_exponents(exps);
                const double h = ideal_entropy(ideal);
                if ((h == 0.0) != (g == 1)) ++failures;
                if (!(h >= 0.0 && h <= std::log(static_cast<double>(g)) + 1e-12)) ++failures;
                std::size_t i = 0;
                while (i < g && exps[i] == 10) exps[i++] = 1;
                if (i == g) break;
                ++exps[i];
            }
        }
        add_suite(r, "c4 ideal entropy bounds and zero characterization (exhaustive, g <= 5, exponents <= 10)",
                  cases, failures, "0 <= H(I) <= log omega(I), with H(I) = 0 exactly when omega(I) = 1");
    }
    // the power-tower identity behind the zero characterization
    {
        std::uint64_t failures = 0, cases = 0;
        std::vector<std::uint64_t> exps;
        mpz_class lhs, rhs, t;
        for (std::size_t g = 1; g <= 4; ++g) {
            exps.assign(g, 1);
            while (true) {
                ++cases;
                const std::uint64_t total = std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
                mpz_ui_pow_ui(lhs.get_mpz_t(), total, total);
                rhs = 1;
                for (const std::uint64_t e : exps) {
                    mpz_ui_pow_ui(t.get_mpz_t(), e, e);
                    rhs *= t;
                }
                if ((lhs == rhs) != (g == 1)) ++failures;
                std::size_t i = 0;
                while (i < g && exps[i] == 12) exps[i++] = 1;
                if (i == g) break;
                ++exps[i];
            }
        }
        add_suite(r, "c4 power-tower identity holds only for single entries (exhaustive, g <= 4, exponents <= 12)",
                  cases, failures, "(e1 + ... + eg)^(e1 + ... + eg) = e1^e1 ... eg^eg forces g = 1");
    }
    // power invariance
    {
        std::mt19937_64 rng(1002);
        std::uint64_t failures = 0;
        const std::uint64_t cases = 1000;
        for (std::uint64_t i = 0; i < cases; ++i) {
            const std::uint64_t n = rnd(rng, 2, 4000);
            std::uint64_t alpha_max = 1, power = n;
            while (alpha_max < 20 && power <= kFactorizeBound / n) {
                power *= n;
                ++alpha_max;
            }
            const std::uint64_t alpha = rnd(rng, 1, alpha_max);
            std::uint64_t m = 1;
            for (std::uint64_t k = 0; k < alpha; ++k) m *= n;
            if (!close(integer_entropy(m), integer_entropy(n), 1e-12)) ++failures;
        }
        add_suite(r, "c4 entropy is invariant under integer powers (1000 cases)", cases, failures,
                  "H(n^a) = H(n): scaling every exponent by a leaves the distribution unchanged");
    }
    // maximum characterization
    {
        std::uint64_t failures = 0, cases = 0;
        std::vector<std::uint64_t> exps;
        for (std::size_t g = 1; g <= 4; ++g) {
            exps.assign(g, 1);
            while (true) {
                ++cases;
                const double h = entropy_of_profile(ExponentProfile(exps));
                const bool equal_exps = std::all_of(exps.begin(), exps.end(),
                                                    [&](std::uint64_t e) { return e == exps[0]; });
                if (close(h, std::log(static_cast<double>(g)), 1e-12) != equal_exps) ++failures;
                if (g >= 2 && max_entropy_witness(IdealFactorization::from_exponents(exps)) != equal_exps)
                    ++failures;
                std::size_t i = 0;
                while (i < g && exps[i] == 12) exps[i++] = 1;
                if (i == g) break;
                ++exps[i];
            }
        }
        add_suite(r, "c4 maximal entropy characterizes equal exponents (exhaustive, g <= 4, exponents <= 12)",
                  cases, failures, "H reaches log omega exactly when e1 = e2 = ... = eg");
    }
    // pair mean-log inequality
    {
        std::mt19937_64 rng(1003);
        std::uint64_t failures = 0, cases = 0;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const double a = rnd_real(rng, 1e-6, 100.0), b = rnd_real(rng, 1e-6, 100.0);
            const double lhs = (a * std::log(a) + b * std::log(b)) / (a + b);
            const double rhs = std::log((a + b) / 2.0);
            ++cases;
            if (lhs < rhs - 1e-12) ++failures;
            if (std::fabs(a - b) >= 0.5 && !(lhs > rhs)) ++failures;
        }
        for (std::uint64_t i = 0; i < 100; ++i) {
            const double a = rnd_real(rng, 1e-6, 100.0);
            const double lhs = (a * std::log(a) + a * std::log(a)) / (a + a);
            const double rhs = std::log((a + a) / 2.0);
            ++cases;
            if (!close(lhs, rhs, 1e-12)) ++failures;
        }
        add_suite(r, "c4 pair mean-log inequality with equality at equal arguments (1100 cases)", cases, failures,
                  "(a log a + b log b)/(a + b) >= log((a + b)/2), equality only at a = b");
    }
    // two-prime exponent shift: difference bound, profiles and ideals
    {
        std::uint64_t failures = 0, cases = 0;
        for (std::uint64_t alpha = 1; alpha <= 40; ++alpha)
            for (std::uint64_t beta = 1; beta <= 40; ++beta)
                for (std::uint64_t eps = 1; eps < beta; ++eps) {
                    ++cases;
                    const double hn = entropy_of_profile(ExponentProfile({alpha, beta}));
                    const double hm = entropy_of_profile(ExponentProfile({alpha + eps, beta - eps}));
                    const double hi =
                        ideal_entropy(IdealFactorization::from_exponents({alpha + eps, beta - eps}));
                    const double d = hm - hn;
                    const double a = static_cast<double>(alpha), b = static_cast<double>(beta);
                    const double cap = (a * std::log(a) + b * std::log(b)) / (a + b) - std::log((a + b) / 2.0);
                    if (!close(hm, hi, 1e-12)) ++failures;
                    if (d > cap + 1e-12) ++failures;
                    if (beta >= alpha && (beta - alpha) >= 2 * eps && d < -1e-12) ++failures;
                }
        add_suite(r, "c4 exponent shift difference bound on profiles and ideals (exhaustive, exponents <= 40)",
                  cases, failures,
                  "H(a+e, b-e) - H(a, b) <= (a log a + b log b)/(a+b) - log((a+b)/2), and >= 0 when (b-a)/2 >= e");
    }
    // the same shift on integer witnesses
    {
        std::uint64_t failures = 0, cases = 0;
        for (std::uint64_t alpha = 1; alpha <= 13; ++alpha)
            for (std::uint64_t beta = 1; beta <= 13; ++beta)
                for (std::uint64_t eps = 1; eps < beta; ++eps) {
                    ++cases;
                    std::uint64_t n = 1, m = 1;
                    for (std::uint64_t k = 0; k < alpha; ++k) n *= 2;
                    for (std::uint64_t k = 0; k < beta; ++k) n *= 3;
                    for (std::uint64_t k = 0; k < alpha + eps; ++k) m *= 2;
                    for (std::uint64_t k = 0; k < beta - eps; ++k) m *= 3;
                    const double d_int = integer_entropy(m) - integer_entropy(n);
                    const double d_prof = entropy_of_profile(ExponentProfile({alpha + eps, beta - eps})) -
                                          entropy_of_profile(ExponentProfile({alpha, beta}));
                    if (!close(d_int, d_prof, 1e-12)) ++failures;
                    const double dv = integer_divergence(n, m);
                    if (dv < 0.0) ++failures;
                    if (integer_divergence(n, n) != 0.0) ++failures;
                }
        add_suite(r, "c4 exponent shift on integer witnesses 2^a 3^b (exhaustive, exponents <= 13)", cases,
                  failures, "the integer path agrees with the profile path, and D(n||m) >= 0 with D(n||n) = 0");
    }
    // scaling identities under a coprime cofactor
    {
        std::mt19937_64 rng(1004);
        std::uint64_t failures = 0;
        const std::uint64_t cases = 1000;
        for (std::uint64_t i = 0; i < cases; ++i) {
            const std::uint64_t alpha = rnd(rng, 1, 6);
            const std::uint64_t beta = rnd(rng, 2, 6);
            const std::uint64_t eps = rnd(rng, 1, beta - 1);
            std::uint64_t u = rnd(rng, 2, 10000);
            while (u % 2 == 0 || u % 3 == 0) u = rnd(rng, 2, 10000);
            std::uint64_t n = 1, m = 1;
            for (std::uint64_t k = 0; k < alpha; ++k) n *= 2;
            for (std::uint64_t k = 0; k < beta; ++k) n *= 3;
            for (std::uint64_t k = 0; k < alpha + eps; ++k) m *= 2;
            for (std::uint64_t k = 0; k < beta - eps; ++k) m *= 3;
            const double omega_n = static_cast<double>(alpha + beta);
            const double scale = omega_n / (omega_n + static_cast<double>(factorize(u).big_omega()));
            if (!close(integer_entropy(m * u) - integer_entropy(n * u),
                       scale * (integer_entropy(m) - integer_entropy(n)), 1e-12))
                ++failures;
            if (!close(integer_divergence(n * u, m * u), scale * integer_divergence(n, m), 1e-12)) ++failures;
        }
        add_suite(r, "c4 entropy difference and divergence scale by the omega ratio under coprime extension (1000 cases)",
                  cases, failures,
                  "H(mu) - H(nu) = (O/(O + O(u))) (H(m) - H(n)) and D(nu||mu) = (O/(O + O(u))) D(n||m)");
    }
    // divergence nonnegativity on the shift box
    {
        std::uint64_t failures = 0, cases = 0;
        for (std::uint64_t alpha = 1; alpha <= 40; ++alpha)
            for (std::uint64_t beta = 1; beta <= 40; ++beta)
                for (std::uint64_t eps = 1; eps < beta; ++eps) {
                    ++cases;
                    if (divergence_of_exponents({alpha, beta}, {alpha + eps, beta - eps}) < 0.0) ++failures;
                }
        add_suite(r, "c4 divergence nonnegativity on the exponent shift box (exhaustive, exponents <= 40)", cases,
                  failures, "D((a, b) || (a+e, b-e)) >= 0");
    }
    // Shannon additivity over independent products
    {
        std::mt19937_64 rng(1005);
        std::uint64_t failures = 0;
        const std::uint64_t cases = 1000;
        for (std::uint64_t i = 0; i < cases; ++i) {
            auto make_vec = [&](std::size_t len) {
                std::vector<mpq_class> num(len);
                mpq_class total = 0;
                for (auto &x : num) {
                    x = mpq_class(static_cast<unsigned long>(rnd(rng, 1, 50)));
                    total += x;
                }
                for (auto &x : num) x /= total;
                return ProbabilityVector(num);
            };
            const ProbabilityVector p = make_vec(rnd(rng, 2, 5)), q = make_vec(rnd(rng, 2, 5));
            std::vector<mpq_class> product;
            for (const mpq_class &a : p.entries())
                for (const mpq_class &b : q.entries()) product.push_back(a * b);
            if (!close(shannon_entropy(ProbabilityVector(product)), shannon_entropy(p) + shannon_entropy(q),
                       1e-12))
                ++failures;
        }
        add_suite(r, "c4 Shannon entropy adds over product distributions (1000 cases)", cases, failures,
                  "H(p x q) = H(p) + H(q)");
    }
    // Shannon recursivity
    {
        std::mt19937_64 rng(1006);
        std::uint64_t failures = 0;
        const std::uint64_t cases = 1000;
        for (std::uint64_t i = 0; i < cases; ++i) {
            const std::size_t len = rnd(rng, 3, 6);
            std::vector<mpq_class> num(len);
            mpq_class total = 0;
            for (auto &x : num) {
                x = mpq_class(static_cast<unsigned long>(rnd(rng, 1, 50)));
                total += x;
            }
            for (auto &x : num) x /= total;
            const mpq_class head = num[0] + num[1];
            std::vector<mpq_class> merged = {head};
            merged.insert(merged.end(), num.begin() + 2, num.end());
            const std::vector<mpq_class> split = {num[0] / head, num[1] / head};
            const double whole = shannon_entropy(ProbabilityVector(num));
            const double parts = shannon_entropy(ProbabilityVector(merged)) +
                                 head.get_d() * shannon_entropy(ProbabilityVector(split));
            if (!close(whole, parts, 1e-12)) ++failures;
        }
        add_suite(r, "c4 Shannon entropy recursivity on the first two entries (1000 cases)", cases, failures,
                  "H(p1..pr) = H(p1+p2, p3..pr) + (p1+p2) H(p1/(p1+p2), p2/(p1+p2))");
    }
    // KL nonnegativity with equality only at identity
    {
        std::mt19937_64 rng(1007);
        std::uint64_t failures = 0, cases = 0;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const std::size_t len = rnd(rng, 2, 8);
            auto vec = [&] {
                std::vector<mpq_class> num(len);
                mpq_class total = 0;
                for (auto &x : num) {
                    x = mpq_class(static_cast<unsigned long>(rnd(rng, 1, 50)));
                    total += x;
                }
                for (auto &x : num) x /= total;
                return ProbabilityVector(num);
            };
            const ProbabilityVector p = vec(), q = vec();
            ++cases;
            const double d = kl_divergence(p, q);
            if (p == q ? d != 0.0 : !(d > 0.0)) ++failures;
            ++cases;
            if (kl_divergence(p, p) != 0.0) ++failures;
        }
        add_suite(r, "c4 KL divergence nonnegative, zero only at equal vectors (2000 cases)", cases, failures,
                  "D(p||q) >= 0 with equality exactly at p = q");
    }
    // label permutation invariance
    {
        std::mt19937_64 rng(1008);
        std::uint64_t failures = 0;
        const std::uint64_t cases = 1000;
        for (std::uint64_t i = 0; i < cases; ++i) {
            const std::size_t g = rnd(rng, 1, 6);
            std::vector<IdealEntry> entries;
            for (std::size_t k = 0; k < g; ++k) {
                PrimeIdealLabel label;
                switch (k % 4) {
                    case 0: label = RationalInert{100 + k}; break;
                    case 1: label = PrimeAbove{7, static_cast<std::uint32_t>(k + 1)}; break;
                    case 2: label = Lambda{}; break;
                    default: label = NamedLabel{"Q" + std::to_string(k)}; break;
                }
                entries.push_back({label, rnd(rng, 1, 9)});
            }
            const double h = ideal_entropy(IdealFactorization(entries));
            for (std::size_t swaps = 0; swaps + 1 < g; ++swaps)
                std::swap(entries[swaps], entries[rnd(rng, swaps, g - 1)]);
            const double h2 = ideal_entropy(IdealFactorization(entries));
            if (!close(h, h2, 1e-12)) ++failures;
            if (ideal_divergence(IdealFactorization(entries), IdealFactorization(entries)) != 0.0) ++failures;
        }
        add_suite(r, "c4 ideal entropy ignores entry order and labels (1000 cases)", cases, failures,
                  "H(I) depends only on the exponent multiset; D(I||I) = 0");
    }
}

void criterion5(VerificationReport &r) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < 500; ++p)
        if (is_prime(p)) primes.push_back(p);

    std::uint64_t efg_fail = 0, complete_fail = 0, ram_fail = 0, cases = 0;
    for (const std::uint64_t p : primes)
        for (std::uint64_t n = 3; n <= 200; ++n) {
            ++cases;
            const SplittingType st = splitting_type(p, n);
            if (st.e * st.f * st.g != st.phi || st.phi != euler_phi(n)) ++efg_fail;
            if (splits_completely(p, n) != (st.e == 1 && st.f == 1 && st.g == st.phi)) ++complete_fail;
            if (is_ramified(p, n) != (st.e > 1)) ++ram_fail;
        }
    add_suite(r, "c5 splitting degrees multiply to phi(n) (exhaustive, p < 500, n in [3, 200])", cases, efg_fail,
              "e f g = phi(n) in the n-th cyclotomic ring");
    add_suite(r, "c5 complete-splitting shortcut agrees with the splitting type (same range)", cases,
              complete_fail, "p = 1 (mod n) exactly when e = f = 1 and g = phi(n)");
    add_suite(r, "c5 ramification shortcut agrees with the splitting type (same range)", cases, ram_fail,
              "p ramifies exactly when p | n (odd p) or 4 | n (p = 2)");

    std::uint64_t gap_fail = 0, gap_cases = 0;
    for (std::uint64_t q = 5; q <= 100; ++q) {
        if (!is_prime(q)) continue;
        const std::vector<std::vector<std::uint64_t>> lists = {
            {}, {1}, {2}, {q - 1}, {1, 2, q - 1}, {2, 2, 2}};
        for (const auto &list : lists) {
            ++gap_cases;
            const GapBound gb = inert_lambda_gap(q, list);
            if (!(gb.gap >= 0.0 && gb.gap <= gb.bound)) ++gap_fail;
        }
    }
    add_suite(r, "c5 inert-for-lambda gap stays within [0, closed-form bound] (prime q in [5, 100])", gap_cases,
              gap_fail, "0 <= H(inert^2 L^(q-2) S) - H(inert L^(q-1) S) <= (q-1) log(q-1)/q - log(q/2)");

    std::mt19937_64 rng(1009);
    std::uint64_t omega_fail = 0;
    const std::uint64_t omega_cases = 500;
    const std::vector<std::uint64_t> pool = {2, 3, 17, 19, 23, 29, 31};
    for (std::uint64_t i = 0; i < omega_cases; ++i) {
        const std::uint64_t q = std::vector<std::uint64_t>{5, 7, 11, 13}[rnd(rng, 0, 3)];
        CyclotomicGeneratorSpec spec;
        spec.conductor = q;
        const std::size_t parts = rnd(rng, 1, 3);
        std::uint64_t expected_omega = 0;
        for (std::size_t k = 0; k < parts; ++k) {
            const std::uint64_t p = pool[(rnd(rng, 0, pool.size() - 1) + k) % pool.size()];
            bool seen = false;
            for (const RationalPart &rp : spec.rational_parts) seen |= rp.p == p;
            if (seen) continue;
            const std::uint64_t kexp = rnd(rng, 1, 3);
            spec.rational_parts.push_back({p, kexp});
            expected_omega += kexp * splitting_type(p, q).g;
        }
        spec.lambda_exponent = rnd(rng, spec.rational_parts.empty() ? 1 : 0, 4);
        expected_omega += spec.lambda_exponent;
        if (ideal_of_generator(spec).big_omega() != expected_omega) ++omega_fail;
    }
    add_suite(r, "c5 generator ideal size equals lambda exponent plus split contributions (500 cases)",
              omega_cases, omega_fail, "Omega(ideal of q-cyclotomic generator) = t + sum k g(p)");

    const double h10 = ideal_entropy(ideal_of_generator({5, {{2, 1}}, 4}));
    const double h16l = ideal_entropy(ideal_of_generator({5, {{2, 4}}, 1}));
    add(r, "c5 generators 10 and 16 lambda at conductor 5 have equal entropy", h16l - h10 == 0.0, h16l - h10,
        0.0, "profiles (1, 4) and (4, 1) share one exponent multiset, so the entropies agree exactly");
}

void criterion6(VerificationReport &r) {
    const CrossCheckReport box = cross_check({-20, 20}, {-20, 20}, 97);
    const CrossCheckSummary &s = box.summary;

    add(r, "c6 rule-vs-oracle census over a, b in [-20, 20], p <= 97",
        s.abstained == 40 && s.agreements == 17928 && s.disagreements == 16348 && s.compared == 34276,
        ordered_json{{"abstained", s.abstained},
                     {"compared", s.compared},
                     {"agreements", s.agreements},
                     {"disagreements", s.disagreements}},
        ordered_json{{"abstained", 40}, {"compared", 34276}, {"agreements", 17928}, {"disagreements", 16348}},
        "index-test abstentions and verdict counts for the closed-form rule against factoring mod p");

    std::uint64_t bad_core = 0, valuation_hits = 0;
    bool has_115 = false, has_2219 = false;
    for (const CrossCheckRecord &rec : box.records) {
        if (rec.condition == Condition::Valuation) ++valuation_hits;
        if (!rec.agree && rec.condition == Condition::OddFreePart && rec.delta_valuation >= 1) ++bad_core;
        if (!rec.agree && rec.condition == Condition::Valuation) ++bad_core;
        if (rec.a == 1 && rec.b == 1 && rec.p == 5 && !rec.agree && rec.condition == Condition::OddFreePart &&
            rec.delta_valuation == 0)
            has_115 = true;
        if (rec.a == 2 && rec.b == 2 && rec.p == 19 && !rec.agree && rec.condition == Condition::None &&
            rec.oracle_verdict)
            has_2219 = true;
    }
    add(r, "c6 full agreement whenever the odd-free-part rule fires with positive discriminant valuation",
        bad_core == 0, ordered_json{{"core_disagreements", bad_core}}, ordered_json{{"core_disagreements", 0}},
        "every compared case with p | delta and odd free part matches the mod-p factorization verdict");

    add(r, "c6 known rule discrepancy: odd free part with zero discriminant valuation (flagged, not a failure)",
        s.odd_free_part_vp0 == 15784 && has_115,
        ordered_json{{"count", s.odd_free_part_vp0}, {"includes (1, 1, 5)", has_115}},
        ordered_json{{"count", 15784}, {"includes (1, 1, 5)", true}},
        "the rule as written also fires when p does not divide delta, where p is provably unramified");

    add(r, "c6 known rule gap: oracle-only ramified cases (flagged, not a failure)",
        s.covered_by_oracle_only == 564 && has_2219,
        ordered_json{{"count", s.covered_by_oracle_only}, {"includes (2, 2, 19)", has_2219}},
        ordered_json{{"count", 564}, {"includes (2, 2, 19)", true}},
        "P1 P2^2 arises with even free part and odd valuation, outside both closed-form hypotheses");

    // oracle pattern sanity and the doubly-covered divergence law, one pass over the box
    std::uint64_t degree_fail = 0, separable_fail = 0, pair_count = 0, pair_fail = 0;
    const double expected_entropy = std::log(3.0) - 2.0 * std::log(2.0) / 3.0;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 5; p <= 97; ++p)
        if (is_prime(p)) primes.push_back(p);
    for (std::int64_t a = -20; a <= 20; ++a)
        for (std::int64_t b = -20; b <= 20; ++b) {
            std::optional<CubicField> field;
            try {
                field.emplace(a, b);
            } catch (const Error &) {
                continue;
            }
            std::vector<std::uint64_t> covered;
            for (const std::uint64_t p : primes) {
                if (const auto pattern = dedekind_oracle(*field, p)) {
                    std::uint64_t degree = 0;
                    bool repeated = false;
                    for (const PatternPart &part : pattern->parts) {
                        degree += static_cast<std::uint64_t>(part.e) * part.f;
                        repeated |= part.e > 1;
                    }
                    if (degree != 3) ++degree_fail;
                    if (delta_valuation_of(p, field->delta) == 0 && repeated) ++separable_fail;
                }
                if (classify_prime(*field, p).outcome == CubicOutcome::PartiallyRamified12) covered.push_back(p);
            }
            for (std::size_t i = 0; i < covered.size(); ++i)
                for (std::size_t j = i + 1; j < covered.size(); ++j) {
                    ++pair_count;
                    const RamifiedPairResult res = partially_ramified_pair(*field, covered[i], covered[j]);
                    if (res.divergence != 0.0 || !close(res.entropy_p, expected_entropy, 1e-12) ||
                        !close(res.entropy_q, expected_entropy, 1e-12))
                        ++pair_fail;
                }
        }
    add(r, "c6 oracle patterns have total degree 3 and are squarefree off the discriminant",
        degree_fail == 0 && separable_fail == 0,
        ordered_json{{"degree_failures", degree_fail}, {"separability_failures", separable_fail}},
        ordered_json{{"degree_failures", 0}, {"separability_failures", 0}},
        "sum e_i f_i = 3 always, and no repeated factor when p does not divide delta");

    add(r, "c6 zero divergence on every doubly-covered prime pair",
        pair_fail == 0 && pair_count == 171088,
        ordered_json{{"pairs", pair_count}, {"failures", pair_fail}},
        ordered_json{{"pairs", 171088}, {"failures", 0}},
        "both primes carry profile (1, 2), so H = log 3 - (2/3) log 2 on each side and D = 0 exactly");

    // the valuation hypothesis never fires inside the box; exercise it on a known witness
    const CubicField wide(10, 25);
    const CubicClassification cls = classify_prime(wide, 5);
    mpz_class cube = 125;
    const bool witness_ok = cls.condition == Condition::Valuation &&
                            cls.outcome == CubicOutcome::PartiallyRamified12 &&
                            mpz_divisible_p(wide.delta.get_mpz_t(), cube.get_mpz_t()) &&
                            !dedekind_oracle(wide, 5).has_value() &&
                            dedekind_oracle(wide, 103).has_value() &&
                            dedekind_oracle(wide, 103)->is_partially_ramified_12() &&
                            classify_prime(wide, 103).condition == Condition::OddFreePart;
    add(r, "c6 valuation hypothesis witness (a, b) = (10, 25): p = 5 covered, p^3 | delta, oracle abstains",
        witness_ok && valuation_hits == 0,
        ordered_json{{"witness_holds", witness_ok}, {"valuation_hits_in_box", valuation_hits}},
        ordered_json{{"witness_holds", true}, {"valuation_hits_in_box", 0}},
        "v_5(10) = 1 < v_5(25) = 2 forces 5^3 | delta = -12875 and an index divisible by 5; 103 rides the odd free part");
}

void criterion7(VerificationReport &r) {
    std::ostringstream csv;
    grid_csv(100, 100, csv);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    const bool header_ok = line == "s,r,f";
    std::uint64_t rows = 0, sign_fail = 0, parse_fail = 0;
    std::vector<std::uint64_t> minr(101, 0);
    for (std::uint64_t s = 1; s <= 100; ++s) minr[s] = min_r_negative(s);
    while (std::getline(in, line)) {
        ++rows;
        unsigned long long s = 0, rr = 0;
        double f = 0.0;
        if (std::sscanf(line.c_str(), "%llu,%llu,%lf", &s, &rr, &f) != 3) {
            ++parse_fail;
            continue;
        }
        if (s >= 1 && rr >= s && ((f < 0.0) != (rr >= minr[s]))) ++sign_fail;
    }
    add(r, "c7 gap grid on [0, 100]^2 has a header and 10201 data rows", header_ok && rows == 10201 && parse_fail == 0,
        ordered_json{{"rows", rows}, {"header", header_ok}, {"parse_failures", parse_fail}},
        ordered_json{{"rows", 10201}, {"header", true}, {"parse_failures", 0}},
        "one row per (s, r) pair in [0, 100]^2, row-major");
    add(r, "c7 grid sign pattern matches the threshold scan", sign_fail == 0,
        ordered_json{{"sign_mismatches", sign_fail}}, ordered_json{{"sign_mismatches", 0}},
        "for s >= 1 the printed value is negative exactly from the scanned threshold r onward");

    std::uint64_t bound_fail = 0;
    for (std::uint64_t s = 1; s <= 30; ++s)
        if (minr[s] > (8 * s + 5 + 2) / 3) ++bound_fail;
    for (std::uint64_t k = 1; k <= 10; ++k) {
        if (minr[3 * k] > 8 * k + 2) ++bound_fail;
        if (minr[3 * k + 1] > 8 * k + 5) ++bound_fail;
        if (minr[3 * k + 2] > 8 * k + 7) ++bound_fail;
    }
    add(r, "c7 negative region starts no later than ceil((8s+5)/3), with sharper residue-class starts",
        bound_fail == 0, ordered_json{{"bound_failures", bound_fail}}, ordered_json{{"bound_failures", 0}},
        "gap(s, r) < 0 for r >= ceil((8s+5)/3); for s = 3k/3k+1/3k+2 already from 8k+2/8k+5/8k+7");

    std::uint64_t diag_fail = 0;
    for (std::uint64_t s = 1; s <= 100; ++s)
        if (!(entropy_gap(s, s) > 0.0)) ++diag_fail;
    add(r, "c7 diagonal gap positive for s in [1, 100]", diag_fail == 0,
        ordered_json{{"nonpositive", diag_fail}}, ordered_json{{"nonpositive", 0}},
        "gap(s, s) > 0: adding a squared prime raises entropy when squares and simples balance");
}

} // namespace

VerificationReport run_verification() {
    VerificationReport report;
    criterion1(report);
    criterion2(report);
    criterion3(report);
    criterion4(report);
    criterion5(report);
    criterion6(report);
    criterion7(report);
    return report;
}

} // namespace nument
