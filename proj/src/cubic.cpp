#include "nument/cubic.hpp"

#include <algorithm>
#include <array>

#include "nument/arith.hpp"

namespace nument {

CubicField::CubicField(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
    const mpz_class az(a), bz(b);
    delta = 4 * az * az * az - 27 * bz * bz;
    // rational root theorem: a monic cubic is reducible over Q iff it has an
    // integer root, which must divide b; b = 0 gives the root 0 immediately
    if (b == 0) throw Error("domain-error", "X^3 - aX + b is reducible (root 0)");
    const std::uint64_t mag = b < 0 ? 0ull - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    for (std::uint64_t d = 1; d * d <= mag; ++d) {
        if (mag % d != 0) continue;
        for (std::uint64_t divisor : {d, mag / d}) {
            for (int sign : {1, -1}) {
                const mpz_class r = sign * mpz_class(divisor);
                if (r * r * r - az * r + bz == 0)
                    throw Error("domain-error", "X^3 - aX + b is reducible (root " + r.get_str() + ")");
            }
        }
    }
}

const char *condition_name(Condition c) {
    switch (c) {
        case Condition::Valuation: return "valuation";
        case Condition::OddFreePart: return "odd-free-part";
        default: return "none";
    }
}

bool SplittingPattern::is_partially_ramified_12() const {
    return parts.size() == 2 && parts[0] == PatternPart{1, 1} && parts[1] == PatternPart{2, 1};
}

static std::uint32_t mpz_valuation(std::uint64_t p, const mpz_class &m) {
    mpz_class mag = abs(m), q, r;
    std::uint32_t k = 0;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), mag.get_mpz_t(), static_cast<unsigned long>(p));
        if (r != 0) break;
        mag = q;
        ++k;
    }
    return k;
}

CubicClassification classify_prime(const CubicField &field, std::uint64_t p) {
    if (p < 5) throw Error("prime-too-small", "classification needs p >= 5");
    if (!is_prime(p)) throw Error("domain-error", std::to_string(p) + " is not prime");
    const std::int64_t a = field.a, b = field.b;
    const auto divides = [p](std::int64_t v) { return v % static_cast<std::int64_t>(p) == 0; };

    if (a != 0 && divides(a) && divides(b) && valuation(p, a) == 1 && valuation(p, b) >= 2)
        return {CubicOutcome::PartiallyRamified12, Condition::Valuation};

    if (a != 0 && !divides(a) && !divides(b)) {
        // s_p = delta with all factors p removed, sign kept; parity of the signed value
        mpz_class s = field.delta;
        while (mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(p)))
            mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(p));
        if (mpz_odd_p(s.get_mpz_t())) return {CubicOutcome::PartiallyRamified12, Condition::OddFreePart};
    }
    return {CubicOutcome::NotCovered, Condition::None};
}

namespace {

// dense little-endian coefficient vectors over F_p (or lifted to Z)
using Poly = std::vector<std::int64_t>;

void trim(Poly &f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::int64_t eval_mod(const Poly &f, std::int64_t x, std::int64_t p) {
    std::int64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
    return acc;
}

// divide f by (X - r) over F_p; returns quotient, sets rem
Poly div_linear(const Poly &f, std::int64_t r, std::int64_t p, std::int64_t &rem) {
    Poly q(f.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t i = f.size(); i-- > 1;) {
        carry = (carry * r + f[i]) % p;
        q[i - 1] = carry;
    }
    rem = (carry * r + f[0]) % p;
    return q;
}

Poly mul(const Poly &f, const Poly &g, std::int64_t p) {
    Poly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + f[i] * g[j]) % p;
    return out;
}

// product over Z of canonically lifted factors; degrees stay <= 3
using ZPoly = std::vector<__int128>;

ZPoly zmul(const ZPoly &f, const ZPoly &g) {
    ZPoly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        const std::int64_t inv = static_cast<std::int64_t>(
            pow_mod(static_cast<std::uint64_t>(b.back()), static_cast<std::uint64_t>(p - 2), static_cast<std::uint64_t>(p)));
        while (a.size() >= b.size()) {
            const std::int64_t c = (a.back() * inv) % p;
            const std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = ((a[off + i] - c * b[i]) % p + p) % p;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

} // namespace

std::optional<SplittingPattern> dedekind_oracle(const CubicField &field, std::uint64_t p_in) {
    if (!is_prime(p_in)) throw Error("domain-error", std::to_string(p_in) + " is not prime");
    const std::int64_t p = static_cast<std::int64_t>(p_in);
    const std::int64_t am = ((field.a % p) + p) % p;
    const std::int64_t bm = ((field.b % p) + p) % p;
    const Poly fbar = {bm, (p - am) % p, 0, 1};

    // factor the cubic by exhaustive root search; whatever is left of degree
    // >= 2 after all roots are stripped is irreducible
    struct Factor {
        Poly g;
        std::uint32_t e;
    };
    std::vector<Factor> factors;
    Poly cur = fbar;
    for (std::int64_t x = 0; x < p && cur.size() > 2; ++x) {
        if (eval_mod(cur, x, p) != 0) continue;
        std::uint32_t e = 0;
        while (cur.size() > 1) {
            std::int64_t rem;
            Poly q = div_linear(cur, x, p, rem);
            if (rem != 0) break;
            cur = std::move(q);
            ++e;
        }
        factors.push_back({Poly{(p - x) % p, 1}, e});
    }
    if (cur.size() == 2) {
        const std::int64_t inv = static_cast<std::int64_t>(
            pow_mod(static_cast<std::uint64_t>(cur[1]), static_cast<std::uint64_t>(p - 2), static_cast<std::uint64_t>(p)));
        const std::int64_t root = ((p - cur[0]) % p * inv) % p;
        factors.push_back({Poly{(p - root) % p, 1}, 1});
        cur = {1};
    }
    if (cur.size() > 2) factors.push_back({cur, 1});

    // index test on canonical lifts
    ZPoly g = {1}, h = {1};
    for (const Factor &f : factors) {
        ZPoly lift(f.g.begin(), f.g.end());
        g = zmul(g, lift);
        for (std::uint32_t i = 1; i < f.e; ++i) h = zmul(h, lift);
    }
    ZPoly gh = zmul(g, h);
    gh.resize(4, 0);
    const std::array<__int128, 4> fz = {field.b, -field.a, 0, 1};
    Poly tbar(4, 0);
    for (std::size_t i = 0; i < 4; ++i) {
        // g*h = f mod p by construction, so the difference is exactly divisible
        const __int128 t = (gh[i] - fz[i]) / p;
        tbar[i] = static_cast<std::int64_t>(((t % p) + p) % p);
    }
    trim(tbar);
    auto reduce = [p](const ZPoly &z) {
        Poly out;
        for (__int128 c : z) out.push_back(static_cast<std::int64_t>(((c % p) + p) % p));
        return out;
    };
    Poly gbar = reduce(g), hbar = reduce(h);
    const Poly common = poly_gcd(poly_gcd(tbar, gbar, p), hbar, p);
    if (common.size() >= 2) return std::nullopt; // p divides the index

    SplittingPattern pattern;
    pattern.source = PatternSource::Oracle;
    for (const Factor &f : factors)
        pattern.parts.push_back({f.e, static_cast<std::uint32_t>(f.g.size() - 1)});
    std::sort(pattern.parts.begin(), pattern.parts.end());
    return pattern;
}

std::vector<CrossCheckRecord> CrossCheckReport::disagreement_records() const {
    std::vector<CrossCheckRecord> out;
    for (const auto &r : records)
        if (!r.agree) out.push_back(r);
    return out;
}

CrossCheckReport cross_check(IntRange a_range, IntRange b_range, std::uint64_t p_max) {
    if (a_range.lo > a_range.hi || b_range.lo > b_range.hi)
        throw Error("domain-error", "empty range");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 5; p <= p_max; ++p)
        if (is_prime(p)) primes.push_back(p);

    CrossCheckReport report;
    for (std::int64_t a = a_range.lo; a <= a_range.hi; ++a) {
        for (std::int64_t b = b_range.lo; b <= b_range.hi; ++b) {
            std::optional<CubicField> field;
            try {
                field.emplace(a, b);
            } catch (const Error &) {
                continue; // reducible cubic
            }
            ++report.summary.fields;
            for (std::uint64_t p : primes) {
                const CubicClassification cls = classify_prime(*field, p);
                const auto oracle = dedekind_oracle(*field, p);
                if (!oracle) {
                    ++report.summary.abstained;
                    continue;
                }
                CrossCheckRecord rec;
                rec.a = a;
                rec.b = b;
                rec.p = p;
                rec.condition = cls.condition;
                rec.rule_verdict = cls.outcome == CubicOutcome::PartiallyRamified12;
                rec.oracle_verdict = oracle->is_partially_ramified_12();
                rec.agree = rec.rule_verdict == rec.oracle_verdict;
                rec.delta_valuation = mpz_valuation(p, field->delta);
                ++report.summary.compared;
                if (rec.agree) {
                    ++report.summary.agreements;
                } else {
                    ++report.summary.disagreements;
                    if (rec.condition == Condition::OddFreePart && rec.delta_valuation == 0)
                        ++report.summary.odd_free_part_vp0;
                    else if (rec.condition == Condition::None && rec.oracle_verdict)
                        ++report.summary.covered_by_oracle_only;
                }
                report.records.push_back(rec);
            }
        }
    }
    return report;
}

RamifiedPairResult partially_ramified_pair(const CubicField &field, std::uint64_t p, std::uint64_t q) {
    for (std::uint64_t prime : {p, q})
        if (classify_prime(field, prime).outcome != CubicOutcome::PartiallyRamified12)
            throw Error("hypothesis-not-met", std::to_string(prime) + " is not classified as P1 * P2^2");
    auto profile = [](std::uint64_t prime) {
        return IdealFactorization({{PrimeAbove{prime, 1}, 1}, {PrimeAbove{prime, 2}, 2}});
    };
    const IdealFactorization ip = profile(p), iq = profile(q);
    return {ideal_entropy(ip), ideal_entropy(iq), ideal_divergence(ip, iq)};
}

} // namespace nument
