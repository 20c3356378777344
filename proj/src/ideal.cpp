#include "nument/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace nument {

std::string label_text(const PrimeIdealLabel &label) {
    struct Visitor {
        std::string operator()(const RationalInert &l) const { return std::to_string(l.p); }
        std::string operator()(const PrimeAbove &l) const { return std::to_string(l.p) + "_" + std::to_string(l.index); }
        std::string operator()(const Lambda &) const { return "lambda"; }
        std::string operator()(const NamedLabel &l) const { return l.name; }
    };
    return std::visit(Visitor{}, label);
}

IdealFactorization::IdealFactorization(std::vector<IdealEntry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error("domain-error", "an ideal factorization needs at least one entry");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].exponent < 1) throw Error("domain-error", "ideal exponents must be >= 1");
        for (std::size_t j = i + 1; j < entries_.size(); ++j)
            if (entries_[i].label == entries_[j].label)
                throw Error("domain-error", "duplicate prime ideal label " + label_text(entries_[i].label));
        big_omega_ += entries_[i].exponent;
    }
}

IdealFactorization IdealFactorization::from_exponents(const std::vector<std::uint64_t> &exponents) {
    std::vector<IdealEntry> entries;
    entries.reserve(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i)
        entries.push_back({NamedLabel{"P" + std::to_string(i + 1)}, exponents[i]});
    return IdealFactorization(std::move(entries));
}

std::vector<std::uint64_t> IdealFactorization::exponents() const {
    std::vector<std::uint64_t> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) out.push_back(e.exponent);
    return out;
}

double ideal_entropy(const IdealFactorization &ideal) {
    return entropy_of_profile(ExponentProfile(ideal.exponents()));
}

double ideal_divergence(const IdealFactorization &lhs, const IdealFactorization &rhs) {
    if (lhs.little_omega() != rhs.little_omega())
        throw Error("omega-mismatch", "ideals have omega " + std::to_string(lhs.little_omega()) + " and " +
                                          std::to_string(rhs.little_omega()));
    std::vector<std::uint64_t> e = lhs.exponents(), f = rhs.exponents();
    std::sort(e.begin(), e.end());
    std::sort(f.begin(), f.end());
    return divergence_of_exponents(e, f);
}

bool max_entropy_witness(const IdealFactorization &ideal) {
    if (ideal.little_omega() < 2) throw Error("omega-too-small", "needs at least two distinct prime ideals");
    const double h = ideal_entropy(ideal);
    return std::fabs(h - std::log(static_cast<double>(ideal.little_omega()))) <= 1e-12;
}

static std::uint64_t parse_u64(const std::string &text, const std::string &what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error("parse-error", "expected a positive integer for " + what + ", got \"" + text + "\"");
    try {
        return std::stoull(text);
    } catch (const std::exception &) {
        throw Error("parse-error", what + " out of range: \"" + text + "\"");
    }
}

static PrimeIdealLabel parse_label(const std::string &text) {
    if (text.empty()) throw Error("parse-error", "empty ideal label");
    if (text == "lambda") return Lambda{};
    const bool digits_only = std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
    if (digits_only) return RationalInert{parse_u64(text, "prime label")};
    const auto underscore = text.find('_');
    if (underscore != std::string::npos) {
        const std::string head = text.substr(0, underscore), tail = text.substr(underscore + 1);
        const bool head_num = !head.empty() && std::all_of(head.begin(), head.end(), [](unsigned char c) { return std::isdigit(c); });
        const bool tail_num = !tail.empty() && std::all_of(tail.begin(), tail.end(), [](unsigned char c) { return std::isdigit(c); });
        if (head_num && tail_num)
            return PrimeAbove{parse_u64(head, "prime label"), static_cast<std::uint32_t>(parse_u64(tail, "prime index"))};
    }
    return NamedLabel{text};
}

static std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

IdealFactorization parse_ideal(const std::string &text) {
    const std::vector<std::string> tokens = split_commas(text);
    const bool labeled = text.find('^') != std::string::npos;
    if (!labeled) {
        std::vector<std::uint64_t> exponents;
        for (const std::string &tok : tokens) exponents.push_back(parse_u64(tok, "exponent"));
        return IdealFactorization::from_exponents(exponents);
    }
    std::vector<IdealEntry> entries;
    for (const std::string &tok : tokens) {
        const auto caret = tok.find('^');
        if (caret == std::string::npos)
            throw Error("parse-error", "token \"" + tok + "\" is missing ^exponent");
        entries.push_back({parse_label(tok.substr(0, caret)), parse_u64(tok.substr(caret + 1), "exponent")});
    }
    return IdealFactorization(std::move(entries));
}

std::string format_ideal(const IdealFactorization &ideal) {
    std::string out;
    for (std::size_t i = 0; i < ideal.entries().size(); ++i) {
        if (i > 0) out += ',';
        out += label_text(ideal.entries()[i].label);
        out += '^';
        out += std::to_string(ideal.entries()[i].exponent);
    }
    return out;
}

} // namespace nument
