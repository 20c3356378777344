#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nument/arith.hpp"
#include "nument/cubic.hpp"
#include "nument/cyclotomic.hpp"
#include "nument/entropy.hpp"
#include "nument/error.hpp"
#include "nument/ideal.hpp"
#include "nument/search.hpp"
#include "nument/verify.hpp"

using nlohmann::ordered_json;
using namespace nument;

namespace {

void emit(const ordered_json &j) { std::cout << j.dump(2) << "\n"; }

ordered_json ideal_json(const IdealFactorization &ideal) {
    return ordered_json{{"ideal", format_ideal(ideal)},
                        {"omega", ideal.little_omega()},
                        {"big_omega", ideal.big_omega()},
                        {"entropy", ideal_entropy(ideal)}};
}

IntRange parse_range(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("parse-error", "range must look like lo:hi, got '" + text + "'");
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception &) {
        throw Error("parse-error", "range must look like lo:hi, got '" + text + "'");
    }
}

ordered_json oracle_json(const std::optional<SplittingPattern> &pattern) {
    ordered_json out;
    out["abstained"] = !pattern.has_value();
    if (pattern) {
        ordered_json parts = ordered_json::array();
        for (const PatternPart &part : pattern->parts) parts.push_back({part.e, part.f});
        out["pattern"] = parts;
        out["verdict"] = pattern->is_partially_ramified_12();
    } else {
        out["pattern"] = nullptr;
        out["verdict"] = nullptr;
    }
    return out;
}

ordered_json record_json(const CrossCheckRecord &rec) {
    return ordered_json{{"a", rec.a},
                        {"b", rec.b},
                        {"p", rec.p},
                        {"condition", condition_name(rec.condition)},
                        {"rule_verdict", rec.rule_verdict},
                        {"oracle_verdict", rec.oracle_verdict},
                        {"agree", rec.agree}};
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"integer and ideal entropy toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // entropy N
    std::uint64_t entropy_n = 0;
    auto *cmd_entropy = app.add_subcommand("entropy", "entropy of the exponent distribution of n");
    cmd_entropy->add_option("n", entropy_n, "positive integer")->required();
    cmd_entropy->callback([&] {
        const Factorization f = factorize(entropy_n);
        emit({{"n", entropy_n},
              {"omega", f.little_omega()},
              {"big_omega", f.big_omega()},
              {"entropy", integer_entropy(entropy_n)}});
    });

    // divergence N M
    std::uint64_t div_n = 0, div_m = 0;
    auto *cmd_div = app.add_subcommand("divergence", "divergence between the exponent distributions of n and m");
    cmd_div->add_option("n", div_n, "positive integer")->required();
    cmd_div->add_option("m", div_m, "positive integer")->required();
    cmd_div->callback([&] {
        emit({{"n", div_n},
              {"m", div_m},
              {"omega", factorize(div_n).little_omega()},
              {"divergence", integer_divergence(div_n, div_m)}});
    });

    // ideal entropy / ideal divergence
    auto *cmd_ideal = app.add_subcommand("ideal", "symbolic ideal factorizations");
    cmd_ideal->require_subcommand(1);
    std::string ideal_exponents, ideal_left, ideal_right;
    auto *cmd_ideal_entropy = cmd_ideal->add_subcommand("entropy", "entropy of an ideal profile");
    cmd_ideal_entropy->add_option("--exponents", ideal_exponents, "profile, e.g. 1,4 or 2^1,lambda^4")
        ->required();
    cmd_ideal_entropy->callback([&] { emit(ideal_json(parse_ideal(ideal_exponents))); });
    auto *cmd_ideal_div = cmd_ideal->add_subcommand("divergence", "divergence between two ideal profiles");
    cmd_ideal_div->add_option("--left", ideal_left, "left profile")->required();
    cmd_ideal_div->add_option("--right", ideal_right, "right profile")->required();
    cmd_ideal_div->callback([&] {
        const IdealFactorization lhs = parse_ideal(ideal_left), rhs = parse_ideal(ideal_right);
        emit({{"left", format_ideal(lhs)},
              {"right", format_ideal(rhs)},
              {"divergence", ideal_divergence(lhs, rhs)}});
    });

    // cyclo split / cyclo ideal
    auto *cmd_cyclo = app.add_subcommand("cyclo", "prime splitting in cyclotomic rings");
    cmd_cyclo->require_subcommand(1);
    std::uint64_t cy_p = 0, cy_n = 0;
    auto *cmd_split = cmd_cyclo->add_subcommand("split", "splitting type of p in the n-th cyclotomic ring");
    cmd_split->add_option("--p", cy_p, "rational prime")->required();
    cmd_split->add_option("--n", cy_n, "conductor, n >= 3")->required();
    cmd_split->callback([&] {
        const SplittingType st = splitting_type(cy_p, cy_n);
        emit({{"e", st.e}, {"f", st.f}, {"g", st.g}, {"phi", st.phi}});
    });
    std::uint64_t gen_conductor = 0, gen_lambda = 0;
    std::vector<std::string> gen_rational;
    auto *cmd_gen = cmd_cyclo->add_subcommand("ideal", "ideal of a product generator in Z[xi_q]");
    cmd_gen->add_option("--conductor", gen_conductor, "prime conductor q")->required();
    cmd_gen->add_option("--rational", gen_rational, "rational part p:k, repeatable");
    cmd_gen->add_option("--lambda", gen_lambda, "exponent of (1 - xi)");
    cmd_gen->callback([&] {
        CyclotomicGeneratorSpec spec;
        spec.conductor = gen_conductor;
        spec.lambda_exponent = gen_lambda;
        for (const std::string &part : gen_rational) {
            const IntRange pk = parse_range(part); // same p:k syntax
            if (pk.lo < 1 || pk.hi < 1) throw Error("parse-error", "rational part must be p:k with p, k >= 1");
            spec.rational_parts.push_back({static_cast<std::uint64_t>(pk.lo), static_cast<std::uint64_t>(pk.hi)});
        }
        emit(ideal_json(ideal_of_generator(spec)));
    });

    // cubic classify / cubic cross-check
    auto *cmd_cubic = app.add_subcommand("cubic", "partial ramification in X^3 - aX + b fields");
    cmd_cubic->require_subcommand(1);
    std::int64_t cu_a = 0, cu_b = 0;
    std::uint64_t cu_p = 0;
    bool literal_rule = false, oracle_only = false;
    auto *cmd_classify = cmd_cubic->add_subcommand("classify", "closed-form rule and factoring oracle for one prime");
    cmd_classify->add_option("--a", cu_a, "coefficient a")->required();
    cmd_classify->add_option("--b", cu_b, "coefficient b")->required();
    cmd_classify->add_option("--p", cu_p, "prime >= 5")->required();
    auto *flag_literal = cmd_classify->add_flag("--literal-rule", literal_rule, "verdict from the closed-form rule (default)");
    cmd_classify->add_flag("--oracle-only", oracle_only, "verdict from the factoring oracle")
        ->excludes(flag_literal);
    cmd_classify->callback([&] {
        const CubicField field(cu_a, cu_b);
        const CubicClassification cls = classify_prime(field, cu_p);
        const auto oracle = dedekind_oracle(field, cu_p);
        ordered_json out{{"a", cu_a},
                         {"b", cu_b},
                         {"p", cu_p},
                         {"delta", field.delta.get_str()},
                         {"condition", condition_name(cls.condition)},
                         {"rule_verdict", cls.outcome == CubicOutcome::PartiallyRamified12},
                         {"oracle", oracle_json(oracle)}};
        out["source"] = oracle_only ? "oracle" : "rule";
        out["verdict"] = oracle_only ? out["oracle"]["verdict"] : out["rule_verdict"];
        emit(out);
    });
    std::string cc_a_range, cc_b_range;
    std::uint64_t cc_p_max = 0;
    auto *cmd_cc = cmd_cubic->add_subcommand("cross-check", "rule vs oracle over a box of fields");
    cmd_cc->add_option("--a-range", cc_a_range, "lo:hi")->required();
    cmd_cc->add_option("--b-range", cc_b_range, "lo:hi")->required();
    cmd_cc->add_option("--p-max", cc_p_max, "largest prime, from 5 up")->required();
    cmd_cc->callback([&] {
        const CrossCheckReport report = cross_check(parse_range(cc_a_range), parse_range(cc_b_range), cc_p_max);
        ordered_json records = ordered_json::array();
        for (const CrossCheckRecord &rec : report.records) records.push_back(record_json(rec));
        emit({{"summary",
               ordered_json{{"fields", report.summary.fields},
                            {"compared", report.summary.compared},
                            {"abstained", report.summary.abstained},
                            {"agreements", report.summary.agreements},
                            {"disagreements", report.summary.disagreements},
                            {"odd_free_part_vp0", report.summary.odd_free_part_vp0},
                            {"covered_by_oracle_only", report.summary.covered_by_oracle_only}}},
              {"records", records}});
    });

    // scan system / scan thresholds
    auto *cmd_scan = app.add_subcommand("scan", "exhaustive searches");
    cmd_scan->require_subcommand(1);
    std::uint64_t scan_bound = 0;
    bool allow_negative = false, no_filter = false;
    auto *cmd_system = cmd_scan->add_subcommand("system", "x + y = u + v, x^x y^y = u^x v^y, x != u");
    cmd_system->add_option("--bound", scan_bound, "range for x, y, u")->required();
    cmd_system->add_flag("--allow-negative", allow_negative, "permit v < 0");
    cmd_system->add_flag("--no-filter", no_filter, "skip the float filter; exact arithmetic on every candidate");
    cmd_system->callback([&] {
        ScanOptions options;
        options.allow_negative_v = allow_negative;
        options.use_float_filter = !no_filter;
        ordered_json out = ordered_json::array();
        for (const SystemSolution &s : scan_system(scan_bound, options)) out.push_back({s.x, s.y, s.u, s.v});
        emit(out);
    });
    std::uint64_t smax_thresholds = 0;
    auto *cmd_thresholds = cmd_scan->add_subcommand("thresholds", "smallest r with a negative entropy gap");
    cmd_thresholds->add_option("--s-max", smax_thresholds, "scan s = 1..s_max")->required();
    cmd_thresholds->callback([&] {
        ordered_json out = ordered_json::array();
        for (std::uint64_t s = 1; s <= smax_thresholds; ++s) out.push_back({s, min_r_negative(s)});
        emit(out);
    });

    // grid
    std::uint64_t grid_s = 0, grid_r = 0;
    std::string grid_out;
    auto *cmd_grid = app.add_subcommand("grid", "CSV of the gap function over [0, s_max] x [0, r_max]");
    cmd_grid->add_option("--s-max", grid_s, "largest s")->required();
    cmd_grid->add_option("--r-max", grid_r, "largest r")->required();
    cmd_grid->add_option("--out", grid_out, "output file (stdout when omitted)");
    cmd_grid->callback([&] {
        if (grid_out.empty()) {
            grid_csv(grid_s, grid_r, std::cout);
        } else {
            std::ofstream file(grid_out);
            if (!file) throw Error("io-error", "cannot open " + grid_out);
            grid_csv(grid_s, grid_r, file);
            emit({{"rows", (grid_s + 1) * (grid_r + 1)}, {"file", grid_out}});
        }
    });

    // verify
    std::string verify_out;
    auto *cmd_verify = app.add_subcommand("verify", "run the full verification suite");
    cmd_verify->add_option("--out", verify_out, "also write the JSON report to a file");
    cmd_verify->callback([&] {
        const VerificationReport report = run_verification();
        const ordered_json j = report.to_json();
        std::cout << j.dump(2) << "\n";
        if (!verify_out.empty()) {
            std::ofstream file(verify_out);
            if (!file) throw Error("io-error", "cannot open " + verify_out);
            file << j.dump(2) << "\n";
        }
        if (!report.all_passed()) exit_code = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
