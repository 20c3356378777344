#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "nument/ideal.hpp"

using namespace nument;
using doctest::Approx;

TEST_SUITE("ideal") {

    TEST_CASE("construction and invariants") {
        const IdealFactorization i = IdealFactorization::from_exponents({1, 4});
        CHECK(i.big_omega() == 5);
        CHECK(i.little_omega() == 2);
        CHECK(i.exponents() == std::vector<std::uint64_t>{1, 4});

        CHECK(error_kind([] { IdealFactorization(std::vector<IdealEntry>{}); }) == "domain-error");
        CHECK(error_kind([] { IdealFactorization({{Lambda{}, 0}}); }) == "domain-error");
        CHECK(error_kind([] { IdealFactorization({{Lambda{}, 1}, {Lambda{}, 2}}); }) == "domain-error");
        CHECK(error_kind([] {
                  IdealFactorization({{PrimeAbove{7, 2}, 1}, {PrimeAbove{7, 2}, 1}});
              }) == "domain-error");
        // same prime, different index: distinct labels
        CHECK_NOTHROW(IdealFactorization({{PrimeAbove{7, 1}, 1}, {PrimeAbove{7, 2}, 1}}));
    }

    TEST_CASE("entropy of symbolic factorizations") {
        CHECK(ideal_entropy(IdealFactorization::from_exponents({7})) == 0.0);
        CHECK(ideal_entropy(IdealFactorization::from_exponents({1, 4})) ==
              Approx(0.50040242353818787).epsilon(1e-14));
        CHECK(ideal_entropy(IdealFactorization::from_exponents({2, 3})) ==
              Approx(0.6730116670092563).epsilon(1e-14));
        // labels carry no weight; only the exponent multiset matters
        const IdealFactorization labeled({{RationalInert{2}, 1}, {Lambda{}, 4}});
        CHECK(ideal_entropy(labeled) == ideal_entropy(IdealFactorization::from_exponents({1, 4})));
    }

    TEST_CASE("divergence sorts both exponent lists ascending") {
        const IdealFactorization i = IdealFactorization::from_exponents({1, 4});
        const IdealFactorization j = IdealFactorization::from_exponents({3, 2});
        // sorted pairing (1,2),(4,3); the order-sensitive list functional differs
        CHECK(ideal_divergence(i, j) == Approx(0.091516221849435669).epsilon(1e-14));
        CHECK(divergence_of_exponents({1, 4}, {3, 2}) == Approx(0.33479528671433428).epsilon(1e-14));

        const IdealFactorization k = IdealFactorization::from_exponents({5, 1, 3});
        const IdealFactorization l = IdealFactorization::from_exponents({3, 5, 1});
        CHECK(ideal_divergence(k, l) == 0.0); // equal multisets, exactly zero
        CHECK(ideal_divergence(i, i) == 0.0);
        CHECK(error_kind([&] { ideal_divergence(i, k); }) == "omega-mismatch");
    }

    TEST_CASE("maximal entropy holds exactly at equal exponents") {
        CHECK(max_entropy_witness(IdealFactorization::from_exponents({3, 3, 3})));
        CHECK(max_entropy_witness(IdealFactorization::from_exponents({1, 1})));
        CHECK_FALSE(max_entropy_witness(IdealFactorization::from_exponents({1, 2})));
        CHECK(error_kind([] { max_entropy_witness(IdealFactorization::from_exponents({9})); }) ==
              "omega-too-small");
    }

    TEST_CASE("parsing and formatting") {
        CHECK(format_ideal(parse_ideal("1,4")) == "P1^1,P2^4");
        CHECK(format_ideal(parse_ideal("2^1,lambda^4")) == "2^1,lambda^4");
        CHECK(format_ideal(parse_ideal("7_2^3")) == "7_2^3");
        CHECK(format_ideal(parse_ideal("X^2,Y^3")) == "X^2,Y^3");
        CHECK(parse_ideal("2^1,lambda^4").big_omega() == 5);
        CHECK(ideal_entropy(parse_ideal("2^1,lambda^4")) == Approx(0.50040242353818787).epsilon(1e-14));

        CHECK(label_text(RationalInert{2}) == "2");
        CHECK(label_text(PrimeAbove{7, 2}) == "7_2");
        CHECK(label_text(Lambda{}) == "lambda");
        CHECK(label_text(NamedLabel{"Q"}) == "Q");

        CHECK(error_kind([] { parse_ideal(""); }) == "parse-error");
        CHECK(error_kind([] { parse_ideal("1,4^2"); }) == "parse-error"); // mixing bare and labeled
        CHECK(error_kind([] { parse_ideal("x^"); }) == "parse-error");
        CHECK(error_kind([] { parse_ideal("2^0"); }) == "domain-error");
        CHECK(error_kind([] { parse_ideal("1,a,3"); }) == "parse-error");
    }
}
