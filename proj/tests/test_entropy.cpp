#include <cmath>
#include <vector>

#include <gmpxx.h>

#include "doctest.h"
#include "helpers.hpp"
#include "nument/entropy.hpp"

using namespace nument;
using doctest::Approx;

TEST_SUITE("entropy") {

    TEST_CASE("exponent profiles") {
        const ExponentProfile e({1, 4});
        CHECK(e.big_omega() == 5);
        CHECK(e.little_omega() == 2);
        mpq_class sum = 0;
        for (const mpq_class &q : e.distribution()) sum += q;
        CHECK(sum == 1); // exact rational mass
        CHECK(e.distribution()[0] == mpq_class(1, 5));
        CHECK(e.distribution()[1] == mpq_class(4, 5));
        CHECK(error_kind([] { ExponentProfile({}); }) == "domain-error");
        CHECK(error_kind([] { ExponentProfile({1, 0, 2}); }) == "domain-error");
    }

    TEST_CASE("probability vectors reject non-distributions") {
        CHECK_NOTHROW(ProbabilityVector({mpq_class(1)}));
        CHECK_NOTHROW(ProbabilityVector({mpq_class(1, 3), mpq_class(2, 3)}));
        CHECK(error_kind([] { ProbabilityVector({}); }) == "domain-error");
        CHECK(error_kind([] { ProbabilityVector({mpq_class(1, 2), mpq_class(1, 3)}); }) == "domain-error");
        CHECK(error_kind([] { ProbabilityVector({mpq_class(3, 2), mpq_class(-1, 2)}); }) == "domain-error");
        CHECK(error_kind([] { ProbabilityVector({mpq_class(0), mpq_class(1)}); }) == "domain-error");
    }

    TEST_CASE("shannon entropy") {
        CHECK(shannon_entropy(ProbabilityVector({mpq_class(1)})) == 0.0);
        CHECK(shannon_entropy(ProbabilityVector({mpq_class(1, 2), mpq_class(1, 2)})) ==
              Approx(0.69314718055994529).epsilon(1e-15));
        CHECK(shannon_entropy(ProbabilityVector(std::vector<mpq_class>(4, mpq_class(1, 4)))) ==
              Approx(std::log(4.0)).epsilon(1e-15));
    }

    TEST_CASE("kl divergence") {
        const ProbabilityVector half({mpq_class(1, 2), mpq_class(1, 2)});
        const ProbabilityVector quarter({mpq_class(1, 4), mpq_class(3, 4)});
        const ProbabilityVector third({mpq_class(1, 3), mpq_class(2, 3)});
        const ProbabilityVector third_rev({mpq_class(2, 3), mpq_class(1, 3)});
        CHECK(kl_divergence(half, quarter) == Approx(0.14384103622589042).epsilon(1e-14));
        CHECK(kl_divergence(third, third_rev) == Approx(0.23104906018664842).epsilon(1e-14));
        CHECK(kl_divergence(third, third) == 0.0);  // identical vectors give exact zero
        CHECK(kl_divergence(half, half) == 0.0);
        CHECK_NOTHROW(kl_divergence(half, third));
        CHECK(error_kind([&] {
                  kl_divergence(half, ProbabilityVector({mpq_class(1, 3), mpq_class(1, 3), mpq_class(1, 3)}));
              }) == "length-mismatch");
    }

    TEST_CASE("profile entropy") {
        for (std::uint64_t a = 1; a <= 20; ++a)
            CHECK(entropy_of_profile(ExponentProfile({a})) == 0.0); // prime powers, exactly zero
        CHECK(entropy_of_profile(ExponentProfile({1, 1, 1})) == Approx(std::log(3.0)).epsilon(1e-15));
        CHECK(entropy_of_profile(ExponentProfile({1, 4})) == Approx(0.50040242353818787).epsilon(1e-14));
        CHECK(entropy_of_profile(ExponentProfile({2, 3})) == Approx(0.6730116670092563).epsilon(1e-14));
        CHECK(entropy_of_profile(ExponentProfile({1, 2})) == Approx(0.636514168294813).epsilon(1e-14));
    }

    TEST_CASE("integer entropy") {
        CHECK(integer_entropy(1) == 0.0);
        CHECK(integer_entropy(8) == 0.0);
        CHECK(integer_entropy(1024) == 0.0);
        CHECK(integer_entropy(30) == Approx(1.0986122886681098).epsilon(1e-15));
        CHECK(integer_entropy(12) == Approx(0.636514168294813).epsilon(1e-14));
        // entropy never exceeds log of the number of distinct primes
        CHECK(integer_entropy(360) <= std::log(3.0) + 1e-12);
        CHECK(error_kind([] { integer_entropy(0); }) == "domain-error");
    }

    TEST_CASE("divergence of exponent lists pairs entries as given") {
        CHECK(divergence_of_exponents({1, 4}, {2, 3}) == Approx(0.091516221849435669).epsilon(1e-14));
        // reordering the right-hand list changes the pairing, hence the value
        CHECK(divergence_of_exponents({1, 4}, {3, 2}) == Approx(0.33479528671433428).epsilon(1e-14));
        CHECK(divergence_of_exponents({2, 3}, {2, 3}) == 0.0);
        CHECK(error_kind([] { divergence_of_exponents({1, 2}, {1, 2, 3}); }) == "length-mismatch");
    }

    TEST_CASE("integer divergence") {
        CHECK(integer_divergence(12, 12) == 0.0);
        CHECK(integer_divergence(6, 10) == 0.0); // both squarefree with two primes
        CHECK(integer_divergence(12, 18) == Approx(0.23104906018664842).epsilon(1e-14));
        CHECK(integer_divergence(12, 18) > 0.0);
        CHECK(error_kind([] { integer_divergence(12, 30); }) == "omega-mismatch");
        CHECK(error_kind([] { integer_divergence(30, 12); }) == "omega-mismatch");
        CHECK(error_kind([] { integer_divergence(1, 12); }) == "unit-input");
        CHECK(error_kind([] { integer_divergence(12, 1); }) == "unit-input");
    }
}
