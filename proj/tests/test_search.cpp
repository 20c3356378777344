#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "nument/entropy.hpp"
#include "nument/search.hpp"

using namespace nument;
using doctest::Approx;

TEST_SUITE("search") {

    TEST_CASE("gap function") {
        CHECK(entropy_gap(1, 3) == Approx(-0.0025176913553641433).epsilon(1e-13));
        CHECK(entropy_gap(2, 5) == Approx(0.002258505563059246).epsilon(1e-13));
        CHECK(entropy_gap(100, 100) == Approx(0.0015142959065074786).epsilon(1e-13));
        CHECK(entropy_gap(100, 100) > 0.0);
        CHECK(error_kind([] { entropy_gap(0, 5); }) == "domain-error");
        CHECK(error_kind([] { entropy_gap(3, 2); }) == "domain-error");
    }

    TEST_CASE("gap matches integer witnesses") {
        // n with s squared primes and r - s simple ones: appending p then
        // raising it to p^2 moves the entropy by exactly the closed form
        const std::uint64_t n13 = 4ull * 3 * 5;                    // s = 1, r = 3, p = 7
        CHECK(integer_entropy(n13 * 49) - integer_entropy(n13 * 7) ==
              Approx(entropy_gap(1, 3)).epsilon(1e-12));
        const std::uint64_t n25 = 4ull * 9 * 5 * 7 * 11;           // s = 2, r = 5, p = 13
        CHECK(integer_entropy(n25 * 169) - integer_entropy(n25 * 13) ==
              Approx(entropy_gap(2, 5)).epsilon(1e-12));
    }

    TEST_CASE("negative-gap thresholds") {
        const std::vector<std::uint64_t> expected = {3, 6, 9, 11, 14, 16, 19, 21, 24, 27};
        for (std::uint64_t s = 1; s <= 10; ++s) CHECK(min_r_negative(s) == expected[s - 1]);
        CHECK(min_r_negative(20) == 53);
        for (std::uint64_t s = 1; s <= 10; ++s) {
            CHECK(entropy_gap(s, min_r_negative(s)) < 0.0);
            CHECK(entropy_gap(s, min_r_negative(s) - 1) >= 0.0);
        }
        CHECK(error_kind([] { min_r_negative(0); }) == "domain-error");
    }

    TEST_CASE("grid csv") {
        std::ostringstream out;
        grid_csv(1, 1, out);
        const std::string text = out.str();
        CHECK(text.rfind("s,r,f\n", 0) == 0);
        CHECK(std::count(text.begin(), text.end(), '\n') == 5); // header + 2x2 grid

        std::ostringstream wide;
        grid_csv(2, 3, wide);
        std::istringstream in(wide.str());
        std::string line;
        std::getline(in, line);
        CHECK(line == "s,r,f");
        std::size_t rows = 0;
        while (std::getline(in, line)) {
            unsigned long long s = 0, r = 0;
            double f = 0.0;
            REQUIRE(std::sscanf(line.c_str(), "%llu,%llu,%lf", &s, &r, &f) == 3);
            CHECK(f == Approx(gap_value(s, r)).epsilon(1e-11)); // 12 significant digits
            ++rows;
        }
        CHECK(rows == 12);
    }

    TEST_CASE("system scan") {
        ScanOptions neg;
        neg.allow_negative_v = true;

        CHECK(scan_system(1, {}).empty());
        CHECK(scan_system(1, neg).empty());
        CHECK(scan_system(60, {}).empty()); // no solutions with positive v

        using Sols = std::vector<SystemSolution>;
        const Sols at10 = scan_system(10, neg);
        CHECK(at10 == Sols{{1, 2, 4, -1}, {2, 4, 8, -2}});
        const Sols at12 = scan_system(12, neg);
        CHECK(at12 == Sols{{1, 2, 4, -1}, {2, 4, 8, -2}, {3, 6, 12, -3}});
        CHECK(scan_system(14, neg) == at12); // a = 4 needs u = 16

        ScanOptions striped = neg;
        striped.threads = 3;
        CHECK(scan_system(12, striped) == at12); // stripes merge deterministically

        ScanOptions exact = neg;
        exact.use_float_filter = false;
        CHECK(scan_system(12, exact) == at12);
        ScanOptions exact_pos;
        exact_pos.use_float_filter = false;
        CHECK(scan_system(60, exact_pos).empty());

        CHECK(error_kind([] { scan_system(0, {}); }) == "domain-error");
    }

    TEST_CASE("worker count honours the environment") {
        setenv("NUMENT_THREADS", "3", 1);
        CHECK(worker_count() == 3);
        setenv("NUMENT_THREADS", "0", 1);
        CHECK(worker_count() >= 1); // invalid values fall back to the hardware count
        setenv("NUMENT_THREADS", "abc", 1);
        CHECK(worker_count() >= 1);
        unsetenv("NUMENT_THREADS");
        CHECK(worker_count() >= 1);
    }

    TEST_CASE("divergence-zero scan stays on the diagonal") {
        CHECK(divergence_zero_scan(1).empty());

        using Quads = std::vector<ExponentQuadruple>;
        CHECK(divergence_zero_scan(2) == Quads{{1, 1, 1, 1}});

        const Quads at12 = divergence_zero_scan(12);
        CHECK(at12.size() == 66); // sum of t - 1 over t = 2..12
        for (const ExponentQuadruple &q : at12) {
            CHECK(q.a1 == q.b1);
            CHECK(q.a2 == q.b2);
        }
        CHECK(std::find(at12.begin(), at12.end(), ExponentQuadruple{2, 2, 2, 2}) != at12.end());
        CHECK(std::find(at12.begin(), at12.end(), ExponentQuadruple{1, 2, 2, 1}) == at12.end());
    }
}

TEST_SUITE("search-long") {

    TEST_CASE("float filter validated against exact arithmetic at bound 1000") {
        ScanOptions exact;
        exact.use_float_filter = false;
        const auto filtered = scan_system(1000, {});
        CHECK(filtered.empty());
        CHECK(scan_system(1000, exact) == filtered);

        ScanOptions neg;
        neg.allow_negative_v = true;
        ScanOptions neg_exact = neg;
        neg_exact.use_float_filter = false;
        const auto family = scan_system(120, neg);
        CHECK(family.size() == 30); // (a, 2a, 4a, -a) for 4a <= 120
        for (std::size_t i = 0; i < family.size(); ++i) {
            const std::int64_t a = static_cast<std::int64_t>(i) + 1;
            CHECK(family[i] == SystemSolution{a, 2 * a, 4 * a, -a});
        }
        CHECK(scan_system(120, neg_exact) == family);
    }
}
