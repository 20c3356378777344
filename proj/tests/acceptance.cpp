#include <cstdio>
#include <string>

#include "nument/verify.hpp"

// Runs the full verification suite and prints one line per criterion group,
// then details for any failing check. Exit code 0 only if everything passed.
int main() {
    const nument::VerificationReport report = nument::run_verification();

    bool all_ok = true;
    for (int k = 1; k <= 7; ++k) {
        const std::string prefix = "c" + std::to_string(k) + " ";
        std::size_t total = 0, failed = 0;
        for (const nument::Check &c : report.checks) {
            if (c.name.rfind(prefix, 0) != 0) continue;
            ++total;
            if (c.status == nument::CheckStatus::Fail) ++failed;
        }
        const bool ok = total > 0 && failed == 0;
        all_ok = all_ok && ok;
        std::printf("criterion %d: %s (%zu checks)\n", k, ok ? "pass" : "FAIL", total);
    }

    for (const nument::Check &c : report.checks) {
        if (c.status != nument::CheckStatus::Fail) continue;
        std::printf("  failed: %s\n", c.name.c_str());
        std::printf("    computed: %s\n", c.computed.dump().c_str());
        std::printf("    expected: %s\n", c.expected.dump().c_str());
        std::printf("    note:     %s\n", c.citation.c_str());
    }

    std::printf("%s\n", all_ok ? "acceptance: all criteria pass" : "acceptance: FAILURES PRESENT");
    return all_ok ? 0 : 1;
}
