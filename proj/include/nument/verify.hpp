#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace nument {

enum class CheckStatus { Pass, Fail, Info };

struct Check {
    std::string name; // unique; prefixed c1..c7 with the criterion it belongs to
    CheckStatus status;
    nlohmann::ordered_json computed;
    nlohmann::ordered_json expected; // null for informational checks
    std::string citation;            // the mathematical statement being exercised
};

struct VerificationReport {
    std::vector<Check> checks;

    std::uint64_t passed() const;
    std::uint64_t failed() const;
    std::uint64_t informational() const;
    bool all_passed() const; // no Fail entries

    nlohmann::ordered_json to_json() const; // deterministic byte-for-byte
};

// the full acceptance suite; pure computation, no I/O
VerificationReport run_verification();

} // namespace nument
