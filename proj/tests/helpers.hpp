#pragma once

#include <functional>
#include <string>

#include "nument/error.hpp"

// runs fn and returns the kind of the nument::Error it throws ("" if none)
inline std::string error_kind(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const nument::Error &e) {
        return e.kind();
    }
    return "";
}
