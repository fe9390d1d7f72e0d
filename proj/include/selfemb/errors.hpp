#pragma once

#include <stdexcept>
#include <string>

namespace selfemb {

// A computation would exceed a configured resource cap (exit code 4 in the CLI).
struct size_error : std::runtime_error {
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// A nominally local operator touches sites of the other party.
struct locality_error : std::invalid_argument {
    explicit locality_error(const std::string& what) : std::invalid_argument(what) {}
};

// An algebra element has support outside the requested matrix window.
struct support_error : std::invalid_argument {
    explicit support_error(const std::string& what) : std::invalid_argument(what) {}
};

// Bad experiment configuration (exit code 3 in the CLI).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace selfemb
