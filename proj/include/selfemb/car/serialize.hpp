#pragma once

#include <string>
#include <vector>

#include "selfemb/car/pauli.hpp"

namespace selfemb::car {

// One generator per line: `<register>:<index>:<letter>` triples joined by
// `;`, e.g. `A1:-1:X;B1:-1:X`. The identity is written as `I`. Parsing is
// order-insensitive; formatting emits sites in canonical sorted order.
std::string format_generator(const PauliString& g);
PauliString parse_generator(const std::string& line);

// Parses a fixture file, skipping blank lines and `#` comments.
std::vector<PauliString> parse_generator_file(const std::string& path);

}  // namespace selfemb::car
