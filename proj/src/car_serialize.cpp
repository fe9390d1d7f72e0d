#include "selfemb/car/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace selfemb::car {

std::string format_generator(const PauliString& g) {
    if (g.is_identity()) return "I";
    std::string out;
    bool first = true;
    for (const auto& [s, l] : g.letters()) {
        if (!first) out += ';';
        first = false;
        out += reg_name(s.reg);
        out += ':';
        out += std::to_string(s.index);
        out += ':';
        out += letter_name(l);
    }
    return out;
}

PauliString parse_generator(const std::string& line) {
    if (line.empty() || line == "I") return PauliString{};
    std::vector<std::pair<Site, Letter>> letters;
    std::stringstream ss(line);
    std::string triple;
    while (std::getline(ss, triple, ';')) {
        const std::size_t c1 = triple.find(':');
        const std::size_t c2 = triple.rfind(':');
        if (c1 == std::string::npos || c2 == c1) {
            throw std::invalid_argument("parse_generator: bad triple '" + triple + "'");
        }
        const std::string reg = triple.substr(0, c1);
        const std::string idx = triple.substr(c1 + 1, c2 - c1 - 1);
        const std::string let = triple.substr(c2 + 1);
        std::size_t consumed = 0;
        std::int64_t index = 0;
        try {
            index = std::stoll(idx, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_generator: bad index '" + idx + "'");
        }
        if (consumed != idx.size()) {
            throw std::invalid_argument("parse_generator: bad index '" + idx + "'");
        }
        letters.emplace_back(site(reg_from_name(reg), index), letter_from_name(let));
    }
    return PauliString::from_letters(std::move(letters));
}

std::vector<PauliString> parse_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("parse_generator_file: cannot open '" + path + "'");
    }
    std::vector<PauliString> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        const std::size_t end = line.find_last_not_of(" \t");
        out.push_back(parse_generator(line.substr(start, end - start + 1)));
    }
    return out;
}

}  // namespace selfemb::car
