#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "signvar/sign_vector.hpp"

namespace signvar {

/// A strictly increasing sequence of sign vectors; simultaneously a face of
/// the order complex. May be empty.
using Chain = std::vector<SignVector>;

inline bool is_valid_chain(const Chain& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (!leq(c[i], c[i + 1]) || c[i] == c[i + 1]) return false;
    }
    return true;
}

/// Parses a comma-separated list of sign-vector strings into a chain and
/// validates strict ascent.
inline Chain parse_chain(std::string_view text) {
    Chain c;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view part = text.substr(start, end - start);
        if (!part.empty()) c.push_back(SignVector::parse(part));
        if (end == text.size()) break;
        start = end + 1;
    }
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i].length() != c[0].length())
            throw std::invalid_argument("chain: mixed vector lengths");
    }
    if (!is_valid_chain(c))
        throw std::invalid_argument("chain: not strictly increasing");
    return c;
}

inline std::string chain_to_string(const Chain& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += " < ";
        s += c[i].to_string();
    }
    return s;
}

}  // namespace signvar
