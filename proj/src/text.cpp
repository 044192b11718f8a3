#include "text.hpp"

#include <cctype>

#include "orbitref/error.hpp"

namespace orbitref::detail {

std::string normalize_number_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) continue;
        if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
            continue;
        }
        out.push_back(static_cast<char>(c));
    }
    if (out.empty()) throw Error(ErrorCode::Parse, "empty scalar text");
    return out;
}

std::vector<std::string> split_signed_terms(const std::string& text) {
    std::vector<std::string> terms;
    std::string current;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        const bool sign = (c == '+' || c == '-');
        bool exponent_sign = false;
        if (sign && i >= 2 && (text[i - 1] == 'e' || text[i - 1] == 'E')) {
            const char before = text[i - 2];
            exponent_sign = std::isdigit(static_cast<unsigned char>(before)) || before == '.';
        }
        if (sign && !exponent_sign && !current.empty()) {
            terms.push_back(current);
            current.clear();
        }
        current.push_back(c);
    }
    if (!current.empty()) terms.push_back(current);
    for (const auto& t : terms) {
        if (t == "+" || t == "-") throw Error(ErrorCode::Parse, "dangling sign in '" + text + "'");
    }
    return terms;
}

}  // namespace orbitref::detail
