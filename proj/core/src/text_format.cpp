#include "kostka/text_format.hpp"

#include <charconv>
#include <limits>
#include <vector>

#include "kostka/errors.hpp"

namespace kostka {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<int> parse_ints(std::string_view text, const std::string& argument) {
    std::vector<int> out;
    text = trim(text);
    if (text.empty())
        return out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = text.find(',', pos);
        std::string_view token =
            trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw ParseError(argument, "expected comma-separated integers, got '" + std::string(text) + "'");
        if (value < 0)
            throw ParseError(argument, "negative part " + std::string(token));
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

template <class Seq>
std::string join(const Seq& parts) {
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(parts[k]);
    }
    return s;
}

} // namespace

Partition parse_partition(std::string_view text, const std::string& argument) {
    auto parts = parse_ints(text, argument);
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] == 0)
            throw ParseError(argument, "zero part inside a partition");
        if (k + 1 < parts.size() && parts[k] < parts[k + 1])
            throw ParseError(argument, "parts must be non-increasing, got '" + std::string(trim(text)) + "'");
    }
    return Partition(std::move(parts));
}

Composition parse_composition(std::string_view text, const std::string& argument) {
    return Composition(parse_ints(text, argument));
}

std::string to_text(const Partition& p) { return join(p.parts()); }
std::string to_text(const Composition& c) { return join(c.parts()); }

} // namespace kostka
