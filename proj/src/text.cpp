#include "dpp/text.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace dpp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) tokens.push_back(s.substr(start, i - start));
    }
    return tokens;
}

int parse_int(std::string_view token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError("integer out of range: '" + std::string(token) + "'");
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("expected an integer, got '" + std::string(token) + "'");
    if (value < INT32_MIN || value > INT32_MAX)
        throw ParseError("integer out of range: '" + std::string(token) + "'");
    return static_cast<int>(value);
}

void join(std::ostringstream& os, const std::vector<int>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) os << ' ';
        os << values[i];
    }
}

}  // namespace

std::string to_text(const Dpp& d) {
    if (d.empty()) return "-";
    std::ostringstream os;
    for (int i = 0; i < d.row_count(); ++i) {
        if (i > 0) os << " / ";
        join(os, d.rows()[i]);
    }
    return os.str();
}

std::string to_text(const Permutation& p) {
    std::ostringstream os;
    join(os, p.values());
    return os.str();
}

Dpp parse_dpp(std::string_view text) {
    std::string_view body = trim(text);
    if (body == "-") return Dpp();
    if (body.empty()) throw ParseError("empty input; the empty array is written '-'");

    std::vector<std::vector<int>> rows;
    size_t pos = 0;
    while (true) {
        size_t slash = body.find('/', pos);
        std::string_view segment = slash == std::string_view::npos
                                       ? body.substr(pos)
                                       : body.substr(pos, slash - pos);
        auto tokens = split_tokens(segment);
        if (tokens.empty()) throw ParseError("empty row in array text");
        std::vector<int> row;
        row.reserve(tokens.size());
        for (auto token : tokens) row.push_back(parse_int(token));
        rows.push_back(std::move(row));
        if (slash == std::string_view::npos) break;
        pos = slash + 1;
    }
    return Dpp::from_rows(std::move(rows));
}

Permutation parse_permutation(std::string_view text) {
    auto tokens = split_tokens(trim(text));
    if (tokens.empty()) throw ParseError("empty input; expected permutation values");
    std::vector<int> values;
    values.reserve(tokens.size());
    for (auto token : tokens) values.push_back(parse_int(token));
    return Permutation(std::move(values));
}

}  // namespace dpp
