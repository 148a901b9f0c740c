#ifndef DPP_TEXT_HPP
#define DPP_TEXT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "dpp/dpp.hpp"
#include "dpp/permutation.hpp"

namespace dpp {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical text forms. A DPP prints its rows joined by " / " with
/// entries space-separated, e.g. "7 7 6 5 5 / 4 4 4 / 3 2"; the empty
/// DPP prints as "-". A permutation prints as its space-separated
/// values, e.g. "9 8 5 3 7 1 4 6 2". parse(to_text(x)) == x and
/// to_text(parse(s)) == s for canonical s.
std::string to_text(const Dpp& d);
std::string to_text(const Permutation& p);

/// Accepts extra whitespace around tokens and separators. Malformed
/// input raises ParseError; well-formed input with an invalid array
/// raises DppError / std::invalid_argument from the domain types.
Dpp parse_dpp(std::string_view text);
Permutation parse_permutation(std::string_view text);

}  // namespace dpp

#endif
