#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbtrace/graph.hpp"
#include "hbtrace/ideal.hpp"

namespace hbtrace {

/// Parses a comma-separated list of monomials such as "x^3, x^2*y, y^2", optionally
/// wrapped in parentheses; "0" and "(0)" give the zero ideal. Without `declared`,
/// variables form a ring in order of first appearance; with it, unknown names are errors.
/// Identifiers are a letter followed by letters, digits or '_'.
MonomialIdeal parse_ideal(std::string_view text, const RingPtr& declared = nullptr);

/// Comma- or whitespace-separated identifiers, e.g. "x,y,z".
std::vector<std::string> parse_name_list(std::string_view text);

/// "E1,...,En" as an exponent vector of length n.
Monomial parse_exponent_vector(std::string_view text, std::size_t n);

/// Records "i j a b" separated by newlines or ';', with 1-based vertices; '#' starts
/// a comment. The ring is x1..xn with n the largest vertex index.
EdgeSequenceData parse_graph_spec(std::string_view text);

}  // namespace hbtrace
