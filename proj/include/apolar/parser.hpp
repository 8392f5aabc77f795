#ifndef APOLAR_PARSER_HPP
#define APOLAR_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "apolar/polynomial.hpp"

namespace apolar {

// Expression grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := rational | ident | '(' expr ')'
//
// Rational literals are "a" or "a/b"; '/' appears nowhere else. No
// implicit multiplication. Identifiers match [A-Za-z][A-Za-z0-9]* and
// must be declared in vars.
Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars);

// Terms in graded-lex descending order; output reparses to an equal
// polynomial.
std::string format_poly(const Polynomial& f, const std::vector<std::string>& vars);

// Throws SyntaxError if names are empty, duplicated, or not identifiers.
void validate_var_names(const std::vector<std::string>& vars);

// λ-variable names "l1".."ln" used when printing dual polynomials.
std::vector<std::string> dual_var_names(std::size_t nvars);

}  // namespace apolar

#endif
