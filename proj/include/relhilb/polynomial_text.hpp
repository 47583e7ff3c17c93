#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relhilb/polynomial.hpp"

namespace relhilb {

/// Parses the polynomial text grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' nat)? | '(' expr ')' ('^' nat)?
///
/// where coefficients are integers or p/q rationals and a leading sign is allowed on
/// any term. Throws SyntaxError (with a 1-based column) or UnknownVariable.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            MonomialOrder order = MonomialOrder::degrevlex());

/// Canonical text form, e.g. "X^2*Y - 1/2*Z + 3". The zero polynomial prints as "0".
/// Parsing the output yields the same polynomial.
std::string to_string(const Polynomial& f, const std::vector<std::string>& variables);

/// Default names x0, x1, ... for an arity.
std::vector<std::string> default_variable_names(std::size_t arity);

}  // namespace relhilb
