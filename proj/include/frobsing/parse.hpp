#ifndef FROBSING_PARSE_HPP
#define FROBSING_PARSE_HPP

#include <string>
#include <vector>

#include "frobsing/polynomial.hpp"

namespace frobsing {

/// Parses the polynomial grammar
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := ident | uint | '(' expr ')'
///
/// Whitespace is insignificant. Coefficients are nonnegative decimal integers
/// reduced mod p; the only unary minus allowed is at the expression head.
/// Throws ParseError with a byte position on syntax errors and unknown
/// variables.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Convenience overload that builds the ring context first (and hence rejects
/// non-prime p).
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                            std::uint32_t p);

}  // namespace frobsing

#endif
