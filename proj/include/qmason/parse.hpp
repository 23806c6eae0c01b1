#ifndef QMASON_PARSE_HPP
#define QMASON_PARSE_HPP

#include <string>
#include <string_view>
#include <variant>

#include "qmason/poly.hpp"
#include "qmason/qcore.hpp"

namespace qmason {

// Either representation of a parsed polynomial. qb(...) yields factored
// form, and negation, products, powers and qf(...) preserve it; sums and
// differences force dense form.
using PolyValue = std::variant<DensePoly, FactoredPoly>;

struct ParseError {
  std::size_t pos = 0;  // byte offset into the input
  std::string message;
};

using ParseResult = std::variant<PolyValue, ParseError>;

// Grammar (q is substituted from ctx; '^' binds tighter than '*', which
// binds tighter than '+'/'-'; unary minus allowed):
//   expr    := term (('+'|'-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | factor
//   factor  := base ('^' nat)?
//   base    := '(' expr ')' | 'qb(' expr ';' nat ')' | 'qf(' expr ';' nat ')'
//            | 'z' | 'q' | literal
//   literal := nat ('/' nat)? 'i'? | 'i'
// qb(a; n) is [z-a]_q^n (a must be constant); qf(P; n) is [P]_q^n.
ParseResult parse_poly(std::string_view text, const QContext& ctx);

DensePoly to_dense(const PolyValue& v);

}  // namespace qmason

#endif  // QMASON_PARSE_HPP
