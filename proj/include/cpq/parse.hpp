#pragma once

// Expression grammar for NCPoly:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*      '/' only by a scalar
//   unary := '-' unary | power
//   power := atom ('^' ['-'] int)?
//   atom  := int | q | lambda | '(' expr ')' | name ['[' int (',' int)* [',' A=int] ']']
// Names: x xb xi xib D Db L Lh z zb dz dzb del delb rho T Tinv w. Bare `rho`
// is rho[N]. Negative powers exist for scalars and for x[0], xb[0], L, Lh,
// rho[r] and w[i]. NCPoly::str() output parses back to the same polynomial.

#include <string>

#include "cpq/ncpoly.hpp"

namespace cpq {

struct ParseContext {
    /// Projective dimension; -1 skips index range checks.
    int N = -1;
    /// Largest copy label accepted in A=<int>; -1 accepts any.
    int copies = -1;
};

/// SyntaxError with position, UnknownGenerator, IndexOutOfRange.
NCPoly parse_expr(const std::string& src, const ParseContext& ctx = {});

}  // namespace cpq
