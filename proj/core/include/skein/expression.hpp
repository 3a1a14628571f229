#pragma once

#include <string_view>

#include "skein/skein_t2.hpp"

namespace skein {

/// Parses a skein expression over K(T^2).
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | 'A' | 'empty' | '(' int ',' int ')' | '(' expr ')'
///
/// `*` is the Frohman-Gelca product (scalars are multiples of `empty`, so it
/// also covers scalar multiplication). `/` and negative powers need a nonzero
/// scalar operand. Example: `(A^2+1)*(2,3) + (1,0)*(0,1)`.
///
/// Throws ParseError with the line, column and offending token.
SkeinT2Element parse_expression(std::string_view source);

}  // namespace skein
