#ifndef MONOSPEC_EXPR_HPP
#define MONOSPEC_EXPR_HPP

#include <string>

#include "monospec/bigreal.hpp"
#include "monospec/precision.hpp"

namespace monospec {

/// Evaluate a small exact-expression grammar in BigReal:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' exponent)?          exponent: integer or (p/q)
///   base   := number | 'pi' | 'sqrt' '(' expr ')' | 'cbrt' '(' expr ')'
///           | '(' expr ')' | '-' base
/// Numbers may be integers or decimal literals (parsed exactly at working
/// precision); test targets should use the exact forms.
BigReal eval_expr(const std::string& text, const PrecisionContext& ctx);

} // namespace monospec

#endif
