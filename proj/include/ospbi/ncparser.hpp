#pragma once

#include <stdexcept>
#include <string>

#include "ospbi/ncalgebra.hpp"

namespace ospbi {

struct ParseError : std::runtime_error {
    size_t position;  // 0-based offset into the input
    ParseError(const std::string& what, size_t pos);
};

// Grammar (ASCII):
//   expr      := ['-'] term (('+'|'-') term)*
//   term      := factor ('*' factor)*
//   factor    := atom ('^' uint)?
//   atom      := generator | rational | param | '(' expr ')'
//              | '{' expr ',' expr '}'   (anticommutator)
//              | '[' expr ',' expr ']'   (commutator)
//   generator := 'A0' | 'A+' | 'A-' | 'P' | 'Q' | 'K1' | 'K2' | 'K3'
//              | 'W1' | 'W2' | 'W3' | 'C'
//   param     := 'm2' | 'm3' | 'm4'
//   rational  := int ('/' uint)?
// Named generators are kept as letters; expansion is substitute_generators.
NCExpr parse_expression(const std::string& text);

}  // namespace ospbi
