#ifndef WB_CYC_PARSER_HPP
#define WB_CYC_PARSER_HPP

#include <string>

#include "wb/cyclotomic.hpp"

namespace wb {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

/// Parse an expression in the cyclotomic grammar: integer and rational
/// literals `a`, `a/b`; the symbol `z` denoting zeta_N; operators
/// `+ - * ^` with usual precedence; parentheses.  Whitespace insignificant.
CycNum parse_cyc(const std::string& expr, int N);

}  // namespace wb

#endif
