#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qst/errors.hpp"
#include "qst/vector_field.hpp"

namespace qst {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParsedField {
  VectorField field;
  // Non-fatal diagnostics, e.g. components above degree 2.
  std::vector<std::string> warnings;
};

// Parses either a generator keyword (P0..P3, J01..J23, D, C0..C3) or
//
//   field  := '[' expr ',' expr ',' expr ',' expr ']'
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' uint)*
//   atom   := rational | 'x0' | 'x1' | 'x2' | 'x3' | '(' expr ')'
//
// where rational is digits, optionally followed by '/' digits.
ParsedField parse_vector_field(std::string_view text);

Polynomial parse_polynomial(std::string_view text);

// Output parses back to the same polynomial.
std::string render_polynomial(const Polynomial& p);
std::string render_vector_field(const VectorField& f);

}  // namespace qst
