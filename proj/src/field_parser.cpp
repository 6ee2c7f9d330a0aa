#include "qst/field_parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace qst {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  VectorField field() {
    expect('[');
    std::array<Polynomial, 4> c;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      if (mu) expect(',');
      c[mu] = expr();
    }
    expect(']');
    finish();
    return VectorField(std::move(c));
  }

  Polynomial polynomial() {
    Polynomial p = expr();
    finish();
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial sum = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        advance();
        sum += term();
      } else if (c == '-') {
        advance();
        sum -= term();
      } else {
        return sum;
      }
    }
  }

  Polynomial term() {
    Polynomial product = factor();
    while (peek() == '*') {
      advance();
      product *= factor();
    }
    return product;
  }

  Polynomial factor() {
    if (peek() == '-') {
      advance();
      return -factor();
    }
    Polynomial base = atom();
    while (peek() == '^') {
      advance();
      base = pow(base, exponent());
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      advance();
      Polynomial inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'x') {
      auto [line, col] = location();
      advance();
      if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '3') {
        std::size_t mu = static_cast<std::size_t>(text_[pos_] - '0');
        advance();
        if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
          throw ParseError("unknown variable; expected x0, x1, x2 or x3", line, col);
        return coordinate(mu);
      }
      throw ParseError("unknown variable; expected x0, x1, x2 or x3", line, col);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(rational());
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  Scalar rational() {
    auto [line, col] = location();
    std::string num = digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      advance();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected denominator digits after '/'");
      std::string den = digits();
      Scalar d = Scalar::parse(den);
      if (d.is_zero()) throw ParseError("zero denominator", line, col);
      return Scalar::parse(num) / d;
    }
    return Scalar::parse(num);
  }

  unsigned exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer exponent");
    auto [line, col] = location();
    std::string d = digits();
    if (d.size() > 3) throw ParseError("exponent too large", line, col);
    return static_cast<unsigned>(std::stoul(d));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  // Next non-space character, or '\0' at the end.
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    char got = peek();
    if (got != c) {
      if (got == '\0') fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + got + "'");
    }
    advance();
  }

  void finish() {
    char c = peek();
    if (c != '\0') fail(std::string("unexpected trailing '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::pair<std::size_t, std::size_t> location() {
    skip_space();
    return {line_, col_};
  }

  [[noreturn]] void fail(const std::string& message) {
    auto [line, col] = location();
    throw ParseError(message, line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ParsedField parse_vector_field(std::string_view text) {
  ParsedField out;
  if (auto kind = parse_generator_kind(trim(text))) {
    out.field = standard_generator(*kind);
    return out;
  }
  out.field = Parser(text).field();
  for (std::size_t mu = 0; mu < 4; ++mu) {
    int d = out.field[mu].degree();
    if (d > 2)
      out.warnings.push_back("component " + std::to_string(mu) + " has degree " + std::to_string(d) +
                             ", above the conformal bound of 2");
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) { return Parser(text).polynomial(); }

std::string render_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Scalar coef = c;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      coef = coef.abs();
    }
    first = false;

    std::ostringstream mono;
    bool bare = true;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      if (!e[mu]) continue;
      mono << (bare ? "" : "*") << 'x' << mu;
      if (e[mu] > 1) mono << '^' << e[mu];
      bare = false;
    }
    if (bare) {
      os << coef;
    } else if (coef == Scalar(1)) {
      os << mono.str();
    } else if (coef == Scalar(-1)) {
      os << '-' << mono.str();
    } else {
      os << coef << '*' << mono.str();
    }
  }
  return os.str();
}

std::string render_vector_field(const VectorField& f) {
  std::string out = "[";
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (mu) out += ", ";
    out += render_polynomial(f[mu]);
  }
  return out + "]";
}

}  // namespace qst
