#include "ivpoly/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "ivpoly/error.hpp"

namespace ivpoly {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    IntPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  IntPoly expr() {
    IntPoly acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  IntPoly term() {
    IntPoly acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (starts_factor(c)) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  IntPoly unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  IntPoly power() {
    IntPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent after '^'");
    if (digits.size() > 6) fail("exponent " + digits + " too large");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  IntPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return IntPoly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return IntPoly::constant(Integer(read_digits()));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  static bool starts_factor(char c) {
    return c == '(' || c == 'x' || c == 'X' || std::isdigit(static_cast<unsigned char>(c));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "polynomial \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                    ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows(1);
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    Integer v;
    if (v.set_str(token, 10) != 0) {
      throw Error(ErrorCode::kParseError, "matrix entry \"" + token + "\" is not an integer");
    }
    rows.back().push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ';') {
      flush();
      rows.emplace_back();
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  const std::size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw Error(ErrorCode::kParseError,
                  "matrix \"" + std::string(text) + "\" is not square with " +
                      std::to_string(n) + " rows");
    }
  }
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace ivpoly
