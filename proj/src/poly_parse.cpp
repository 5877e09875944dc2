#include "trigfield/poly_parse.hpp"

#include <cctype>
#include <string>

namespace trigfield {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  PolyC parse() {
    PolyC value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw usage_error("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyC expression() {
    PolyC acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  PolyC term() {
    PolyC acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        PolyC divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        if (divisor.degree() > 0) fail("division by an expression in x");
        acc *= RatFunc(1) / divisor.leading();
      } else {
        return acc;
      }
    }
  }

  PolyC unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  PolyC power() {
    PolyC base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  PolyC primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      PolyC inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (ch == 'x') {
      ++pos_;
      return PolyC::x();
    }
    if (ch == 'c') {
      ++pos_;
      return PolyC::constant(RatFunc::parameter());
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)), 10);
      return PolyC::constant(RatFunc(Rational(value)));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyC parse_polyc(std::string_view text) { return PolyParser(text).parse(); }

Poly parse_poly(std::string_view text) {
  PolyC p = parse_polyc(text);
  std::vector<Rational> out;
  for (const auto& c : p.coefficients()) {
    if (c.numerator().degree() > 0 || c.denominator().degree() > 0) {
      throw usage_error("the parameter c is not allowed here");
    }
    out.push_back(c.numerator().coeff(0));
  }
  return Poly(std::move(out));
}

}  // namespace trigfield
