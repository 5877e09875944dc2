#include "trigfield/alg_expr.hpp"

#include <cctype>
#include <string>

#include "trigfield/error.hpp"

namespace trigfield {

namespace {

class AlgParser {
 public:
  explicit AlgParser(std::string_view text) : text_(text) {}

  AlgebraicNumber parse() {
    AlgebraicNumber value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw usage_error("expression parse error at column " + std::to_string(pos_ + 1) + ": " + what);
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

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  AlgebraicNumber expression() {
    AlgebraicNumber acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  AlgebraicNumber term() {
    AlgebraicNumber acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        AlgebraicNumber d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  AlgebraicNumber unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  AlgebraicNumber power() {
    AlgebraicNumber base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    long e = integer();
    if (e > 64) fail("exponent too large");
    AlgebraicNumber acc = AlgebraicNumber::from_rational(1);
    for (long k = 0; k < e; ++k) acc = acc * base;
    if (negative) {
      if (acc.is_zero()) fail("division by zero");
      acc = inverse(acc);
    }
    return acc;
  }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  AlgebraicNumber primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return AlgebraicNumber::from_rational(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (accept('(')) {
      AlgebraicNumber v = expression();
      expect(')');
      return v;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) fail("unexpected '" + std::string(1, ch) + "'");
    const std::size_t at = pos_;
    const std::string name = word();
    if (name == "i") return imaginary_unit();
    expect('(');
    AlgebraicNumber arg = expression();
    AlgebraicNumber out = arg;
    if (name == "root") {
      expect(',');
      long n = integer();
      if (n < 1) fail("root index must be positive");
      out = nth_root(arg, static_cast<int>(n));
    } else if (name == "sqrt") {
      out = nth_root(arg, 2);
    } else if (name == "cbrt") {
      out = nth_root(arg, 3);
    } else if (name == "conj") {
      out = alg_unary(arg, UnaryOp::kConj);
    } else if (name == "re") {
      out = alg_unary(arg, UnaryOp::kRe);
    } else if (name == "im") {
      out = alg_unary(arg, UnaryOp::kIm);
    } else if (name == "abs") {
      out = alg_unary(arg, UnaryOp::kAbs);
    } else {
      pos_ = at;
      fail("unknown function '" + name + "'");
    }
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraicNumber parse_algebraic(std::string_view text) { return AlgParser(text).parse(); }

}  // namespace trigfield
