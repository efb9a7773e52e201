#include "umbilic/parse.hpp"

#include <cctype>
#include <string>

#include "umbilic/errors.hpp"

namespace umbilic {

namespace {

constexpr long kMaxExponent = 1000;

template <std::size_t N>
class Parser {
 public:
  Parser(std::string_view text, const std::array<std::string_view, N>& names)
      : text_(text), names_(names) {}

  Poly<N> run() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Poly<N> p = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<N> expression() {
    Poly<N> acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly<N> term() {
    Poly<N> acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Poly<N> unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly<N> power() {
    Poly<N> base = atom();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ == text_.size() || std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0) {
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '(' ||
                                  std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0)) {
        fail("exponent must be a nonnegative integer literal");
      }
      fail(pos_ == text_.size() ? "missing exponent" : std::string("unexpected '") + text_[pos_] + "'");
    }
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.')) {
      pos_ = start;
      fail("exponent must be a nonnegative integer literal");
    }
    if (digits.size() > 6 || std::stol(digits) > kMaxExponent) {
      pos_ = start;
      fail("exponent too large");
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') fail("chained exponents need parentheses");
    return base.pow(static_cast<unsigned>(std::stol(digits)));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly<N> atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<N> inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t v = 0; v < N; ++v) {
        if (name == names_[v]) return Poly<N>::variable(v);
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Poly<N> literal() {
    const std::string num = read_digits();
    if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported; use p/q");
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (pos_ == text_.size() || std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0) {
        fail("expected denominator digits");
      }
      const std::size_t den_pos = pos_;
      den = read_digits();
      if (Integer(den) == 0) {
        pos_ = den_pos;
        fail("zero denominator");
      }
    }
    Rational value{Integer(num), Integer(den)};
    value.canonicalize();
    return Poly<N>::constant(value);
  }

  std::string_view text_;
  std::array<std::string_view, N> names_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser<2>(text, kXY).run(); }

TriPoly parse_tripoly(std::string_view text) { return Parser<3>(text, kUVW).run(); }

}  // namespace umbilic
