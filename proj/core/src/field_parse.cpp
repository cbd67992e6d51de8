#include "ncgeom/field_parse.hpp"

#include <cctype>
#include <cstdint>
#include <string>

#include "ncgeom/errors.hpp"

namespace ncgeom {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t nvars, std::size_t line)
      : text_(text), nvars_(nvars), line_(line) {}

  RationalFunction run() {
    RationalFunction value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, pos_ + 1, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
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

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError(line_, at + 1, "division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (accept('^')) {
      std::uint32_t e = integer("exponent");
      return base.pow(e);
    }
    return base;
  }

  std::uint32_t integer(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected ") + what);
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 1'000'000'000ull) fail(std::string(what) + " out of range");
      ++pos_;
    }
    return static_cast<std::uint32_t>(v);
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'i') {
      ++pos_;
      return RationalFunction::constant(GaussianRational::i(), nvars_);
    }
    if (c == 'x') {
      ++pos_;
      std::uint32_t idx = integer("variable index");
      if (idx == 0 || idx > nvars_) {
        fail("variable x" + std::to_string(idx) + " outside x1..x" + std::to_string(nvars_));
      }
      return RationalFunction::variable(idx - 1, nvars_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Integer literal; digit strings can be long, so build a BigInt.
      BigInt v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return RationalFunction::constant(GaussianRational(v), nvars_);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, std::size_t nvars,
                                         std::size_t line) {
  return ExprParser(text, nvars, line).run();
}

BigRational parse_big_rational(std::string_view text, std::size_t line, std::size_t column) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(line, column + pos, msg);
  };
  auto digits = [&]() -> BigInt {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected digits");
    }
    BigInt v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  };
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  BigInt num = digits();
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits();
    if (den == 0) fail("zero denominator");
  }
  if (pos != text.size()) fail("unexpected trailing input in rational literal");
  BigRational q(num, den);
  return neg ? BigRational(-q) : q;
}

}  // namespace ncgeom
