#include "cocycle_lab/scalar_parse.hpp"

#include <cctype>

namespace cocycle_lab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  CycScalar parse() {
    CycScalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse scalar \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CycScalar expr() {
    CycScalar v = signed_term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  CycScalar signed_term() {
    if (eat('-')) return -term();
    eat('+');
    return term();
  }

  CycScalar term() {
    CycScalar v = power();
    for (;;) {
      if (eat('*')) v *= power();
      else if (eat('/')) {
        CycScalar d = power();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  CycScalar power() {
    CycScalar base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      long long k = integer();
      if (neg) k = -k;
      if (base.is_zero() && k < 0) fail("zero to a negative power");
      return base.pow(k);
    }
    return base;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 18) fail("integer too large");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  CycScalar atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      CycScalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat('-')) return -atom();
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return CycScalar(Rational(std::string(s_.substr(start, pos_ - start))));
    }
    if (s_.substr(pos_, 4) == "zeta") {
      pos_ += 4;
      long long n = integer();
      if (n < 1 || n > 100000) fail("conductor out of range");
      return root_of_unity(static_cast<int>(n), 1);
    }
    if (s_[pos_] == 'i' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return CycScalar::i();
    }
    fail("unknown token");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycScalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace cocycle_lab
