#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "v19/errors.hpp"
#include "v19/field.hpp"

namespace v19 {

/// Evaluates a rational expression in one variable `q` over F. Accepts
/// integers, q, + - * / ^ (nonnegative integer exponents), parentheses,
/// unary minus and implicit multiplication ("2 (q+1)", "2q", "q^2 (q-1)").
template <class F>
class QExpression {
 public:
  QExpression(std::string_view text, const F& q) : s_(text), q_(q) {}

  F evaluate() {
    pos_ = 0;
    F v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  F sum() {
    F v = product();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return v;
      ++pos_;
      const F rhs = product();
      if (c == '+')
        v += rhs;
      else
        v -= rhs;
    }
  }

  F product() {
    F v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        const F rhs = unary();
        if (c == '*') {
          v *= rhs;
        } else {
          if (is_zero(rhs)) fail("division by zero");
          v /= rhs;
        }
      } else if (c == '(' || c == 'q' || std::isdigit(static_cast<unsigned char>(c))) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  F unary() {
    if (peek() == '-') {
      ++pos_;
      return F(-unary());
    }
    return power();
  }

  F power() {
    F base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
    int e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) e = 10 * e + (s_[pos_++] - '0');
    return ipow<F>(base, e);
  }

  F primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      F v = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return q_;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n = 10 * n + (s_[pos_++] - '0');
      return F(static_cast<long>(n));
    }
    fail("unexpected token");
  }

  std::string_view s_;
  F q_;
  std::size_t pos_ = 0;
};

template <class F>
F evaluate_q_expression(std::string_view text, const F& q) {
  return QExpression<F>(text, q).evaluate();
}

}  // namespace v19
