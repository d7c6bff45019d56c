#pragma once

#include <string>

#include "v19/prime_field.hpp"
#include "v19/rational.hpp"

namespace v19 {

/// Glue that lets the model code run unchanged over Q and over Z/pZ.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string str(const Rational& x) { return to_string(x); }
  static constexpr bool exact_rational = true;
};

template <>
struct FieldTraits<ModP> {
  static ModP from_rational(const Rational& r) { return ModP::from_rational(r); }
  static bool is_zero(const ModP& x) { return x.is_zero(); }
  static std::string str(const ModP& x) { return std::to_string(x.residue()); }
  static constexpr bool exact_rational = false;
};

template <class F>
bool is_zero(const F& x) {
  return FieldTraits<F>::is_zero(x);
}

template <class F>
F from_rational(const Rational& r) {
  return FieldTraits<F>::from_rational(r);
}

/// base^k for any integer k; base must be nonzero when k < 0.
template <class F>
F ipow(const F& base, int k) {
  if (k < 0) {
    const F one(1);
    return ipow<F>(F(one / base), -k);
  }
  F result(1);
  F b(base);
  while (k) {
    if (k & 1) result *= b;
    b *= b;
    k >>= 1;
  }
  return result;
}

}  // namespace v19
