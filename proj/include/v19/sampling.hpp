#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "v19/rational.hpp"

namespace v19 {

/// All randomness goes through std::mt19937_64 (fully specified by the
/// standard). Only raw generator output is used, never the distribution
/// classes, whose algorithms differ between standard libraries.
using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// Nonzero rational num/den with 1 <= |num| <= max_num, 1 <= den <= max_den.
inline Rational random_rational(Rng& rng, int max_num = 30, int max_den = 12) {
  std::int64_t num = uniform_int(rng, 1, max_num);
  if (rng() & 1) num = -num;
  const std::int64_t den = uniform_int(rng, 1, max_den);
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

/// Random rational avoiding every value in `forbidden`.
inline Rational random_rational_avoiding(Rng& rng, const std::vector<Rational>& forbidden, int max_num = 30,
                                         int max_den = 12) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    bool clash = false;
    for (const auto& f : forbidden)
      if (f == r) clash = true;
    if (!clash) return r;
  }
}

/// A usable q^{1/2}: nonzero, not +-1.
inline Rational random_p(Rng& rng) {
  return random_rational_avoiding(rng, {Rational(1), Rational(-1)}, 7, 5);
}

}  // namespace v19
