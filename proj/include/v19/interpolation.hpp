#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "v19/field.hpp"

namespace v19 {

/// Monomial coefficients of the unique polynomial of degree < n through the
/// n points (xs[i], ys[i]). Nodes must be pairwise distinct.
template <class F>
std::vector<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences
  std::vector<F> dd(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const F den = xs[i] - xs[i - level];
      if (is_zero(den)) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = F((dd[i] - dd[i - 1]) / den);
      if (i == level) break;
    }
  // expand the Newton form by Horner from the top coefficient
  std::vector<F> coeffs(n, F(0));
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - xs[k]) + dd[k]
    for (std::size_t i = n - 1; i > 0; --i) coeffs[i] = F(coeffs[i - 1] - xs[k] * coeffs[i]);
    coeffs[0] = F(dd[k] - xs[k] * coeffs[0]);
  }
  return coeffs;
}

/// Index of the highest nonzero coefficient; -1 for the zero polynomial.
template <class F>
int degree_of(const std::vector<F>& coeffs) {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (!is_zero(coeffs[i])) return static_cast<int>(i);
  return -1;
}

/// Degree of f measured from `count` nodes 1, 2, 3, ... skipping any node
/// for which `skip` returns true.
template <class F>
int measured_degree(const std::function<F(const F&)>& f, std::size_t count,
                    const std::function<bool(const F&)>& skip = nullptr) {
  std::vector<F> xs, ys;
  for (long node = 1; xs.size() < count; ++node) {
    const F x(node);
    if (skip && skip(x)) continue;
    xs.push_back(x);
    ys.push_back(f(x));
  }
  return degree_of(interpolate(xs, ys));
}

}  // namespace v19
