#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "v19/weights.hpp"

namespace v19 {

/// Boundary colours of a K x L lattice. Rows are numbered from the bottom,
/// columns from the left.
struct BoundarySpec {
  int K = 0;
  int L = 0;
  std::vector<int> alpha0;   // left edge of each row
  std::vector<int> alphaK1;  // right edge of each row
  std::vector<int> beta0;    // bottom edge of each column
  std::vector<int> betaK1;   // top edge of each column

  int internal_edges() const { return 2 * K * L - K - L; }
};

inline void validate(const BoundarySpec& b) {
  if (b.K < 1 || b.L < 1) throw ConfigError("lattice must have at least one row and column");
  if (static_cast<int>(b.alpha0.size()) != b.K || static_cast<int>(b.alphaK1.size()) != b.K ||
      static_cast<int>(b.beta0.size()) != b.L || static_cast<int>(b.betaK1.size()) != b.L)
    throw ConfigError("boundary vector lengths do not match K, L");
  for (const auto* v : {&b.alpha0, &b.alphaK1, &b.beta0, &b.betaK1})
    for (int c : *v)
      if (c < 1 || c > 3) throw ConfigError("boundary colours must be 1, 2 or 3");
}

inline BoundarySpec dwbc_boundary(int L) {
  if (L < 1) throw ConfigError("L must be at least 1");
  return {L, L, std::vector<int>(L, 1), std::vector<int>(L, 3), std::vector<int>(L, 1), std::vector<int>(L, 3)};
}

/// Rows Y1, Y2, U_1..U_{L-1} from the bottom; right boundary (2,2,3,...,3).
inline BoundarySpec f_boundary(int L) {
  if (L < 1) throw ConfigError("L must be at least 1");
  BoundarySpec b{L + 1, L, std::vector<int>(L + 1, 1), std::vector<int>(L + 1, 3), std::vector<int>(L, 1),
                 std::vector<int>(L, 3)};
  b.alphaK1[0] = b.alphaK1[1] = 2;
  return b;
}

/// Rows U_1..U_{L-1}, Y1, Y2 from the bottom; right boundary (3,...,3,2,2).
inline BoundarySpec fbar_boundary(int L) {
  if (L < 1) throw ConfigError("L must be at least 1");
  BoundarySpec b{L + 1, L, std::vector<int>(L + 1, 1), std::vector<int>(L + 1, 3), std::vector<int>(L, 1),
                 std::vector<int>(L, 3)};
  b.alphaK1[L - 1] = b.alphaK1[L] = 2;
  return b;
}

inline constexpr int kMaxInternalEdges = 26;

namespace detail {

// Depth-first walk over vertices, bottom row first, left to right. At each
// vertex the left and bottom edges are already fixed; the top edge is chosen
// and conservation fixes the right edge.
template <class F>
struct ColoringWalk {
  const BoundarySpec& bnd;
  const std::vector<RMatrix<F>>& weights;  // row-major, K*L
  std::vector<int> h;                      // current right edge per row
  std::vector<int> below;                  // current top edge of the previous row, per column
  F total{0};
  std::size_t count = 0;

  void visit(int i, int j, int left, const F& acc) {
    if (j == bnd.L) {
      if (left != bnd.alphaK1[static_cast<std::size_t>(i)]) return;
      if (i + 1 == bnd.K) {
        total += acc;
        ++count;
        return;
      }
      visit(i + 1, 0, bnd.alpha0[static_cast<std::size_t>(i + 1)], acc);
      return;
    }
    const int bottom = below[static_cast<std::size_t>(j)];
    const RMatrix<F>& r = weights[static_cast<std::size_t>(i * bnd.L + j)];
    const bool top_fixed = i + 1 == bnd.K;
    for (int top = 1; top <= 3; ++top) {
      if (top_fixed && top != bnd.betaK1[static_cast<std::size_t>(j)]) continue;
      const int right = left + top - bottom;
      if (right < 1 || right > 3) continue;
      const F& w = r.at(left, top, right, bottom);
      if (is_zero(w)) continue;
      below[static_cast<std::size_t>(j)] = top;
      visit(i, j + 1, right, F(acc * w));
      below[static_cast<std::size_t>(j)] = bottom;
    }
  }
};

}  // namespace detail

template <class F>
struct BruteforceResult {
  F value;
  std::size_t nonzero_colorings = 0;
};

/// Sum over all edge colourings of the product of vertex weights
/// R(X_i/m_j)[(left, top), (right, bottom)].
template <class F>
BruteforceResult<F> bruteforce_sum(const BasicModelContext<F>& ctx, const BoundarySpec& bnd, const std::vector<F>& rowX) {
  validate(bnd);
  if (static_cast<int>(ctx.L()) != bnd.L) throw ConfigError("context has " + std::to_string(ctx.L()) + " columns, boundary has " + std::to_string(bnd.L));
  if (static_cast<int>(rowX.size()) != bnd.K) throw ConfigError("need one spectral value per row");
  if (bnd.internal_edges() > kMaxInternalEdges)
    throw TooLarge(std::to_string(bnd.internal_edges()) + " internal edges exceeds the enumeration bound of " +
                   std::to_string(kMaxInternalEdges));
  std::vector<RMatrix<F>> weights;
  weights.reserve(static_cast<std::size_t>(bnd.K * bnd.L));
  for (int i = 0; i < bnd.K; ++i) {
    if (is_zero(rowX[static_cast<std::size_t>(i)])) throw ZeroArgument("row spectral value must be nonzero");
    for (int j = 0; j < bnd.L; ++j)
      weights.push_back(r_matrix(ctx, F(rowX[static_cast<std::size_t>(i)] / ctx.m[static_cast<std::size_t>(j)])));
  }
  detail::ColoringWalk<F> walk{bnd, weights, {}, bnd.beta0, F(0), 0};
  walk.visit(0, 0, bnd.alpha0[0], F(1));
  return {walk.total, walk.count};
}

template <class F>
F partition_bruteforce(const BasicModelContext<F>& ctx, const BoundarySpec& bnd, const std::vector<F>& rowX) {
  return bruteforce_sum(ctx, bnd, rowX).value;
}

template <class F>
std::size_t count_colorings(const BasicModelContext<F>& ctx, const BoundarySpec& bnd, const std::vector<F>& rowX) {
  return bruteforce_sum(ctx, bnd, rowX).nonzero_colorings;
}

}  // namespace v19
