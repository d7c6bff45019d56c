#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "v19/errors.hpp"
#include "v19/prime_field.hpp"
#include "v19/rational.hpp"

namespace v19 {

/// Multiplies a rational row by the lcm of its denominators and divides by
/// the gcd of the resulting numerators. The zero row is left alone.
inline void clear_denominators(std::vector<Rational>& row) {
  mpz_class l(1), g(0);
  for (const auto& x : row)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : row) {
    x *= l;
    x.canonicalize();
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : row) x /= g;
}

/// Incremental reduced row echelon form over Q. Rows are added one at a time;
/// a row that reduces to zero is dependent and dropped. Each basis row keeps
/// the tag of the input row that created it.
class RationalEchelon {
 public:
  explicit RationalEchelon(std::size_t cols) : cols_(cols) {}

  /// Returns true if the row was independent of the current basis.
  bool add_row(std::vector<Rational> row, int tag = 0) {
    if (row.size() != cols_) throw ConfigError("row length does not match column count");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = row[pivots_[r]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = pivots_[r]; c < cols_; ++c)
        if (sgn(rows_[r][c]) != 0) row[c] -= f * rows_[r][c];
    }
    std::size_t pc = 0;
    while (pc < cols_ && sgn(row[pc]) == 0) ++pc;
    if (pc == cols_) return false;
    const Rational inv = Rational(1) / row[pc];
    for (std::size_t c = pc; c < cols_; ++c)
      if (sgn(row[c]) != 0) row[c] *= inv;
    for (auto& x : row)
      if (sgn(x) != 0 && bit_length(x) > max_bits_) max_bits_ = bit_length(x);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = rows_[r][pc];
      if (sgn(f) == 0) continue;
      for (std::size_t c = pc; c < cols_; ++c)
        if (sgn(row[c]) != 0) rows_[r][c] -= f * row[c];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pc);
    tags_.push_back(tag);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<int>& tags() const { return tags_; }
  std::size_t max_entry_bits() const { return max_bits_; }

  /// Kernel basis: one vector per free column, with a 1 in that column.
  std::vector<std::vector<Rational>> nullspace() const {
    std::vector<char> is_pivot(cols_, 0);
    for (auto pc : pivots_) is_pivot[pc] = 1;
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Rational> v(cols_);
      v[f] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> tags_;
  std::size_t max_bits_ = 0;
};

/// Montgomery arithmetic for an odd modulus below 2^63.
class Montgomery {
 public:
  explicit Montgomery(u64 p) : p_(p) {
    if ((p & 1) == 0 || p >> 63) throw ConfigError("Montgomery modulus must be odd and below 2^63");
    u64 inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    r2_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    r2_ = static_cast<u64>(static_cast<u128>(r2_) * r2_ % p);
  }

  u64 modulus() const { return p_; }
  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }
  u64 to_mont(u64 x) const { return reduce(static_cast<u128>(x % p_) * r2_); }
  u64 from_mont(u64 x) const { return reduce(x); }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  /// Inverse of a Montgomery-form value, returned in Montgomery form.
  u64 inv(u64 a) const {
    const u64 plain = from_mont(a);
    if (plain == 0) throw NonInvertible("zero pivot");
    return to_mont(detail::powmod(plain, p_ - 2, p_));
  }

 private:
  u64 p_;
  u64 neg_inv_;
  u64 r2_;
};

/// Incremental reduced row echelon form over Z/pZ; rows are stored in
/// Montgomery form. Same interface as RationalEchelon.
class ModularEchelon {
 public:
  ModularEchelon(u64 p, std::size_t cols) : mont_(p), cols_(cols) {}

  /// Row entries are plain residues in [0, p).
  bool add_row(const std::vector<u64>& plain, int tag = 0) {
    if (plain.size() != cols_) throw ConfigError("row length does not match column count");
    std::vector<u64> row(cols_);
    for (std::size_t c = 0; c < cols_; ++c) row[c] = mont_.to_mont(plain[c]);
    const u64 p = mont_.modulus();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const u64 f = row[pivots_[r]];
      if (f == 0) continue;
      const u64 nf = p - f;
      const u64* src = rows_[r].data();
      for (std::size_t c = pivots_[r]; c < cols_; ++c)
        if (src[c]) row[c] = mont_.add(row[c], mont_.mul(nf, src[c]));
    }
    std::size_t pc = 0;
    while (pc < cols_ && row[pc] == 0) ++pc;
    if (pc == cols_) return false;
    const u64 inv = mont_.inv(row[pc]);
    for (std::size_t c = pc; c < cols_; ++c)
      if (row[c]) row[c] = mont_.mul(row[c], inv);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const u64 f = rows_[r][pc];
      if (f == 0) continue;
      const u64 nf = p - f;
      u64* dst = rows_[r].data();
      for (std::size_t c = pc; c < cols_; ++c)
        if (row[c]) dst[c] = mont_.add(dst[c], mont_.mul(nf, row[c]));
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pc);
    tags_.push_back(tag);
    return true;
  }

  u64 modulus() const { return mont_.modulus(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<int>& tags() const { return tags_; }

  /// Kernel basis as plain residues, one vector per free column.
  std::vector<std::vector<u64>> nullspace() const {
    std::vector<char> is_pivot(cols_, 0);
    for (auto pc : pivots_) is_pivot[pc] = 1;
    std::vector<std::vector<u64>> out;
    const u64 p = mont_.modulus();
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<u64> v(cols_, 0);
      v[f] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const u64 x = mont_.from_mont(rows_[r][f]);
        v[pivots_[r]] = x == 0 ? 0 : p - x;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  Montgomery mont_;
  std::size_t cols_;
  std::vector<std::vector<u64>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> tags_;
};

/// Smallest-magnitude a/b with a = b r mod m, |a|, |b| <= sqrt(m/2); nullopt
/// if none exists.
inline std::optional<Rational> rational_reconstruct(const mpz_class& r, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = r % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    const mpz_class quotient = r0 / r1;
    mpz_class tmp = r0 - quotient * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quotient * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

/// Chinese remaindering of a vector of residues, accumulated prime by prime.
class CrtAccumulator {
 public:
  void add(u64 p, const std::vector<u64>& residues) {
    if (!values_.empty() && residues.size() != values_.size()) throw ConfigError("CRT length mismatch");
    const mpz_class pz = to_mpz(p);
    if (values_.empty()) {
      for (auto r : residues) values_.push_back(to_mpz(r));
      modulus_ = pz;
      ++primes_;
      return;
    }
    // x = v + M * ((r - v) * M^{-1} mod p)
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), modulus_.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < residues.size(); ++i) {
      mpz_class t = (to_mpz(residues[i]) - values_[i]) * minv;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
      values_[i] += modulus_ * t;
    }
    modulus_ *= pz;
    ++primes_;
  }

  /// Rational reconstruction of every entry; nullopt if any entry fails.
  std::optional<std::vector<Rational>> reconstruct() const {
    std::vector<Rational> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
      auto r = rational_reconstruct(v, modulus_);
      if (!r) return std::nullopt;
      out.push_back(*r);
    }
    return out;
  }

  std::size_t primes() const { return primes_; }
  std::size_t modulus_bits() const { return mpz_sizeinbase(modulus_.get_mpz_t(), 2); }

 private:
  static mpz_class to_mpz(u64 x) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &x);
    return z;
  }

  std::vector<mpz_class> values_;
  mpz_class modulus_{1};
  std::size_t primes_ = 0;
};

/// Residue of a rational modulo p; throws NonInvertible if p divides the denominator.
inline u64 reduce_mod(const Rational& x, u64 p) {
  ModulusScope scope(p);
  return ModP::from_rational(x).residue();
}

}  // namespace v19
