#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>

#include "v19/errors.hpp"
#include "v19/rational.hpp"

namespace v19 {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Element of Z/pZ for the prime installed by the innermost ModulusScope on
/// the calling thread. Residues are kept in [0, p).
class ModP {
 public:
  ModP() = default;
  ModP(long long v) : v_(reduce_signed(v)) {}  // NOLINT: implicit like mpq_class

  static u64 modulus() { return modulus_ref(); }
  static ModP from_residue(u64 r) {
    ModP x;
    x.v_ = r % modulus();
    return x;
  }

  u64 residue() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP& operator+=(const ModP& o) {
    const u64 p = modulus();
    v_ += o.v_;
    if (v_ >= p) v_ -= p;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    v_ = static_cast<u64>(static_cast<u128>(v_) * o.v_ % modulus());
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  ModP inverse() const {
    if (v_ == 0) throw NonInvertible("division by zero modulo " + std::to_string(modulus()));
    // extended Euclid on signed 128-bit
    __int128 t = 0, new_t = 1;
    __int128 r = modulus(), new_r = v_;
    while (new_r != 0) {
      const __int128 quotient = r / new_r;
      const __int128 tt = t - quotient * new_t;
      t = new_t;
      new_t = tt;
      const __int128 rr = r - quotient * new_r;
      r = new_r;
      new_r = rr;
    }
    if (t < 0) t += modulus();
    ModP out;
    out.v_ = static_cast<u64>(t);
    return out;
  }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const { return ModP() - *this; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ModP& a, const ModP& b) { return a.v_ != b.v_; }
  // Arbitrary total order so residues can key ordered containers.
  friend bool operator<(const ModP& a, const ModP& b) { return a.v_ < b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.v_; }

  /// num * den^{-1} mod p. Throws NonInvertible if p divides den.
  static ModP from_rational(const Rational& r) {
    const u64 p = modulus();
    const u64 n = mpz_fdiv_ui(r.get_num_mpz_t(), p);
    const u64 d = mpz_fdiv_ui(r.get_den_mpz_t(), p);
    if (d == 0) throw NonInvertible("denominator vanishes modulo " + std::to_string(p));
    return from_residue(n) / from_residue(d);
  }

 private:
  friend class ModulusScope;
  static u64& modulus_ref() {
    thread_local u64 p = 0;
    return p;
  }
  static u64 reduce_signed(long long v) {
    const u64 p = modulus();
    if (p == 0) throw std::logic_error("ModP used without an active ModulusScope");
    const long long m = v % static_cast<long long>(p);
    return static_cast<u64>(m < 0 ? m + static_cast<long long>(p) : m);
  }

  u64 v_ = 0;
};

/// Installs a modulus for ModP on this thread; restores the previous one on exit.
class ModulusScope {
 public:
  explicit ModulusScope(u64 p) : saved_(ModP::modulus_ref()) { ModP::modulus_ref() = p; }
  ~ModulusScope() { ModP::modulus_ref() = saved_; }
  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  u64 saved_;
};

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Uniformly chosen prime in [2^61, 2^62).
inline u64 random_prime_62(std::mt19937_64& rng) {
  for (;;) {
    const u64 candidate = (rng() >> 2) | (u64{1} << 61) | 1;
    if (is_prime_u64(candidate)) return candidate;
  }
}

}  // namespace v19
