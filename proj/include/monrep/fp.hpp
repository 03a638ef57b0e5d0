// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_FP_HPP
#define MONREP_FP_HPP

#include <cstdint>

#include "error.hpp"

namespace monrep {

//! Arithmetic in the prime field F_p for a runtime modulus p < 2^31.
//! Elements are canonical residues in [0, p).  Products of two residues fit
//! in 64 bits, so a single reduction after each multiply is exact.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) {
      throw ParseError("modulus " + std::to_string(p) + " is not prime");
    }
    if (p >= (std::uint64_t{1} << 31)) {
      throw ParseError("modulus " + std::to_string(p) + " exceeds 2^31 - 1");
    }
  }

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % p_;
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  //! Inverse of a nonzero residue via the extended Euclidean algorithm.
  std::uint64_t inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw Error("division by zero in F_p");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_);
    std::int64_t new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(t);
  }

  //! Canonical residue of a possibly negative integer.
  std::uint64_t from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(m);
  }

  bool operator==(PrimeField const& other) const = default;

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint64_t p_;
};

}  // namespace monrep

#endif  // MONREP_FP_HPP
