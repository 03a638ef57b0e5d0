// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_ENTRY_FIELD_HPP
#define MONREP_ENTRY_FIELD_HPP

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace monrep {

//! The finite field F_q for q in {2,3,4,5,7,8,9}, used only for the entries
//! of matrix monoids (coefficient fields are always prime).  Elements are
//! indices 0..q-1 encoding polynomial coefficient vectors in base p, so 0 is
//! zero and 1 is one in every supported field.  Fixed reduction polynomials:
//! F4: x^2+x+1, F8: x^3+x+1, F9: x^2+1.  The field axioms are checked
//! exhaustively at construction for the extension fields.
class EntryField {
 public:
  static EntryField make(std::uint32_t q) {
    switch (q) {
      case 2: return EntryField(2, 1, {});
      case 3: return EntryField(3, 1, {});
      case 4: return EntryField(2, 2, {1, 1});
      case 5: return EntryField(5, 1, {});
      case 7: return EntryField(7, 1, {});
      case 8: return EntryField(2, 3, {1, 1, 0});
      case 9: return EntryField(3, 2, {1, 0});
      default:
        throw ParseError("unsupported entry field order "
                         + std::to_string(q));
    }
  }

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_[a * q_ + b];
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * q_ + b];
  }

  bool valid(std::uint64_t e) const { return e < q_; }

 private:
  EntryField(std::uint32_t p, std::uint32_t k,
             std::vector<std::uint32_t> reduction)
      : p_(p), k_(k), q_(1) {
    for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_[a * q_ + b] = add_digits(a, b);
        mul_[a * q_ + b] = mul_digits(a, b, reduction);
      }
    }
    if (k_ > 1) check_axioms();
  }

  std::vector<std::uint32_t> digits(std::uint32_t e) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      d[i] = e % p_;
      e /= p_;
    }
    return d;
  }

  std::uint32_t undigits(std::vector<std::uint32_t> const& d) const {
    std::uint32_t e = 0;
    for (std::uint32_t i = k_; i-- > 0;) e = e * p_ + d[i];
    return e;
  }

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da);
  }

  std::uint32_t mul_digits(std::uint32_t a, std::uint32_t b,
                           std::vector<std::uint32_t> const& reduction) const {
    auto const da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      for (std::uint32_t j = 0; j < k_; ++j) {
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
    }
    // reduce with x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1})
    for (std::uint32_t i = 2 * k_ - 2; i >= k_ && i < prod.size(); --i) {
      std::uint32_t const c = prod[i];
      if (c != 0) {
        prod[i] = 0;
        for (std::uint32_t j = 0; j < k_; ++j) {
          std::uint32_t const sub = (c * reduction[j]) % p_;
          prod[i - k_ + j] = (prod[i - k_ + j] + p_ - sub) % p_;
        }
      }
      if (i == k_) break;
    }
    prod.resize(k_);
    return undigits(prod);
  }

  void check_axioms() const {
    for (std::uint32_t a = 0; a < q_; ++a) {
      if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) {
        throw Error("entry field unit laws failed");
      }
      bool has_inv = a == 0;
      for (std::uint32_t b = 0; b < q_; ++b) {
        if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) {
          throw Error("entry field commutativity failed");
        }
        if (a != 0 && mul(a, b) == 1) has_inv = true;
        for (std::uint32_t c = 0; c < q_; ++c) {
          if (mul(a, mul(b, c)) != mul(mul(a, b), c)
              || add(a, add(b, c)) != add(add(a, b), c)
              || mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
            throw Error("entry field ring axioms failed");
          }
        }
      }
      if (!has_inv) throw Error("entry field has a non-invertible nonzero element");
    }
  }

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> add_, mul_;
};

}  // namespace monrep

#endif  // MONREP_ENTRY_FIELD_HPP
