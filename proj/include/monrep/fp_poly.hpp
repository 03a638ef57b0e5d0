// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_FP_POLY_HPP
#define MONREP_FP_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fp.hpp"
#include "fp_matrix.hpp"
#include "rng.hpp"

namespace monrep {

//! Dense univariate polynomial over F_p.  Coefficients are stored low degree
//! first with no trailing zeros; the zero polynomial has an empty vector and
//! degree -1.
class FpPoly {
 public:
  explicit FpPoly(PrimeField field) : field_(field) {}

  FpPoly(PrimeField field, std::vector<std::uint64_t> coeffs)
      : field_(field), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= field_.modulus();
    trim();
  }

  static FpPoly zero(PrimeField f) { return FpPoly(f); }

  static FpPoly constant(PrimeField f, std::uint64_t v) {
    return FpPoly(f, {v});
  }

  static FpPoly x(PrimeField f) { return FpPoly(f, {0, 1}); }

  PrimeField field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  std::uint64_t coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : 0;
  }

  std::uint64_t lead() const {
    if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  FpPoly monic() const {
    if (is_zero()) return *this;
    std::uint64_t const inv = field_.inv(lead());
    std::vector<std::uint64_t> r(c_);
    for (auto& v : r) v = field_.mul(v, inv);
    return FpPoly(field_, std::move(r));
  }

  FpPoly derivative() const {
    if (c_.size() <= 1) return FpPoly(field_);
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r[i - 1] = field_.mul(c_[i], i % field_.modulus());
    }
    return FpPoly(field_, std::move(r));
  }

  bool operator==(FpPoly const& other) const {
    return field_ == other.field_ && c_ == other.c_;
  }

  //! Total order by degree, then coefficients from the top down.  Used only
  //! to make factor lists and dedup keys deterministic.
  bool operator<(FpPoly const& other) const {
    if (c_.size() != other.c_.size()) return c_.size() < other.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] != other.c_[i]) return c_[i] < other.c_[i];
    }
    return false;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeField field_;
  std::vector<std::uint64_t> c_;

  friend FpPoly operator+(FpPoly const& a, FpPoly const& b);
  friend FpPoly operator-(FpPoly const& a, FpPoly const& b);
  friend FpPoly operator*(FpPoly const& a, FpPoly const& b);
};

inline FpPoly operator+(FpPoly const& a, FpPoly const& b) {
  PrimeField const f = a.field();
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.add(a.coeff(i), b.coeff(i));
  }
  return FpPoly(f, std::move(r));
}

inline FpPoly operator-(FpPoly const& a, FpPoly const& b) {
  PrimeField const f = a.field();
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.sub(a.coeff(i), b.coeff(i));
  }
  return FpPoly(f, std::move(r));
}

inline FpPoly operator*(FpPoly const& a, FpPoly const& b) {
  PrimeField const f = a.field();
  if (a.is_zero() || b.is_zero()) return FpPoly(f);
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % f.modulus();
    }
  }
  return FpPoly(f, std::move(r));
}

inline FpPoly operator*(std::uint64_t c, FpPoly const& a) {
  return FpPoly::constant(a.field(), c) * a;
}

//! Long division: returns (quotient, remainder) with deg rem < deg divisor.
inline std::pair<FpPoly, FpPoly> divmod(FpPoly const& a, FpPoly const& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  PrimeField const f = a.field();
  std::vector<std::uint64_t> rem(static_cast<std::size_t>(a.degree() + 1));
  for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = a.coeff(i);
  int const db = b.degree();
  if (a.degree() < db) return {FpPoly(f), a};
  std::vector<std::uint64_t> quot(
      static_cast<std::size_t>(a.degree() - db + 1), 0);
  std::uint64_t const lead_inv = f.inv(b.lead());
  for (int k = a.degree() - db; k >= 0; --k) {
    std::uint64_t const c =
        f.mul(rem[static_cast<std::size_t>(k + db)], lead_inv);
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(k + j)];
      r = f.sub(r, f.mul(c, b.coeff(static_cast<std::size_t>(j))));
    }
  }
  return {FpPoly(f, std::move(quot)), FpPoly(f, std::move(rem))};
}

inline bool divides(FpPoly const& d, FpPoly const& a) {
  return divmod(a, d).second.is_zero();
}

inline FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

inline FpPoly lcm(FpPoly const& a, FpPoly const& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.field());
  FpPoly const g = gcd(a, b);
  return (divmod(a, g).first * b).monic();
}

inline FpPoly poly_mod(FpPoly const& a, FpPoly const& m) {
  return divmod(a, m).second;
}

inline FpPoly pow_mod(FpPoly base, std::uint64_t e, FpPoly const& m) {
  FpPoly r = poly_mod(FpPoly::constant(base.field(), 1), m);
  base = poly_mod(base, m);
  while (e > 0) {
    if (e & 1) r = poly_mod(r * base, m);
    base = poly_mod(base * base, m);
    e >>= 1;
  }
  return r;
}

//! Evaluate a polynomial at a square matrix (Horner scheme).
inline FpMatrix eval_at_matrix(FpPoly const& poly, FpMatrix const& a) {
  if (a.rows() != a.cols()) throw Error("polynomial of a non-square matrix");
  std::size_t const n = a.rows();
  FpMatrix r(n, n, a.field());
  if (poly.is_zero()) return r;
  for (int i = poly.degree(); i >= 0; --i) {
    r = r * a;
    std::uint64_t const c = poly.coeff(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < n; ++k) {
      r.at(k, k) = a.field().add(r.at(k, k), c);
    }
  }
  return r;
}

//! Minimal polynomial by Krylov chains: the lcm over a spanning set of start
//! vectors of the first linear dependence among v, Av, A^2 v, ...
inline FpPoly matrix_min_poly(FpMatrix const& a) {
  if (a.rows() != a.cols()) throw Error("minimal polynomial of a non-square matrix");
  PrimeField const f = a.field();
  std::size_t const d = a.rows();
  if (d == 0) return FpPoly::constant(f, 1);
  FpPoly m = FpPoly::constant(f, 1);
  EchelonSpace covered(d, f);
  for (std::size_t s = 0; s < d && static_cast<std::size_t>(m.degree()) < d;
       ++s) {
    FpVector start(d, 0);
    start[s] = 1;
    if (covered.contains(start)) continue;
    // Krylov chain with coefficient history: rows[r] is a reduced combination
    // of the original chain vectors, hist[r] records the combination.
    std::vector<FpVector> rows, hist;
    std::vector<std::size_t> pivots;
    std::vector<FpVector> chain;
    FpVector v = start;
    for (;;) {
      std::size_t const k = chain.size();
      chain.push_back(v);
      FpVector w = v;
      FpVector h(k + 1, 0);
      h[k] = 1;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint64_t const t = w[pivots[r]];
        if (t == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
          w[j] = f.sub(w[j], f.mul(t, rows[r][j]));
        }
        for (std::size_t j = 0; j < hist[r].size(); ++j) {
          h[j] = f.sub(h[j], f.mul(t, hist[r][j]));
        }
      }
      std::size_t lead = d;
      for (std::size_t j = 0; j < d; ++j) {
        if (w[j] != 0) {
          lead = j;
          break;
        }
      }
      if (lead == d) {
        // dependence found: h gives the relative minimal polynomial
        m = lcm(m, FpPoly(f, std::move(h)));
        break;
      }
      std::uint64_t const inv = f.inv(w[lead]);
      for (auto& x : w) x = f.mul(x, inv);
      for (auto& x : h) x = f.mul(x, inv);
      rows.push_back(std::move(w));
      hist.push_back(std::move(h));
      pivots.push_back(lead);
      v = a * chain[k];
    }
    for (auto const& c : chain) covered.insert(c);
  }
  return m.monic();
}

//! Characteristic polynomial via similarity reduction to Hessenberg form and
//! the standard leading-minor recurrence.
inline FpPoly matrix_char_poly(FpMatrix const& a) {
  if (a.rows() != a.cols()) throw Error("characteristic polynomial of a non-square matrix");
  PrimeField const f = a.field();
  std::size_t const d = a.rows();
  if (d == 0) return FpPoly::constant(f, 1);
  FpMatrix h = a;
  for (std::size_t j = 0; j + 2 < d; ++j) {
    std::size_t sel = d;
    for (std::size_t i = j + 1; i < d; ++i) {
      if (h.at(i, j) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == d) continue;
    if (sel != j + 1) {
      for (std::size_t k = 0; k < d; ++k) std::swap(h.at(sel, k), h.at(j + 1, k));
      for (std::size_t k = 0; k < d; ++k) std::swap(h.at(k, sel), h.at(k, j + 1));
    }
    std::uint64_t const inv = f.inv(h.at(j + 1, j));
    for (std::size_t i = j + 2; i < d; ++i) {
      std::uint64_t const t = f.mul(h.at(i, j), inv);
      if (t == 0) continue;
      for (std::size_t k = 0; k < d; ++k) {
        h.at(i, k) = f.sub(h.at(i, k), f.mul(t, h.at(j + 1, k)));
      }
      for (std::size_t k = 0; k < d; ++k) {
        h.at(k, j + 1) = f.add(h.at(k, j + 1), f.mul(t, h.at(k, i)));
      }
    }
  }
  std::vector<FpPoly> p;
  p.push_back(FpPoly::constant(f, 1));
  FpPoly const x = FpPoly::x(f);
  for (std::size_t k = 1; k <= d; ++k) {
    FpPoly pk = (x - FpPoly::constant(f, h.at(k - 1, k - 1))) * p[k - 1];
    std::uint64_t prod = 1;
    for (std::size_t m = k - 1; m >= 1; --m) {
      prod = f.mul(prod, h.at(m, m - 1));
      if (prod == 0) break;
      std::uint64_t const c = f.mul(h.at(m - 1, k - 1), prod);
      if (c != 0) pk = pk - c * p[m - 1];
    }
    p.push_back(pk);
  }
  return p[d];
}

namespace detail {

inline FpPoly random_poly_below(std::size_t deg_bound, PrimeField f,
                                Rng& rng) {
  std::vector<std::uint64_t> c(deg_bound);
  for (auto& v : c) v = rng.below(f.modulus());
  return FpPoly(f, std::move(c));
}

//! Cantor-Zassenhaus equal-degree splitting: g is a monic squarefree product
//! of distinct irreducible factors, all of degree d.
inline void equal_degree_split(FpPoly const& g, std::size_t d, Rng& rng,
                               std::vector<FpPoly>& out) {
  if (static_cast<std::size_t>(g.degree()) == d) {
    out.push_back(g.monic());
    return;
  }
  PrimeField const f = g.field();
  std::uint64_t const p = f.modulus();
  for (;;) {
    FpPoly const r =
        random_poly_below(static_cast<std::size_t>(g.degree()), f, rng);
    if (r.degree() < 1) continue;
    FpPoly t(f);
    if (p == 2) {
      // trace map of F_{2^d} over F_2
      FpPoly u = poly_mod(r, g);
      t = u;
      for (std::size_t i = 1; i < d; ++i) {
        u = poly_mod(u * u, g);
        t = t + u;
      }
    } else {
      // norm to F_p followed by the quadratic character
      FpPoly n = poly_mod(r, g);
      FpPoly acc = n;
      for (std::size_t i = 1; i < d; ++i) {
        acc = poly_mod(pow_mod(acc, p, g) * n, g);
      }
      t = pow_mod(acc, (p - 1) / 2, g) - FpPoly::constant(f, 1);
    }
    FpPoly const s = gcd(t, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree_split(s, d, rng, out);
      equal_degree_split(divmod(g, s).first.monic(), d, rng, out);
      return;
    }
  }
}

//! Distinct-degree decomposition followed by equal-degree splitting.
inline void factor_squarefree(FpPoly const& s, Rng& rng,
                              std::vector<FpPoly>& out) {
  PrimeField const f = s.field();
  std::uint64_t const p = f.modulus();
  FpPoly v = s.monic();
  FpPoly h = poly_mod(FpPoly::x(f), v);
  std::size_t d = 0;
  while (v.degree() > 0) {
    ++d;
    if (2 * d > static_cast<std::size_t>(v.degree())) {
      out.push_back(v.monic());
      break;
    }
    h = pow_mod(h, p, v);
    FpPoly const g = gcd(h - FpPoly::x(f), v);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      v = divmod(v, g).first;
      h = poly_mod(h, v);
    }
  }
}

inline void factor_rec(FpPoly f, int mult, Rng& rng,
                       std::map<FpPoly, int>& acc) {
  if (f.degree() <= 0) return;
  PrimeField const field = f.field();
  std::uint64_t const p = field.modulus();
  FpPoly const df = f.derivative();
  if (df.is_zero()) {
    // f(x) = g(x^p) = (g*)(x)^p with identical coefficients over F_p
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree() / p) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = f.coeff(i * static_cast<std::size_t>(p));
    }
    factor_rec(FpPoly(field, std::move(c)), mult * static_cast<int>(p), rng,
               acc);
    return;
  }
  FpPoly const d = gcd(f, df);
  FpPoly const s = divmod(f, d).first;
  std::vector<FpPoly> irr;
  factor_squarefree(s, rng, irr);
  for (auto const& q : irr) {
    int e = 0;
    for (;;) {
      auto [quot, rem] = divmod(f, q);
      if (!rem.is_zero()) break;
      f = quot;
      ++e;
    }
    acc[q] += mult * e;
  }
  factor_rec(f, mult, rng, acc);
}

}  // namespace detail

//! Full factorisation into monic irreducibles with multiplicities, sorted by
//! (degree, coefficients) so the result is deterministic for a fixed seed.
inline std::vector<std::pair<FpPoly, int>> factor(FpPoly const& f, Rng& rng) {
  if (f.is_zero()) throw Error("cannot factor the zero polynomial");
  std::map<FpPoly, int> acc;
  detail::factor_rec(f.monic(), 1, rng, acc);
  return {acc.begin(), acc.end()};
}

}  // namespace monrep

#endif  // MONREP_FP_POLY_HPP
