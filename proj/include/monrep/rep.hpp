// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_REP_HPP
#define MONREP_REP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "monrep/error.hpp"
#include "monrep/fp.hpp"
#include "monrep/fp_matrix.hpp"
#include "monrep/monoid.hpp"
#include "monrep/rng.hpp"

namespace monrep {

//! A matrix representation of a finite monoid over a prime field.  Elements
//! act on column vectors from the left: m sends v to image(m) * v, and
//! image(m * x) = image(m) * image(x).
struct Representation {
  MonoidPtr monoid;
  PrimeField field;
  std::size_t dim = 0;
  std::vector<FpMatrix> images;  // one matrix per monoid element

  FpMatrix const& image(std::uint32_t x) const { return images[x]; }
};

namespace detail {

inline Representation rep_unchecked(MonoidPtr m, PrimeField f,
                                    std::vector<FpMatrix> images) {
  std::size_t const d = images.empty() ? 0 : images.front().rows();
  return Representation{std::move(m), f, d, std::move(images)};
}

}  // namespace detail

//! Number of element pairs above which the homomorphism check samples
//! instead of scanning exhaustively.
inline constexpr std::size_t rep_full_check_limit = 256;
inline constexpr std::size_t rep_sample_pairs = 1000;

//! Wrap per-element matrices as a representation, verifying the identity
//! image and multiplicativity.  Monoids with at most rep_full_check_limit
//! elements get a full scan; larger ones get rep_sample_pairs random pairs.
inline Representation representation_from_images(MonoidPtr m, PrimeField f,
                                                 std::vector<FpMatrix> images,
                                                 Rng& rng) {
  if (images.size() != m->size) {
    throw NotARepresentationError("expected one matrix per monoid element");
  }
  std::size_t const d = images.empty() ? 0 : images.front().rows();
  for (auto const& a : images) {
    if (a.rows() != d || a.cols() != d || !(a.field() == f)) {
      throw NotARepresentationError("matrices must be square of equal size");
    }
  }
  if (!images[m->identity].is_identity()) {
    throw NotARepresentationError("identity element must map to the identity");
  }
  auto check_pair = [&](std::uint32_t x, std::uint32_t y) {
    if (!(images[x] * images[y] == images[m->mul(x, y)])) {
      throw NotARepresentationError("product rule fails at (" +
                                    std::to_string(x) + ", " +
                                    std::to_string(y) + ")");
    }
  };
  if (m->size <= rep_full_check_limit) {
    for (std::uint32_t x = 0; x < m->size; ++x) {
      for (std::uint32_t y = 0; y < m->size; ++y) check_pair(x, y);
    }
  } else {
    for (std::size_t t = 0; t < rep_sample_pairs; ++t) {
      check_pair(static_cast<std::uint32_t>(rng.below(m->size)),
                 static_cast<std::uint32_t>(rng.below(m->size)));
    }
  }
  return detail::rep_unchecked(std::move(m), f, std::move(images));
}

//! The one-dimensional representation sending every element to 1.
inline Representation trivial_representation(MonoidPtr m, PrimeField f) {
  std::vector<FpMatrix> images(m->size, FpMatrix::identity(1, f));
  return detail::rep_unchecked(std::move(m), f, std::move(images));
}

//! Left regular representation on the monoid algebra: image(x) maps the
//! basis vector e_y to e_{x*y}.
inline Representation regular_representation(MonoidPtr m, PrimeField f) {
  std::vector<FpMatrix> images;
  images.reserve(m->size);
  for (std::uint32_t x = 0; x < m->size; ++x) {
    FpMatrix a(m->size, m->size, f);
    for (std::uint32_t y = 0; y < m->size; ++y) a.at(m->mul(x, y), y) = 1;
    images.push_back(std::move(a));
  }
  return detail::rep_unchecked(std::move(m), f, std::move(images));
}

//! Block-diagonal sum of two representations of the same monoid.
inline Representation direct_sum(Representation const& a,
                                 Representation const& b) {
  if (a.monoid->size != b.monoid->size || !(a.field == b.field)) {
    throw NotARepresentationError("direct sum needs one monoid and one field");
  }
  std::vector<FpMatrix> images;
  images.reserve(a.images.size());
  for (std::uint32_t x = 0; x < a.monoid->size; ++x) {
    FpMatrix s(a.dim + b.dim, a.dim + b.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t j = 0; j < a.dim; ++j) s.at(i, j) = a.images[x].at(i, j);
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
      for (std::size_t j = 0; j < b.dim; ++j) {
        s.at(a.dim + i, a.dim + j) = b.images[x].at(i, j);
      }
    }
    images.push_back(std::move(s));
  }
  return detail::rep_unchecked(a.monoid, a.field, std::move(images));
}

//! Conjugate of a representation by an invertible matrix s.
inline Representation conjugated_representation(Representation const& rep,
                                                FpMatrix const& s) {
  auto s_inv = inverse(s);
  if (!s_inv) throw Error("conjugating matrix is singular");
  std::vector<FpMatrix> images;
  images.reserve(rep.images.size());
  for (auto const& a : rep.images) images.push_back(s * a * *s_inv);
  return detail::rep_unchecked(rep.monoid, rep.field, std::move(images));
}

//! Restriction along a submonoid embedding: the local element i acts as the
//! ambient element emb.elements[i] did.
inline Representation restrict_representation(Representation const& rep,
                                              SubmonoidEmbedding const& emb) {
  std::vector<FpMatrix> images;
  images.reserve(emb.elements.size());
  for (std::uint32_t g : emb.elements) images.push_back(rep.image(g));
  return detail::rep_unchecked(std::make_shared<Monoid const>(emb.local),
                               rep.field, std::move(images));
}

// ---------------------------------------------------------------------------
// The convolution algebra of functions M -> F_p.  A function is stored as a
// coefficient vector of length |M| indexed by element.

//! The function supported on one element with value 1.
inline FpVector indicator(Monoid const& m, std::uint32_t x) {
  FpVector f(m.size, 0);
  f.at(x) = 1;
  return f;
}

//! Convolution: (phi * psi)(m) = sum over factorizations yz = m of
//! phi(y) psi(z), by the direct double loop.
inline FpVector convolve(Monoid const& m, PrimeField f, FpVector const& phi,
                         FpVector const& psi) {
  if (phi.size() != m.size || psi.size() != m.size) {
    throw Error("convolution operands must have length |M|");
  }
  FpVector out(m.size, 0);
  for (std::uint32_t y = 0; y < m.size; ++y) {
    if (phi[y] == 0) continue;
    for (std::uint32_t z = 0; z < m.size; ++z) {
      if (psi[z] == 0) continue;
      std::uint32_t const yz = m.mul(y, z);
      out[yz] = f.add(out[yz], f.mul(phi[y], psi[z]));
    }
  }
  return out;
}

//! Extend a representation linearly to the algebra:
//! apply_algebra(rep, phi) = sum over x of phi(x) image(x).
inline FpMatrix apply_algebra(Representation const& rep, FpVector const& phi) {
  if (phi.size() != rep.monoid->size) {
    throw Error("algebra element must have length |M|");
  }
  FpMatrix out(rep.dim, rep.dim, rep.field);
  for (std::uint32_t x = 0; x < rep.monoid->size; ++x) {
    if (phi[x] == 0) continue;
    out = out + scaled(rep.image(x), phi[x]);
  }
  return out;
}

//! True when phi(k1 * x * k2) = phi(x) for all k1, k2 in k.
inline bool is_bi_invariant(Monoid const& m, Subgroup const& k,
                            FpVector const& phi) {
  for (std::uint32_t x = 0; x < m.size; ++x) {
    for (std::uint32_t k1 : k.elements) {
      for (std::uint32_t k2 : k.elements) {
        if (phi[m.mul(m.mul(k1, x), k2)] != phi[x]) return false;
      }
    }
  }
  return true;
}

//! Two-sided average over k: the nearest bi-invariant function,
//! phi_k(x) = |K|^-2 sum over (k1,k2) of phi(k1 x k2).  Fixes bi-invariant
//! inputs pointwise.
inline FpVector average_to_bi_invariant(Monoid const& m, Subgroup const& k,
                                        PrimeField f, FpVector const& phi) {
  if (k.size() % f.modulus() == 0) throw CharDividesSubgroupError(f.modulus(), k.size());
  std::uint64_t const inv_k = f.inv(k.size() % f.modulus());
  std::uint64_t const scale = f.mul(inv_k, inv_k);
  FpVector out(m.size, 0);
  for (std::uint32_t x = 0; x < m.size; ++x) {
    std::uint64_t acc = 0;
    for (std::uint32_t k1 : k.elements) {
      std::uint32_t const k1x = m.mul(k1, x);
      for (std::uint32_t k2 : k.elements) {
        acc = f.add(acc, phi[m.mul(k1x, k2)]);
      }
    }
    out[x] = f.mul(scale, acc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixed spaces and the averaging projector.

//! The projector e_K = |K|^-1 sum over k of image(k).  Idempotent; its
//! column space is the fixed space V^K.
inline FpMatrix averaging_projector(Representation const& rep,
                                    Subgroup const& k) {
  PrimeField const f = rep.field;
  if (k.size() % f.modulus() == 0) throw CharDividesSubgroupError(f.modulus(), k.size());
  FpMatrix sum(rep.dim, rep.dim, f);
  for (std::uint32_t g : k.elements) sum = sum + rep.image(g);
  return scaled(sum, f.inv(k.size() % f.modulus()));
}

//! Columns spanning V^K = {v : image(k) v = v for all k in K}, obtained as
//! the column space of the averaging projector.
inline FpMatrix fixed_space(Representation const& rep, Subgroup const& k) {
  return column_space(averaging_projector(rep, k));
}

// ---------------------------------------------------------------------------
// Dual-side machinery.  Functionals are row vectors with the pairing
// <v, vhat> = vhat . v.

//! Contragredient of the restriction to a unit subgroup: g acts on the dual
//! by the transpose of image(g^-1).  Returned over the subgroup's own
//! monoid structure (local index i is subgroup element g.elements[i]).
inline Representation contragredient_restricted(Representation const& rep,
                                                Subgroup const& g) {
  SubmonoidEmbedding emb = submonoid_from_subgroup(*rep.monoid, g);
  std::vector<FpMatrix> images;
  images.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    images.push_back(transpose(rep.image(g.inverses[i])));
  }
  return detail::rep_unchecked(std::make_shared<Monoid const>(emb.local),
                               rep.field, std::move(images));
}

//! The coefficient <image(m) v, vhat> = vhat . image(m) . v.
inline std::uint64_t matrix_coefficient(Representation const& rep,
                                        FpVector const& v, FpVector const& vhat,
                                        std::uint32_t m) {
  FpVector const iv = rep.image(m) * v;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    acc = rep.field.add(acc, rep.field.mul(vhat[i], iv[i]));
  }
  return acc;
}

//! The coefficient function of a vector/functional pair over all of M.
inline FpVector coefficient_function(Representation const& rep,
                                     FpVector const& v, FpVector const& vhat) {
  FpVector out(rep.monoid->size, 0);
  for (std::uint32_t m = 0; m < rep.monoid->size; ++m) {
    out[m] = matrix_coefficient(rep, v, vhat, m);
  }
  return out;
}

//! Extend a functional given on the fixed space to a K-fixed functional on
//! all of V: pick any extension vhat0 and average it through the dual action,
//! which amounts to vhat0 composed with the projector e_K.
//! `on_fixed` lists the required values on the columns of `fixed_basis`.
inline FpVector extend_functional(Representation const& rep, Subgroup const& k,
                                  FpMatrix const& fixed_basis,
                                  FpVector const& on_fixed) {
  if (on_fixed.size() != fixed_basis.cols()) {
    throw Error("one prescribed value per fixed-space basis vector required");
  }
  // vhat0 . fixed_basis = on_fixed, i.e. transpose(fixed_basis) x = on_fixed
  auto sol = solve_linear(transpose(fixed_basis), on_fixed);
  if (!sol) throw Error("fixed-space basis is not independent");
  FpVector const vhat0 = sol->particular;
  return vec_mul(vhat0, averaging_projector(rep, k));
}

// ---------------------------------------------------------------------------
// Random elements used by property checks.

inline FpVector random_vector(std::size_t n, PrimeField f, Rng& rng) {
  FpVector v(n);
  for (auto& x : v) x = rng.below(f.modulus());
  return v;
}

inline FpMatrix random_matrix(std::size_t rows, std::size_t cols, PrimeField f,
                              Rng& rng) {
  FpMatrix a(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rng.below(f.modulus());
  }
  return a;
}

inline FpMatrix random_invertible(std::size_t n, PrimeField f, Rng& rng) {
  for (;;) {
    FpMatrix a = random_matrix(n, n, f, rng);
    if (rank(a) == n) return a;
  }
}

}  // namespace monrep

#endif  // MONREP_REP_HPP
