// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_INDUCTION_HPP
#define MONREP_INDUCTION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monrep/error.hpp"
#include "monrep/fp_matrix.hpp"
#include "monrep/meataxe.hpp"
#include "monrep/monoid.hpp"
#include "monrep/rep.hpp"
#include "monrep/report.hpp"

namespace monrep {

//! The module of equivariant functions f: M -> V with f(n x) = pi(n) f(x)
//! for every n in the submonoid, under right translation of the argument by
//! the ambient monoid.  Functions are stacked coordinate vectors ordered by
//! (element index, value coordinate); `basis` columns span the solutions.
struct InducedModule {
  Representation rep;  // right-translation action in the solution basis
  FpMatrix basis;      // (|M| * value_dim) x rep.dim
  std::size_t value_dim = 0;
};

inline InducedModule induce(MonoidPtr m, SubmonoidEmbedding const& sub,
                            Representation const& v, Rng& rng) {
  if (v.monoid->size != sub.local.size) {
    throw Error("the induced representation needs a module over the submonoid");
  }
  PrimeField const f = v.field;
  std::size_t const size = m->size;
  std::size_t const d = v.dim;

  // constraint rows ordered by (n, m, coordinate)
  FpMatrix system(sub.size() * size * d, size * d, f);
  std::size_t row = 0;
  for (std::size_t ln = 0; ln < sub.size(); ++ln) {
    std::uint32_t const an = sub.elements[ln];
    FpMatrix const& act = v.image(static_cast<std::uint32_t>(ln));
    for (std::uint32_t x = 0; x < size; ++x) {
      std::size_t const moved = m->mul(an, x);
      for (std::size_t i = 0; i < d; ++i, ++row) {
        std::size_t const lhs = moved * d + i;
        system.at(row, lhs) = f.add(system.at(row, lhs), 1);
        for (std::size_t j = 0; j < d; ++j) {
          std::size_t const rhs = x * d + j;
          system.at(row, rhs) = f.sub(system.at(row, rhs), act.at(i, j));
        }
      }
    }
  }

  FpMatrix basis = nullspace(system);
  std::size_t const ind_dim = basis.cols();
  std::vector<FpMatrix> images;
  images.reserve(size);
  for (std::uint32_t a = 0; a < size; ++a) {
    // (a . f)(x) = f(x a), written down on the basis columns
    FpMatrix translated(size * d, ind_dim, f);
    for (std::uint32_t x = 0; x < size; ++x) {
      std::size_t const from = m->mul(x, a) * d;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < ind_dim; ++c) {
          translated.at(x * d + i, c) = basis.at(from + i, c);
        }
      }
    }
    auto in_basis = solve_matrix(basis, translated);
    if (!in_basis) {
      throw Error("translation left the equivariant subspace (internal bug)");
    }
    images.push_back(std::move(*in_basis));
  }
  // full multiplicativity scan for small monoids happens inside
  Representation rep =
      representation_from_images(std::move(m), f, std::move(images), rng);
  return InducedModule{std::move(rep), std::move(basis), d};
}

//! Solutions T of T rho1(g) = rho2(g) T over a generating set; these are
//! exactly the homomorphisms from rho1 to rho2.
struct HomSpace {
  std::vector<FpMatrix> basis;
  std::size_t dim() const { return basis.size(); }
};

inline HomSpace hom_space(Representation const& from,
                          Representation const& to) {
  if (from.monoid->size != to.monoid->size ||
      from.field.modulus() != to.field.modulus()) {
    throw Error("hom spaces need two representations of one monoid");
  }
  GeneratingData const gd = generating_set(*from.monoid);
  std::vector<FpMatrix> a, b;
  a.reserve(gd.generators.size());
  b.reserve(gd.generators.size());
  for (auto g : gd.generators) {
    a.push_back(from.image(g));
    b.push_back(to.image(g));
  }
  return HomSpace{intertwiner_space(a, b, from.dim, to.dim, from.field)};
}

namespace detail {

inline FpVector vectorized(FpMatrix const& t) {
  FpVector v(t.rows() * t.cols(), 0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) v[i * t.cols() + j] = t.at(i, j);
  }
  return v;
}

//! Coordinates of t in the given basis of matrices; the basis is linearly
//! independent, so coordinates are unique when they exist.
inline FpVector coordinates_in(std::vector<FpMatrix> const& basis,
                               FpMatrix const& t, PrimeField f) {
  std::size_t const len = t.rows() * t.cols();
  FpMatrix stacked(len, basis.size(), f);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    FpVector const col = vectorized(basis[k]);
    for (std::size_t i = 0; i < len; ++i) stacked.at(i, k) = col[i];
  }
  auto solution = solve_linear(stacked, vectorized(t));
  if (!solution) {
    throw Error("matrix lies outside the hom space (internal bug)");
  }
  return solution->particular;
}

}  // namespace detail

//! The two adjunction maps between Hom_M(W, Ind V) and Hom_N(W|_N, V),
//! realized on explicit bases: evaluation at the identity goes forward,
//! right translation of the argument goes back.
struct FrobeniusMaps {
  InducedModule induced;
  std::vector<FpMatrix> hom_m;    // basis of Hom_M(W, Ind V)
  std::vector<FpMatrix> hom_n;    // basis of Hom_N(W restricted, V)
  std::vector<FpMatrix> f_images; // evaluation of each hom_m basis element
  std::vector<FpMatrix> g_images; // translation of each hom_n basis element
  FpMatrix forward;               // hom_n coordinates of each f_image
  FpMatrix backward;              // hom_m coordinates of each g_image
};

inline FrobeniusMaps frobenius_maps(MonoidPtr m, SubmonoidEmbedding const& sub,
                                    Representation const& v,
                                    Representation const& w, Rng& rng) {
  if (w.monoid->size != m->size) {
    throw Error("W must be a representation of the ambient monoid");
  }
  PrimeField const f = v.field;
  InducedModule ind = induce(m, sub, v, rng);
  Representation const w_sub = restrict_representation(w, sub);
  HomSpace hm = hom_space(w, ind.rep);
  HomSpace hn = hom_space(w_sub, v);

  std::uint32_t const id = ind.rep.monoid->identity;
  std::vector<FpMatrix> f_images;
  FpMatrix forward(hn.dim(), hm.dim(), f);
  for (std::size_t k = 0; k < hm.dim(); ++k) {
    // tau(w) evaluated at the identity: one block row of basis * tau
    FpMatrix const full = ind.basis * hm.basis[k];
    FpMatrix eval(ind.value_dim, w.dim, f);
    for (std::size_t i = 0; i < ind.value_dim; ++i) {
      for (std::size_t j = 0; j < w.dim; ++j) {
        eval.at(i, j) = full.at(id * ind.value_dim + i, j);
      }
    }
    FpVector const coords = detail::coordinates_in(hn.basis, eval, f);
    for (std::size_t i = 0; i < hn.dim(); ++i) forward.at(i, k) = coords[i];
    f_images.push_back(std::move(eval));
  }

  std::vector<FpMatrix> g_images;
  FpMatrix backward(hm.dim(), hn.dim(), f);
  for (std::size_t j = 0; j < hn.dim(); ++j) {
    // w |-> (m |-> phi(sigma(m) w)), stacked over m, then read in the
    // solution basis of the induced module
    FpMatrix stacked(m->size * ind.value_dim, w.dim, f);
    for (std::uint32_t x = 0; x < m->size; ++x) {
      FpMatrix const block = hn.basis[j] * w.image(x);
      for (std::size_t i = 0; i < ind.value_dim; ++i) {
        for (std::size_t c = 0; c < w.dim; ++c) {
          stacked.at(x * ind.value_dim + i, c) = block.at(i, c);
        }
      }
    }
    auto in_basis = solve_matrix(ind.basis, stacked);
    if (!in_basis) {
      throw Error("translated hom is not equivariant (internal bug)");
    }
    FpVector const coords = detail::coordinates_in(hm.basis, *in_basis, f);
    for (std::size_t i = 0; i < hm.dim(); ++i) backward.at(i, j) = coords[i];
    g_images.push_back(std::move(*in_basis));
  }

  return FrobeniusMaps{std::move(ind),      std::move(hm.basis),
                       std::move(hn.basis), std::move(f_images),
                       std::move(g_images), std::move(forward),
                       std::move(backward)};
}

//! Check that the two Hom spaces have equal dimension, that each adjunction
//! map lands where it should, and that the maps invert each other.
inline VerificationReport verify_frobenius_reciprocity(
    MonoidPtr m, SubmonoidEmbedding const& sub, Representation const& v,
    Representation const& w, Rng& rng) {
  FrobeniusMaps maps = frobenius_maps(m, sub, v, w, rng);
  VerificationReport report;
  report.instance = "|M| = " + std::to_string(m->size) +
                    ", |N| = " + std::to_string(sub.size()) +
                    ", dim V = " + std::to_string(v.dim) +
                    ", dim W = " + std::to_string(w.dim) +
                    ", p = " + std::to_string(v.field.modulus());

  report.add("the two Hom spaces have the same dimension",
             maps.hom_m.size() == maps.hom_n.size(),
             std::to_string(maps.hom_m.size()) + " vs " +
                 std::to_string(maps.hom_n.size()));

  Representation const w_sub = restrict_representation(w, sub);
  bool forward_lands = true;
  for (auto const& eval : maps.f_images) {
    for (std::uint32_t ln = 0; ln < sub.local.size && forward_lands; ++ln) {
      forward_lands = eval * w_sub.image(ln) == v.image(ln) * eval;
    }
  }
  report.add("evaluation at the identity intertwines the submonoid action",
             forward_lands, std::to_string(maps.f_images.size()) + " maps");

  bool backward_lands = true;
  for (auto const& tau : maps.g_images) {
    for (std::uint32_t x = 0; x < m->size && backward_lands; ++x) {
      backward_lands = tau * w.image(x) == maps.induced.rep.image(x) * tau;
    }
  }
  report.add("argument translation intertwines the full monoid action",
             backward_lands, std::to_string(maps.g_images.size()) + " maps");

  bool const inverse =
      (maps.forward * maps.backward).is_identity() &&
      (maps.backward * maps.forward).is_identity();
  report.add("the adjunction maps invert each other", inverse,
             "composites checked in both orders");
  return report;
}

}  // namespace monrep

#endif  // MONREP_INDUCTION_HPP
