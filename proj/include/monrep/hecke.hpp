// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_HECKE_HPP
#define MONREP_HECKE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "monrep/error.hpp"
#include "monrep/fp.hpp"
#include "monrep/fp_matrix.hpp"
#include "monrep/monoid.hpp"
#include "monrep/rep.hpp"

namespace monrep {

//! The algebra of K-bi-invariant functions on M under convolution, in the
//! basis of unnormalized double-coset indicator functions.
struct HeckeAlgebra {
  MonoidPtr monoid;
  PrimeField field;
  Subgroup group;  // K
  DoubleCosetPartition cosets;
  std::size_t dim = 0;             // one basis element per double coset
  std::vector<FpVector> basis;     // indicator function of each class
  std::vector<FpMatrix> left_mult; // left_mult[i].at(k, j) = c_ij^k where
                                   // basis[i] * basis[j] = sum_k c_ij^k basis[k]
  FpVector identity_coeffs;        // the unit of the algebra in the basis

  //! Structure constant c_ij^k.
  std::uint64_t c(std::size_t i, std::size_t j, std::size_t k) const {
    return left_mult[i].at(k, j);
  }

  //! Coefficients of phi * psi for coefficient vectors in the basis.
  FpVector multiply(FpVector const& phi, FpVector const& psi) const {
    FpVector out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (phi[i] == 0) continue;
      FpVector const col = left_mult[i] * psi;
      for (std::size_t k = 0; k < dim; ++k) {
        out[k] = field.add(out[k], field.mul(phi[i], col[k]));
      }
    }
    return out;
  }
};

//! Build the double-coset algebra of (M, K) over F_p.  Structure constants
//! come from convolving indicator pairs and reading the verified-constant
//! value on each class; the unit is found by solving the two-sided identity
//! system, not assumed.
inline HeckeAlgebra hecke_algebra(MonoidPtr m, Subgroup k, PrimeField f) {
  if (k.size() % f.modulus() == 0) {
    throw CharDividesSubgroupError(f.modulus(), k.size());
  }
  HeckeAlgebra h{std::move(m), f, std::move(k), {}, 0, {}, {}, {}};
  h.cosets = double_cosets(*h.monoid, h.group);
  h.dim = h.cosets.class_count;
  h.basis.reserve(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) {
    FpVector ind(h.monoid->size, 0);
    for (std::uint32_t x : h.cosets.members[i]) ind[x] = 1;
    h.basis.push_back(std::move(ind));
  }

  for (std::size_t i = 0; i < h.dim; ++i) {
    FpMatrix li(h.dim, h.dim, f);
    for (std::size_t j = 0; j < h.dim; ++j) {
      FpVector const conv = convolve(*h.monoid, f, h.basis[i], h.basis[j]);
      for (std::size_t cls = 0; cls < h.dim; ++cls) {
        std::uint64_t const value = conv[h.cosets.representatives[cls]];
        for (std::uint32_t x : h.cosets.members[cls]) {
          if (conv[x] != value) throw NonConstantConvolutionError();
        }
        li.at(cls, j) = value;
      }
    }
    h.left_mult.push_back(std::move(li));
  }

  // Two-sided identity: for all j, k require sum_i t_i c_ij^k = delta_jk and
  // sum_i t_i c_ji^k = delta_jk.
  FpMatrix system(2 * h.dim * h.dim, h.dim, f);
  FpVector rhs(2 * h.dim * h.dim, 0);
  std::size_t row = 0;
  for (std::size_t j = 0; j < h.dim; ++j) {
    for (std::size_t cls = 0; cls < h.dim; ++cls) {
      for (std::size_t i = 0; i < h.dim; ++i) {
        system.at(row, i) = h.c(i, j, cls);
        system.at(row + 1, i) = h.c(j, i, cls);
      }
      rhs[row] = rhs[row + 1] = (j == cls) ? 1 : 0;
      row += 2;
    }
  }
  auto sol = solve_linear(system, rhs);
  if (!sol) throw Error("double-coset algebra has no unit (internal bug)");
  h.identity_coeffs = sol->particular;
  return h;
}

//! The fixed space V^K as a module over the double-coset algebra: one action
//! matrix per basis element, written in a column basis of V^K.
struct HkModule {
  std::size_t dim = 0;           // dim V^K
  FpMatrix basis_in_v;           // columns spanning V^K inside V
  std::vector<FpMatrix> action;  // aligned with HeckeAlgebra basis order
};

inline HkModule hk_module(Representation const& rep, HeckeAlgebra const& h) {
  HkModule mod{0, fixed_space(rep, h.group), {}};
  mod.dim = mod.basis_in_v.cols();
  if (mod.dim == 0) return mod;  // flagged by dimension; no action matrices
  for (std::size_t i = 0; i < h.dim; ++i) {
    FpMatrix const moved = apply_algebra(rep, h.basis[i]) * mod.basis_in_v;
    auto x = solve_matrix(mod.basis_in_v, moved);
    if (!x) throw Error("fixed space is not invariant (internal bug)");
    mod.action.push_back(std::move(*x));
  }
  // the algebra unit must act as the identity transformation
  FpMatrix unit_action(mod.dim, mod.dim, rep.field);
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (h.identity_coeffs[i] == 0) continue;
    unit_action = unit_action + scaled(mod.action[i], h.identity_coeffs[i]);
  }
  if (!unit_action.is_identity()) {
    throw Error("algebra unit does not fix V^K pointwise (internal bug)");
  }
  return mod;
}

}  // namespace monrep

#endif  // MONREP_HECKE_HPP
