// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_MEATAXE_HPP
#define MONREP_MEATAXE_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monrep/error.hpp"
#include "monrep/fp.hpp"
#include "monrep/fp_matrix.hpp"
#include "monrep/fp_poly.hpp"
#include "monrep/rng.hpp"

namespace monrep {

//! A module over some algebra, given by the action of an algebra generating
//! set on column vectors.  The tag records where the module came from.
struct MatModule {
  std::size_t dim = 0;
  PrimeField field;
  std::vector<FpMatrix> generators;
  std::string tag;
};

//! Random element of the generated algebra: an F_p-linear combination of
//! short products (length 1 to 3) of the generators.
inline FpMatrix random_algebra_element(MatModule const& mod, Rng& rng) {
  FpMatrix out(mod.dim, mod.dim, mod.field);
  if (mod.generators.empty()) return out;
  std::size_t const terms = 2 + rng.below(4);
  for (std::size_t t = 0; t < terms; ++t) {
    std::size_t const len = 1 + rng.below(3);
    FpMatrix prod = mod.generators[rng.below(mod.generators.size())];
    for (std::size_t i = 1; i < len; ++i) {
      prod = prod * mod.generators[rng.below(mod.generators.size())];
    }
    out = out + scaled(prod, rng.below(mod.field.modulus()));
  }
  return out;
}

//! Smallest generator-invariant subspace containing the given vectors.
inline EchelonSpace spin(MatModule const& mod,
                         std::vector<FpVector> const& vectors) {
  EchelonSpace space(mod.dim, mod.field);
  std::vector<FpVector> work = vectors;
  while (!work.empty()) {
    FpVector v = std::move(work.back());
    work.pop_back();
    if (!space.insert(v)) continue;
    for (auto const& g : mod.generators) work.push_back(g * v);
  }
  return space;
}

//! Outcomes of the irreducibility decision.
struct Irreducible {
  FpMatrix certificate;  // the algebra element that witnessed irreducibility
};
struct Reducible {
  EchelonSpace submodule;  // proper nonzero invariant subspace
};
struct Inconclusive {};
using IrreducibilityVerdict = std::variant<Irreducible, Reducible, Inconclusive>;

//! Attempt budget before giving up with Inconclusive.
inline constexpr std::size_t irreducibility_attempts = 500;

namespace detail {

//! Wrap a candidate invariant subspace, verifying it before returning.
inline Reducible verified_submodule(MatModule const& mod, EchelonSpace space) {
  if (space.dim() == 0 || space.dim() >= mod.dim) {
    throw Error("submodule witness is not proper (internal bug)");
  }
  for (auto const& g : mod.generators) {
    for (auto const& row : space.basis_rows()) {
      if (!space.contains(g * row)) {
        throw Error("submodule witness is not invariant (internal bug)");
      }
    }
  }
  return Reducible{std::move(space)};
}

inline MatModule transposed_module(MatModule const& mod) {
  MatModule t{mod.dim, mod.field, {}, mod.tag + " (transposed)"};
  t.generators.reserve(mod.generators.size());
  for (auto const& g : mod.generators) t.generators.push_back(transpose(g));
  return t;
}

//! The annihilator {v : u . v = 0 for all u in the space}, as a subspace.
inline EchelonSpace perpendicular(EchelonSpace const& space, PrimeField f) {
  FpMatrix rows(space.dim(), space.ambient(), f);
  for (std::size_t i = 0; i < space.dim(); ++i) {
    for (std::size_t j = 0; j < space.ambient(); ++j) {
      rows.at(i, j) = space.basis_rows()[i][j];
    }
  }
  FpMatrix const ns = nullspace(rows);
  EchelonSpace perp(space.ambient(), f);
  for (std::size_t j = 0; j < ns.cols(); ++j) perp.insert(ns.col(j));
  return perp;
}

}  // namespace detail

//! Decide whether the module has a proper nonzero invariant subspace.
//!
//! Each attempt draws a random algebra element theta and factors its minimal
//! polynomial.  An irreducible factor f with f(theta) != 0 gives a singular
//! probe: kernel vectors that generate proper subspaces witness reducibility,
//! and when the kernel has dimension deg f it is one-dimensional over
//! F_p[theta]/(f), so one forward spin plus one spin of a transposed-kernel
//! vector decides the question outright.  If the minimal polynomial itself is
//! irreducible of degree dim, the module is a one-dimensional vector space
//! over the field F_p[theta] and no proper invariant subspace can exist; if
//! its degree is smaller, the coordinate vectors are probed for proper
//! spins (which settles modules on which the algebra acts through a field,
//! such as repeated copies of one character).
inline IrreducibilityVerdict is_irreducible(MatModule const& mod, Rng& rng) {
  if (mod.dim == 0) throw ZeroModuleError();
  if (mod.dim == 1) {
    return Irreducible{FpMatrix::identity(1, mod.field)};
  }

  for (std::size_t attempt = 0; attempt < irreducibility_attempts; ++attempt) {
    FpMatrix const theta = random_algebra_element(mod, rng);
    FpPoly const minpoly = matrix_min_poly(theta);
    auto const factors = factor(minpoly, rng);

    if (factors.size() == 1 && factors.front().second == 1) {
      if (factors.front().first.degree() == static_cast<int>(mod.dim)) {
        return Irreducible{theta};
      }
      // theta generates a field acting on the whole module; probe coordinates
      for (std::size_t i = 0; i < mod.dim; ++i) {
        FpVector e(mod.dim, 0);
        e[i] = 1;
        EchelonSpace space = spin(mod, {e});
        if (space.dim() < mod.dim) {
          return detail::verified_submodule(mod, std::move(space));
        }
      }
      continue;
    }

    for (auto const& [f, multiplicity] : factors) {
      FpMatrix const probe = eval_at_matrix(f, theta);
      FpMatrix const kernel = nullspace(probe);
      for (std::size_t j = 0; j < kernel.cols(); ++j) {
        EchelonSpace space = spin(mod, {kernel.col(j)});
        if (space.dim() < mod.dim) {
          return detail::verified_submodule(mod, std::move(space));
        }
      }
      if (kernel.cols() != static_cast<std::size_t>(f.degree())) continue;
      // the kernel is one-dimensional over F_p[theta]/(f): this attempt is
      // decisive, with the transposed module covering quotient submodules
      MatModule const t = detail::transposed_module(mod);
      FpMatrix const co_kernel = nullspace(transpose(probe));
      EchelonSpace co_space = spin(t, {co_kernel.col(0)});
      if (co_space.dim() == mod.dim) return Irreducible{theta};
      return detail::verified_submodule(
          mod, detail::perpendicular(co_space, mod.field));
    }
  }
  return Inconclusive{};
}

//! Action induced on an invariant subspace, in its echelon basis.
inline MatModule restricted_to_submodule(MatModule const& mod,
                                         EchelonSpace const& space) {
  MatModule sub{space.dim(), mod.field, {}, mod.tag};
  auto const& pivots = space.pivots();
  for (auto const& g : mod.generators) {
    FpMatrix a(space.dim(), space.dim(), mod.field);
    for (std::size_t j = 0; j < space.dim(); ++j) {
      FpVector const moved = g * space.basis_rows()[j];
      if (!space.contains(moved)) {
        throw Error("subspace is not invariant (internal bug)");
      }
      for (std::size_t i = 0; i < space.dim(); ++i) {
        a.at(i, j) = moved[pivots[i]];
      }
    }
    sub.generators.push_back(std::move(a));
  }
  return sub;
}

//! Action induced on the quotient by an invariant subspace, in the
//! coordinates of the non-pivot positions.
inline MatModule quotient_by_submodule(MatModule const& mod,
                                       EchelonSpace const& space) {
  std::vector<std::size_t> coords;
  {
    std::size_t next = 0;
    auto const& pivots = space.pivots();
    for (std::size_t j = 0; j < mod.dim; ++j) {
      if (next < pivots.size() && pivots[next] == j) {
        ++next;
      } else {
        coords.push_back(j);
      }
    }
  }
  MatModule quot{coords.size(), mod.field, {}, mod.tag};
  for (auto const& g : mod.generators) {
    FpMatrix a(coords.size(), coords.size(), mod.field);
    for (std::size_t j = 0; j < coords.size(); ++j) {
      FpVector const moved = space.residual(g.col(coords[j]));
      for (std::size_t i = 0; i < coords.size(); ++i) {
        a.at(i, j) = moved[coords[i]];
      }
    }
    quot.generators.push_back(std::move(a));
  }
  return quot;
}

//! All composition factors, repeated with multiplicity; the order is the
//! deterministic leaf order of the splitting recursion.  Total dimension is
//! preserved.  Throws InconclusiveError if any split cannot be decided.
inline std::vector<MatModule> composition_factors(MatModule const& mod,
                                                  Rng& rng) {
  if (mod.dim == 0) return {};
  IrreducibilityVerdict verdict = is_irreducible(mod, rng);
  if (std::holds_alternative<Inconclusive>(verdict)) throw InconclusiveError();
  if (std::holds_alternative<Irreducible>(verdict)) return {mod};
  EchelonSpace const& space = std::get<Reducible>(verdict).submodule;
  std::vector<MatModule> factors =
      composition_factors(restricted_to_submodule(mod, space), rng);
  std::vector<MatModule> rest =
      composition_factors(quotient_by_submodule(mod, space), rng);
  factors.insert(factors.end(), std::make_move_iterator(rest.begin()),
                 std::make_move_iterator(rest.end()));
  return factors;
}

//! Basis of {T : T a_g = b_g T for every aligned generator pair}; such T
//! are the module homomorphisms from the a-module to the b-module.
inline std::vector<FpMatrix> intertwiner_space(
    std::vector<FpMatrix> const& a, std::vector<FpMatrix> const& b,
    std::size_t dim_a, std::size_t dim_b, PrimeField f) {
  if (a.size() != b.size()) {
    throw Error("intertwiner solving needs aligned generator lists");
  }
  std::size_t const unknowns = dim_b * dim_a;  // T[i][j], row-major
  FpMatrix system(a.size() * unknowns, unknowns, f);
  std::size_t row = 0;
  for (std::size_t g = 0; g < a.size(); ++g) {
    for (std::size_t i = 0; i < dim_b; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        // (T a_g - b_g T)[i][j] = 0
        for (std::size_t k = 0; k < dim_a; ++k) {
          std::size_t const col = i * dim_a + k;
          system.at(row, col) = f.add(system.at(row, col), a[g].at(k, j));
        }
        for (std::size_t k = 0; k < dim_b; ++k) {
          std::size_t const col = k * dim_a + j;
          system.at(row, col) = f.sub(system.at(row, col), b[g].at(i, k));
        }
        ++row;
      }
    }
  }
  FpMatrix const ns = nullspace(system);
  std::vector<FpMatrix> basis;
  basis.reserve(ns.cols());
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    FpMatrix t(dim_b, dim_a, f);
    for (std::size_t i = 0; i < dim_b; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        t.at(i, j) = ns.at(i * dim_a + j, c);
      }
    }
    basis.push_back(std::move(t));
  }
  return basis;
}

//! An invertible intertwiner between two modules with aligned generator
//! lists, if one exists.  Complete for irreducible inputs, where any nonzero
//! homomorphism is invertible; composite inputs may conservatively miss.
inline std::optional<FpMatrix> module_isomorphism(MatModule const& a,
                                                  MatModule const& b) {
  if (a.dim != b.dim || a.generators.size() != b.generators.size()) {
    return std::nullopt;
  }
  for (auto& t : intertwiner_space(a.generators, b.generators, a.dim, b.dim,
                                   a.field)) {
    if (rank(t) == a.dim) return t;
  }
  return std::nullopt;
}

//! Composition factors deduplicated up to isomorphism, with multiplicities,
//! in order of first appearance.  A cheap invariant (dimension plus the
//! multiset of generator characteristic polynomials) prefilters the pairs
//! sent to the intertwiner solver.
struct FactorWithMultiplicity {
  MatModule module;
  std::size_t multiplicity = 0;
};

inline std::vector<FactorWithMultiplicity> distinct_factors(
    std::vector<MatModule> const& factors) {
  std::vector<FactorWithMultiplicity> out;
  std::vector<std::vector<FpPoly>> keys;
  auto key_of = [](MatModule const& m) {
    std::vector<FpPoly> key;
    key.reserve(m.generators.size());
    for (auto const& g : m.generators) key.push_back(matrix_char_poly(g));
    std::sort(key.begin(), key.end());
    return key;
  };
  for (auto const& factor : factors) {
    std::vector<FpPoly> key = key_of(factor);
    bool matched = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].module.dim != factor.dim || keys[i] != key) continue;
      if (module_isomorphism(out[i].module, factor)) {
        ++out[i].multiplicity;
        matched = true;
        break;
      }
    }
    if (!matched) {
      out.push_back({factor, 1});
      keys.push_back(std::move(key));
    }
  }
  return out;
}

}  // namespace monrep

#endif  // MONREP_MEATAXE_HPP
