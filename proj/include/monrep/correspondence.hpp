// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_CORRESPONDENCE_HPP
#define MONREP_CORRESPONDENCE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monrep/error.hpp"
#include "monrep/hecke.hpp"
#include "monrep/meataxe.hpp"
#include "monrep/monoid.hpp"
#include "monrep/rep.hpp"
#include "monrep/report.hpp"

namespace monrep {

//! View a representation as a module over the images of a generating set.
inline MatModule module_from_representation(Representation const& rep,
                                            GeneratingData const& gd,
                                            std::string tag) {
  MatModule mod{rep.dim, rep.field, {}, std::move(tag)};
  mod.generators.reserve(gd.generators.size());
  for (auto g : gd.generators) mod.generators.push_back(rep.image(g));
  return mod;
}

//! Rebuild a full representation from the generator actions of a module,
//! following the derivation of every element as parent * generator.  The
//! result is validated as a homomorphism.
inline Representation representation_from_module(MonoidPtr m,
                                                 GeneratingData const& gd,
                                                 MatModule const& mod,
                                                 Rng& rng) {
  std::vector<FpMatrix> images(m->size,
                               FpMatrix::identity(mod.dim, mod.field));
  for (auto x : gd.order) {
    if (x == m->identity) continue;
    images[x] = images[gd.parent[x]] * mod.generators[gd.via[x]];
  }
  return representation_from_images(std::move(m), mod.field,
                                    std::move(images), rng);
}

//! All irreducible representations of F[M], each exactly once up to
//! isomorphism.  They are the distinct composition factors of the left
//! regular module, since every simple module is a quotient of it.
inline std::vector<Representation> irreps_of_monoid(MonoidPtr m, PrimeField f,
                                                    Rng& rng) {
  GeneratingData const gd = generating_set(*m);
  MatModule const reg = module_from_representation(
      regular_representation(m, f), gd, "regular module");
  std::vector<Representation> out;
  for (auto const& factor : distinct_factors(composition_factors(reg, rng))) {
    out.push_back(representation_from_module(m, gd, factor.module, rng));
  }
  return out;
}

//! The left regular module of a Hecke algebra: basis element i acts by its
//! left structure-constant matrix.
inline MatModule hecke_regular_module(HeckeAlgebra const& h) {
  return MatModule{h.dim, h.field, h.left_mult, "Hecke regular module"};
}

//! All irreducible modules of the Hecke algebra, each once up to
//! isomorphism, from an independent splitting of its regular module.
inline std::vector<MatModule> irreps_of_algebra(HeckeAlgebra const& h,
                                                Rng& rng) {
  std::vector<MatModule> out;
  for (auto& factor :
       distinct_factors(composition_factors(hecke_regular_module(h), rng))) {
    out.push_back(std::move(factor.module));
  }
  return out;
}

//! The fixed-space module V^K as a module over the Hecke basis actions.
inline MatModule fixed_space_module(Representation const& rep,
                                    HeckeAlgebra const& h) {
  HkModule hk = hk_module(rep, h);
  return MatModule{hk.dim, rep.field, std::move(hk.action),
                   "Hecke action on the fixed space"};
}

//! Pairwise non-isomorphic irreducibles on both sides of the correspondence,
//! with the fixed-space dimension of each monoid irreducible.
struct IrrepInventory {
  std::vector<Representation> monoid_irreps;
  std::vector<std::size_t> fixed_dims;
  std::vector<MatModule> hecke_irreps;
};

inline IrrepInventory correspondence_inventory(MonoidPtr m,
                                               HeckeAlgebra const& h,
                                               Rng& rng) {
  IrrepInventory inv;
  inv.monoid_irreps = irreps_of_monoid(std::move(m), h.field, rng);
  for (auto const& rep : inv.monoid_irreps) {
    inv.fixed_dims.push_back(fixed_space(rep, h.group).cols());
  }
  inv.hecke_irreps = irreps_of_algebra(h, rng);
  return inv;
}

namespace detail {

inline std::string describe_instance(Monoid const& m, Subgroup const& k,
                                     PrimeField f) {
  return "|M| = " + std::to_string(m.size) +
         ", |K| = " + std::to_string(k.size()) +
         ", p = " + std::to_string(f.modulus());
}

inline std::string verdict_name(IrreducibilityVerdict const& v) {
  if (std::holds_alternative<Irreducible>(v)) return "irreducible";
  if (std::holds_alternative<Reducible>(v)) {
    return "reducible (invariant subspace of dimension " +
           std::to_string(std::get<Reducible>(v).submodule.dim()) + ")";
  }
  return "inconclusive";
}

}  // namespace detail

//! Check that the fixed space of every irreducible representation with
//! V^K != 0 is itself irreducible as a module over the Hecke algebra.
inline VerificationReport verify_fixed_space_irreducibility(
    MonoidPtr m, Subgroup const& k, PrimeField f, Rng& rng) {
  HeckeAlgebra const h = hecke_algebra(m, k, f);
  VerificationReport report;
  report.instance = detail::describe_instance(*m, k, f);

  std::vector<Representation> const irreps = irreps_of_monoid(m, f, rng);
  std::size_t surviving = 0;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    Representation const& rep = irreps[i];
    std::string const who =
        "irrep " + std::to_string(i) + " (dim " + std::to_string(rep.dim) + ")";

    FpMatrix const projector = averaging_projector(rep, k);
    std::size_t const fdim = rank(projector);
    std::size_t const dual_fdim = rank(transpose(projector));
    report.add(who + ": dual fixed space has the same dimension",
               fdim == dual_fdim,
               "dim V^K = " + std::to_string(fdim) +
                   ", dual = " + std::to_string(dual_fdim));
    if (fdim == 0) continue;
    ++surviving;

    MatModule const hk = fixed_space_module(rep, h);
    report.add(who + ": Hecke module dimension matches dim V^K",
               hk.dim == fdim,
               "module dim " + std::to_string(hk.dim) + " vs fixed " +
                   std::to_string(fdim));
    IrreducibilityVerdict const verdict = is_irreducible(hk, rng);
    report.add(who + ": V^K is irreducible over the Hecke algebra",
               std::holds_alternative<Irreducible>(verdict),
               detail::verdict_name(verdict));
  }
  report.add("fixed-space survival count", true,
             std::to_string(surviving) + " of " +
                 std::to_string(irreps.size()) +
                 " irreducibles have a nonzero fixed space");
  return report;
}

//! Check that V -> V^K is injective on irreducibles with nonzero fixed
//! space, and that the count of survivors matches an independent count of
//! the Hecke algebra's irreducibles.
inline VerificationReport verify_correspondence_bijection(MonoidPtr m,
                                                          Subgroup const& k,
                                                          PrimeField f,
                                                          Rng& rng) {
  HeckeAlgebra const h = hecke_algebra(m, k, f);
  VerificationReport report;
  report.instance = detail::describe_instance(*m, k, f);

  IrrepInventory const inv = correspondence_inventory(m, h, rng);
  std::vector<std::size_t> survivors;
  std::vector<MatModule> modules;
  for (std::size_t i = 0; i < inv.monoid_irreps.size(); ++i) {
    if (inv.fixed_dims[i] == 0) continue;
    survivors.push_back(i);
    modules.push_back(fixed_space_module(inv.monoid_irreps[i], h));
  }

  bool injective = true;
  std::string offender;
  for (std::size_t a = 0; a < modules.size() && injective; ++a) {
    for (std::size_t b = a + 1; b < modules.size(); ++b) {
      if (module_isomorphism(modules[a], modules[b])) {
        injective = false;
        offender = "fixed spaces of irreps " + std::to_string(survivors[a]) +
                   " and " + std::to_string(survivors[b]) +
                   " are isomorphic Hecke modules";
        break;
      }
    }
  }
  std::size_t const pairs = modules.size() * (modules.size() - 1) / 2;
  report.add("distinct irreducibles have non-isomorphic fixed spaces",
             injective,
             injective ? std::to_string(pairs) + " pairs checked" : offender);

  report.add(
      "surviving count matches the Hecke algebra's irreducible count",
      survivors.size() == inv.hecke_irreps.size(),
      std::to_string(survivors.size()) + " survivors vs " +
          std::to_string(inv.hecke_irreps.size()) +
          " factors of the Hecke regular module");
  return report;
}

//! Check that equal nonzero coefficient functions only arise between
//! isomorphic irreducibles: transported vectors through an isomorphism give
//! equal functions, and sampling finds no equal nonzero pair otherwise.
inline VerificationReport verify_matrix_coefficients(Representation const& pi,
                                                     Representation const& sigma,
                                                     Rng& rng,
                                                     std::size_t trials = 40) {
  if (pi.monoid->size != sigma.monoid->size) {
    throw Error("matrix-coefficient comparison needs one common monoid");
  }
  VerificationReport report;
  report.instance = "dims " + std::to_string(pi.dim) + " and " +
                    std::to_string(sigma.dim) + ", p = " +
                    std::to_string(pi.field.modulus());

  GeneratingData const gd = generating_set(*pi.monoid);
  auto const iso = module_isomorphism(
      module_from_representation(pi, gd, "left side"),
      module_from_representation(sigma, gd, "right side"));

  if (iso) {
    // transported vectors must give the same coefficient function
    FpMatrix const& t = *iso;  // t pi(m) = sigma(m) t
    FpMatrix const t_inv = *inverse(t);
    bool transported_ok = false;
    for (std::size_t attempt = 0; attempt < 20 && !transported_ok; ++attempt) {
      FpVector const v = random_vector(pi.dim, pi.field, rng);
      FpVector const vhat = random_vector(pi.dim, pi.field, rng);
      std::vector<std::uint64_t> const left = coefficient_function(pi, v, vhat);
      bool nonzero = false;
      for (auto x : left) nonzero = nonzero || x != 0;
      if (!nonzero) continue;
      std::vector<std::uint64_t> const right =
          coefficient_function(sigma, t * v, vec_mul(vhat, t_inv));
      transported_ok = left == right;
    }
    report.add("transported vectors give equal coefficient functions",
               transported_ok, "intertwiner of rank " + std::to_string(rank(t)));
  }

  std::size_t coincidences = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    FpVector const v = random_vector(pi.dim, pi.field, rng);
    FpVector const vhat = random_vector(pi.dim, pi.field, rng);
    FpVector const w = random_vector(sigma.dim, sigma.field, rng);
    FpVector const what = random_vector(sigma.dim, sigma.field, rng);
    std::vector<std::uint64_t> const left = coefficient_function(pi, v, vhat);
    if (left != coefficient_function(sigma, w, what)) continue;
    bool nonzero = false;
    for (auto x : left) nonzero = nonzero || x != 0;
    if (nonzero) ++coincidences;
  }
  report.add("equal nonzero coefficient functions imply isomorphism",
             coincidences == 0 || iso.has_value(),
             std::to_string(coincidences) + " coincidences in " +
                 std::to_string(trials) + " samples" +
                 (iso ? " (isomorphic pair)" : " (non-isomorphic pair)"));
  return report;
}

}  // namespace monrep

#endif  // MONREP_CORRESPONDENCE_HPP
