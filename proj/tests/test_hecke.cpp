// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "monrep/hecke.hpp"
#include "monrep/matrix_monoid.hpp"

using namespace monrep;

namespace {

MonoidPtr t2() {
  return std::make_shared<Monoid const>(
      monoid_from_transformations(2, {{1, 0}, {0, 0}}));
}

MonoidPtr t3() {
  return std::make_shared<Monoid const>(
      monoid_from_transformations(3, {{1, 0, 2}, {1, 2, 0}, {0, 0, 2}}));
}

}  // namespace

TEST_CASE("double-coset algebra of the two-point monoid at its units") {
  PrimeField const f7(7);
  MonoidPtr m = t2();
  HeckeAlgebra h = hecke_algebra(m, unit_group(*m), f7);

  REQUIRE(h.dim == 2);
  REQUIRE(h.basis[0] == FpVector{1, 1, 0, 0});
  REQUIRE(h.basis[1] == FpVector{0, 0, 1, 1});

  // every product is twice a basis element here
  REQUIRE(h.c(0, 0, 0) == 2);
  REQUIRE(h.c(0, 0, 1) == 0);
  REQUIRE(h.c(0, 1, 1) == 2);
  REQUIRE(h.c(1, 0, 1) == 2);
  REQUIRE(h.c(1, 1, 1) == 2);
  REQUIRE(h.c(1, 1, 0) == 0);

  // the unit is |K|^-1 times the indicator of K, and 2^-1 = 4 mod 7
  REQUIRE(h.identity_coeffs == FpVector{4, 0});

  // multiply() agrees with honest convolution of the expanded functions
  Rng rng(20);
  for (int t = 0; t < 50; ++t) {
    FpVector const a{rng.below(7), rng.below(7)};
    FpVector const b{rng.below(7), rng.below(7)};
    FpVector fa(m->size, 0), fb(m->size, 0);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::uint32_t x = 0; x < m->size; ++x) {
        fa[x] = f7.add(fa[x], f7.mul(a[i], h.basis[i][x]));
        fb[x] = f7.add(fb[x], f7.mul(b[i], h.basis[i][x]));
      }
    }
    FpVector const full = convolve(*m, f7, fa, fb);
    FpVector const coeffs = h.multiply(a, b);
    for (std::size_t k = 0; k < 2; ++k) {
      REQUIRE(full[h.cosets.representatives[k]] == coeffs[k]);
    }
  }
}

TEST_CASE("a trivial subgroup recovers the monoid algebra") {
  PrimeField const f5(5);
  MonoidPtr m = t2();
  HeckeAlgebra h = hecke_algebra(m, subgroup_closure(*m, {}), f5);

  REQUIRE(h.dim == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) {
        std::uint64_t const expect =
            (m->mul(static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(j)) == k)
                ? 1
                : 0;
        REQUIRE(h.c(i, j, k) == expect);
      }
    }
  }
  FpVector ident(4, 0);
  ident[m->identity] = 1;
  REQUIRE(h.identity_coeffs == ident);
}

TEST_CASE("the upper-triangular double-coset algebra of 2x2 matrices") {
  PrimeField const f7(7);
  MonoidPtr m = std::make_shared<Monoid const>(matrix_monoid(2, 2));
  HeckeAlgebra h = hecke_algebra(m, borel_subgroup(*m, 2, 2), f7);
  REQUIRE(h.dim == 7);

  // associativity of the structure constants on every basis triple
  for (std::size_t i = 0; i < h.dim; ++i) {
    for (std::size_t j = 0; j < h.dim; ++j) {
      FpVector ei(h.dim, 0), ej(h.dim, 0);
      ei[i] = 1;
      ej[j] = 1;
      FpVector const ij = h.multiply(ei, ej);
      for (std::size_t k = 0; k < h.dim; ++k) {
        FpVector ek(h.dim, 0);
        ek[k] = 1;
        REQUIRE(h.multiply(ij, ek) == h.multiply(ei, h.multiply(ej, ek)));
      }
    }
  }
}

TEST_CASE("characteristic dividing the subgroup order is refused") {
  MonoidPtr m = t2();
  try {
    hecke_algebra(m, unit_group(*m), PrimeField(2));
    FAIL("expected CharDividesSubgroupError");
  } catch (CharDividesSubgroupError const& e) {
    REQUIRE(std::string(e.what()).find("characteristic 2 divides |K| = 2") !=
            std::string::npos);
  }
}

TEST_CASE("the fixed space of the trivial representation as a module") {
  PrimeField const f7(7);
  MonoidPtr m = t2();
  HeckeAlgebra h = hecke_algebra(m, unit_group(*m), f7);
  HkModule mod = hk_module(trivial_representation(m, f7), h);

  REQUIRE(mod.dim == 1);
  REQUIRE(mod.action[0] == FpMatrix({{2}}, f7));  // |class of units| = 2
  REQUIRE(mod.action[1] == FpMatrix({{2}}, f7));  // |class of constants| = 2
}

TEST_CASE("fixed-space modules respect the structure constants") {
  PrimeField const f7(7);
  for (MonoidPtr m : {t2(), t3()}) {
    HeckeAlgebra h = hecke_algebra(m, unit_group(*m), f7);
    HkModule mod = hk_module(regular_representation(m, f7), h);
    REQUIRE(mod.dim ==
            rank(averaging_projector(regular_representation(m, f7), h.group)));
    for (std::size_t i = 0; i < h.dim; ++i) {
      for (std::size_t j = 0; j < h.dim; ++j) {
        FpMatrix expect(mod.dim, mod.dim, f7);
        for (std::size_t k = 0; k < h.dim; ++k) {
          if (h.c(i, j, k) == 0) continue;
          expect = expect + scaled(mod.action[k], h.c(i, j, k));
        }
        REQUIRE(mod.action[i] * mod.action[j] == expect);
      }
    }
  }
}

TEST_CASE("a module with no fixed vectors comes back zero-dimensional") {
  PrimeField const f7(7);
  MonoidPtr m = t2();
  HeckeAlgebra h = hecke_algebra(m, unit_group(*m), f7);

  std::vector<FpMatrix> images;
  images.push_back(FpMatrix({{1}}, f7));
  images.push_back(FpMatrix({{-1}}, f7));
  images.push_back(FpMatrix({{0}}, f7));
  images.push_back(FpMatrix({{0}}, f7));
  Rng rng(21);
  Representation sgn = representation_from_images(m, f7, images, rng);
  HkModule mod = hk_module(sgn, h);
  REQUIRE(mod.dim == 0);
  REQUIRE(mod.action.empty());
}

TEST_CASE("convolving bi-invariant functions stays bi-invariant") {
  PrimeField const f5(5);
  MonoidPtr m = t3();
  Subgroup const units = unit_group(*m);
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    FpVector const a = average_to_bi_invariant(
        *m, units, f5, random_vector(m->size, f5, rng));
    FpVector const b = average_to_bi_invariant(
        *m, units, f5, random_vector(m->size, f5, rng));
    REQUIRE(is_bi_invariant(*m, units, convolve(*m, f5, a, b)));
  }
}
