// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "monrep/renner.hpp"

using namespace monrep;

namespace {

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t b = 1;
  for (std::size_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

//! Independent count of partial injective maps on n points.
std::size_t rook_count_formula(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    total += binomial(n, k) * binomial(n, k) * factorial(k);
  }
  return total;
}

}  // namespace

TEST_CASE("rook monoids enumerate partial injective maps") {
  REQUIRE(rook_monoid(1).monoid.size == 2);
  REQUIRE(rook_monoid(2).monoid.size == 7);
  REQUIRE(rook_monoid(3).monoid.size == 34);
  for (std::size_t n = 1; n <= 4; ++n) {
    RookMonoid r = rook_monoid(n);
    REQUIRE(r.monoid.size == rook_count_formula(n));
    REQUIRE(unit_group(r.monoid).size() == factorial(n));

    // the empty map absorbs everything from both sides
    for (std::uint32_t x = 0; x < r.monoid.size; ++x) {
      REQUIRE(r.monoid.mul(0, x) == 0);
      REQUIRE(r.monoid.mul(x, 0) == 0);
    }
    REQUIRE(r.rank_of[0] == 0);
    REQUIRE(r.rank_of[r.monoid.identity] == n);
  }
  REQUIRE_THROWS_AS(rook_monoid(5), SizeLimitError);
  REQUIRE_THROWS_AS(rook_monoid(0), ParseError);
}

TEST_CASE("rook elements are ordered by rank then graph, with readable labels") {
  RookMonoid r = rook_monoid(2);
  std::vector<std::string> expected{"--", "-1", "-2", "1-", "2-", "12", "21"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    REQUIRE(r.monoid.label(static_cast<std::uint32_t>(i)) == expected[i]);
  }
  REQUIRE(r.monoid.identity == 5);
  REQUIRE(r.rank_of == std::vector<std::size_t>{0, 1, 1, 1, 1, 2, 2});

  // composition works right-to-left: (s . t)(x) = s(t(x))
  std::uint32_t const swap = 6, keep_first = 3;
  REQUIRE(r.monoid.mul(swap, keep_first) == 4);        // "2-"
  REQUIRE(r.monoid.mul(keep_first, swap) == 1);        // "-1"
  REQUIRE(r.monoid.mul(swap, swap) == r.monoid.identity);
}

TEST_CASE("rook monoid algebra at p = 7 splits as expected") {
  PrimeField const f7(7);
  Rng rng(149);
  RookMonoid r = rook_monoid(2);
  MonoidPtr m = std::make_shared<Monoid const>(std::move(r.monoid));
  std::vector<std::size_t> dims;
  for (auto const& rep : irreps_of_monoid(m, f7, rng)) dims.push_back(rep.dim);
  std::sort(dims.begin(), dims.end());
  REQUIRE(dims == std::vector<std::size_t>{1, 1, 1, 2});
}

TEST_CASE("borel subgroups have the predicted orders") {
  {
    Monoid m = matrix_monoid(1, 2);
    REQUIRE(borel_subgroup(m, 1, 2).size() == 1);
  }
  {
    Monoid m = matrix_monoid(2, 2);
    REQUIRE(borel_subgroup(m, 2, 2).size() == 2);
  }
  {
    Monoid m = matrix_monoid(2, 3);
    REQUIRE(borel_subgroup(m, 2, 3).size() == 12);
  }
}

TEST_CASE("double cosets of matrix monoids are indexed by rook matrices") {
  {
    RennerReport r = verify_renner_decomposition(1, 2);
    REQUIRE(r.class_count == 2);
    REQUIRE(r.class_rook_labels == std::vector<std::string>{"0", "1"});
    REQUIRE(r.checks.passed());
  }
  for (std::uint32_t q : {2, 3}) {
    RennerReport r = verify_renner_decomposition(2, q);
    REQUIRE(r.class_count == 7);
    REQUIRE(r.rook_count == 7);
    REQUIRE(r.checks.passed());
  }
  {
    RennerReport r = verify_renner_decomposition(3, 2);
    REQUIRE(r.class_count == 34);
    REQUIRE(r.checks.passed());
  }
  // the count does not depend on the field size
  REQUIRE(verify_renner_decomposition(1, 2).class_count ==
          verify_renner_decomposition(1, 3).class_count);
}

TEST_CASE("Hecke algebra of the Borel matches the rook monoid algebra") {
  Rng rng(151);
  {
    RennerReport r = compare_hecke_renner_algebra(1, 2, 7, rng);
    REQUIRE(r.hecke_dim == 2);
    REQUIRE(r.hecke_irrep_dims == std::vector<std::size_t>{1, 1});
    REQUIRE(r.rook_irrep_dims == std::vector<std::size_t>{1, 1});
    REQUIRE(r.multisets_agree);
    REQUIRE(r.checks.passed());
  }
  {
    RennerReport r = compare_hecke_renner_algebra(2, 2, 7, rng);
    REQUIRE(r.hecke_dim == 7);
    REQUIRE(r.rook_count == 7);
    REQUIRE(r.hecke_irrep_dims == std::vector<std::size_t>{1, 1, 1, 2});
    REQUIRE(r.rook_irrep_dims == std::vector<std::size_t>{1, 1, 1, 2});
    REQUIRE(r.multisets_agree);
    REQUIRE(r.checks.passed());
  }
  {
    RennerReport r = compare_hecke_renner_algebra(2, 3, 7, rng);
    REQUIRE(r.hecke_dim == 7);
    REQUIRE(r.checks.passed());
  }
  // p = 2 divides |B| = 2 for q = 2
  REQUIRE_THROWS_AS(compare_hecke_renner_algebra(2, 2, 2, rng),
                    CharDividesSubgroupError);
}
