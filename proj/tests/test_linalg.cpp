// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "monrep/fp.hpp"
#include "monrep/fp_matrix.hpp"
#include "monrep/fp_poly.hpp"
#include "monrep/rng.hpp"

using namespace monrep;

namespace {

FpMatrix random_matrix(std::size_t r, std::size_t c, PrimeField f, Rng& rng) {
  FpMatrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.below(f.modulus());
  }
  return m;
}

FpPoly random_poly(std::size_t deg, PrimeField f, Rng& rng) {
  std::vector<std::uint64_t> c(deg + 1);
  for (std::size_t i = 0; i < deg; ++i) c[i] = rng.below(f.modulus());
  c[deg] = 1;  // monic, so the degree is exact
  return FpPoly(f, std::move(c));
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  REQUIRE(f.add(5, 4) == 2);
  REQUIRE(f.sub(2, 5) == 4);
  REQUIRE(f.mul(3, 5) == 1);
  REQUIRE(f.neg(0) == 0);
  REQUIRE(f.neg(3) == 4);
  REQUIRE(f.pow(3, 6) == 1);
  REQUIRE(f.from_int(-1) == 6);
  REQUIRE(f.from_int(-14) == 0);
  for (std::uint64_t a = 1; a < 7; ++a) {
    REQUIRE(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("prime field at the top of the modulus range") {
  PrimeField f(2147483647);  // 2^31 - 1
  std::uint64_t const a = 2147483646;
  REQUIRE(f.mul(a, a) == 1);  // (-1)^2
  REQUIRE(f.mul(a, f.inv(a)) == 1);
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    std::uint64_t const x = 1 + rng.below(f.modulus() - 1);
    REQUIRE(f.mul(x, f.inv(x)) == 1);
  }
}

TEST_CASE("composite or oversized moduli are rejected") {
  REQUIRE_THROWS_AS(PrimeField(1), ParseError);
  REQUIRE_THROWS_AS(PrimeField(6), ParseError);
  REQUIRE_THROWS_AS(PrimeField(std::uint64_t{1} << 31), ParseError);
}

TEST_CASE("row reduction of a rank-one matrix") {
  PrimeField f(5);
  FpMatrix a({{1, 2}, {2, 4}}, f);
  RowReduction rr = row_reduce(a);
  REQUIRE(rr.rank == 1);
  REQUIRE(rr.pivot_cols == std::vector<std::size_t>{0});
  REQUIRE(rr.rref == FpMatrix({{1, 2}, {0, 0}}, f));
}

TEST_CASE("row reduction is idempotent") {
  Rng rng(2);
  for (std::uint64_t p : {2, 5, 101}) {
    PrimeField f(p);
    for (int t = 0; t < 10; ++t) {
      FpMatrix a = random_matrix(5, 7, f, rng);
      RowReduction rr = row_reduce(a);
      REQUIRE(row_reduce(rr.rref).rref == rr.rref);
    }
  }
}

TEST_CASE("rank plus nullity equals the column count") {
  Rng rng(3);
  for (std::uint64_t p : {5, 7, 101}) {
    PrimeField f(p);
    for (int t = 0; t < 10; ++t) {
      std::size_t const r = 1 + rng.below(8);
      std::size_t const c = 1 + rng.below(8);
      FpMatrix a = random_matrix(r, c, f, rng);
      FpMatrix ns = nullspace(a);
      REQUIRE(rank(a) + ns.cols() == c);
      for (std::size_t k = 0; k < ns.cols(); ++k) {
        FpVector prod = a * ns.col(k);
        for (auto v : prod) REQUIRE(v == 0);
      }
    }
  }
}

TEST_CASE("solving a single underdetermined equation") {
  PrimeField f(3);
  FpMatrix a({{1, 1}}, f);
  auto sol = solve_linear(a, {1});
  REQUIRE(sol.has_value());
  REQUIRE(sol->particular == FpVector{1, 0});
  REQUIRE(sol->nullspace_basis.cols() == 1);
  // the kernel is spanned by (1, 2)
  FpVector k = sol->nullspace_basis.col(0);
  REQUIRE(f.mul(k[0], 2) == k[1] * 1 % 3);
  REQUIRE(k != FpVector{0, 0});
}

TEST_CASE("inconsistent systems are reported") {
  PrimeField f(3);
  FpMatrix a({{1, 0}, {1, 0}}, f);
  REQUIRE_FALSE(solve_linear(a, {1, 2}).has_value());
}

TEST_CASE("solve returns an exact preimage") {
  Rng rng(4);
  PrimeField f(7);
  for (int t = 0; t < 20; ++t) {
    std::size_t const r = 1 + rng.below(6);
    std::size_t const c = 1 + rng.below(6);
    FpMatrix a = random_matrix(r, c, f, rng);
    FpVector x(c);
    for (auto& v : x) v = rng.below(7);
    FpVector const b = a * x;
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    REQUIRE(a * sol->particular == b);
  }
}

TEST_CASE("matrix inverse") {
  Rng rng(5);
  PrimeField f(11);
  int found = 0;
  for (int t = 0; t < 40; ++t) {
    FpMatrix a = random_matrix(4, 4, f, rng);
    auto inv = inverse(a);
    if (!inv.has_value()) {
      REQUIRE(rank(a) < 4);
      continue;
    }
    ++found;
    REQUIRE((a * *inv).is_identity());
    REQUIRE((*inv * a).is_identity());
  }
  REQUIRE(found > 0);
  FpMatrix sing({{1, 2}, {2, 4}}, PrimeField(5));
  REQUIRE_FALSE(inverse(sing).has_value());
}

TEST_CASE("column space basis consists of pivot columns") {
  PrimeField f(5);
  FpMatrix a({{1, 2, 0}, {2, 4, 1}}, f);
  FpMatrix cs = column_space(a);
  REQUIRE(cs.cols() == 2);
  REQUIRE(cs.col(0) == a.col(0));
  REQUIRE(cs.col(1) == a.col(2));
}

TEST_CASE("echelon space basis is canonical") {
  PrimeField f(7);
  EchelonSpace s1(3, f), s2(3, f);
  FpVector const u{1, 2, 3}, v{0, 1, 5}, w{1, 3, 1};  // w = u + v
  s1.insert(u);
  s1.insert(v);
  s2.insert(w);
  s2.insert(v);
  REQUIRE(s1.dim() == 2);
  REQUIRE(s2.dim() == 2);
  REQUIRE(s1.column_basis() == s2.column_basis());
  REQUIRE(s1.contains(w));
  REQUIRE_FALSE(s1.contains({0, 0, 1}));
}

TEST_CASE("polynomial division, gcd and modular powers") {
  PrimeField f(7);
  Rng rng(6);
  for (int t = 0; t < 25; ++t) {
    FpPoly const a = random_poly(1 + rng.below(9), f, rng);
    FpPoly const b = random_poly(1 + rng.below(5), f, rng);
    auto [q, r] = divmod(a, b);
    REQUIRE(q * b + r == a);
    REQUIRE(r.degree() < b.degree());
  }
  FpPoly const xm1 = FpPoly(f, {6, 1});           // x - 1
  FpPoly const xp1 = FpPoly(f, {1, 1});           // x + 1
  FpPoly const x2p1 = FpPoly(f, {1, 0, 1});       // x^2 + 1, irreducible mod 7
  REQUIRE(gcd(xm1 * x2p1, xm1 * xp1) == xm1);
  // x^7 = x * (x^2)^3 = -x modulo x^2 + 1
  REQUIRE(pow_mod(FpPoly::x(f), 7, x2p1) == FpPoly(f, {0, 6}));
}

TEST_CASE("minimal and characteristic polynomials of small matrices") {
  PrimeField f5(5);
  FpMatrix diag({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}, f5);
  FpPoly const m = matrix_min_poly(diag);
  REQUIRE(m == (FpPoly(f5, {4, 1}) * FpPoly(f5, {3, 1})));  // (x-1)(x-2)
  FpPoly const c = matrix_char_poly(diag);
  REQUIRE(c == (FpPoly(f5, {4, 1}) * FpPoly(f5, {4, 1}) * FpPoly(f5, {3, 1})));

  PrimeField f2(2);
  // companion matrix of x^3 + x + 1
  FpMatrix comp({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}, f2);
  FpPoly const target = FpPoly(f2, {1, 1, 0, 1});
  REQUIRE(matrix_min_poly(comp) == target);
  REQUIRE(matrix_char_poly(comp) == target);

  PrimeField f7(7);
  FpMatrix nil({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, f7);
  REQUIRE(matrix_min_poly(nil) == FpPoly(f7, {0, 0, 0, 1}));
  REQUIRE(matrix_char_poly(nil) == FpPoly(f7, {0, 0, 0, 1}));
  REQUIRE(matrix_char_poly(FpMatrix({{0, 1}, {1, 0}}, f7))
          == FpPoly(f7, {6, 0, 1}));
}

TEST_CASE("minimal polynomial divides the characteristic polynomial") {
  Rng rng(7);
  for (std::uint64_t p : {2, 5, 101}) {
    PrimeField f(p);
    for (int t = 0; t < 8; ++t) {
      FpMatrix a = random_matrix(6, 6, f, rng);
      FpPoly const mp = matrix_min_poly(a);
      FpPoly const cp = matrix_char_poly(a);
      REQUIRE(divides(mp, cp));
      REQUIRE(eval_at_matrix(mp, a).is_zero());
      REQUIRE(eval_at_matrix(cp, a).is_zero());
    }
  }
}

TEST_CASE("factoring fixed polynomials") {
  Rng rng(8);
  PrimeField f5(5);
  auto fac = factor(FpPoly(f5, {1, 1, 1}), rng);  // irreducible mod 5
  REQUIRE(fac.size() == 1);
  REQUIRE(fac[0].second == 1);
  REQUIRE(fac[0].first == FpPoly(f5, {1, 1, 1}));

  // (x^2+2)(x^2+3): two distinct irreducible quadratics mod 5
  auto fac2 = factor(FpPoly(f5, {2, 0, 1}) * FpPoly(f5, {3, 0, 1}), rng);
  REQUIRE(fac2.size() == 2);
  REQUIRE(fac2[0].first * fac2[1].first == FpPoly(f5, {2, 0, 1}) * FpPoly(f5, {3, 0, 1}));

  PrimeField f2(2);
  auto fac3 = factor(FpPoly(f2, {0, 0, 0, 0, 1}), rng);  // x^4
  REQUIRE(fac3.size() == 1);
  REQUIRE(fac3[0].first == FpPoly::x(f2));
  REQUIRE(fac3[0].second == 4);

  FpPoly const q1 = FpPoly(f2, {1, 1, 1});        // x^2+x+1
  FpPoly const q2 = FpPoly(f2, {1, 1, 0, 1});     // x^3+x+1
  FpPoly const q3 = FpPoly(f2, {1, 0, 1, 1});     // x^3+x^2+1
  auto fac4 = factor(q1 * q1 * q2 * q3, rng);
  REQUIRE(fac4.size() == 3);
  int total = 0;
  FpPoly prod = FpPoly::constant(f2, 1);
  for (auto const& [q, e] : fac4) {
    total += e * (q.degree());
    for (int i = 0; i < e; ++i) prod = prod * q;
  }
  REQUIRE(total == 10);
  REQUIRE(prod == q1 * q1 * q2 * q3);
}

TEST_CASE("factoring reconstructs random monic polynomials") {
  Rng rng(9);
  for (std::uint64_t p : {2, 5, 101}) {
    PrimeField f(p);
    for (int t = 0; t < 8; ++t) {
      FpPoly const a = random_poly(2 + rng.below(10), f, rng);
      auto fac = factor(a, rng);
      FpPoly prod = FpPoly::constant(f, 1);
      for (auto const& [q, e] : fac) {
        REQUIRE(q.lead() == 1);
        for (int i = 0; i < e; ++i) prod = prod * q;
      }
      REQUIRE(prod == a);
    }
  }
}
