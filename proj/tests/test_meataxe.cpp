// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "monrep/matrix_monoid.hpp"
#include "monrep/meataxe.hpp"
#include "monrep/rep.hpp"

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

MonoidPtr c2() {
  return std::make_shared<Monoid const>(
      monoid_from_transformations(2, {{1, 0}}));
}

MonoidPtr c3() {
  return std::make_shared<Monoid const>(
      monoid_from_transformations(3, {{1, 2, 0}}));
}

MonoidPtr s3() {
  return std::make_shared<Monoid const>(
      monoid_from_transformations(3, {{1, 0, 2}, {1, 2, 0}}));
}

MatModule module_of(Representation const& rep, GeneratingData const& gd,
                    std::string tag) {
  MatModule mod{rep.dim, rep.field, {}, std::move(tag)};
  for (auto g : gd.generators) mod.generators.push_back(rep.image(g));
  return mod;
}

MatModule regular_module(MonoidPtr const& m, PrimeField f, std::string tag) {
  Representation reg = regular_representation(m, f);
  return module_of(reg, generating_set(*m), std::move(tag));
}

//! The span of the two constant maps inside F[T_2], as explicit matrices.
MatModule constants_span_module(PrimeField f) {
  return MatModule{2,
                   f,
                   {FpMatrix({{0, 1}, {1, 0}}, f), FpMatrix({{1, 1}, {0, 0}}, f)},
                   "span of the constants"};
}

MatModule conjugated_module(MatModule const& mod, FpMatrix const& s) {
  MatModule out{mod.dim, mod.field, {}, mod.tag + " (conjugated)"};
  FpMatrix const si = *inverse(s);
  for (auto const& g : mod.generators) out.generators.push_back(s * g * si);
  return out;
}

MatModule direct_sum_module(MatModule const& a, MatModule const& b) {
  MatModule out{a.dim + b.dim, a.field, {}, a.tag + " + " + b.tag};
  REQUIRE(a.generators.size() == b.generators.size());
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    FpMatrix m(out.dim, out.dim, out.field);
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t j = 0; j < a.dim; ++j) {
        m.at(i, j) = a.generators[g].at(i, j);
      }
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
      for (std::size_t j = 0; j < b.dim; ++j) {
        m.at(a.dim + i, a.dim + j) = b.generators[g].at(i, j);
      }
    }
    out.generators.push_back(std::move(m));
  }
  return out;
}

std::vector<std::size_t> factor_dims(std::vector<MatModule> const& factors) {
  std::vector<std::size_t> dims;
  for (auto const& f : factors) dims.push_back(f.dim);
  std::sort(dims.begin(), dims.end());
  return dims;
}

//! All functions M -> F_p with chi(1) = 1 and chi(xy) = chi(x)chi(y),
//! found by trying every assignment of values.
std::set<std::vector<std::uint64_t>> characters_by_search(Monoid const& m,
                                                          PrimeField f) {
  std::set<std::vector<std::uint64_t>> found;
  std::vector<std::uint64_t> vals(m.size, 0);
  vals[m.identity] = 1;
  std::vector<std::uint32_t> spots;
  for (std::uint32_t x = 0; x < m.size; ++x) {
    if (x != m.identity) spots.push_back(x);
  }
  std::vector<std::uint64_t> digits(spots.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < spots.size(); ++i) vals[spots[i]] = digits[i];
    bool ok = true;
    for (std::uint32_t x = 0; x < m.size && ok; ++x) {
      for (std::uint32_t y = 0; y < m.size && ok; ++y) {
        ok = vals[m.mul(x, y)] == f.mul(vals[x], vals[y]);
      }
    }
    if (ok) found.insert(vals);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == f.modulus()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return found;
}

//! Character values of a one-dimensional factor, recovered by following the
//! derivation of each element from the generating set.
std::vector<std::uint64_t> character_of_factor(Monoid const& m,
                                               GeneratingData const& gd,
                                               MatModule const& factor) {
  REQUIRE(factor.dim == 1);
  std::vector<std::uint64_t> chi(m.size, 0);
  chi[m.identity] = 1;
  for (auto x : gd.order) {
    if (x == m.identity) continue;
    chi[x] = factor.field.mul(chi[gd.parent[x]],
                              factor.generators[gd.via[x]].at(0, 0));
  }
  return chi;
}

bool intertwines(MatModule const& a, MatModule const& b, FpMatrix const& t) {
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    if (!(t * a.generators[g] == b.generators[g] * t)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("spin finds the smallest invariant subspace containing the seeds") {
  PrimeField const f7(7);
  MatModule mod = constants_span_module(f7);

  REQUIRE(spin(mod, {}).dim() == 0);
  REQUIRE(spin(mod, {FpVector{0, 0}}).dim() == 0);

  // e_0 reaches e_1 through the swap
  REQUIRE(spin(mod, {FpVector{1, 0}}).dim() == 2);

  // the difference of the constants spans an invariant line
  EchelonSpace line = spin(mod, {FpVector{1, 6}});
  REQUIRE(line.dim() == 1);
  REQUIRE(line.contains(FpVector{2, 5}));

  // property: spins contain their seeds and are generator-invariant
  MatModule reg = regular_module(t3(), f7, "F7[T3]");
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FpVector> seeds{random_vector(reg.dim, f7, rng),
                                random_vector(reg.dim, f7, rng)};
    EchelonSpace space = spin(reg, seeds);
    for (auto const& s : seeds) REQUIRE(space.contains(s));
    for (auto const& row : space.basis_rows()) {
      for (auto const& g : reg.generators) REQUIRE(space.contains(g * row));
    }
  }
}

TEST_CASE("random algebra elements stay inside the generated algebra") {
  PrimeField const f5(5);
  Rng rng(3);

  // no generators: the zero algebra
  MatModule empty{3, f5, {}, "zero algebra"};
  REQUIRE(random_algebra_element(empty, rng).is_zero());

  // one commuting generator g with g^3 = 1: elements a + b g + c g^2 act on
  // the eigenvector coordinates of the regular module, so they commute
  MatModule reg = regular_module(c3(), f5, "F5[C3]");
  for (int trial = 0; trial < 20; ++trial) {
    FpMatrix const x = random_algebra_element(reg, rng);
    FpMatrix const y = random_algebra_element(reg, rng);
    REQUIRE(x * y == y * x);
  }
}

TEST_CASE("irreducibility decisions on explicit small modules") {
  PrimeField const f7(7);
  Rng rng(17);

  MatModule zero{0, f7, {}, "zero module"};
  REQUIRE_THROWS_AS(is_irreducible(zero, rng), ZeroModuleError);

  MatModule one{1, f7, {FpMatrix({{3}}, f7)}, "a character"};
  REQUIRE(std::holds_alternative<Irreducible>(is_irreducible(one, rng)));

  // the span of the constants has exactly one invariant line
  MatModule schutz = constants_span_module(f7);
  auto verdict = is_irreducible(schutz, rng);
  REQUIRE(std::holds_alternative<Reducible>(verdict));
  EchelonSpace const& sub = std::get<Reducible>(verdict).submodule;
  REQUIRE(sub.dim() == 1);
  REQUIRE(sub.contains(FpVector{1, 6}));

  // two copies of one character: the algebra acts by scalars
  MatModule doubled{2, f7, {scaled(FpMatrix::identity(2, f7), 6)}, "chi + chi"};
  auto doubled_verdict = is_irreducible(doubled, rng);
  REQUIRE(std::holds_alternative<Reducible>(doubled_verdict));
  REQUIRE(std::get<Reducible>(doubled_verdict).submodule.dim() == 1);
}

TEST_CASE("group algebra of the 2-cycle splits into trivial and sign") {
  PrimeField const f7(7);
  Rng rng(23);
  MatModule reg = regular_module(c2(), f7, "F7[C2]");

  REQUIRE(std::holds_alternative<Reducible>(is_irreducible(reg, rng)));
  std::vector<MatModule> factors = composition_factors(reg, rng);
  REQUIRE(factor_dims(factors) == std::vector<std::size_t>{1, 1});
  std::multiset<std::uint64_t> swap_actions;
  for (auto const& f : factors) {
    REQUIRE(f.generators.size() == 1);
    swap_actions.insert(f.generators[0].at(0, 0));
  }
  REQUIRE(swap_actions == std::multiset<std::uint64_t>{1, 6});

  auto distinct = distinct_factors(factors);
  REQUIRE(distinct.size() == 2);
  REQUIRE(distinct[0].multiplicity == 1);
  REQUIRE(distinct[1].multiplicity == 1);
}

TEST_CASE("cyclic group of order three: split and non-split characteristics") {
  MonoidPtr m = c3();

  // x^3 - 1 has three roots in F_7
  {
    PrimeField const f7(7);
    Rng rng(29);
    std::vector<MatModule> factors =
        composition_factors(regular_module(m, f7, "F7[C3]"), rng);
    REQUIRE(factor_dims(factors) == std::vector<std::size_t>{1, 1, 1});
    REQUIRE(distinct_factors(factors).size() == 3);
  }

  // x^2 + x + 1 is irreducible over F_5: a two-dimensional factor survives
  {
    PrimeField const f5(5);
    Rng rng(31);
    std::vector<MatModule> factors =
        composition_factors(regular_module(m, f5, "F5[C3]"), rng);
    REQUIRE(factor_dims(factors) == std::vector<std::size_t>{1, 2});
    MatModule const& two = factors[0].dim == 2 ? factors[0] : factors[1];
    auto verdict = is_irreducible(two, rng);
    REQUIRE(std::holds_alternative<Irreducible>(verdict));
    // the certificate generates a quadratic field extension
    FpPoly const mp = matrix_min_poly(std::get<Irreducible>(verdict).certificate);
    REQUIRE(mp.degree() == 2);
    REQUIRE(factor(mp, rng).size() == 1);
  }
}

TEST_CASE("two copies of a two-dimensional module are split apart") {
  PrimeField const f5(5);
  Rng rng(37);
  std::vector<MatModule> base =
      composition_factors(regular_module(c3(), f5, "F5[C3]"), rng);
  MatModule const& w = base[0].dim == 2 ? base[0] : base[1];

  MatModule doubled = direct_sum_module(w, w);
  for (int trial = 0; trial < 5; ++trial) {
    MatModule hidden =
        conjugated_module(doubled, random_invertible(doubled.dim, f5, rng));
    auto verdict = is_irreducible(hidden, rng);
    REQUIRE(std::holds_alternative<Reducible>(verdict));

    std::vector<MatModule> split = composition_factors(hidden, rng);
    REQUIRE(factor_dims(split) == std::vector<std::size_t>{2, 2});
    for (auto const& piece : split) {
      auto t = module_isomorphism(piece, w);
      REQUIRE(t.has_value());
      REQUIRE(intertwines(piece, w, *t));
      REQUIRE(rank(*t) == 2);
    }
  }
}

TEST_CASE("symmetric group on three points over F_7") {
  PrimeField const f7(7);
  Rng rng(41);
  std::vector<MatModule> factors =
      composition_factors(regular_module(s3(), f7, "F7[S3]"), rng);
  REQUIRE(factor_dims(factors) == std::vector<std::size_t>{1, 1, 2, 2});

  auto distinct = distinct_factors(factors);
  REQUIRE(distinct.size() == 3);
  std::multiset<std::size_t> mults;
  for (auto const& d : distinct) mults.insert(d.multiplicity);
  REQUIRE(mults == std::multiset<std::size_t>{1, 1, 2});
  for (auto const& d : distinct) {
    if (d.module.dim == 2) REQUIRE(d.multiplicity == 2);
    auto verdict = is_irreducible(d.module, rng);
    REQUIRE(std::holds_alternative<Irreducible>(verdict));
  }
}

TEST_CASE("one-dimensional factors match an exhaustive character search") {
  struct Row {
    MonoidPtr monoid;
    std::uint64_t p;
    std::size_t expected;
  };
  std::vector<Row> rows{{t2(), 7, 3}, {t2(), 5, 3}, {c2(), 7, 2},
                        {c3(), 5, 1}, {c3(), 7, 3}};
  for (auto const& row : rows) {
    PrimeField const f(row.p);
    Rng rng(43);
    GeneratingData gd = generating_set(*row.monoid);
    Representation reg = regular_representation(row.monoid, f);
    std::vector<MatModule> factors =
        composition_factors(module_of(reg, gd, "regular"), rng);

    std::set<std::vector<std::uint64_t>> seen;
    for (auto const& d : distinct_factors(factors)) {
      if (d.module.dim != 1) continue;
      seen.insert(character_of_factor(*row.monoid, gd, d.module));
    }
    REQUIRE(seen == characters_by_search(*row.monoid, f));
    REQUIRE(seen.size() == row.expected);
  }
}

TEST_CASE("regular module of T_2: the extended sign character repeats") {
  PrimeField const f7(7);
  Rng rng(47);
  MonoidPtr m = t2();
  GeneratingData gd = generating_set(*m);
  Representation reg = regular_representation(m, f7);
  std::vector<MatModule> factors =
      composition_factors(module_of(reg, gd, "F7[T2]"), rng);
  REQUIRE(factor_dims(factors) == std::vector<std::size_t>{1, 1, 1, 1});

  auto distinct = distinct_factors(factors);
  REQUIRE(distinct.size() == 3);
  for (auto const& d : distinct) {
    std::vector<std::uint64_t> chi = character_of_factor(*m, gd, d.module);
    // index order: identity, swap, constant to 1, constant to 2
    std::size_t const expected_mult =
        chi == std::vector<std::uint64_t>{1, 6, 0, 0} ? 2 : 1;
    REQUIRE(d.multiplicity == expected_mult);
  }
}

TEST_CASE("composition series preserve dimension and certify their leaves") {
  PrimeField const f7(7);
  Rng rng(53);

  std::vector<MatModule> modules;
  modules.push_back(regular_module(t3(), f7, "F7[T3]"));
  modules.push_back(regular_module(
      std::make_shared<Monoid const>(matrix_monoid(2, 2)), f7, "F7[M2(F2)]"));
  {
    PrimeField const f5(5);
    std::vector<MatModule> base =
        composition_factors(regular_module(c3(), f5, "F5[C3]"), rng);
    MatModule mixed = direct_sum_module(base[0], base[1]);
    modules.push_back(
        conjugated_module(mixed, random_invertible(mixed.dim, f5, rng)));
  }

  for (auto const& mod : modules) {
    std::vector<MatModule> factors = composition_factors(mod, rng);
    std::size_t total = 0;
    for (auto const& fac : factors) {
      total += fac.dim;
      REQUIRE(std::holds_alternative<Irreducible>(is_irreducible(fac, rng)));
    }
    REQUIRE(total == mod.dim);
  }
}

TEST_CASE("module isomorphism is decided by an invertible intertwiner") {
  PrimeField const f5(5);
  Rng rng(59);
  std::vector<MatModule> base =
      composition_factors(regular_module(c3(), f5, "F5[C3]"), rng);
  MatModule const& w = base[0].dim == 2 ? base[0] : base[1];
  MatModule const& one = base[0].dim == 1 ? base[0] : base[1];

  // reflexive
  auto self = module_isomorphism(w, w);
  REQUIRE(self.has_value());
  REQUIRE(intertwines(w, w, *self));

  // dimension mismatch
  REQUIRE(!module_isomorphism(w, one).has_value());

  // distinct characters of C2
  PrimeField const f7(7);
  MatModule triv{1, f7, {FpMatrix({{1}}, f7)}, "trivial"};
  MatModule sign{1, f7, {FpMatrix({{6}}, f7)}, "sign"};
  REQUIRE(!module_isomorphism(triv, sign).has_value());

  // conjugation is undone
  for (int trial = 0; trial < 10; ++trial) {
    MatModule moved = conjugated_module(w, random_invertible(w.dim, f5, rng));
    auto t = module_isomorphism(moved, w);
    REQUIRE(t.has_value());
    REQUIRE(intertwines(moved, w, *t));
  }

  // endomorphisms of w form the quadratic extension: two dimensions over F_5
  REQUIRE(intertwiner_space(w.generators, w.generators, 2, 2, f5).size() == 2);
  REQUIRE(intertwiner_space(triv.generators, sign.generators, 1, 1, f7).empty());
}

TEST_CASE("factor lists are reproducible from the seed") {
  PrimeField const f7(7);
  MatModule reg = regular_module(s3(), f7, "F7[S3]");

  Rng rng_a(0xB0);
  Rng rng_b(0xB0);
  std::vector<MatModule> a = composition_factors(reg, rng_a);
  std::vector<MatModule> b = composition_factors(reg, rng_b);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].dim == b[i].dim);
    REQUIRE(a[i].generators.size() == b[i].generators.size());
    for (std::size_t g = 0; g < a[i].generators.size(); ++g) {
      REQUIRE(a[i].generators[g] == b[i].generators[g]);
    }
  }
}
