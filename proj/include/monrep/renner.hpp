// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_RENNER_HPP
#define MONREP_RENNER_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monrep/correspondence.hpp"
#include "monrep/error.hpp"
#include "monrep/hecke.hpp"
#include "monrep/matrix_monoid.hpp"
#include "monrep/monoid.hpp"
#include "monrep/report.hpp"

namespace monrep {

//! All partial injective maps on n points under composition.  Element i
//! carries its graph in images[i] (-1 for undefined) and its rank.  Labels
//! are n-character strings over {1..n, '-'}, e.g. "2-1" for 1 -> 2, 3 -> 1.
struct RookMonoid {
  std::size_t n = 0;
  Monoid monoid;
  std::vector<std::vector<int>> images;
  std::vector<std::size_t> rank_of;
};

inline constexpr std::size_t rook_rank_limit = 4;

inline RookMonoid rook_monoid(std::size_t n) {
  if (n == 0) throw ParseError("rook monoid rank must be positive");
  if (n > rook_rank_limit) throw SizeLimitError(rook_rank_limit);

  // every assignment of {-1, 0..n-1} to the n points, injective where defined
  std::vector<std::vector<int>> maps;
  std::vector<int> img(n, -1);
  while (true) {
    bool injective = true;
    for (std::size_t i = 0; i < n && injective; ++i) {
      for (std::size_t j = i + 1; j < n && injective; ++j) {
        injective = img[i] < 0 || img[i] != img[j];
      }
    }
    if (injective) maps.push_back(img);
    std::size_t i = 0;
    while (i < n && ++img[i] == static_cast<int>(n)) img[i++] = -1;
    if (i == n) break;
  }
  std::stable_sort(maps.begin(), maps.end(),
                   [](std::vector<int> const& a, std::vector<int> const& b) {
                     std::size_t ra = 0, rb = 0;
                     for (auto x : a) ra += x >= 0;
                     for (auto x : b) rb += x >= 0;
                     return ra != rb ? ra < rb : a < b;
                   });

  RookMonoid rook;
  rook.n = n;
  rook.images = std::move(maps);
  std::size_t const size = rook.images.size();
  std::vector<std::string> labels(size);
  std::vector<std::uint32_t> index_of;  // keyed by a positional encoding
  index_of.assign(1, 0);
  {
    std::size_t code_space = 1;
    for (std::size_t i = 0; i < n; ++i) code_space *= n + 1;
    index_of.assign(code_space, 0);
  }
  auto encode = [n](std::vector<int> const& f) {
    std::size_t code = 0;
    for (std::size_t i = n; i-- > 0;) {
      code = code * (n + 1) + static_cast<std::size_t>(f[i] + 1);
    }
    return code;
  };
  for (std::size_t e = 0; e < size; ++e) {
    auto const& f = rook.images[e];
    std::size_t r = 0;
    std::string label;
    for (std::size_t i = 0; i < n; ++i) {
      r += f[i] >= 0;
      label += f[i] < 0 ? '-' : static_cast<char>('1' + f[i]);
    }
    rook.rank_of.push_back(r);
    labels[e] = std::move(label);
    index_of[encode(f)] = static_cast<std::uint32_t>(e);
  }

  std::vector<std::uint32_t> table(size * size);
  std::vector<int> comp(n);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      // (a after b)(x) = a(b(x)), undefined wherever either side is
      for (std::size_t x = 0; x < n; ++x) {
        int const bx = rook.images[b][x];
        comp[x] = bx < 0 ? -1 : rook.images[a][static_cast<std::size_t>(bx)];
      }
      table[a * size + b] = index_of[encode(comp)];
    }
  }
  std::vector<int> ident(n);
  for (std::size_t i = 0; i < n; ++i) ident[i] = static_cast<int>(i);
  rook.monoid = detail::monoid_unchecked(size, index_of[encode(ident)],
                                         std::move(table), std::move(labels));
  return rook;
}

//! Everything measured about one reductive-monoid instance: the double-coset
//! decomposition against the rook monoid, and (when a characteristic is
//! given) the dimension comparison of the two algebras.
struct RennerReport {
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t p = 0;  // 0 when no algebra comparison was run
  std::size_t class_count = 0;
  std::size_t rook_count = 0;
  std::vector<std::string> class_rook_labels;  // per class, its rook matrix
  std::size_t hecke_dim = 0;
  std::vector<std::size_t> hecke_irrep_dims;
  std::vector<std::size_t> rook_irrep_dims;
  bool dims_compared = false;
  bool multisets_agree = false;
  VerificationReport checks;
};

//! Check that the Borel double cosets of the full matrix monoid are indexed
//! by rook matrices: the class count equals |R_n|, every class holds exactly
//! one partial-permutation matrix, and the invertible classes recover the
//! permutation-matrix decomposition of the unit group.
inline RennerReport verify_renner_decomposition(std::size_t n,
                                                std::uint32_t q) {
  Monoid const m = matrix_monoid(n, q);
  Subgroup const b = borel_subgroup(m, n, q);
  DoubleCosetPartition const cosets = double_cosets(m, b);
  RookMonoid const rook = rook_monoid(n);

  RennerReport report;
  report.n = n;
  report.q = q;
  report.class_count = cosets.class_count;
  report.rook_count = rook.monoid.size;
  report.checks.instance = "M_" + std::to_string(n) + "(F_" +
                           std::to_string(q) + "), |B| = " +
                           std::to_string(b.size());

  report.checks.add("double cosets are counted by the rook monoid",
                    cosets.class_count == rook.monoid.size,
                    std::to_string(cosets.class_count) + " classes vs |R_" +
                        std::to_string(n) + "| = " +
                        std::to_string(rook.monoid.size));

  std::vector<std::vector<std::string>> rooks_in(cosets.class_count);
  std::vector<std::size_t> rook_rank_in(cosets.class_count, 0);
  for (std::uint32_t e = 0; e < m.size; ++e) {
    MatrixWord const w = matrix_word_of_index(e, n, q);
    if (!is_rook_matrix(w, n)) continue;
    std::size_t const c = cosets.class_of[e];
    if (rooks_in[c].empty()) {
      for (auto entry : w) rook_rank_in[c] += entry;
    }
    rooks_in[c].push_back(m.label(e));
  }
  std::string missing, crowded;
  for (std::size_t c = 0; c < cosets.class_count; ++c) {
    if (rooks_in[c].empty() && missing.empty()) {
      missing = "class of " + m.label(cosets.representatives[c]);
    }
    if (rooks_in[c].size() > 1 && crowded.empty()) {
      crowded = "class of " + m.label(cosets.representatives[c]) + " holds " +
                rooks_in[c][0] + " and " + rooks_in[c][1];
    }
    report.class_rook_labels.push_back(rooks_in[c].empty() ? "?"
                                                           : rooks_in[c][0]);
  }
  report.checks.add("every class contains a rook matrix", missing.empty(),
                    missing.empty() ? "all classes covered" : missing);
  report.checks.add("no class contains two rook matrices", crowded.empty(),
                    crowded.empty() ? "representatives unique" : crowded);

  // invertible classes are exactly the full-rank (permutation) classes
  Subgroup const units = unit_group(m);
  std::vector<char> is_unit(m.size, 0);
  for (auto u : units.elements) is_unit[u] = 1;
  bool bruhat = true;
  std::size_t unit_classes = 0;
  for (std::size_t c = 0; c < cosets.class_count && bruhat; ++c) {
    bool const rep_unit = is_unit[cosets.representatives[c]] != 0;
    unit_classes += rep_unit;
    for (auto e : cosets.members[c]) {
      bruhat = bruhat && (is_unit[e] != 0) == rep_unit;
    }
    bruhat = bruhat && rep_unit == (rook_rank_in[c] == n);
  }
  std::size_t permutations = 1;
  for (std::size_t i = 2; i <= n; ++i) permutations *= i;
  bruhat = bruhat && unit_classes == permutations;
  report.checks.add(
      "unit classes match the permutation matrices", bruhat,
      std::to_string(unit_classes) + " invertible classes, expected " +
          std::to_string(permutations));
  return report;
}

//! Compare the Borel Hecke algebra of M_n(F_q) with the rook monoid algebra
//! over F_p.  The dimension equality is a hard gate; the agreement of
//! irreducible-dimension multisets is recorded but never failed, since only
//! the dimension count is pinned down at this level of generality.
inline RennerReport compare_hecke_renner_algebra(std::size_t n,
                                                 std::uint32_t q,
                                                 std::uint64_t p, Rng& rng) {
  MonoidPtr const m = std::make_shared<Monoid const>(matrix_monoid(n, q));
  Subgroup const b = borel_subgroup(*m, n, q);
  PrimeField const f(p);
  HeckeAlgebra const h = hecke_algebra(m, b, f);
  RookMonoid rook = rook_monoid(n);
  MonoidPtr const rm = std::make_shared<Monoid const>(std::move(rook.monoid));

  RennerReport report;
  report.n = n;
  report.q = q;
  report.p = p;
  report.class_count = h.dim;
  report.rook_count = rm->size;
  report.hecke_dim = h.dim;
  report.dims_compared = true;
  report.checks.instance = "H(M_" + std::to_string(n) + "(F_" +
                           std::to_string(q) + "), B) vs F_" +
                           std::to_string(p) + "[R_" + std::to_string(n) + "]";

  for (auto const& irrep : irreps_of_algebra(h, rng)) {
    report.hecke_irrep_dims.push_back(irrep.dim);
  }
  for (auto const& irrep : irreps_of_monoid(rm, f, rng)) {
    report.rook_irrep_dims.push_back(irrep.dim);
  }
  std::sort(report.hecke_irrep_dims.begin(), report.hecke_irrep_dims.end());
  std::sort(report.rook_irrep_dims.begin(), report.rook_irrep_dims.end());

  report.checks.add("algebra dimensions are equal", h.dim == rm->size,
                    std::to_string(h.dim) + " vs " + std::to_string(rm->size));

  auto join = [](std::vector<std::size_t> const& dims) {
    std::string s = "{";
    for (std::size_t i = 0; i < dims.size(); ++i) {
      s += (i ? "," : "") + std::to_string(dims[i]);
    }
    return s + "}";
  };
  report.multisets_agree =
      report.hecke_irrep_dims == report.rook_irrep_dims;
  report.checks.add(
      "irreducible dimension multisets (informational)", true,
      (report.multisets_agree ? "agree: " + join(report.hecke_irrep_dims)
                              : "differ: " + join(report.hecke_irrep_dims) +
                                    " vs " + join(report.rook_irrep_dims)));
  return report;
}

}  // namespace monrep

#endif  // MONREP_RENNER_HPP
