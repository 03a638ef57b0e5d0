// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_MATRIX_MONOID_HPP
#define MONREP_MATRIX_MONOID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "entry_field.hpp"
#include "error.hpp"
#include "monoid.hpp"

namespace monrep {

//! An n x n matrix over F_q flattened row-major; entries are F_q indices.
using MatrixWord = std::vector<std::uint32_t>;

inline MatrixWord matrix_product(std::size_t n, EntryField const& f,
                                 MatrixWord const& a, MatrixWord const& b) {
  MatrixWord c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      std::uint32_t const aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        c[i * n + j] = f.add(c[i * n + j], f.mul(aik, b[k * n + j]));
      }
    }
  }
  return c;
}

//! Rows of entry indices joined by '|', e.g. "10|01" for the 2 x 2 identity.
inline std::string matrix_label(std::size_t n, MatrixWord const& a) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) s += '|';
    for (std::size_t j = 0; j < n; ++j) {
      s += static_cast<char>('0' + a[i * n + j]);
    }
  }
  return s;
}

inline MatrixWord matrix_identity_word(std::size_t n) {
  MatrixWord id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  return id;
}

//! The matrix monoid generated by a list of n x n matrices over F_q.
inline Monoid monoid_from_matrices(std::size_t n, std::uint32_t q,
                                   std::vector<MatrixWord> const& gens,
                                   std::size_t cap = default_size_cap) {
  if (n == 0) throw ParseError("matrix dimension must be positive");
  EntryField const f = EntryField::make(q);
  for (auto const& g : gens) {
    if (g.size() != n * n) {
      throw ParseError("generator entry count does not match the dimension");
    }
    for (auto e : g) {
      if (!f.valid(e)) throw InvalidFieldElementError(e, q);
    }
  }
  return detail::monoid_from_closure(
      matrix_identity_word(n), gens,
      [n, &f](MatrixWord const& a, MatrixWord const& b) {
        return matrix_product(n, f, a, b);
      },
      [n](MatrixWord const& a) { return matrix_label(n, a); }, cap);
}

//! Base-q encoding of a full matrix monoid: element index <-> entry digits.
inline MatrixWord matrix_word_of_index(std::size_t index, std::size_t n,
                                       std::uint32_t q) {
  MatrixWord w(n * n);
  for (std::size_t c = 0; c < n * n; ++c) {
    w[c] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return w;
}

inline std::size_t matrix_index_of_word(MatrixWord const& w, std::uint32_t q) {
  std::size_t index = 0;
  for (std::size_t c = w.size(); c-- > 0;) index = index * q + w[c];
  return index;
}

//! All n x n matrices over F_q as one monoid; elements are indexed by the
//! base-q encoding of their entries.  The table is associative because it
//! is genuine matrix multiplication.
inline Monoid matrix_monoid(std::size_t n, std::uint32_t q,
                            std::size_t cap = default_size_cap) {
  if (n == 0) throw ParseError("matrix dimension must be positive");
  EntryField const f = EntryField::make(q);
  std::size_t size = 1;
  for (std::size_t c = 0; c < n * n; ++c) {
    size *= q;
    if (size > cap) throw SizeLimitError(cap);
  }
  std::vector<MatrixWord> words(size);
  for (std::size_t i = 0; i < size; ++i) words[i] = matrix_word_of_index(i, n, q);
  std::vector<std::uint32_t> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table[a * size + b] = static_cast<std::uint32_t>(
          matrix_index_of_word(matrix_product(n, f, words[a], words[b]), q));
    }
  }
  std::vector<std::string> labels(size);
  for (std::size_t i = 0; i < size; ++i) labels[i] = matrix_label(n, words[i]);
  std::uint32_t const id = static_cast<std::uint32_t>(
      matrix_index_of_word(matrix_identity_word(n), q));
  return detail::monoid_unchecked(size, id, std::move(table),
                                  std::move(labels));
}

//! The invertible upper-triangular matrices inside matrix_monoid(n, q).
inline Subgroup borel_subgroup(Monoid const& m, std::size_t n,
                               std::uint32_t q) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t e = 0; e < m.size; ++e) {
    MatrixWord const w = matrix_word_of_index(e, n, q);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (w[i * n + i] == 0) ok = false;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (w[i * n + j] != 0) ok = false;
      }
    }
    if (ok) members.push_back(e);
  }
  return subgroup_closure(m, std::move(members));
}

//! Partial-permutation matrix: every entry 0 or 1, at most one 1 per row
//! and per column.
inline bool is_rook_matrix(MatrixWord const& w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t row_ones = 0, col_ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[i * n + j] > 1 || w[j * n + i] > 1) return false;
      row_ones += w[i * n + j];
      col_ones += w[j * n + i];
    }
    if (row_ones > 1 || col_ones > 1) return false;
  }
  return true;
}

}  // namespace monrep

#endif  // MONREP_MATRIX_MONOID_HPP
