// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_FP_MATRIX_HPP
#define MONREP_FP_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "fp.hpp"

namespace monrep {

using FpVector = std::vector<std::uint64_t>;

//! Dense row-major matrix over F_p.  All entries are canonical residues.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, PrimeField field)
      : rows_(rows), cols_(cols), field_(field), a_(rows * cols, 0) {}

  FpMatrix(std::initializer_list<std::initializer_list<std::int64_t>> entries,
           PrimeField field)
      : rows_(entries.size()),
        cols_(entries.size() == 0 ? 0 : entries.begin()->size()),
        field_(field),
        a_(rows_ * cols_, 0) {
    std::size_t i = 0;
    for (auto const& row : entries) {
      if (row.size() != cols_) throw Error("ragged matrix initialiser");
      std::size_t j = 0;
      for (auto v : row) at(i, j++) = field_.from_int(v);
      ++i;
    }
  }

  static FpMatrix identity(std::size_t n, PrimeField field) {
    FpMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % field.modulus();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  PrimeField field() const { return field_; }

  std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  FpVector row(std::size_t i) const {
    return FpVector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  FpVector col(std::size_t j) const {
    FpVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  bool is_zero() const {
    for (auto v : a_) {
      if (v != 0) return false;
    }
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (at(i, j) != (i == j ? 1 % field_.modulus() : 0)) return false;
      }
    }
    return true;
  }

  bool operator==(FpMatrix const& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_
           && field_ == other.field_ && a_ == other.a_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " [";
      for (std::size_t j = 0; j < cols_; ++j) {
        s += std::to_string(at(i, j));
        if (j + 1 < cols_) s += " ";
      }
      s += "]";
      if (i + 1 < rows_) s += "\n";
    }
    return s + "]";
  }

 private:
  std::size_t rows_, cols_;
  PrimeField field_;
  std::vector<std::uint64_t> a_;
};

inline FpMatrix operator*(FpMatrix const& a, FpMatrix const& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw Error("matrix product shape or field mismatch");
  }
  std::uint64_t const p = a.field().modulus();
  FpMatrix c(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) = (c.at(i, j) + aik * b.at(k, j)) % p;
      }
    }
  }
  return c;
}

inline FpMatrix operator+(FpMatrix const& a, FpMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()
      || !(a.field() == b.field())) {
    throw Error("matrix sum shape or field mismatch");
  }
  FpMatrix c(a.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
    }
  }
  return c;
}

inline FpMatrix operator-(FpMatrix const& a, FpMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()
      || !(a.field() == b.field())) {
    throw Error("matrix difference shape or field mismatch");
  }
  FpMatrix c(a.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c.at(i, j) = a.field().sub(a.at(i, j), b.at(i, j));
    }
  }
  return c;
}

inline FpMatrix scaled(FpMatrix const& a, std::uint64_t c) {
  FpMatrix r(a.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.at(i, j) = a.field().mul(a.at(i, j), c);
    }
  }
  return r;
}

inline FpMatrix transpose(FpMatrix const& a) {
  FpMatrix t(a.cols(), a.rows(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  }
  return t;
}

inline FpVector operator*(FpMatrix const& a, FpVector const& v) {
  if (a.cols() != v.size()) throw Error("matrix-vector shape mismatch");
  std::uint64_t const p = a.field().modulus();
  FpVector r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc = (acc + a.at(i, j) * v[j]) % p;
    }
    r[i] = acc;
  }
  return r;
}

//! Row vector times matrix.
inline FpVector vec_mul(FpVector const& v, FpMatrix const& a) {
  if (a.rows() != v.size()) throw Error("vector-matrix shape mismatch");
  std::uint64_t const p = a.field().modulus();
  FpVector r(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r[j] = (r[j] + v[i] * a.at(i, j)) % p;
    }
  }
  return r;
}

struct RowReduction {
  FpMatrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

//! Reduced row echelon form by Gauss-Jordan elimination.  The result is the
//! canonical rref, so two matrices have equal row space iff their rrefs agree.
inline RowReduction row_reduce(FpMatrix const& a) {
  FpMatrix m = a;
  PrimeField const f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m.at(sel, j), m.at(r, j));
      }
    }
    std::uint64_t const inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) {
      m.at(r, j) = f.mul(m.at(r, j), inv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      std::uint64_t const t = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RowReduction{std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(FpMatrix const& a) { return row_reduce(a).rank; }

//! Basis of the right nullspace, returned as the columns of the result.
//! Basis vectors are indexed by the free columns of the rref in increasing
//! order, each with a 1 in its free coordinate.
inline FpMatrix nullspace(FpMatrix const& a) {
  RowReduction rr = row_reduce(a);
  PrimeField const f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FpMatrix basis(a.cols(), free_cols.size(), f);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t const fc = free_cols[k];
    basis.at(fc, k) = 1;
    for (std::size_t t = 0; t < rr.rank; ++t) {
      basis.at(rr.pivot_cols[t], k) = f.neg(rr.rref.at(t, fc));
    }
  }
  return basis;
}

struct LinearSolution {
  FpVector particular;       // free coordinates set to zero
  FpMatrix nullspace_basis;  // columns span the solution space of Ax = 0
};

//! Solve Ax = b.  Empty result means rank(A) < rank([A|b]).
inline std::optional<LinearSolution> solve_linear(FpMatrix const& a,
                                                  FpVector const& b) {
  if (b.size() != a.rows()) throw Error("solve_linear shape mismatch");
  PrimeField const f = a.field();
  FpMatrix aug(a.rows(), a.cols() + 1, f);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i] % f.modulus();
  }
  RowReduction rr = row_reduce(aug);
  for (auto c : rr.pivot_cols) {
    if (c == a.cols()) return std::nullopt;
  }
  FpVector x(a.cols(), 0);
  for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t) {
    x[rr.pivot_cols[t]] = rr.rref.at(t, a.cols());
  }
  return LinearSolution{std::move(x), nullspace(a)};
}

//! Solve BX = C for X when B has full column rank.  Empty result if the
//! system is inconsistent; throws if B is column rank deficient, because
//! every internal caller passes a basis matrix.
inline std::optional<FpMatrix> solve_matrix(FpMatrix const& b,
                                            FpMatrix const& c) {
  if (b.rows() != c.rows() || !(b.field() == c.field())) {
    throw Error("solve_matrix shape or field mismatch");
  }
  PrimeField const f = b.field();
  FpMatrix aug(b.rows(), b.cols() + c.cols(), f);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, j) = b.at(i, j);
    for (std::size_t j = 0; j < c.cols(); ++j) {
      aug.at(i, b.cols() + j) = c.at(i, j);
    }
  }
  RowReduction rr = row_reduce(aug);
  std::size_t lead_rank = 0;
  for (auto pc : rr.pivot_cols) {
    if (pc < b.cols()) ++lead_rank;
  }
  if (lead_rank < b.cols()) {
    if (lead_rank < rr.rank) return std::nullopt;
    throw Error("solve_matrix requires full column rank");
  }
  if (rr.rank > b.cols()) return std::nullopt;
  FpMatrix x(b.cols(), c.cols(), f);
  for (std::size_t t = 0; t < b.cols(); ++t) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      x.at(t, j) = rr.rref.at(t, b.cols() + j);
    }
  }
  return x;
}

inline std::optional<FpMatrix> inverse(FpMatrix const& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  std::optional<FpMatrix> x =
      solve_matrix(a, FpMatrix::identity(a.rows(), a.field()));
  return x;
}

//! Basis of the column space: the pivot columns of the input, in order.
inline FpMatrix column_space(FpMatrix const& a) {
  RowReduction rr = row_reduce(a);
  FpMatrix basis(a.rows(), rr.rank, a.field());
  for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      basis.at(i, k) = a.at(i, rr.pivot_cols[k]);
    }
  }
  return basis;
}

//! A subspace of F_p^n kept in reduced row echelon form.  The basis is
//! canonical for the subspace, independent of insertion order.
class EchelonSpace {
 public:
  EchelonSpace(std::size_t ambient, PrimeField field)
      : ambient_(ambient), field_(field) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  //! Reduce v against the basis; if independent, insert it and return true.
  bool insert(FpVector v) {
    if (v.size() != ambient_) throw Error("EchelonSpace dimension mismatch");
    reduce(v);
    std::size_t lead = leading(v);
    if (lead == ambient_) return false;
    std::uint64_t const inv = field_.inv(v[lead]);
    for (auto& x : v) x = field_.mul(x, inv);
    // keep full rref: clear this pivot from existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t const t = rows_[r][lead];
      if (t == 0) continue;
      for (std::size_t j = lead; j < ambient_; ++j) {
        rows_[r][j] = field_.sub(rows_[r][j], field_.mul(t, v[j]));
      }
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    return true;
  }

  bool contains(FpVector v) const {
    if (v.size() != ambient_) throw Error("EchelonSpace dimension mismatch");
    reduce(v);
    return leading(v) == ambient_;
  }

  //! Basis as matrix columns (ambient x dim).
  FpMatrix column_basis() const {
    FpMatrix b(ambient_, rows_.size(), field_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      for (std::size_t i = 0; i < ambient_; ++i) b.at(i, k) = rows_[k][i];
    }
    return b;
  }

  std::vector<FpVector> const& basis_rows() const { return rows_; }
  std::vector<std::size_t> const& pivots() const { return pivots_; }

  //! v minus its projection onto the space; zero at every pivot position.
  FpVector residual(FpVector v) const {
    if (v.size() != ambient_) throw Error("EchelonSpace dimension mismatch");
    reduce(v);
    return v;
  }

 private:
  void reduce(FpVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t const t = v[pivots_[r]];
      if (t == 0) continue;
      for (std::size_t j = pivots_[r]; j < ambient_; ++j) {
        v[j] = field_.sub(v[j], field_.mul(t, rows_[r][j]));
      }
    }
  }

  std::size_t leading(FpVector const& v) const {
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (v[j] != 0) return j;
    }
    return ambient_;
  }

  std::size_t ambient_;
  PrimeField field_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace monrep

#endif  // MONREP_FP_MATRIX_HPP
