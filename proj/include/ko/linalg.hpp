#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "ko/arith.hpp"

namespace ko {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
Vec vec_add(const PrimeField& F, const Vec& a, const Vec& b);
Vec vec_sub(const PrimeField& F, const Vec& a, const Vec& b);
Vec vec_scale(const PrimeField& F, Scalar c, const Vec& a);
/// a += c * b
void vec_axpy(const PrimeField& F, Vec& a, Scalar c, const Vec& b);
Scalar dot(const PrimeField& F, const Vec& a, const Vec& b);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar* row(std::size_t r) { return data_.data() + r * cols_; }
  const Scalar* row(std::size_t r) const { return data_.data() + r * cols_; }
  Vec row_vec(std::size_t r) const { return Vec(row(r), row(r) + cols_); }
  Vec col_vec(std::size_t c) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

  Matrix transpose() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix mat_mul(const PrimeField& F, const Matrix& a, const Matrix& b);
Vec mat_vec(const PrimeField& F, const Matrix& a, const Vec& v);
Matrix mat_add(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix mat_sub(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix mat_scale(const PrimeField& F, Scalar c, const Matrix& a);
/// a += c * b
void mat_axpy(const PrimeField& F, Matrix& a, Scalar c, const Matrix& b);
Matrix mat_pow(const PrimeField& F, const Matrix& a, std::uint64_t e);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& F, Matrix& a);
std::size_t rank(const PrimeField& F, Matrix a);
/// Basis of {x : a x = 0}, one vector per free column, in canonical form.
std::vector<Vec> nullspace(const PrimeField& F, const Matrix& a);
/// Some x with a x = b, if one exists.
std::optional<Vec> solve(const PrimeField& F, const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const PrimeField& F, const Matrix& a);

/// A subspace of F_p^n held as a canonical reduced row-echelon basis.
/// Two subspaces are equal iff their bases compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  Subspace(const PrimeField& F, std::size_t ambient, const std::vector<Vec>& span);

  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const PrimeField& F, const Vec& v);
  /// v minus its projection along the pivots; zero iff v lies in the span.
  Vec reduce(const PrimeField& F, Vec v) const;
  bool contains(const PrimeField& F, const Vec& v) const;
  bool contains(const PrimeField& F, const Subspace& other) const;
  /// Coordinates of v in the echelon basis (entries of v at pivot columns).
  /// Precondition: contains(v).
  Vec coordinates(const Vec& v) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const PrimeField& F, const Subspace& a, const Subspace& b);
Subspace sum(const PrimeField& F, const Subspace& a, const Subspace& b);

/// Compressed sparse row matrix over F_p.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix identity(std::size_t n);
  /// Entries given as (row, col, value) triples; duplicates are summed.
  static SparseMatrix from_triples(const PrimeField& F, std::size_t rows, std::size_t cols,
                                   std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> triples);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return vals_.size(); }

  Matrix to_dense() const;
  SparseMatrix transpose() const;
  Vec apply(const PrimeField& F, const Vec& v) const;
  bool is_zero() const { return vals_.empty(); }

  const std::vector<std::uint32_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::uint32_t>& col_idx() const { return col_idx_; }
  const std::vector<Scalar>& vals() const { return vals_; }

  bool operator==(const SparseMatrix& o) const = default;

 private:
  friend SparseMatrix sp_mul(const PrimeField&, const SparseMatrix&, const SparseMatrix&);
  friend SparseMatrix sp_lincomb(const PrimeField&, Scalar, const SparseMatrix&, Scalar,
                                 const SparseMatrix&);
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> row_ptr_{0};
  std::vector<std::uint32_t> col_idx_;
  std::vector<Scalar> vals_;
};

SparseMatrix sp_mul(const PrimeField& F, const SparseMatrix& a, const SparseMatrix& b);
/// alpha * a + beta * b
SparseMatrix sp_lincomb(const PrimeField& F, Scalar alpha, const SparseMatrix& a, Scalar beta,
                        const SparseMatrix& b);
SparseMatrix sp_pow(const PrimeField& F, const SparseMatrix& a, std::uint64_t e);

}  // namespace ko
