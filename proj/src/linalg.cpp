#include "ko/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace ko {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

Vec vec_add(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const PrimeField& F, Scalar c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return r;
}

void vec_axpy(const PrimeField& F, Vec& a, Scalar c, const Vec& b) {
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i]) a[i] = F.add(a[i], F.mul(c, b[i]));
}

Scalar dot(const PrimeField& F, const Vec& a, const Vec& b) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i];
  return static_cast<Scalar>(acc % F.p());
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    std::copy(rows[r].begin(), rows[r].end(), m.row(r));
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

Vec Matrix::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const { return ko::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix mat_mul(const PrimeField& F, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  Matrix out(n, m);
  std::vector<std::uint64_t> acc(m);
  // Flush before the accumulator could overflow: p < 2^15 so each term < 2^30.
  const std::size_t flush_every = std::size_t{1} << 30;
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const Scalar* arow = a.row(i);
    std::size_t since = 0;
    for (std::size_t l = 0; l < k; ++l) {
      const std::uint64_t x = arow[l];
      if (!x) continue;
      const Scalar* brow = b.row(l);
      for (std::size_t j = 0; j < m; ++j) acc[j] += x * brow[j];
      if (++since == flush_every) {
        for (auto& v : acc) v %= F.p();
        since = 0;
      }
    }
    Scalar* orow = out.row(i);
    for (std::size_t j = 0; j < m; ++j) orow[j] = static_cast<Scalar>(acc[j] % F.p());
  }
  return out;
}

Vec mat_vec(const PrimeField& F, const Matrix& a, const Vec& v) {
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    const Scalar* r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) acc += static_cast<std::uint64_t>(r[j]) * v[j];
    out[i] = static_cast<Scalar>(acc % F.p());
  }
  return out;
}

Matrix mat_add(const PrimeField& F, const Matrix& a, const Matrix& b) {
  Matrix out = a;
  mat_axpy(F, out, 1, b);
  return out;
}

Matrix mat_sub(const PrimeField& F, const Matrix& a, const Matrix& b) {
  Matrix out = a;
  mat_axpy(F, out, F.neg(1), b);
  return out;
}

Matrix mat_scale(const PrimeField& F, Scalar c, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) out(r, j) = F.mul(c, a(r, j));
  return out;
}

void mat_axpy(const PrimeField& F, Matrix& a, Scalar c, const Matrix& b) {
  if (c == 0) return;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Scalar* ar = a.row(r);
    const Scalar* br = b.row(r);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (br[j]) ar[j] = F.add(ar[j], F.mul(c, br[j]));
  }
}

Matrix mat_pow(const PrimeField& F, const Matrix& a, std::uint64_t e) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e) {
    if (e & 1) result = mat_mul(F, result, base);
    e >>= 1;
    if (e) base = mat_mul(F, base, base);
  }
  return result;
}

std::vector<std::size_t> rref(const PrimeField& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
    const Scalar iv = F.inv(a(r, c));
    Scalar* prow = a.row(r);
    for (std::size_t j = c; j < a.cols(); ++j) prow[j] = F.mul(prow[j], iv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Scalar f = a(i, c);
      if (!f) continue;
      Scalar nf = F.neg(f);
      Scalar* irow = a.row(i);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (prow[j]) irow[j] = F.add(irow[j], F.mul(nf, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const PrimeField& F, Matrix a) { return rref(F, a).size(); }

std::vector<Vec> nullspace(const PrimeField& F, const Matrix& a) {
  Matrix m = a;
  auto piv = rref(F, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(m(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const PrimeField& F, const Matrix& a, const Vec& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r), a.row(r) + a.cols(), aug.row(r));
    aug(r, a.cols()) = b[r];
  }
  auto piv = rref(F, aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  return x;
}

std::optional<Matrix> inverse(const PrimeField& F, const Matrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(a.row(r), a.row(r) + n, aug.row(r));
    aug(r, n + r) = 1;
  }
  auto piv = rref(F, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) std::copy(aug.row(r) + n, aug.row(r) + 2 * n, inv.row(r));
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const PrimeField& F, std::size_t ambient, const std::vector<Vec>& span)
    : ambient_(ambient) {
  for (const auto& v : span) insert(F, v);
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vec(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const PrimeField& F, Vec v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c) vec_axpy(F, v, F.neg(c), basis_[i]);
  }
  return v;
}

bool Subspace::insert(const PrimeField& F, const Vec& v0) {
  Vec v = reduce(F, v0);
  std::size_t c = 0;
  while (c < v.size() && v[c] == 0) ++c;
  if (c == v.size()) return false;
  Scalar iv = F.inv(v[c]);
  for (auto& x : v) x = F.mul(x, iv);
  for (auto& row : basis_)
    if (row[c]) vec_axpy(F, row, F.neg(row[c]), v);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, c);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const PrimeField& F, const Vec& v) const { return is_zero(reduce(F, v)); }

bool Subspace::contains(const PrimeField& F, const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(F, v)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace intersect(const PrimeField& F, const Subspace& a, const Subspace& b) {
  // Solve sum_i x_i a_i = sum_j y_j b_j.
  const std::size_t n = a.ambient();
  Matrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = F.neg(b.basis()[j][r]);
  Subspace out(n);
  for (const auto& x : nullspace(F, m)) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < a.dim(); ++i) vec_axpy(F, v, x[i], a.basis()[i]);
    out.insert(F, v);
  }
  return out;
}

Subspace sum(const PrimeField& F, const Subspace& a, const Subspace& b) {
  Subspace out = a;
  for (const auto& v : b.basis()) out.insert(F, v);
  return out;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c)) {
        s.col_idx_.push_back(static_cast<std::uint32_t>(c));
        s.vals_.push_back(m(r, c));
      }
    s.row_ptr_[r + 1] = static_cast<std::uint32_t>(s.vals_.size());
  }
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix s(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    s.col_idx_.push_back(static_cast<std::uint32_t>(r));
    s.vals_.push_back(1);
    s.row_ptr_[r + 1] = static_cast<std::uint32_t>(r + 1);
  }
  return s;
}

SparseMatrix SparseMatrix::from_triples(
    const PrimeField& F, std::size_t rows, std::size_t cols,
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> triples) {
  std::sort(triples.begin(), triples.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  SparseMatrix s(rows, cols);
  std::size_t i = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    while (i < triples.size() && std::get<0>(triples[i]) == r) {
      auto c = std::get<1>(triples[i]);
      Scalar v = 0;
      while (i < triples.size() && std::get<0>(triples[i]) == r && std::get<1>(triples[i]) == c)
        v = F.add(v, std::get<2>(triples[i++]));
      if (v) {
        s.col_idx_.push_back(c);
        s.vals_.push_back(v);
      }
    }
    s.row_ptr_[r + 1] = static_cast<std::uint32_t>(s.vals_.size());
  }
  return s;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) m(r, col_idx_[k]) = vals_[k];
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  std::vector<std::uint32_t> count(cols_ + 1, 0);
  for (auto c : col_idx_) ++count[c + 1];
  for (std::size_t c = 0; c < cols_; ++c) count[c + 1] += count[c];
  t.row_ptr_ = count;
  t.col_idx_.resize(vals_.size());
  t.vals_.resize(vals_.size());
  std::vector<std::uint32_t> pos(count.begin(), count.end() - 1);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      auto c = col_idx_[k];
      t.col_idx_[pos[c]] = static_cast<std::uint32_t>(r);
      t.vals_[pos[c]++] = vals_[k];
    }
  return t;
}

Vec SparseMatrix::apply(const PrimeField& F, const Vec& v) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (auto k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      acc += static_cast<std::uint64_t>(vals_[k]) * v[col_idx_[k]];
    out[r] = static_cast<Scalar>(acc % F.p());
  }
  return out;
}

SparseMatrix sp_mul(const PrimeField& F, const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_, 0);
  std::vector<std::uint32_t> touched;
  std::vector<char> mark(b.cols_, 0);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    touched.clear();
    for (auto k = a.row_ptr_[r]; k < a.row_ptr_[r + 1]; ++k) {
      const std::uint64_t x = a.vals_[k];
      const auto l = a.col_idx_[k];
      for (auto q = b.row_ptr_[l]; q < b.row_ptr_[l + 1]; ++q) {
        auto c = b.col_idx_[q];
        if (!mark[c]) {
          mark[c] = 1;
          touched.push_back(c);
        }
        acc[c] += x * b.vals_[q];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto c : touched) {
      Scalar v = static_cast<Scalar>(acc[c] % F.p());
      if (v) {
        out.col_idx_.push_back(c);
        out.vals_.push_back(v);
      }
      acc[c] = 0;
      mark[c] = 0;
    }
    out.row_ptr_[r + 1] = static_cast<std::uint32_t>(out.vals_.size());
  }
  return out;
}

SparseMatrix sp_lincomb(const PrimeField& F, Scalar alpha, const SparseMatrix& a, Scalar beta,
                        const SparseMatrix& b) {
  SparseMatrix out(a.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    auto i = a.row_ptr_[r], ie = a.row_ptr_[r + 1];
    auto j = b.row_ptr_[r], je = b.row_ptr_[r + 1];
    while (i < ie || j < je) {
      std::uint32_t c;
      Scalar v = 0;
      if (j >= je || (i < ie && a.col_idx_[i] < b.col_idx_[j])) {
        c = a.col_idx_[i];
        v = F.mul(alpha, a.vals_[i++]);
      } else if (i >= ie || b.col_idx_[j] < a.col_idx_[i]) {
        c = b.col_idx_[j];
        v = F.mul(beta, b.vals_[j++]);
      } else {
        c = a.col_idx_[i];
        v = F.add(F.mul(alpha, a.vals_[i++]), F.mul(beta, b.vals_[j++]));
      }
      if (v) {
        out.col_idx_.push_back(c);
        out.vals_.push_back(v);
      }
    }
    out.row_ptr_[r + 1] = static_cast<std::uint32_t>(out.vals_.size());
  }
  return out;
}

SparseMatrix sp_pow(const PrimeField& F, const SparseMatrix& a, std::uint64_t e) {
  SparseMatrix result = SparseMatrix::identity(a.rows());
  for (std::uint64_t i = 0; i < e; ++i) result = sp_mul(F, result, a);
  return result;
}

}  // namespace ko
