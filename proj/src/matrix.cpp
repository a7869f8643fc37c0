#include "brauer/matrix.hpp"

#include "brauer/error.hpp"

#include <sstream>

namespace brauer {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>> &rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  QMatrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc)
      throw ValidationError("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  QMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix &b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      (*this)(r0 + i, c0 + j) = b(i, j);
}

QMatrix QMatrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

QMatrix &QMatrix::operator+=(const QMatrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ValidationError("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += other.data_[i];
  return *this;
}

QMatrix &QMatrix::operator-=(const QMatrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ValidationError("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= other.data_[i];
  return *this;
}

QMatrix &QMatrix::operator*=(const Rational &s) {
  for (auto &x : data_)
    x *= s;
  return *this;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
  if (a.cols_ != b.rows_)
    throw ValidationError("matrix shape mismatch in product");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational &x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational &y = b(k, j);
        if (y != 0)
          c(i, j) += x * y;
      }
    }
  return c;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t += (*this)(i, i);
  return t;
}

Rational QMatrix::determinant() const {
  if (rows_ != cols_)
    throw ValidationError("determinant of a non-square matrix");
  QMatrix m = *this;
  std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0)
        continue;
      Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (m(c, j) != 0)
          m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

QMatrix QMatrix::rref(std::vector<std::size_t> *pivots) const {
  QMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m(p, c) == 0)
      ++p;
    if (p == rows_)
      continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols_; ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (m(r, j) != 0)
          m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots)
    *pivots = std::move(piv);
  return m;
}

std::size_t QMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

QMatrix QMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  QMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv)
    is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);
  QMatrix basis(cols_, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      basis(piv[i], k) = -r(i, f);
  }
  return basis;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_)
    throw ValidationError("inverse of a non-square matrix");
  auto x = solve(identity(rows_));
  if (!x)
    throw ValidationError("matrix is singular");
  return *x;
}

std::optional<QMatrix> QMatrix::solve(const QMatrix &b) const {
  if (b.rows() != rows_)
    throw ValidationError("right-hand side shape mismatch");
  std::vector<std::size_t> piv;
  QMatrix aug = hstack(*this, b).rref(&piv);
  QMatrix x(cols_, b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= cols_)
      return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(piv[i], j) = aug(i, cols_ + j);
  }
  return x;
}

QMatrix QMatrix::left_inverse() const {
  // choose a maximal set of independent rows; invert that square block
  std::vector<std::size_t> piv;
  transpose().rref(&piv);
  if (piv.size() != cols_)
    throw ValidationError("left inverse needs full column rank");
  QMatrix sub(cols_, cols_);
  for (std::size_t i = 0; i < cols_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      sub(i, j) = (*this)(piv[i], j);
  QMatrix inv = sub.inverse();
  QMatrix l(cols_, rows_);
  for (std::size_t i = 0; i < cols_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      l(i, piv[k]) = inv(i, k);
  return l;
}

bool QMatrix::is_zero() const {
  for (const auto &x : data_)
    if (x != 0)
      return false;
  return true;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i))
        return false;
  return true;
}

QMatrix QMatrix::kronecker(const QMatrix &a, const QMatrix &b) {
  QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0)
        continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

QMatrix QMatrix::direct_sum(const QMatrix &a, const QMatrix &b) {
  QMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
  s.set_block(0, 0, a);
  s.set_block(a.rows(), a.cols(), b);
  return s;
}

QMatrix QMatrix::hstack(const QMatrix &a, const QMatrix &b) {
  if (a.rows() != b.rows())
    throw ValidationError("hstack row mismatch");
  QMatrix s(a.rows(), a.cols() + b.cols());
  s.set_block(0, 0, a);
  s.set_block(0, a.cols(), b);
  return s;
}

QMatrix QMatrix::vstack(const QMatrix &a, const QMatrix &b) {
  if (a.cols() != b.cols())
    throw ValidationError("vstack column mismatch");
  QMatrix s(a.rows() + b.rows(), a.cols());
  s.set_block(0, 0, a);
  s.set_block(a.rows(), 0, b);
  return s;
}

std::string QMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

} // namespace brauer
