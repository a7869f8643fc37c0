#pragma once

#include "brauer/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

/// Dense matrix over Q, row-major.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix transpose() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix &b);
  QMatrix column(std::size_t j) const;

  QMatrix &operator+=(const QMatrix &other);
  QMatrix &operator-=(const QMatrix &other);
  QMatrix &operator*=(const Rational &s);
  friend QMatrix operator+(QMatrix a, const QMatrix &b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix &b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational &s) { return a *= s; }
  friend QMatrix operator*(const Rational &s, QMatrix a) { return a *= s; }
  friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
  friend bool operator==(const QMatrix &a, const QMatrix &b) = default;

  Rational trace() const;
  Rational determinant() const;
  std::size_t rank() const;

  /// Reduced row echelon form; pivot columns are written to `pivots` when given.
  QMatrix rref(std::vector<std::size_t> *pivots = nullptr) const;

  /// Columns form a basis of {x : A x = 0}.
  QMatrix nullspace() const;

  /// Throws ValidationError when singular.
  QMatrix inverse() const;

  /// Some X with A X = B, if one exists.
  std::optional<QMatrix> solve(const QMatrix &b) const;

  /// L with L A = I for a matrix of full column rank.
  QMatrix left_inverse() const;

  bool is_zero() const;
  bool is_symmetric() const;

  static QMatrix kronecker(const QMatrix &a, const QMatrix &b);
  static QMatrix direct_sum(const QMatrix &a, const QMatrix &b);
  static QMatrix hstack(const QMatrix &a, const QMatrix &b);
  static QMatrix vstack(const QMatrix &a, const QMatrix &b);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

} // namespace brauer
