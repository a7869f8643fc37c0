#pragma once

#include "brauer/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace brauer {

/// Dense integer matrix, row-major. Rows are the lattice vectors in every routine here.
class ZMatrix {
public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols);

  static ZMatrix identity(std::size_t n);
  static ZMatrix from_rows(const std::vector<std::vector<Integer>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  void append_row(const std::vector<Integer> &r);
  ZMatrix transpose() const;

  friend ZMatrix operator*(const ZMatrix &a, const ZMatrix &b);
  friend bool operator==(const ZMatrix &a, const ZMatrix &b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += f * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &f);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &f);
  void negate_row(std::size_t i);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteForm {
  ZMatrix h;                        ///< row-style HNF, h = u * a
  ZMatrix u;                        ///< unimodular transform
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Row-style Hermite normal form: positive pivots, entries above each pivot reduced into [0, pivot).
HermiteForm hermite_normal_form(const ZMatrix &a);

struct SmithForm {
  ZMatrix d; ///< diagonal, d = u * a * v, each diagonal entry divides the next
  ZMatrix u;
  ZMatrix v;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const ZMatrix &a);

/// Lattice basis (rows) of {x in Z^rows : x a = 0}, computed from the Smith form and put in Hermite form.
ZMatrix integer_left_kernel(const ZMatrix &a);

/// Some integer row vector c with c a = t, if one exists.
std::optional<std::vector<Integer>> solve_integer_left(const ZMatrix &a, const std::vector<Integer> &t);

/// Removes the content and makes the first nonzero entry positive.
std::vector<Integer> primitive_normalize(std::vector<Integer> v);

} // namespace brauer
