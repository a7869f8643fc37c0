#include "brauer/normal_form.hpp"

#include "brauer/error.hpp"

namespace brauer {

ZMatrix::ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<std::vector<Integer>> &rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  ZMatrix m(0, nc);
  for (const auto &r : rows)
    m.append_row(r);
  return m;
}

std::vector<Integer> ZMatrix::row(std::size_t i) const {
  return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

void ZMatrix::append_row(const std::vector<Integer> &r) {
  if (rows_ == 0 && cols_ == 0)
    cols_ = r.size();
  if (r.size() != cols_)
    throw ValidationError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

ZMatrix operator*(const ZMatrix &a, const ZMatrix &b) {
  if (a.cols_ != b.rows_)
    throw ValidationError("integer matrix shape mismatch");
  ZMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

void ZMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void ZMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void ZMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &f) {
  if (f == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) += f * (*this)(src, j);
}

void ZMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &f) {
  if (f == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) += f * (*this)(i, src);
}

void ZMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(i, j) = -(*this)(i, j);
}

namespace {

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

HermiteForm hermite_normal_form(const ZMatrix &a) {
  HermiteForm out{a, ZMatrix::identity(a.rows()), {}};
  ZMatrix &h = out.h;
  ZMatrix &u = out.u;
  std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c over rows r..m-1
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c))))
          best = i;
      if (best == m)
        break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0)
          continue;
        Integer q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (h(r, c) == 0)
      continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

SmithForm smith_normal_form(const ZMatrix &a) {
  SmithForm out{a, ZMatrix::identity(a.rows()), ZMatrix::identity(a.cols()), 0};
  ZMatrix &d = out.d;
  std::size_t m = d.rows(), n = d.cols();
  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest nonzero entry in the remaining block becomes the pivot
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m)
      break;
    d.swap_rows(t, pi);
    out.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    out.v.swap_cols(t, pj);
    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (d(i, t) == 0)
        continue;
      Integer q = floor_div(d(i, t), d(t, t));
      d.add_row_multiple(i, t, -q);
      out.u.add_row_multiple(i, t, -q);
      if (d(i, t) != 0)
        clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (d(t, j) == 0)
        continue;
      Integer q = floor_div(d(t, j), d(t, t));
      d.add_col_multiple(j, t, -q);
      out.v.add_col_multiple(j, t, -q);
      if (d(t, j) != 0)
        clean = false;
    }
    if (!clean)
      continue;
    // divisibility: fold in any entry the pivot does not divide
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
          d.add_row_multiple(t, i, 1);
          out.u.add_row_multiple(t, i, 1);
          divides = false;
          break;
        }
    if (!divides)
      continue;
    if (d(t, t) < 0) {
      d.negate_row(t);
      out.u.negate_row(t);
    }
    ++t;
  }
  out.rank = t;
  return out;
}

ZMatrix integer_left_kernel(const ZMatrix &a) {
  SmithForm s = smith_normal_form(a);
  ZMatrix k(0, a.rows());
  for (std::size_t i = s.rank; i < a.rows(); ++i)
    k.append_row(s.u.row(i));
  if (k.rows() == 0)
    return ZMatrix(0, a.rows());
  HermiteForm hf = hermite_normal_form(k);
  ZMatrix out(0, a.rows());
  for (std::size_t i = 0; i < hf.pivots.size(); ++i)
    out.append_row(hf.h.row(i));
  return out;
}

std::optional<std::vector<Integer>> solve_integer_left(const ZMatrix &a, const std::vector<Integer> &t) {
  if (t.size() != a.cols())
    throw ValidationError("target length mismatch");
  HermiteForm hf = hermite_normal_form(a);
  std::vector<Integer> rest = t;
  std::vector<Integer> y(a.rows());
  for (std::size_t i = 0; i < hf.pivots.size(); ++i) {
    std::size_t c = hf.pivots[i];
    if (!mpz_divisible_p(rest[c].get_mpz_t(), hf.h(i, c).get_mpz_t()))
      return std::nullopt;
    y[i] = rest[c] / hf.h(i, c);
    for (std::size_t j = 0; j < a.cols(); ++j)
      rest[j] -= y[i] * hf.h(i, j);
  }
  for (const auto &x : rest)
    if (x != 0)
      return std::nullopt;
  std::vector<Integer> c(a.rows());
  for (std::size_t i = 0; i < hf.pivots.size(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      c[j] += y[i] * hf.u(i, j);
  return c;
}

std::vector<Integer> primitive_normalize(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto &x : v)
    g = gcd(g, x);
  if (g == 0)
    return v;
  std::size_t first = 0;
  while (v[first] == 0)
    ++first;
  if (v[first] < 0)
    g = -g;
  for (auto &x : v)
    x /= g;
  return v;
}

} // namespace brauer
