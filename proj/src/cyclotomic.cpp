#include "brauer/cyclotomic.hpp"

#include "brauer/error.hpp"
#include "brauer/matrix.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace brauer {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

namespace {

using IntPoly = std::vector<long>;

IntPoly exact_divide(IntPoly num, const IntPoly &den) {
  // den is monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  IntPoly q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long c = num[i];
    q[i - dn] = c;
    for (int j = 0; j <= dn; ++j)
      num[i - dn + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i)
    if (num[i] != 0)
      throw InternalError("cyclotomic polynomial division left a remainder");
  return q;
}

const IntPoly &cyclotomic_polynomial(int m) {
  static std::map<int, IntPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end())
    return it->second;
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0)
      p = exact_divide(p, cyclotomic_polynomial(d));
  return cache.emplace(m, std::move(p)).first->second;
}

std::mutex &field_mutex() {
  static std::mutex mu;
  return mu;
}

} // namespace

CyclotomicField::CyclotomicField(int order) : order_(order) {
  if (order < 1)
    throw ValidationError("cyclotomic order must be positive");
  phi_ = cyclotomic_polynomial(order);
  dimension_ = static_cast<int>(phi_.size()) - 1;
  powers_.resize(order);
  std::vector<long> cur(dimension_, 0);
  cur[0] = 1;
  for (int k = 0; k < order; ++k) {
    powers_[k] = cur;
    // multiply by zeta and reduce by the monic minimal polynomial
    long top = cur[dimension_ - 1];
    for (int i = dimension_ - 1; i > 0; --i)
      cur[i] = cur[i - 1] - top * phi_[i];
    cur[0] = -top * phi_[0];
  }
}

const CyclotomicField &CyclotomicField::get(int order) {
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(field_mutex());
  auto it = fields.find(order);
  if (it == fields.end())
    it = fields.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
  return *it->second;
}

Cyclotomic::Cyclotomic(int order)
    : order_(order), coeffs_(CyclotomicField::get(order).dimension()) {}

Cyclotomic::Cyclotomic(int order, const Rational &value) : Cyclotomic(order) {
  coeffs_[0] = value;
}

Cyclotomic Cyclotomic::root_of_unity(int order, long k) {
  const auto &field = CyclotomicField::get(order);
  long r = ((k % order) + order) % order;
  Cyclotomic z(order);
  const auto &p = field.power(static_cast<int>(r));
  for (int i = 0; i < field.dimension(); ++i)
    z.coeffs_[i] = p[i];
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto &c : coeffs_)
    if (c != 0)
      return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational())
    throw ValidationError("cyclotomic value " + to_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(int target) const {
  if (target == order_)
    return *this;
  if (target % order_ != 0)
    throw ValidationError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                          std::to_string(target) + ")");
  const auto &field = CyclotomicField::get(target);
  Cyclotomic out(target);
  int step = target / order_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    const auto &p = field.power(static_cast<int>((i * step) % target));
    for (int j = 0; j < field.dimension(); ++j)
      if (p[j])
        out.coeffs_[j] += coeffs_[i] * Rational(p[j]);
  }
  return out;
}

std::optional<Cyclotomic> Cyclotomic::descend(int target) const {
  if (target % order_ == 0)
    return embed(target);
  if (is_rational())
    return Cyclotomic(target, coeffs_[0]);
  int big = static_cast<int>(lcm_ll(order_, target));
  Cyclotomic w = embed(big);
  const auto &small = CyclotomicField::get(target);
  std::size_t d = static_cast<std::size_t>(small.dimension());
  std::size_t n = w.coeffs_.size();
  QMatrix basis(n, d);
  for (std::size_t j = 0; j < d; ++j) {
    Cyclotomic e = root_of_unity(target, static_cast<long>(j)).embed(big);
    for (std::size_t i = 0; i < n; ++i)
      basis(i, j) = e.coeffs_[i];
  }
  QMatrix rhs(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    rhs(i, 0) = w.coeffs_[i];
  auto sol = basis.solve(rhs);
  if (!sol)
    return std::nullopt;
  Cyclotomic out(target);
  for (std::size_t j = 0; j < d; ++j)
    out.coeffs_[j] = (*sol)(j, 0);
  return out;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (std::gcd(static_cast<long>(order_), ((k % order_) + order_) % order_) != 1 && order_ > 1)
    throw ValidationError("Galois exponent must be coprime to the field order");
  const auto &field = CyclotomicField::get(order_);
  Cyclotomic out(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    long e = ((static_cast<long>(i) * k) % order_ + order_) % order_;
    const auto &p = field.power(static_cast<int>(e));
    for (int j = 0; j < field.dimension(); ++j)
      if (p[j])
        out.coeffs_[j] += coeffs_[i] * Rational(p[j]);
  }
  return out;
}

void Cyclotomic::promote_to(int order) {
  if (order != order_)
    *this = embed(order);
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &other) {
  if (other.order_ != order_) {
    int m = static_cast<int>(lcm_ll(order_, other.order_));
    promote_to(m);
    return *this += other.embed(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &other) {
  if (other.order_ != order_) {
    int m = static_cast<int>(lcm_ll(order_, other.order_));
    promote_to(m);
    return *this -= other.embed(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &other) {
  if (other.order_ != order_) {
    int m = static_cast<int>(lcm_ll(order_, other.order_));
    promote_to(m);
    return *this *= other.embed(m);
  }
  if (other.is_rational())
    return *this *= other.coeffs_[0];
  if (is_rational()) {
    Rational s = coeffs_[0];
    *this = other;
    return *this *= s;
  }
  const auto &field = CyclotomicField::get(order_);
  int d = field.dimension();
  std::vector<Rational> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (int j = 0; j < d; ++j)
      if (other.coeffs_[j] != 0)
        prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  std::vector<Rational> out(d);
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (prod[k] == 0)
      continue;
    if (k < d) {
      out[k] += prod[k];
      continue;
    }
    const auto &p = field.power(k % order_);
    for (int j = 0; j < d; ++j)
      if (p[j])
        out[j] += prod[k] * Rational(p[j]);
  }
  coeffs_ = std::move(out);
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Rational &scalar) {
  for (auto &c : coeffs_)
    c *= scalar;
  return *this;
}

Cyclotomic &Cyclotomic::operator/=(const Rational &scalar) {
  if (scalar == 0)
    throw ValidationError("division of cyclotomic by zero");
  for (auto &c : coeffs_)
    c /= scalar;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto &c : out.coeffs_)
    c = -c;
  return out;
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.order_ != b.order_) {
    int m = static_cast<int>(lcm_ll(a.order_, b.order_));
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering compare(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.order_ != b.order_) {
    int m = static_cast<int>(lcm_ll(a.order_, b.order_));
    return compare(a.embed(m), b.embed(m));
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c < 0)
      return std::strong_ordering::less;
    if (c > 0)
      return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational &c = coeffs_[i];
    if (c == 0)
      continue;
    std::string mag = brauer::to_string(abs(c));
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    if (i == 0) {
      out += mag;
    } else {
      if (abs(c) != 1)
        out += mag + "*";
      out += "E(" + std::to_string(order_) + ")";
      if (i > 1)
        out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace brauer
