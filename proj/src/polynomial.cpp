#include "brauer/polynomial.hpp"

#include "brauer/error.hpp"

namespace brauer {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto &c : c_)
    c.canonicalize();
  trim();
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

RatPoly RatPoly::constant(const Rational &c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational &c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

Rational RatPoly::operator()(const Rational &x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * x + *it;
  return r;
}

RatPoly RatPoly::derivative() const {
  std::vector<Rational> v;
  for (std::size_t k = 1; k < c_.size(); ++k)
    v.push_back(c_[k] * static_cast<long>(k));
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (is_zero())
    return *this;
  return (1 / leading()) * *this;
}

RatPoly RatPoly::at_square() const {
  std::vector<Rational> v(c_.empty() ? 0 : 2 * c_.size() - 1);
  for (std::size_t k = 0; k < c_.size(); ++k)
    v[2 * k] = c_[k];
  return RatPoly(std::move(v));
}

bool RatPoly::is_even() const {
  for (std::size_t k = 1; k < c_.size(); k += 2)
    if (c_[k] != 0)
      return false;
  return true;
}

RatPoly RatPoly::even_to_square() const {
  if (!is_even())
    throw InternalError("polynomial is not even");
  std::vector<Rational> v;
  for (std::size_t k = 0; k < c_.size(); k += 2)
    v.push_back(c_[k]);
  return RatPoly(std::move(v));
}

RatPoly operator+(const RatPoly &a, const RatPoly &b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = a.coefficient(k) + b.coefficient(k);
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly &a) { return Rational(-1) * a; }

RatPoly operator-(const RatPoly &a, const RatPoly &b) { return a + (-b); }

RatPoly operator*(const RatPoly &a, const RatPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(v));
}

RatPoly operator*(const Rational &c, const RatPoly &a) {
  std::vector<Rational> v = a.c_;
  for (auto &x : v)
    x *= c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::pow(unsigned long e) const {
  RatPoly r = constant(1), b = *this;
  while (e) {
    if (e & 1)
      r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly &a, const RatPoly &b) {
  if (b.is_zero())
    throw ValidationError("polynomial division by zero");
  RatPoly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto t = monomial(r.leading() / b.leading(), static_cast<std::size_t>(r.degree() - b.degree()));
    q += t;
    r -= t * b;
  }
  return {q, r};
}

RatPoly RatPoly::exact_div(const RatPoly &a, const RatPoly &b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw InternalError("inexact polynomial division");
  return q;
}

RatPoly RatPoly::gcd(const RatPoly &a, const RatPoly &b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string RatPoly::to_string(const std::string &var) const {
  if (is_zero())
    return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    Rational c = c_[k];
    if (c == 0)
      continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = a == 1 && k > 0;
    if (!unit)
      out += brauer::to_string(a);
    if (k > 0) {
      out += (unit ? "" : "*") + var;
      if (k > 1)
        out += "^" + std::to_string(k);
    }
  }
  return out;
}

RatPoly poly_determinant(std::vector<std::vector<RatPoly>> m) {
  std::size_t n = m.size();
  if (n == 0)
    return RatPoly::constant(1);
  for (const auto &row : m)
    if (row.size() != n)
      throw ValidationError("determinant of a non-square matrix");
  // Bareiss: every division below is exact
  RatPoly prev = RatPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero())
        ++s;
      if (s == n)
        return {};
      std::swap(m[s], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = RatPoly::exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RatPoly resultant(const std::vector<RatPoly> &a, const std::vector<RatPoly> &b) {
  if (a.empty() || b.empty() || a.back().is_zero() || b.back().is_zero())
    throw ValidationError("resultant needs nonzero leading coefficients");
  std::size_t da = a.size() - 1, db = b.size() - 1, n = da + db;
  if (n == 0)
    return RatPoly::constant(1);
  std::vector<std::vector<RatPoly>> s(n, std::vector<RatPoly>(n));
  // rows hold coefficients from the leading one down
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t k = 0; k <= da; ++k)
      s[i][i + k] = a[da - k];
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k <= db; ++k)
      s[db + i][i + k] = b[db - k];
  return poly_determinant(std::move(s));
}

namespace {

std::vector<RatPoly> as_constants(const RatPoly &p) {
  std::vector<RatPoly> v;
  for (const auto &c : p.coefficients())
    v.push_back(RatPoly::constant(c));
  return v;
}

// disc from the resultant, coefficients in Q[t]
RatPoly discriminant_over(const std::vector<RatPoly> &f) {
  std::size_t d = f.size() - 1;
  if (d == 1)
    return RatPoly::constant(1);
  std::vector<RatPoly> df;
  for (std::size_t k = 1; k <= d; ++k)
    df.push_back(Rational(static_cast<long>(k)) * f[k]);
  RatPoly r = resultant(f, df);
  if (f.back().degree() != 0)
    throw ValidationError("discriminant needs a constant leading coefficient");
  Rational scale = 1 / f.back().leading();
  if ((d * (d - 1) / 2) % 2)
    scale = -scale;
  return scale * r;
}

} // namespace

Rational resultant(const RatPoly &a, const RatPoly &b) {
  return resultant(as_constants(a), as_constants(b)).coefficient(0);
}

Rational poly_discriminant(const RatPoly &f) {
  if (f.degree() < 1)
    throw ValidationError("discriminant needs degree at least 1");
  if (RatPoly::gcd(f, f.derivative()).degree() > 0)
    throw ValidationError("polynomial " + f.to_string() + " is not separable");
  return discriminant_over(as_constants(f)).coefficient(0);
}

RatPoly discriminant_curve_polynomial(const RatPoly &f) {
  if (f.degree() < 1)
    throw ValidationError("discriminant curve needs degree at least 1");
  auto coeffs = as_constants(f);
  coeffs[0] -= RatPoly::x();
  RatPoly g = discriminant_over(coeffs);
  // f(x) - t is separable over Q(t) exactly when this is nonzero
  if (g.is_zero())
    throw ValidationError("f(x) - t is not separable over Q(t)");
  return g;
}

std::vector<RatPoly> squarefree_factorization(const RatPoly &p) {
  if (p.is_zero())
    throw ValidationError("squarefree factorization of the zero polynomial");
  std::vector<RatPoly> out;
  RatPoly f = p.monic();
  if (f.degree() == 0)
    return out;
  RatPoly a = RatPoly::gcd(f, f.derivative());
  RatPoly b = RatPoly::exact_div(f, a);
  RatPoly c = RatPoly::exact_div(f.derivative(), a);
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly ai = RatPoly::gcd(b, d);
    out.push_back(ai);
    b = RatPoly::exact_div(b, ai);
    c = RatPoly::exact_div(d, ai);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0)
    out.pop_back();
  return out;
}

bool DiscriminantData::verify() const {
  if (g.leading() != 1 || RatPoly::gcd(g, g.derivative()).degree() > 0)
    return false;
  return Rational(a) * g * h * h == input;
}

DiscriminantData squarefree_split(const RatPoly &p) {
  if (p.is_zero())
    throw ValidationError("squarefree split of the zero polynomial");
  DiscriminantData out;
  out.input = p;
  out.a = squarefree_part(p.leading());
  auto parts = squarefree_factorization(p);
  out.g = RatPoly::constant(1);
  out.h = RatPoly::constant(1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::size_t e = i + 1;
    if (e % 2)
      out.g *= parts[i];
    out.h *= parts[i].pow(e / 2);
  }
  // lc / a is a rational square s^2
  Rational q = p.leading() / Rational(out.a);
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), q.get_den_mpz_t());
  Rational s = make_rational(sn, sd);
  if (s * s != q)
    throw InternalError("leading coefficient class is not a square multiple");
  out.h = s * out.h;
  if (!out.verify())
    throw InternalError("squarefree split does not reconstruct its input");
  return out;
}

DeltaTower delta_tower(const RatPoly &f) {
  if (f.degree() < 1)
    throw ValidationError("cover x^2 = f(z) needs f of degree at least 1");
  DeltaTower out;
  out.f = f;
  out.discriminant = discriminant_curve_polynomial(f).at_square();
  out.split = squarefree_split(out.discriminant);
  if (!out.split.g.is_even())
    throw InternalError("squarefree part of the discriminant is not even in x");
  out.big_g = out.split.g.even_to_square();
  out.constant_extension = out.split.g.degree() == 0;
  out.a_split = out.split.a == 1;
  return out;
}

} // namespace brauer
