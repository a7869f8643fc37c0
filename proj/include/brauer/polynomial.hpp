#pragma once

#include "brauer/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace brauer {

/// Univariate polynomial with rational coefficients, lowest degree first, no trailing zeros.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational &c);
  /// The monomial c x^k.
  static RatPoly monomial(const Rational &c, std::size_t k);
  static RatPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree, -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational> &coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational &x) const;
  RatPoly derivative() const;
  /// Scaled to leading coefficient 1; zero stays zero.
  RatPoly monic() const;
  /// p(x^2).
  RatPoly at_square() const;
  bool is_even() const;
  /// G with this = G(x^2); throws InternalError unless even.
  RatPoly even_to_square() const;

  friend RatPoly operator+(const RatPoly &a, const RatPoly &b);
  friend RatPoly operator-(const RatPoly &a, const RatPoly &b);
  friend RatPoly operator-(const RatPoly &a);
  friend RatPoly operator*(const RatPoly &a, const RatPoly &b);
  friend RatPoly operator*(const Rational &c, const RatPoly &a);
  RatPoly &operator+=(const RatPoly &b) { return *this = *this + b; }
  RatPoly &operator-=(const RatPoly &b) { return *this = *this - b; }
  RatPoly &operator*=(const RatPoly &b) { return *this = *this * b; }
  friend bool operator==(const RatPoly &a, const RatPoly &b) = default;

  RatPoly pow(unsigned long e) const;
  /// Quotient and remainder; b must be nonzero.
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b);
  /// Exact quotient; throws InternalError when b does not divide a.
  static RatPoly exact_div(const RatPoly &a, const RatPoly &b);
  /// Monic gcd; gcd(0, 0) = 0.
  static RatPoly gcd(const RatPoly &a, const RatPoly &b);

  /// Human-readable form in the given variable, highest degree first.
  std::string to_string(const std::string &var = "x") const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Determinant of a square matrix over Q[t] (fraction-free elimination).
RatPoly poly_determinant(std::vector<std::vector<RatPoly>> m);

/// Resultant of a and b whose coefficients are polynomials in t (lowest degree first), via the Sylvester matrix.
RatPoly resultant(const std::vector<RatPoly> &a, const std::vector<RatPoly> &b);
Rational resultant(const RatPoly &a, const RatPoly &b);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f); 1 for degree 1. Throws ValidationError for degree 0 or inseparable f.
Rational poly_discriminant(const RatPoly &f);

/// disc_x(f(x) - t) as a polynomial in t.
RatPoly discriminant_curve_polynomial(const RatPoly &f);

/// Yun's algorithm: monic squarefree, pairwise coprime a_1, a_2, ... with P / lc(P) = prod a_i^i.
std::vector<RatPoly> squarefree_factorization(const RatPoly &p);

struct DiscriminantData {
  RatPoly input;
  /// Signed squarefree integer; the class of the leading coefficient modulo squares.
  Integer a;
  /// Monic squarefree.
  RatPoly g;
  /// input = a g h^2 exactly; h absorbs the rational square root of lc(input) / a.
  RatPoly h;

  bool verify() const;
};

DiscriminantData squarefree_split(const RatPoly &p);

struct DeltaTower {
  /// The cover x^2 = f(z).
  RatPoly f;
  /// disc_z(f(z) - x^2), a polynomial in x.
  RatPoly discriminant;
  DiscriminantData split;
  /// g(x) = G(x^2).
  RatPoly big_g;
  /// g = 1: the first discriminant cover y^2 = a is a constant extension.
  bool constant_extension = false;
  /// a is a square: the quadratic field Q(sqrt a) is split.
  bool a_split = false;
};

DeltaTower delta_tower(const RatPoly &f);

} // namespace brauer
