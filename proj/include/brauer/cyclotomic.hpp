#pragma once

#include "brauer/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

/// Arithmetic tables for Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).
class CyclotomicField {
public:
  static const CyclotomicField &get(int order);

  int order() const { return order_; }
  int dimension() const { return dimension_; }

  /// Coordinates of zeta^k (0 <= k < order) in the power basis.
  const std::vector<long> &power(int k) const { return powers_[k]; }

  /// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
  const std::vector<long> &minimal_polynomial() const { return phi_; }

private:
  explicit CyclotomicField(int order);

  int order_;
  int dimension_;
  std::vector<long> phi_;
  std::vector<std::vector<long>> powers_;
};

/// Exact element of Q(zeta_m). Mixed-order arithmetic promotes to the lcm order.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order);
  Cyclotomic(int order, const Rational &value);
  Cyclotomic(int order, long value) : Cyclotomic(order, Rational(value)) {}

  static Cyclotomic root_of_unity(int order, long k);

  int order() const { return order_; }
  const std::vector<Rational> &coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws ValidationError unless is_rational().
  Rational to_rational() const;

  /// The same number viewed in Q(zeta_target); order() must divide target.
  Cyclotomic embed(int target) const;

  /// The same number in Q(zeta_target) if it lies there (target need not be a multiple of order()).
  std::optional<Cyclotomic> descend(int target) const;

  /// Galois automorphism zeta -> zeta^k, gcd(k, order) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic &operator+=(const Cyclotomic &other);
  Cyclotomic &operator-=(const Cyclotomic &other);
  Cyclotomic &operator*=(const Cyclotomic &other);
  Cyclotomic &operator*=(const Rational &scalar);
  Cyclotomic &operator/=(const Rational &scalar);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational &s) { return a *= s; }
  friend Cyclotomic operator*(const Rational &s, Cyclotomic a) { return a *= s; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational &s) { return a /= s; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);

  /// Total order: lexicographic on power-basis coordinates after promotion.
  friend std::strong_ordering compare(const Cyclotomic &a, const Cyclotomic &b);

  std::string to_string() const;

private:
  void promote_to(int order);

  int order_;
  std::vector<Rational> coeffs_;
};

long long lcm_ll(long long a, long long b);

} // namespace brauer
