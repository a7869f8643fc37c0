#pragma once

#include "brauer/cyclotomic.hpp"
#include "brauer/group.hpp"
#include "brauer/gset.hpp"

#include <string>
#include <vector>

namespace brauer {

/// Exact class function; one value per conjugacy class, all in Q(zeta_exponent).
class ClassFunction {
public:
  ClassFunction() = default;
  /// The zero class function.
  explicit ClassFunction(GroupPtr group);
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction constant(GroupPtr group, const Rational &c);
  static ClassFunction trivial(GroupPtr group) { return constant(std::move(group), 1); }
  static ClassFunction from_rationals(GroupPtr group, const std::vector<Rational> &values);

  const GroupPtr &group() const { return group_; }
  const std::vector<Cyclotomic> &values() const { return values_; }
  const Cyclotomic &operator[](std::size_t k) const { return values_[k]; }
  const Cyclotomic &at_element(int g) const { return values_[group_->class_of(g)]; }

  /// Value at the identity; throws unless rational.
  Rational degree() const { return values_[0].to_rational(); }

  bool is_zero() const;
  bool is_rational() const;
  bool is_real() const;

  ClassFunction conj() const;
  ClassFunction galois(long k) const;

  ClassFunction &operator+=(const ClassFunction &other);
  ClassFunction &operator-=(const ClassFunction &other);
  ClassFunction &operator*=(const ClassFunction &other);
  ClassFunction &operator*=(const Rational &s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction &b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction &b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction &b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational &s) { return a *= s; }
  friend ClassFunction operator*(const Rational &s, ClassFunction a) { return a *= s; }
  ClassFunction operator-() const { return *this * Rational(-1); }
  friend bool operator==(const ClassFunction &a, const ClassFunction &b);

  /// Rational values as strings when possible, otherwise cyclotomic expressions.
  std::vector<std::string> value_strings() const;
  std::string to_string() const;

private:
  void require_same_group(const ClassFunction &other) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

enum class Indicator { complex = 0, real = 1, quaternionic = -1 };

/// Irreducible characters of a finite group, computed by Dixon's method.
/// Order: trivial first, then by degree, then by value tuple (descending).
class CharacterTable {
public:
  explicit CharacterTable(const FiniteGroup &group);

  std::size_t size() const { return rows_.size(); }
  ClassFunction character(std::size_t i) const;
  std::vector<ClassFunction> characters() const;
  const std::vector<Cyclotomic> &row(std::size_t i) const { return rows_[i]; }
  Rational degree(std::size_t i) const { return rows_[i][0].to_rational(); }
  Indicator indicator(std::size_t i) const { return indicators_[i]; }
  bool is_rational() const { return rational_; }
  std::size_t conjugate_index(std::size_t i) const { return conjugate_[i]; }

  /// Galois orbits of irreducibles; the orbit sums are the characters of the Q-irreducibles here.
  const std::vector<std::vector<std::size_t>> &rational_orbits() const { return orbits_; }
  std::size_t orbit_of(std::size_t i) const { return orbit_of_[i]; }
  ClassFunction rational_irreducible(std::size_t orbit) const;

  /// The prime used for the modular computation.
  long modulus() const { return prime_; }

private:
  const FiniteGroup *group_;
  long prime_ = 0;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<Indicator> indicators_;
  std::vector<std::size_t> conjugate_;
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<std::size_t> orbit_of_;
  bool rational_ = true;
};

/// (1/|G|) sum_c |c| a(c) conj(b(c)).
Cyclotomic inner_product(const ClassFunction &a, const ClassFunction &b);
/// As inner_product, but throws unless the result is rational.
Rational inner_product_q(const ClassFunction &a, const ClassFunction &b);

/// Multiplicities of the irreducibles (table order); throws unless integral.
std::vector<Integer> decompose(const ClassFunction &chi);
ClassFunction from_multiplicities(const GroupPtr &group, const std::vector<Integer> &mult);
/// Nonnegative integer multiplicities.
bool is_true_character(const ClassFunction &chi);

/// Class function on subgroup_as_group(h).
ClassFunction restrict_to(const ClassFunction &chi, const Subgroup &h);
/// Induced class function from subgroup_as_group(h) to the ambient group.
ClassFunction induce(const GroupPtr &group, const Subgroup &h, const ClassFunction &tau);

ClassFunction permutation_character(const GSet &x);
/// Ind_H^G 1.
ClassFunction permutation_character(const GroupPtr &group, const Subgroup &h);

/// Determinant of a virtual character, read off from eigenvalue multiplicities.
ClassFunction virtual_determinant(const ClassFunction &chi);
/// Determinant of a true character; throws UnsupportedError for virtual characters.
ClassFunction determinant_character(const ClassFunction &chi);
/// Determinant of a permutation representation: the sign of the action.
ClassFunction sign_character(const GSet &x);
/// det Ind_H^G tau via sign(pi)^dim(tau) * prod det tau(h_i) over a coset transversal.
ClassFunction induced_determinant(const GroupPtr &group, const Subgroup &h, const ClassFunction &tau);

/// Multiplicities of the zeta_o^s eigenvalues (s = 0..o-1) at class k, o the element order.
std::vector<Integer> eigenvalue_multiplicities(const ClassFunction &chi, int k);

} // namespace brauer
