#pragma once

#include "brauer/relation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brauer {

/// Element of K^x / K^x2 for K = Q (prime 0) or K = Q_p.
class SquareClass {
public:
  SquareClass() = default;
  static SquareClass over_q(const Rational &x);
  static SquareClass over_qp(const Rational &x, long p);

  long prime() const { return prime_; }
  /// Over Q: the signed squarefree representative.
  const Integer &representative() const { return rep_; }
  /// Over Q_p: valuation mod 2.
  int valuation_parity() const { return vpar_; }
  /// Over Q_p: Legendre symbol of the unit part (+-1) for odd p, the unit part mod 8 for p = 2.
  int unit_code() const { return unit_; }

  SquareClass localize(long p) const;
  /// ord_p mod 2; well defined on square classes.
  int ord_parity(long p) const;

  friend SquareClass operator*(const SquareClass &a, const SquareClass &b);
  friend bool operator==(const SquareClass &a, const SquareClass &b) = default;
  std::string to_string() const;

private:
  long prime_ = 0;
  Integer rep_ = 1;
  int vpar_ = 0;
  int unit_ = 1;
};

struct PairingRoute {
  /// det<B,B>_1 / det<B',B'>_2 in the chosen bases.
  Rational value;
  SquareClass square_class;
};

/// Bases and pairing default to the invariant_subspace bases and invariant_pairing(model).
/// Bases, if given, list the positive side then the negative side (expanded by multiplicity).
PairingRoute regulator_constant_pairing(const BrauerRelation &theta, const RationalRepModel &model,
                                        const std::optional<QMatrix> &pairing = std::nullopt,
                                        const std::vector<QMatrix> *bases = nullptr);

/// Square class of 1 / det((Phi^v Phi)^*) on the positive-side invariants.
SquareClass regulator_constant_phi(const RealisingMap &phi);

/// Product of C_Theta over the Q-irreducible constituents of a rational true character, as a squarefree integer.
Integer regulator_constant_sf(const BrauerRelation &theta, const ClassFunction &chi);

/// Square classes of C_Theta on each Q-irreducible, indexed by rational orbit.
std::vector<SquareClass> regulator_constants_on_irreducibles(const BrauerRelation &theta);

struct TauRep {
  BrauerRelation relation;
  long prime = 0;
  ClassFunction tau;
  /// ord_p C_Theta mod 2 per rational orbit of the character table.
  std::vector<int> parities;
  std::string method;
};

/// Self-dual representation whose pairing with each eligible irreducible gives ord_p C_Theta mod 2.
/// Supported for groups with a rational character table, and for dihedral groups of order 2p at p.
TauRep tau_rep(const BrauerRelation &theta, long p);

} // namespace brauer
