#pragma once

#include "brauer/regulator.hpp"

#include <string>
#include <vector>

namespace brauer {

/// One generator of the lattice of degree-0, trivial-determinant virtual characters.
struct GeneratorAtom {
  enum class Kind { dihedral, conjugate_pair };
  Kind kind = Kind::conjugate_pair;
  /// Dihedral kind: Ind_H^G(tau - 1 - det tau) with tau of degree 2 factoring through H/N.
  int subgroup_class = -1;
  /// N as element indices of subgroup_as_group(H).
  std::vector<int> kernel;
  /// "C2xC2", "D8" or "D<2p>".
  std::string quotient;
  long prime = 0;
  /// Class function on subgroup_as_group(H).
  ClassFunction tau;
  /// Conjugate-pair kind: chi + conj(chi) - 2 deg(chi) for irreducible chi.
  std::size_t irreducible = 0;
  /// The atom as a virtual character of G.
  ClassFunction character;

  std::string describe() const;
};

struct AtomList {
  std::vector<GeneratorAtom> atoms;
  /// Candidate budget ran out before every candidate was examined.
  bool partial = false;
};

/// Dihedral atoms for every (H, N) with H/N one of C2xC2, D8, D2p, then conjugate-pair atoms;
/// atoms already in the integer span of earlier ones are dropped.
AtomList generator_atoms(const GroupPtr &g, std::size_t budget = 200000);

struct Decomposition {
  ClassFunction target;
  std::vector<GeneratorAtom> atoms;
  std::vector<Integer> coefficients;
  ClassFunction residual;

  /// Recomputes the residual from the atoms and coefficients.
  bool verify() const;
};

/// Integer combination of generator atoms equal to a degree-0, trivial-determinant permutation character.
/// Among solutions: smallest l1 norm, then lexicographically largest coefficient vector.
Decomposition decompose_permutation_character(const GroupPtr &g, const ClassFunction &rho);

/// Ind_H^G 1 - det Ind_H^G 1 - ([G:H] - 1) 1.
ClassFunction rho_H(const GroupPtr &g, const Subgroup &h);

struct SnTerm {
  BrauerRelation theta;
  long prime = 0;
  ClassFunction tau;
  Integer multiplier;
  GeneratorAtom atom;
};

struct SnIdentity {
  int n = 0;
  GroupPtr group;
  ClassFunction rho, sign, sigma;
  std::vector<SnTerm> terms;
  Decomposition decomposition;

  /// rho = n 1 - sign + 2 sigma + sum tau_i, exactly.
  bool verify() const;
};

/// Brauer relations Theta_i and primes p_i in S_n with -n1 + sign + rho = 2 sigma + sum tau_{Theta_i, p_i}.
SnIdentity sn_brauer_identity(int n);

} // namespace brauer
