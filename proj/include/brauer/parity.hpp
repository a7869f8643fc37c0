#pragma once

#include "brauer/polynomial.hpp"
#include "brauer/regulator.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

enum class PlaceKind { nonarchimedean, real, complex };

std::string to_string(PlaceKind kind);
PlaceKind parse_place_kind(const std::string &text);

/// User-supplied arithmetic data at one place; subgroup classes are keyed by class index.
struct LocalDataRecord {
  std::string label;
  PlaceKind kind = PlaceKind::nonarchimedean;
  /// Residue characteristic of a nonarchimedean place.
  long residue_characteristic = 0;
  /// ord_p of the Tamagawa number of Jac_{X/H} for subgroup class H.
  std::map<int, long> tamagawa_ord;
  /// Deficiency flag mu(X/H) in {1, 2}.
  std::map<int, int> deficiency;
  /// Direct value of ord_p Lambda at this place.
  std::optional<long> override_ord;
  /// ord_p of the period-ratio term, for places where the Tamagawa shortcut does not apply.
  std::optional<long> c_ratio_ord;

  void validate() const;
};

/// Signed sum of Tamagawa ords over the relation; odd p, nonarchimedean v not above p.
long ord_p_lambda_tamagawa(const LocalDataRecord &record, const BrauerRelation &theta, long p);

/// ord_p of C_Theta^sf of the differentials' character (the value at a complex place).
long ord_p_lambda_complex(const BrauerRelation &theta, const ClassFunction &omega, long p);

struct ParityJob {
  BrauerRelation theta;
  long prime = 0;
  /// Character of the invariant differentials; rational and real.
  ClassFunction omega;
  std::vector<LocalDataRecord> places;
  std::map<std::string, std::string> metadata;

  void validate() const;
};

struct PlaceContribution {
  std::string label;
  long value = 0;
  /// "user", "complex", "tamagawa" or "full-lambda".
  std::string provenance;
  std::string formula;
};

struct ParityReport {
  std::vector<PlaceContribution> contributions;
  long total = 0;
  int parity = 0;
  std::string statement;
  std::vector<std::string> warnings;
  /// tau_{Theta,p} when it is computable for the group.
  std::optional<ClassFunction> tau;
  /// Sub-reports for combined predictions.
  std::vector<ParityReport> parts;
};

ParityReport aggregate_parity(const ParityJob &job);

/// Optional cover data: the cubic f with the curve y^2 = f(x).
struct RecipeInput {
  ParityJob theta_job;
  ParityJob psi_job;
  std::optional<RatPoly> cubic;
};

/// Rank parity from an S3 job at p = 3 and a C2xC2 job at p = 2.
ParityReport elliptic_recipe(const RecipeInput &input);

struct WPrimePlace {
  std::string label;
  std::optional<long> alpha_y, beta_y, alpha_delta, gamma_delta;
};

struct WPrimeReport {
  std::vector<std::pair<std::string, int>> signs;
  long exponent_total = 0;
  /// Product of the local signs: the predicted (-1)^rank.
  int global_sign = 1;
};

WPrimeReport assemble_w_prime(const std::vector<WPrimePlace> &places);

} // namespace brauer
