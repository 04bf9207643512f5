#pragma once

#include "homcert/closed_forms.hpp"
#include "homcert/images.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homcert {

/// Parameters restricted to images escaping A0, the unique largest looped
/// clique. Present only when a^2 = eta and m = n = 1.
struct PrimedParameters {
  VertexSet a0 = 0;
  int eta = 0;       // 0 iff H is complete looped
  long long m = 0;
  int a = 0;         // 0 iff H is a complete looped graph plus a loopless graph
  int b = 0;
  long long n = 0;
};

struct StructuralProfile {
  int eta = 0;       // largest |A||B| over complete bipartite images
  long long m = 0;   // number of images attaining eta
  int a = 0;         // largest |A| over complete images (0 when loopless)
  int b = 0;         // largest |B| among complete images with |A| = a
  long long n = 0;   // number of complete images with sizes (a, b)
  bool loopless = false;
  bool complete_looped = false;
  std::optional<PrimedParameters> primed;

  /// a^2 + ab <= eta
  bool satisfies_image_inequality() const { return a * a + a * b <= eta; }
};

StructuralProfile structural_profile(const ConstraintGraph& h, const Limits& limits = Limits::defaults());
StructuralProfile structural_profile(const ConstraintGraph& h, const ImageSet& images);

enum class HType { Neutral, CompleteBipartite, Complete };
const char* to_string(HType t);

/// One of the characterisation conditions. Complete-bipartite conditions are
/// numbered 1..5, complete conditions 1..4; the neutral case has number 0.
struct TypeCondition {
  HType kind = HType::Neutral;
  int index = 0;
  friend bool operator==(const TypeCondition&, const TypeCondition&) = default;
};

/// Every condition that holds for the profile, each tested independently.
/// For any H that is not complete looped exactly one fires.
std::vector<TypeCondition> fired_conditions(const StructuralProfile& p);

struct TypeVerdict {
  HType kind = HType::Neutral;
  TypeCondition condition;
  std::string reason;
  /// Smallest d <= d_max from which the exact comparison matches `kind`
  /// through d_max. Empirical only; absent for Neutral or when d_max has
  /// not reached the verdict yet.
  std::optional<unsigned> crossover_d;
};

TypeVerdict classify(const ConstraintGraph& h, unsigned d_max = 12,
                     const Limits& limits = Limits::defaults());
/// Verdict from the profile alone (no crossover).
TypeVerdict classify_profile(const StructuralProfile& p);

struct EmpiricalReport {
  std::vector<CrossPowerVerdict> table;  // d = 1..d_max
  Dominance stable_sign = Dominance::Equal;
  unsigned stable_from = 1;              // sign constant on [stable_from, d_max]
  TypeVerdict verdict;
  bool agrees = false;                   // stable_sign matches verdict.kind
};

EmpiricalReport empirical_type(const ConstraintGraph& h, unsigned d_max = 12,
                               const Limits& limits = Limits::defaults());

/// The sign a type predicts for large d.
Dominance expected_sign(HType t);

}  // namespace homcert
