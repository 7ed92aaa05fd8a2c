#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vermakit/liealg.hpp"
#include "vermakit/rational.hpp"
#include "vermakit/weights.hpp"

namespace vermakit {

/// Weights of an irreducible finite-dimensional sl(n)-module. Support
/// vectors live in the n-tuple ambient (polynomial GL(n) weights; only
/// differences of entries matter).
struct GModuleWeightData {
  int n = 0;
  std::vector<long> labels;          // Dynkin labels of the highest weight
  std::vector<long> highest;         // partition form, last entry 0
  std::vector<std::pair<std::vector<long>, long>> support;  // (weight, multiplicity)

  long dimension() const;
  /// The contragredient module: reversed labels, negated support.
  GModuleWeightData dual() const;
};

/// Full weight support with multiplicities (Kostka numbers). Throws
/// InputError on negative labels or labels.size() != n - 1.
GModuleWeightData weight_support(const std::vector<long>& labels, int n);

/// Weyl dimension formula prod_{i<j} (l_i - l_j + j - i)/(j - i).
long weyl_dimension(const std::vector<long>& labels, int n);

struct FiltrationLevel {
  Rational level;
  long multiplicity;
};

/// Support grouped by the eigenvalue of the grading element, top level first.
std::vector<FiltrationLevel> filtration_levels(const GModuleWeightData& w, const ParabolicData& pd);

struct Candidate {
  Weight weight;            // source tuple + support weight
  std::vector<long> shift;  // the support weight
  long multiplicity = 1;
  Rational level;           // e_action of the candidate
  InfCharKey key;
  bool p_dominant = false;
};

/// Every shifted tuple source + nu over the support of W. Throws InputError
/// on mismatched n.
std::vector<Candidate> candidate_factors(const Weight& source, const GModuleWeightData& w);

struct PairVerdict {
  Weight f_target;
  Weight e_target;
  bool f_target_isolated = false;   // F' alone with its key among candidates of F (x) W
  bool e_target_isolated = false;   // E' alone with its key among candidates of E (x) W
  bool f_source_isolated = false;   // F alone with its key among candidates of F' (x) W*
  bool e_source_isolated = false;   // E alone with its key among candidates of E' (x) W*
  bool isolated() const { return f_target_isolated && e_target_isolated && f_source_isolated && e_source_isolated; }
};

/// Two-way translation screening at the level of infinitesimal-character
/// keys. Non-p-dominant candidates are excluded from the factor lists;
/// multiplicities count, so a candidate occurring twice is not isolated.
struct TranslationScreen {
  Weight f_source;
  Weight e_source;
  std::vector<long> labels;
  std::vector<Candidate> f_candidates;
  std::vector<Candidate> e_candidates;
  std::vector<PairVerdict> pairs;  // every (F', E') of p-dominant candidates sharing a key
};

/// Throws InputError unless the sources share an infinitesimal character.
TranslationScreen screen_translation(const Weight& f_source, const Weight& e_source, const GModuleWeightData& w);

struct OneWayVerdict {
  Rational alpha_e1, alpha_e2, alpha_f1, alpha_f2;
  bool shared_inf_char = false;  // hypothesis (ii)
  bool e_order = false;          // alpha(E1) < alpha(E2)
  bool f_order = false;          // alpha(F1) > alpha(F2)
  /// Hypothesis (i) and the candidate approximation of (iii); only set when
  /// the sources E and F are supplied.
  std::optional<bool> components_present;
  std::optional<bool> separated_from_rest;
  bool approximate = true;
  std::vector<std::string> requires_external_input;
};

/// One-way screening for the quadruple E1, E2 (from E (x) W) and F1, F2
/// (from F (x) W). Throws InputError unless all four are p-dominant.
OneWayVerdict screen_one_way(const Weight& e1, const Weight& e2, const Weight& f1, const Weight& f2,
                             const GModuleWeightData& w,
                             const std::optional<std::pair<Weight, Weight>>& sources = std::nullopt);

/// Distances of the embedded and projected factors from the top and the
/// bottom of the filtration of W.
struct SplittingDepths {
  Rational embed;
  Rational project;
};
SplittingDepths splitting_depths(const GModuleWeightData& w, const ParabolicData& pd, const std::vector<long>& embed_shift,
                                 const std::vector<long>& project_shift);

/// Sufficient criterion for a semiholonomic covering: the edge order is at
/// most two, or both splitting operators have order at most two. A false
/// result means "not guaranteed", never "impossible".
bool curvability_filter(const Rational& edge_order, const SplittingDepths& depths);

}  // namespace vermakit
