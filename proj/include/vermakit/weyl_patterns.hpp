#pragma once

#include <string>
#include <vector>

#include "vermakit/rational.hpp"
#include "vermakit/weights.hpp"

namespace vermakit {

/// A weight in an affine Weyl orbit together with the permutation taking
/// the dominant (descending) arrangement to it: weight[i] = dominant[perm[i]].
struct OrbitElement {
  Weight weight;
  std::vector<int> perm;
  int length = 0;
};

struct PatternNode {
  OrbitElement element;
  bool dominant = true;  // false renders as a cross
};

struct PatternEdge {
  int from = 0;
  int to = 0;
  Rational order;
  bool standard = true;
};

/// Nodes are stored column by column (length ascending), each column in
/// decreasing lexicographic order of the tuple. Edges point from the longer
/// node to the shorter one, the direction of the Verma module homomorphisms.
struct PatternGraph {
  int n = 0;
  int p = 0;
  int singularity = 0;
  std::vector<PatternNode> nodes;
  std::vector<PatternEdge> edges;

  int max_length() const;
};

/// Number of pairs i < j with a_i < a_j. Throws ContractError on repeated
/// entries (singular tuples take their lengths from a template instead).
int length_of(const Weight& w);

/// All p-dominant rearrangements of a weakly decreasing tuple, ordered as
/// pattern nodes are. For a regular tuple there are binomial(n, p) of them.
/// Throws InputError if the input is not weakly decreasing.
std::vector<OrbitElement> affine_orbit_p_dominant(const Weight& dominant);

/// Bruhat covers inside a regular orbit: pairs differing by one
/// transposition of entries whose lengths differ by exactly one.
/// Indices refer to positions in `orbit`.
std::vector<PatternEdge> standard_edges(const std::vector<OrbitElement>& orbit);

/// |e_action(u) - e_action(v)|; throws ContractError for different orbits.
Rational pair_order(const Weight& u, const Weight& v);
Rational pair_order(const OrbitElement& u, const OrbitElement& v);

/// Pattern of a regular dominant tuple. Throws InputError for singular
/// tuples (use build_singular_pattern) or non-dominant ones.
PatternGraph build_pattern(const Weight& dominant);

/// Applies every template node's permutation to the weakly decreasing tuple
/// `singular`. Results that are not p-dominant become cross nodes. Template
/// edges between two dominant nodes are kept with their recomputed order,
/// which is zero (an identity) when both ends carry the same weight.
PatternGraph build_singular_pattern(const Weight& singular, const PatternGraph& templ);

/// build_pattern for regular tuples, otherwise build_singular_pattern
/// against the pattern of (n-1, ..., 1, 0).
PatternGraph pattern_for(const Weight& dominant);

/// Pairs of distinct dominant weights in a pattern with positive pair order,
/// one entry per distinct weight pair (first occurrence of each weight).
struct PairAnnotation {
  int from;
  int to;
  Rational order;
};
std::vector<PairAnnotation> distinct_weight_pairs(const PatternGraph& g);

}  // namespace vermakit
