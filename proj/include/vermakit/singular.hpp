#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vermakit/linalg.hpp"
#include "vermakit/verma.hpp"

namespace vermakit {

/// Which g_0 condition a singular vector must satisfy besides being killed
/// by g_1. HighestWeight: killed by the raising operators E_{i,i+1}
/// (i != p). Invariant: additionally killed by the lowering operators, i.e.
/// the vector spans a trivial module of the semisimple part of g_0 (the
/// target of the operator is again a density).
enum class SingularTarget { HighestWeight, Invariant };

std::string to_string(SingularTarget t);
SingularTarget parse_singular_target(std::string_view text);

struct SingularVectorReport {
  int k = 0;
  Rational w;
  Variant variant = Variant::Holonomic;
  SingularTarget target = SingularTarget::Invariant;
  std::vector<AlgebraElement> vectors;
  std::size_t kernel_dimension = 0;   // joint kernel of the g_1 action on the layer
  std::size_t highest_weight_dimension = 0;  // after the g_0 conditions; equals vectors.size()
};

/// Matrix of act(z, .) from layer k to layer k-1 in layer_basis order.
/// Throws ContractError unless z has degree +1 and k >= 1.
Matrix g1_action_matrix(const BasisElement& z, int k, const RealizationPtr& r, Variant variant);

/// Matrix of act(h, .) on layer k for a degree-0 element h.
Matrix g0_action_matrix(const BasisElement& h, int k, const RealizationPtr& r, Variant variant);

/// Singular vectors in layer k: exact null space of the stacked g_1 action
/// matrices intersected with the kernel of the g_0 conditions of `target`.
/// Basis vectors are primitive integer combinations with a positive leading
/// coefficient.
SingularVectorReport find_singular_vectors(int k, const RealizationPtr& r, Variant variant,
                                           SingularTarget target = SingularTarget::Invariant);

struct ScanEntry {
  Rational w;
  std::size_t dimension;
};

/// find_singular_vectors over the densities R[w] for every w in `weights`.
std::vector<ScanEntry> scan_critical_weights(int k, const ParabolicData& pd, Variant variant,
                                             std::span<const Rational> weights,
                                             SingularTarget target = SingularTarget::Invariant);

/// Recheck through act (not through assembled matrices): every g_1 basis
/// element and every operator required by `target` kills e.
bool is_singular(const AlgebraElement& e, SingularTarget target = SingularTarget::HighestWeight);

/// Affine space particular + span(homogeneous).
struct PreimageSpace {
  AlgebraElement particular;
  std::vector<AlgebraElement> homogeneous;
  std::size_t dimension() const { return homogeneous.size(); }
};

/// Semiholonomic g_0-highest-weight vectors of the weight of s whose
/// symmetrization is s. Throws ContractError unless s is holonomic,
/// homogeneous, a g_0 weight vector and singular (highest-weight sense).
PreimageSpace cover_preimages(const AlgebraElement& s);

struct Obstruction {
  /// A g_1 generator killing the whole homogeneous part of the preimage
  /// space but not the particular preimage; absent when only the combined
  /// system is inconsistent.
  std::optional<BasisElement> generator;
  /// act(generator, preimage), identical for every preimage (layer k-1).
  std::optional<AlgebraElement> residual;
  /// Every g_1 generator with the same property, in basis order.
  std::vector<BasisElement> all_generators;
};

struct CoverReport {
  bool exists = false;
  std::optional<AlgebraElement> witness;
  std::optional<Obstruction> obstruction;
  std::size_t preimage_dimension = 0;
};

/// Decides whether some preimage of s is annihilated by all of g_1.
CoverReport cover_check(const AlgebraElement& s);

}  // namespace vermakit
