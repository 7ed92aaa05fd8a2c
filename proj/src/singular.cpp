#include "vermakit/singular.hpp"

#include <algorithm>
#include <map>

#include "vermakit/errors.hpp"

namespace vermakit {

std::string to_string(SingularTarget t) { return t == SingularTarget::Invariant ? "invariant" : "highest"; }

SingularTarget parse_singular_target(std::string_view text) {
  if (text == "invariant") return SingularTarget::Invariant;
  if (text == "highest") return SingularTarget::HighestWeight;
  throw InputError("unknown singular target '" + std::string(text) + "' (expected invariant or highest)");
}

namespace {

std::map<TermKey, std::size_t> index_of(const std::vector<TermKey>& basis) {
  std::map<TermKey, std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i], i);
  return out;
}

// Matrix of act(x, .) from layer `k` into layer `target_k`.
Matrix layer_action_matrix(const BasisElement& x, int k, int target_k, const RealizationPtr& r, Variant variant) {
  auto source = layer_basis(k, *r, variant);
  auto target = layer_basis(target_k, *r, variant);
  auto rows = index_of(target);
  Matrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    auto image = act(x, AlgebraElement::monomial(r, variant, source[c].word, source[c].index));
    for (const auto& [key, coeff] : image.terms()) {
      auto it = rows.find(key);
      if (it == rows.end()) {
        throw ContractError("act(" + x.name() + ") left layer " + std::to_string(target_k) + ": " + image.to_string());
      }
      m(it->second, c) = coeff;
    }
  }
  return m;
}

std::vector<BasisElement> g0_conditions(const ParabolicData& pd, SingularTarget target) {
  auto ops = pd.raising_operators();
  if (target == SingularTarget::Invariant) {
    auto low = pd.lowering_operators();
    ops.insert(ops.end(), low.begin(), low.end());
  }
  return ops;
}

}  // namespace

Matrix g1_action_matrix(const BasisElement& z, int k, const RealizationPtr& r, Variant variant) {
  if (z.degree != 1) throw ContractError("g1_action_matrix needs a degree +1 generator, got " + z.name());
  if (k < 1) throw ContractError("g1_action_matrix needs k >= 1");
  return layer_action_matrix(z, k, k - 1, r, variant);
}

Matrix g0_action_matrix(const BasisElement& h, int k, const RealizationPtr& r, Variant variant) {
  if (h.degree != 0) throw ContractError("g0_action_matrix needs a degree 0 element, got " + h.name());
  return layer_action_matrix(h, k, k, r, variant);
}

SingularVectorReport find_singular_vectors(int k, const RealizationPtr& r, Variant variant, SingularTarget target) {
  if (k < 1) throw ContractError("singular vector search needs k >= 1");
  const ParabolicData& pd = r->parabolic();
  SingularVectorReport report;
  report.k = k;
  report.w = r->weight();
  report.variant = variant;
  report.target = target;

  std::vector<Matrix> blocks;
  for (const auto& z : pd.basis_of_degree(1)) blocks.push_back(g1_action_matrix(z, k, r, variant));
  report.kernel_dimension = nullspace(vstack(blocks)).size();

  for (const auto& h : g0_conditions(pd, target)) blocks.push_back(g0_action_matrix(h, k, r, variant));
  auto kernel = nullspace(vstack(blocks));
  report.highest_weight_dimension = kernel.size();

  auto basis = layer_basis(k, *r, variant);
  for (const auto& v : kernel) report.vectors.push_back(from_coordinates(r, variant, basis, v));
  return report;
}

std::vector<ScanEntry> scan_critical_weights(int k, const ParabolicData& pd, Variant variant,
                                             std::span<const Rational> weights, SingularTarget target) {
  std::vector<ScanEntry> out;
  for (const auto& w : weights) {
    auto report = find_singular_vectors(k, ModuleRealization::density(pd, w), variant, target);
    out.push_back({w, report.highest_weight_dimension});
  }
  return out;
}

bool is_singular(const AlgebraElement& e, SingularTarget target) {
  const ParabolicData& pd = e.parabolic();
  for (const auto& z : pd.basis_of_degree(1)) {
    if (!act(z, e).is_zero()) return false;
  }
  for (const auto& h : g0_conditions(pd, target)) {
    if (!act(h, e).is_zero()) return false;
  }
  return true;
}

namespace {

void check_cover_input(const AlgebraElement& s) {
  if (s.variant() != Variant::Holonomic) throw ContractError("covering input must be a holonomic element");
  if (!s.is_normal()) throw ContractError("covering input must be in normal form");
  if (s.is_zero()) throw ContractError("covering input must be nonzero");
  if (s.homogeneous_degree() < 0) throw ContractError("covering input must be homogeneous");
  if (!is_singular(s, SingularTarget::HighestWeight)) {
    throw ContractError("covering input is not a singular vector: " + s.to_string());
  }
}

}  // namespace

PreimageSpace cover_preimages(const AlgebraElement& s) {
  check_cover_input(s);
  const RealizationPtr& r = s.realization();
  const ParabolicData& pd = s.parabolic();
  const int k = s.homogeneous_degree();

  auto semi = layer_basis(k, *r, Variant::Semiholonomic);
  auto holo = layer_basis(k, *r, Variant::Holonomic);
  auto holo_rows = index_of(holo);

  Matrix projection(holo.size(), semi.size());
  for (std::size_t c = 0; c < semi.size(); ++c) {
    Word w = semi[c].word;
    std::sort(w.begin(), w.end());
    projection(holo_rows.at({w, semi[c].index}), c) = 1;
  }
  std::vector<Matrix> blocks{projection};
  std::vector<Rational> rhs = coordinates(s, holo);

  for (const auto& h : pd.raising_operators()) blocks.push_back(g0_action_matrix(h, k, r, Variant::Semiholonomic));
  // Same weight as s under every coroot.
  for (int i = 1; i < pd.n(); ++i) {
    auto image = act(pd.h(i), s);
    const auto& [key, c] = *s.terms().begin();
    Rational mu = image.coefficient(key) / c;
    if (!(image == mu * s)) throw ContractError("covering input is not a weight vector for " + pd.h(i).name());
    Matrix hm = g0_action_matrix(pd.h(i), k, r, Variant::Semiholonomic);
    blocks.push_back(hm - mu * Matrix::identity(semi.size()));
  }
  rhs.resize(rhs.size() + (blocks.size() - 1) * semi.size(), Rational(0));

  Matrix system = vstack(blocks);
  auto particular = solve(system, rhs);
  if (!particular) throw ContractError("no semiholonomic highest weight preimage of " + s.to_string());

  PreimageSpace space{from_coordinates(r, Variant::Semiholonomic, semi, *particular), {}};
  for (const auto& v : nullspace(system)) space.homogeneous.push_back(from_coordinates(r, Variant::Semiholonomic, semi, v));
  return space;
}

CoverReport cover_check(const AlgebraElement& s) {
  PreimageSpace space = cover_preimages(s);
  const ParabolicData& pd = s.parabolic();
  const RealizationPtr& r = s.realization();
  const int k = s.homogeneous_degree();
  CoverReport report;
  report.preimage_dimension = space.dimension();

  auto generators = pd.basis_of_degree(1);
  if (k == 0) {
    report.exists = true;
    report.witness = space.particular;
    return report;
  }

  // Find c with Z (x0 + sum c_j h_j) = 0 for every Z in g_1.
  auto lower = layer_basis(k - 1, *r, Variant::Semiholonomic);
  std::vector<std::vector<Rational>> base_images;
  std::vector<std::vector<std::vector<Rational>>> hom_images;  // [generator][j]
  for (const auto& z : generators) {
    base_images.push_back(coordinates(act(z, space.particular), lower));
    std::vector<std::vector<Rational>> images;
    for (const auto& h : space.homogeneous) images.push_back(coordinates(act(z, h), lower));
    hom_images.push_back(std::move(images));
  }
  Matrix system(generators.size() * lower.size(), space.dimension());
  std::vector<Rational> rhs(system.rows());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (std::size_t row = 0; row < lower.size(); ++row) {
      std::size_t R = g * lower.size() + row;
      rhs[R] = -base_images[g][row];
      for (std::size_t j = 0; j < space.dimension(); ++j) system(R, j) = hom_images[g][j][row];
    }
  }

  if (auto c = solve(system, rhs)) {
    AlgebraElement witness = space.particular;
    for (std::size_t j = 0; j < space.dimension(); ++j) witness += (*c)[j] * space.homogeneous[j];
    if (!is_singular(witness, SingularTarget::HighestWeight) || !(symmetrize_projection(witness) == s)) {
      throw std::logic_error("cover_check produced a witness that fails the independent recheck");
    }
    report.exists = true;
    report.witness = std::move(witness);
    return report;
  }

  report.exists = false;
  Obstruction obstruction;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    bool kills_homogeneous = std::all_of(hom_images[g].begin(), hom_images[g].end(), [](const auto& v) {
      return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    });
    bool moves_particular =
        std::any_of(base_images[g].begin(), base_images[g].end(), [](const Rational& x) { return x != 0; });
    if (kills_homogeneous && moves_particular) {
      if (!obstruction.generator) {
        obstruction.generator = generators[g];
        obstruction.residual = act(generators[g], space.particular);
      }
      obstruction.all_generators.push_back(generators[g]);
    }
  }
  report.obstruction = std::move(obstruction);
  return report;
}

}  // namespace vermakit
