#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vermakit/liealg.hpp"
#include "vermakit/linalg.hpp"
#include "vermakit/rational.hpp"

namespace vermakit {

/// Holonomic: the induced module U(g) (x)_{U(p)} E. Semiholonomic: the same
/// construction over the algebra where X Y - Y X = [X,Y] is imposed only
/// when X or Y lies in p, so g_-1 letters no longer commute.
enum class Variant { Holonomic, Semiholonomic };

std::string to_string(Variant v);
Variant parse_variant(std::string_view text);

using Word = std::vector<BasisElement>;

/// A concrete irreducible p-module: explicit matrices for the g_0 basis,
/// g_1 acting by zero. Constructed only through the validating factories.
class ModuleRealization {
 public:
  enum class Factor { BlockOneStandard, BlockOneDual, BlockTwoStandard, BlockTwoDual };
  enum class Symmetry { None, Symmetric, Antisymmetric };

  /// One-dimensional module R[w]: h acts by w * tau(h).
  static std::shared_ptr<const ModuleRealization> density(const ParabolicData& pd, const Rational& w);

  /// Tensor product of block standard/dual representations of the
  /// semisimple part of g_0 (trace parts removed), optionally restricted to
  /// the symmetric or antisymmetric power when all factors agree, twisted
  /// by the density weight w.
  static std::shared_ptr<const ModuleRealization> tensor(const ParabolicData& pd, const std::vector<Factor>& factors,
                                                         Symmetry symmetry, const Rational& w);

  /// Arbitrary matrices for the g_0 basis. Throws ContractError unless they
  /// satisfy action([a,b]) = [action(a), action(b)] for all g_0 basis pairs.
  static std::shared_ptr<const ModuleRealization> from_matrices(const ParabolicData& pd, std::string name,
                                                                std::size_t dimension, const Rational& w,
                                                                std::map<BasisElement, Matrix> action);

  const ParabolicData& parabolic() const { return pd_; }
  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dimension_; }
  const Rational& weight() const { return weight_; }

  /// Matrix of a degree-0 basis element; ContractError for other degrees.
  const Matrix& action(const BasisElement& h) const;
  Matrix action(const LieElement& h) const;

 private:
  ModuleRealization(const ParabolicData& pd, std::string name, std::size_t dimension, const Rational& w,
                    std::map<BasisElement, Matrix> action);

  ParabolicData pd_;
  std::string name_;
  std::size_t dimension_;
  Rational weight_;
  std::map<BasisElement, Matrix> action_;
};

using RealizationPtr = std::shared_ptr<const ModuleRealization>;

/// A word tensored with a module basis vector. Ordered by word length,
/// then letters, then basis index.
struct TermKey {
  Word word;
  int index = 0;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend bool operator<(const TermKey& a, const TermKey& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    return a.index < b.index;
  }
};

/// Exact linear combination of words (x) module basis vectors.
class AlgebraElement {
 public:
  AlgebraElement(RealizationPtr realization, Variant variant);

  /// 1 (x) e_index.
  static AlgebraElement generator(RealizationPtr realization, Variant variant, int index = 0);
  static AlgebraElement monomial(RealizationPtr realization, Variant variant, Word word, int index = 0,
                                 const Rational& coefficient = 1);

  const std::map<TermKey, Rational>& terms() const { return terms_; }
  const RealizationPtr& realization() const { return realization_; }
  const ParabolicData& parabolic() const { return realization_->parabolic(); }
  Variant variant() const { return variant_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const TermKey& key) const;

  void add(const TermKey& key, const Rational& c);

  /// True if every word consists of g_-1 letters only (and, for the
  /// holonomic variant, in canonical order).
  bool is_normal() const;
  /// Word length shared by all terms, -1 if mixed, 0 for the zero element.
  int homogeneous_degree() const;
  int max_degree() const;

  /// Text form, e.g. "3/2 * y[3,1] y[4,2] | e0".
  std::string to_string() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& s, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void check_compatible(const AlgebraElement& other) const;

  RealizationPtr realization_;
  Variant variant_;
  std::map<TermKey, Rational> terms_;
};

/// Rewrites to normal form: the rightmost p-letter A in a word is moved
/// right via A B -> B A + [A,B]; a trailing g_0 letter acts on the module
/// vector through its matrix and a trailing g_1 letter kills the term.
/// Holonomic results have their g_-1 letters sorted.
AlgebraElement normal_form(const AlgebraElement& e);

/// Same rewriting system, but each step applies the rule at a reducible
/// position drawn from a seeded generator. The result must agree with
/// normal_form (confluence).
AlgebraElement normal_form_randomized(const AlgebraElement& e, std::uint64_t seed);

/// Left multiplication by x followed by normal_form.
AlgebraElement act(const BasisElement& x, const AlgebraElement& e);
AlgebraElement act(const LieElement& x, const AlgebraElement& e);

/// Semiholonomic -> holonomic: every word goes to its sorted monomial.
/// Throws ContractError on holonomic input or input not in normal form.
AlgebraElement symmetrize_projection(const AlgebraElement& e);

/// Holonomic V_2 -> semiholonomic: identity on degree <= 1 and
/// X Y e -> 1/2 (X (x) Y + Y (x) X + [X,Y]) e on degree 2.
/// Throws ContractError on degree > 2, wrong variant or non-normal input.
AlgebraElement split2(const AlgebraElement& e);

/// Ordered basis of the degree-k layer: sorted monomials (holonomic) or all
/// words (semiholonomic) in the g_-1 letters, times the module basis.
std::vector<TermKey> layer_basis(int k, const ModuleRealization& r, Variant variant);

/// Coordinates of e in a basis; throws ContractError if e has a term
/// outside it.
std::vector<Rational> coordinates(const AlgebraElement& e, std::span<const TermKey> basis);
AlgebraElement from_coordinates(RealizationPtr realization, Variant variant, std::span<const TermKey> basis,
                                std::span<const Rational> coords);

/// Parses the text form. g_-1 letters are written y[i,j], other matrix
/// units E[i,j], coroots H[i]; "1" is the empty word; the "| e<k>" suffix
/// may be omitted for one-dimensional modules. Throws InputError.
AlgebraElement parse_element(std::string_view text, RealizationPtr realization, Variant variant);

std::string letter_name(const BasisElement& b);

}  // namespace vermakit
