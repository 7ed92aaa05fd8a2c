#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "vermakit/linalg.hpp"
#include "vermakit/rational.hpp"

namespace vermakit {

/// A basis element of sl(n): either the matrix unit E_ij (i != j) or the
/// simple coroot H_i = E_ii - E_{i+1,i+1}. Indices are 1-based.
struct BasisElement {
  enum class Kind : std::uint8_t { OffDiagonal = 0, Coroot = 1 };

  Kind kind = Kind::OffDiagonal;
  std::int8_t i = 0;
  std::int8_t j = 0;       // equals i for coroots
  std::int8_t degree = 0;  // grading degree in {-1, 0, 1}

  static BasisElement off_diagonal(int i, int j, int degree) {
    return {Kind::OffDiagonal, static_cast<std::int8_t>(i), static_cast<std::int8_t>(j),
            static_cast<std::int8_t>(degree)};
  }
  static BasisElement coroot(int i) {
    return {Kind::Coroot, static_cast<std::int8_t>(i), static_cast<std::int8_t>(i), 0};
  }

  bool is_coroot() const { return kind == Kind::Coroot; }

  /// "E[1,3]" or "H[2]".
  std::string name() const;

  friend bool operator==(const BasisElement& a, const BasisElement& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
  friend std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.i <=> b.i; c != 0) return c;
    return a.j <=> b.j;
  }
};

/// Element of sl(n) expanded in the E_ij / H_i basis. Zero coefficients are
/// never stored.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(const BasisElement& b) { terms_.emplace(b, 1); }

  const std::map<BasisElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const BasisElement& b) const;

  void add(const BasisElement& b, const Rational& c);
  LieElement& operator+=(const LieElement& other);
  friend LieElement operator*(const Rational& s, const LieElement& x);
  friend LieElement operator-(const LieElement& a, const LieElement& b);
  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  std::map<BasisElement, Rational> terms_;
};

/// sl(n) with the |1|-grading cut out by a single crossed node p: the
/// first p coordinates form block one, the last q = n - p block two.
class ParabolicData {
 public:
  /// Throws InputError unless n >= 2 and 1 <= p <= n - 1.
  ParabolicData(int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return n_ - p_; }

  /// +1 if i <= p < j, -1 if j <= p < i, 0 otherwise.
  int degree_of(int i, int j) const;

  BasisElement e(int i, int j) const;
  BasisElement h(int i) const;

  /// All n^2 - 1 basis elements in canonical order.
  std::vector<BasisElement> basis() const;
  /// Basis elements of a given degree, canonical order. For degree -1 this
  /// is the letter alphabet of the induced modules: E_ij, (i,j) lexicographic.
  std::vector<BasisElement> basis_of_degree(int degree) const;
  /// Degree 0 and +1 basis elements.
  std::vector<BasisElement> parabolic_basis() const;
  /// E_{i,i+1} for i != p.
  std::vector<BasisElement> raising_operators() const;
  /// E_{i+1,i} for i != p.
  std::vector<BasisElement> lowering_operators() const;

  /// Throws InputError if an index is outside 1..n or describes no basis element.
  void validate(const BasisElement& b) const;

  /// n x n matrix of an element.
  Matrix to_matrix(const LieElement& x) const;
  /// Inverse of to_matrix; throws ContractError if m is not trace free.
  LieElement from_matrix(const Matrix& m) const;

  friend bool operator==(const ParabolicData&, const ParabolicData&) = default;

 private:
  int n_;
  int p_;
};

/// Lie bracket via [E_ij, E_kl] = d_jk E_il - d_li E_kj, expanded in the basis.
LieElement bracket(const BasisElement& a, const BasisElement& b, const ParabolicData& pd);
LieElement bracket(const LieElement& a, const LieElement& b, const ParabolicData& pd);

/// Diagonal of the grading element: q/n on the first p slots, -p/n on the rest.
std::vector<Rational> grading_element(const ParabolicData& pd);
LieElement grading_element_in_basis(const ParabolicData& pd);

/// Row p of the inverse Cartan matrix of A_{n-1}: min(p,j)(n - max(p,j))/n.
std::vector<Rational> inverse_cartan_row(int n, int p);

/// The central character tau on g_0, normalised so tau(grading element) = 1:
/// tau(h) = n/(pq) * (sum of the first p diagonal entries of h).
/// For Z in g_1 and X in g_-1, tau([Z,X]) = n/(pq) * trace(ZX).
/// Throws ContractError if h has a component of nonzero degree.
Rational density_functional(const ParabolicData& pd, const LieElement& h);

}  // namespace vermakit
