#include "vermakit/liealg.hpp"

#include <algorithm>

#include "vermakit/errors.hpp"

namespace vermakit {

std::string BasisElement::name() const {
  if (is_coroot()) return "H[" + std::to_string(i) + "]";
  return "E[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

Rational LieElement::coefficient(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add(const BasisElement& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

LieElement operator*(const Rational& s, const LieElement& x) {
  LieElement out;
  if (s == 0) return out;
  for (const auto& [b, c] : x.terms_) out.terms_.emplace(b, s * c);
  return out;
}

LieElement operator-(const LieElement& a, const LieElement& b) {
  LieElement out = a;
  out += Rational(-1) * b;
  return out;
}

ParabolicData::ParabolicData(int n, int p) : n_(n), p_(p) {
  if (n < 2) throw InputError("sl(n) requires n >= 2, got n = " + std::to_string(n));
  if (n > 60) throw InputError("n = " + std::to_string(n) + " is too large");
  if (p < 1 || p > n - 1) {
    throw InputError("crossed node p must satisfy 1 <= p <= n-1, got p = " + std::to_string(p));
  }
}

int ParabolicData::degree_of(int i, int j) const {
  if (i <= p_ && j > p_) return 1;
  if (i > p_ && j <= p_) return -1;
  return 0;
}

BasisElement ParabolicData::e(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || i == j) {
    throw InputError("E[" + std::to_string(i) + "," + std::to_string(j) + "] is not a basis element of sl(" +
                     std::to_string(n_) + ")");
  }
  return BasisElement::off_diagonal(i, j, degree_of(i, j));
}

BasisElement ParabolicData::h(int i) const {
  if (i < 1 || i > n_ - 1) {
    throw InputError("H[" + std::to_string(i) + "] is not a coroot of sl(" + std::to_string(n_) + ")");
  }
  return BasisElement::coroot(i);
}

std::vector<BasisElement> ParabolicData::basis() const {
  std::vector<BasisElement> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (i != j) out.push_back(e(i, j));
    }
  }
  for (int i = 1; i < n_; ++i) out.push_back(h(i));
  return out;
}

std::vector<BasisElement> ParabolicData::basis_of_degree(int degree) const {
  std::vector<BasisElement> out;
  for (const auto& b : basis()) {
    if (b.degree == degree) out.push_back(b);
  }
  return out;
}

std::vector<BasisElement> ParabolicData::parabolic_basis() const {
  std::vector<BasisElement> out;
  for (const auto& b : basis()) {
    if (b.degree >= 0) out.push_back(b);
  }
  return out;
}

std::vector<BasisElement> ParabolicData::raising_operators() const {
  std::vector<BasisElement> out;
  for (int i = 1; i < n_; ++i) {
    if (i != p_) out.push_back(e(i, i + 1));
  }
  return out;
}

std::vector<BasisElement> ParabolicData::lowering_operators() const {
  std::vector<BasisElement> out;
  for (int i = 1; i < n_; ++i) {
    if (i != p_) out.push_back(e(i + 1, i));
  }
  return out;
}

void ParabolicData::validate(const BasisElement& b) const {
  if (b.is_coroot()) {
    h(b.i);
    return;
  }
  BasisElement canonical = e(b.i, b.j);
  if (canonical.degree != b.degree) throw InputError("inconsistent degree on " + b.name());
}

Matrix ParabolicData::to_matrix(const LieElement& x) const {
  Matrix m(n_, n_);
  for (const auto& [b, c] : x.terms()) {
    if (b.is_coroot()) {
      m(b.i - 1, b.i - 1) += c;
      m(b.i, b.i) -= c;
    } else {
      m(b.i - 1, b.j - 1) += c;
    }
  }
  return m;
}

LieElement ParabolicData::from_matrix(const Matrix& m) const {
  LieElement out;
  Rational partial = 0;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (i != j) out.add(e(i, j), m(i - 1, j - 1));
    }
  }
  // diag(d_1..d_n) = sum_i (d_1 + ... + d_i) H_i when the trace vanishes.
  for (int i = 1; i < n_; ++i) {
    partial += m(i - 1, i - 1);
    out.add(h(i), partial);
  }
  partial += m(n_ - 1, n_ - 1);
  if (partial != 0) throw ContractError("matrix is not trace free");
  return out;
}

namespace {

// Matrix-unit expansion: list of (row, col, coefficient), 1-based.
struct Unit {
  int r;
  int c;
  int coeff;
};

std::vector<Unit> units_of(const BasisElement& b) {
  if (b.is_coroot()) return {{b.i, b.i, 1}, {b.i + 1, b.i + 1, -1}};
  return {{b.i, b.j, 1}};
}

}  // namespace

LieElement bracket(const BasisElement& a, const BasisElement& b, const ParabolicData& pd) {
  pd.validate(a);
  pd.validate(b);
  Matrix m(pd.n(), pd.n());
  for (const auto& x : units_of(a)) {
    for (const auto& y : units_of(b)) {
      int c = x.coeff * y.coeff;
      if (x.c == y.r) m(x.r - 1, y.c - 1) += c;
      if (y.c == x.r) m(y.r - 1, x.c - 1) -= c;
    }
  }
  return pd.from_matrix(m);
}

LieElement bracket(const LieElement& a, const LieElement& b, const ParabolicData& pd) {
  LieElement out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out += (cx * cy) * bracket(x, y, pd);
  }
  return out;
}

std::vector<Rational> grading_element(const ParabolicData& pd) {
  std::vector<Rational> diag(pd.n());
  for (int i = 0; i < pd.n(); ++i) {
    diag[i] = i < pd.p() ? make_rational(pd.q(), pd.n()) : make_rational(-pd.p(), pd.n());
  }
  return diag;
}

LieElement grading_element_in_basis(const ParabolicData& pd) {
  Matrix m(pd.n(), pd.n());
  auto diag = grading_element(pd);
  for (int i = 0; i < pd.n(); ++i) m(i, i) = diag[i];
  return pd.from_matrix(m);
}

std::vector<Rational> inverse_cartan_row(int n, int p) {
  ParabolicData pd(n, p);  // validates
  std::vector<Rational> row(n - 1);
  for (int j = 1; j <= n - 1; ++j) {
    row[j - 1] = make_rational(static_cast<long>(std::min(p, j)) * (n - std::max(p, j)), n);
  }
  return row;
}

Rational density_functional(const ParabolicData& pd, const LieElement& h) {
  Rational trace_block_one = 0;
  for (const auto& [b, c] : h.terms()) {
    if (b.degree != 0) throw ContractError("density functional applied to " + b.name() + " of nonzero degree");
    if (!b.is_coroot()) continue;
    // H_i = E_ii - E_{i+1,i+1}; only i = p straddles the block cut.
    if (b.i == pd.p()) trace_block_one += c;
  }
  return make_rational(pd.n(), static_cast<long>(pd.p()) * pd.q()) * trace_block_one;
}

}  // namespace vermakit
