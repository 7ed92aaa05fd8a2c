#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "vermakit/errors.hpp"
#include "vermakit/singular.hpp"

using namespace vermakit;

namespace {

const ParabolicData pd(4, 2);

// Independent model of the g_1 action on a density Verma module. Letters are
// matrix units of g_-1 given by (row, col); brackets are taken as plain
// n x n matrix commutators and the density acts through
// tau(h) = n/(pq) * (sum of the first p diagonal entries).
using Unit = std::pair<int, int>;
using OWord = std::vector<Unit>;

Matrix unit(const Unit& u) {
  Matrix m(4, 4);
  m(u.first - 1, u.second - 1) = 1;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rational tau(const Matrix& h) { return make_rational(4, 4) * (h(0, 0) + h(1, 1)); }

// Z x_1 ... x_k v = sum_i x_1..x_{i-1} [Z,x_i] x_{i+1}..x_k v, and a g_0
// element C moves right through the remaining letters leaving [C,x_j].
std::map<OWord, Rational> oracle_act(const Unit& z, const OWord& word, const Rational& w, bool sort_words) {
  std::map<OWord, Rational> out;
  auto add = [&](OWord key, const Rational& c) {
    if (c == 0) return;
    if (sort_words) std::sort(key.begin(), key.end());
    out[key] += c;
    if (out[key] == 0) out.erase(key);
  };
  for (std::size_t i = 0; i < word.size(); ++i) {
    Matrix c = commutator(unit(z), unit(word[i]));
    OWord rest = word;
    rest.erase(rest.begin() + static_cast<long>(i));
    add(rest, w * tau(c));
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      Matrix d = commutator(c, unit(word[j]));
      for (int r = 3; r <= 4; ++r) {
        for (int s = 1; s <= 2; ++s) {
          if (d(r - 1, s - 1) == 0) continue;
          OWord replaced = rest;
          replaced[j - 1] = {r, s};
          add(replaced, d(r - 1, s - 1));
        }
      }
    }
  }
  return out;
}

OWord to_oracle(const Word& w) {
  OWord out;
  for (const auto& b : w) out.emplace_back(b.i, b.j);
  return out;
}

Matrix oracle_matrix(const BasisElement& z, int k, const RealizationPtr& r, Variant v) {
  auto rows = layer_basis(k - 1, *r, v);
  auto cols = layer_basis(k, *r, v);
  std::map<OWord, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[to_oracle(rows[i].word)] = i;
  Matrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [word, coeff] : oracle_act({z.i, z.j}, to_oracle(cols[c].word), r->weight(), v == Variant::Holonomic)) {
      m(row_of.at(word), c) = coeff;
    }
  }
  return m;
}

// Textbook elimination, separate from the library's fraction-free kernel.
std::size_t oracle_rank(Matrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// g_0 operator C on a density layer: sum over letters of the word with x_j -> [C,x_j].
Matrix oracle_g0_matrix(const Unit& h, int k, const RealizationPtr& r, Variant v = Variant::Holonomic) {
  auto basis = layer_basis(k, *r, v);
  std::map<OWord, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[to_oracle(basis[i].word)] = i;
  Matrix m(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    OWord word = to_oracle(basis[c].word);
    for (std::size_t j = 0; j < word.size(); ++j) {
      Matrix d = commutator(unit(h), unit(word[j]));
      for (int a = 3; a <= 4; ++a) {
        for (int b = 1; b <= 2; ++b) {
          if (d(a - 1, b - 1) == 0) continue;
          OWord replaced = word;
          replaced[j] = {a, b};
          if (v == Variant::Holonomic) std::sort(replaced.begin(), replaced.end());
          m(index.at(replaced), c) += d(a - 1, b - 1);
        }
      }
    }
  }
  return m;
}

std::size_t oracle_invariant_dimension(int k, const Rational& w) {
  auto r = ModuleRealization::density(pd, w);
  std::vector<Matrix> blocks;
  for (const auto& z : pd.basis_of_degree(1)) blocks.push_back(oracle_matrix(z, k, r, Variant::Holonomic));
  for (Unit h : {Unit{1, 2}, Unit{2, 1}, Unit{3, 4}, Unit{4, 3}}) blocks.push_back(oracle_g0_matrix(h, k, r));
  Matrix stacked = vstack(blocks);
  return stacked.cols() - oracle_rank(stacked);
}

AlgebraElement parse(const std::string& text, const Rational& w, Variant v = Variant::Holonomic) {
  return parse_element(text, ModuleRealization::density(pd, w), v);
}

}  // namespace

TEST(G1Action, MatchesOracle) {
  for (Variant v : {Variant::Holonomic, Variant::Semiholonomic}) {
    for (const Rational& w : {Rational(-1), Rational(0), make_rational(3, 2)}) {
      auto r = ModuleRealization::density(pd, w);
      for (int k = 1; k <= 3; ++k) {
        for (const auto& z : pd.basis_of_degree(1)) {
          EXPECT_EQ(g1_action_matrix(z, k, r, v), oracle_matrix(z, k, r, v)) << z.name() << " k=" << k;
        }
      }
    }
  }
}

TEST(G1Action, DegreeOneEntriesAreDensityPairings) {
  const Rational w = make_rational(-5, 3);
  auto r = ModuleRealization::density(pd, w);
  auto letters = pd.basis_of_degree(-1);
  for (const auto& z : pd.basis_of_degree(1)) {
    Matrix m = g1_action_matrix(z, 1, r, Variant::Holonomic);
    ASSERT_EQ(m.rows(), 1u);
    for (std::size_t c = 0; c < letters.size(); ++c) {
      EXPECT_EQ(m(0, c), w * density_functional(pd, bracket(z, letters[c], pd)));
    }
  }
}

// Index form of the degree-2 action on the dual letter u = Y*:
//   Z^A_{A'} u^B_{B'} -> w Z^A_{A'} u^B_{B'} + w Z^B_{B'} u^A_{A'}
//                        - u^B_{A'} Z^A_{B'} - u^A_{B'} Z^B_{A'}
// with Z = E[a, p+a'], Y = E[p+b', b] and the output paired with X1 X2,
// X1 = E[p+A', A], X2 = E[p+B', B]. It is the transpose of the action
// matrix on ordered words.
TEST(G1Action, DegreeTwoIndexFormula) {
  for (long wi = -2; wi <= 2; ++wi) {
    const Rational w(wi);
    auto r = ModuleRealization::density(pd, w);
    auto rows = layer_basis(1, *r, Variant::Semiholonomic);
    auto cols = layer_basis(2, *r, Variant::Semiholonomic);
    for (int a = 1; a <= 2; ++a) {
      for (int ap = 1; ap <= 2; ++ap) {
        Matrix m = g1_action_matrix(pd.e(a, 2 + ap), 2, r, Variant::Semiholonomic);
        auto Z = [&](int A, int Ap) { return Rational(A == a && Ap == ap ? 1 : 0); };
        for (std::size_t row = 0; row < rows.size(); ++row) {
          int b = rows[row].word[0].j, bp = rows[row].word[0].i - 2;
          auto u = [&](int B, int Bp) { return Rational(B == b && Bp == bp ? 1 : 0); };
          for (std::size_t col = 0; col < cols.size(); ++col) {
            const auto& x1 = cols[col].word[0];
            const auto& x2 = cols[col].word[1];
            int A = x1.j, Ap = x1.i - 2, B = x2.j, Bp = x2.i - 2;
            Rational expected = w * Z(A, Ap) * u(B, Bp) + w * Z(B, Bp) * u(A, Ap) - u(B, Ap) * Z(A, Bp) -
                                u(A, Bp) * Z(B, Ap);
            EXPECT_EQ(m(row, col), expected) << "w=" << wi;
          }
        }
      }
    }
  }
}

TEST(G1Action, GeneratorsCommute) {
  auto r = ModuleRealization::density(pd, make_rational(2, 7));
  for (Variant v : {Variant::Holonomic, Variant::Semiholonomic}) {
    for (const auto& z1 : pd.basis_of_degree(1)) {
      for (const auto& z2 : pd.basis_of_degree(1)) {
        EXPECT_EQ(g1_action_matrix(z1, 2, r, v) * g1_action_matrix(z2, 3, r, v),
                  g1_action_matrix(z2, 2, r, v) * g1_action_matrix(z1, 3, r, v));
      }
    }
  }
  EXPECT_THROW(g1_action_matrix(pd.e(3, 1), 2, r, Variant::Holonomic), ContractError);
  EXPECT_THROW(g1_action_matrix(pd.e(1, 3), 0, r, Variant::Holonomic), ContractError);
}

TEST(CriticalWeights, OracleAgreesWithScan) {
  for (int k : {2, 4}) {
    std::vector<Rational> ws;
    for (long w = -5; w <= 5; ++w) ws.emplace_back(w);
    auto scan = scan_critical_weights(k, pd, Variant::Holonomic, ws);
    ASSERT_EQ(scan.size(), ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
      std::size_t expected = oracle_invariant_dimension(k, ws[i]);
      EXPECT_EQ(scan[i].dimension, expected) << "k=" << k << " w=" << ws[i];
      Rational critical = k == 2 ? Rational(-1) : Rational(0);
      EXPECT_EQ(expected, ws[i] == critical ? 1u : 0u) << "k=" << k << " w=" << ws[i];
    }
  }
}

TEST(Singular, YamabeVector) {
  auto report = find_singular_vectors(2, ModuleRealization::density(pd, Rational(-1)), Variant::Holonomic);
  ASSERT_EQ(report.vectors.size(), 1u);
  EXPECT_EQ(report.vectors[0], parse("y[3,1] y[4,2] - y[3,2] y[4,1]", Rational(-1)));
  EXPECT_TRUE(is_singular(report.vectors[0], SingularTarget::Invariant));
  EXPECT_TRUE(find_singular_vectors(2, ModuleRealization::density(pd, Rational(0)), Variant::Holonomic).vectors.empty());
  // Without the lowering operators powers of the lowest letter also qualify.
  auto hw = find_singular_vectors(2, ModuleRealization::density(pd, Rational(0)), Variant::Holonomic,
                                  SingularTarget::HighestWeight);
  EXPECT_GE(hw.highest_weight_dimension, hw.vectors.size());
  for (const auto& v : hw.vectors) EXPECT_TRUE(is_singular(v));
}

TEST(Cover, DegreeOneAndDeterminant) {
  auto single = parse("y[3,2]", Rational(0));
  ASSERT_TRUE(is_singular(single));
  auto one = cover_check(single);
  EXPECT_TRUE(one.exists);
  EXPECT_EQ(one.preimage_dimension, 0u);

  auto det = cover_check(parse("y[3,1] y[4,2] - y[3,2] y[4,1]", Rational(-1)));
  ASSERT_TRUE(det.exists);
  ASSERT_TRUE(det.witness.has_value());
  EXPECT_TRUE(is_singular(*det.witness));
  EXPECT_EQ(symmetrize_projection(*det.witness), parse("y[3,1] y[4,2] - y[3,2] y[4,1]", Rational(-1)));
}

TEST(Cover, SquareIsObstructed) {
  auto s = parse("y[3,1] y[3,1] y[4,2] y[4,2] - 2 * y[3,1] y[3,2] y[4,1] y[4,2] + y[3,2] y[3,2] y[4,1] y[4,1]",
                 Rational(0));
  auto report = cover_check(s);
  EXPECT_FALSE(report.exists);
  ASSERT_TRUE(report.obstruction.has_value());
  ASSERT_TRUE(report.obstruction->generator.has_value());
  EXPECT_EQ(report.obstruction->generator->name(), "E[1,3]");
  EXPECT_EQ(report.obstruction->all_generators.size(), 4u);
  ASSERT_TRUE(report.obstruction->residual.has_value());
  EXPECT_FALSE(report.obstruction->residual->is_zero());
  EXPECT_EQ(report.obstruction->residual->homogeneous_degree(), 3);

  auto space = cover_preimages(s);
  for (const auto& h : space.homogeneous) {
    EXPECT_EQ(act(*report.obstruction->generator, space.particular + h), *report.obstruction->residual);
  }
}

// Invariants of the semisimple part of g_0 in degree 4: (C^2)^{(x)4} holds two
// sl(2) invariants, so the words carry 2 * 2 = 4 and the symmetric power 1.
// The preimages of det^2 therefore form an affine space of dimension 3.
TEST(Cover, SquarePreimageDimension) {
  auto r = ModuleRealization::density(pd, Rational(0));
  std::size_t invariants[2];
  int slot = 0;
  for (Variant v : {Variant::Semiholonomic, Variant::Holonomic}) {
    std::vector<Matrix> blocks;
    for (Unit h : {Unit{1, 2}, Unit{2, 1}, Unit{3, 4}, Unit{4, 3}}) blocks.push_back(oracle_g0_matrix(h, 4, r, v));
    Matrix stacked = vstack(blocks);
    invariants[slot++] = stacked.cols() - oracle_rank(stacked);
  }
  EXPECT_EQ(invariants[0], 4u);
  EXPECT_EQ(invariants[1], 1u);
  auto s = parse("y[3,1] y[3,1] y[4,2] y[4,2] - 2 * y[3,1] y[3,2] y[4,1] y[4,2] + y[3,2] y[3,2] y[4,1] y[4,1]",
                 Rational(0));
  EXPECT_EQ(cover_preimages(s).dimension(), invariants[0] - invariants[1]);
}

TEST(Cover, RejectsNonSingularInput) {
  EXPECT_THROW(cover_check(parse("y[3,1] y[4,2]", Rational(-1))), ContractError);
  EXPECT_THROW(cover_check(parse("y[3,1] y[4,2] - y[3,2] y[4,1]", Rational(-1), Variant::Semiholonomic)), ContractError);
}
