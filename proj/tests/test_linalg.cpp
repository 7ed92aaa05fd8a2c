#include <gtest/gtest.h>

#include <random>

#include "vermakit/errors.hpp"
#include "vermakit/linalg.hpp"

using namespace vermakit;

namespace {

// Textbook elimination over Q, kept separate from the fraction-free code.
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

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int sparsity) {
  std::uniform_int_distribution<int> v(-4, 4), keep(0, sparsity);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng) == 0) m(i, j) = v(rng);
  return m;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(to_string(parse_rational("3/2")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Linalg, NullspaceMatchesOracleRank) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 9;
    Matrix a = random_matrix(rng, rows, cols, trial % 4);
    auto kernel = nullspace(a);
    std::size_t r = oracle_rank(a);
    EXPECT_EQ(rank(a), r);
    ASSERT_EQ(kernel.size(), cols - r);
    Matrix k(cols, kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      for (const auto& x : a.apply(kernel[j])) EXPECT_EQ(x, 0);
      for (std::size_t i = 0; i < cols; ++i) {
        k(i, j) = kernel[j][i];
        EXPECT_EQ(kernel[j][i].get_den(), 1);
      }
      auto first = std::find_if(kernel[j].begin(), kernel[j].end(), [](const Rational& x) { return x != 0; });
      ASSERT_NE(first, kernel[j].end());
      EXPECT_GT(*first, 0);
    }
    EXPECT_EQ(oracle_rank(k), kernel.size());
  }
}

TEST(Linalg, SolveConsistentAndInconsistent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    Matrix a = random_matrix(rng, rows, cols, 1);
    std::vector<Rational> x0(cols);
    for (auto& x : x0) x = make_rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
    auto b = a.apply(x0);
    auto x = solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a.apply(*x), b);
  }
  Matrix a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  EXPECT_FALSE(solve(a, std::vector<Rational>{1, 2}).has_value());
}

TEST(Linalg, KronAndStack) {
  Matrix a(2, 2), b(1, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  b(0, 0) = 5;
  b(0, 1) = 6;
  Matrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 2u);
  ASSERT_EQ(k.cols(), 4u);
  EXPECT_EQ(k(1, 3), 24);
  EXPECT_EQ(k(0, 1), 6);
  std::vector<Matrix> blocks{a, b};
  Matrix s = vstack(blocks);
  EXPECT_EQ(s.rows(), 3u);
  EXPECT_EQ(s(2, 1), 6);
  EXPECT_EQ(a * Matrix::identity(2), a);
}
