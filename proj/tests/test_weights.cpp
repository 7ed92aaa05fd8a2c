#include <gtest/gtest.h>

#include <random>

#include "vermakit/errors.hpp"
#include "vermakit/liealg.hpp"
#include "vermakit/weights.hpp"

using namespace vermakit;

TEST(Weight, ParseAndPrint) {
  Weight w = parse_weight("3 2 | 1 0");
  EXPECT_EQ(w.p(), 2);
  EXPECT_EQ(w.to_string(), "3 2 | 1 0");
  EXPECT_EQ(w.label(), "(32|10)");
  EXPECT_EQ(parse_weight(w.to_string()), w);
  EXPECT_EQ(Weight({12, 1, 0}, 1).label(), "(12|1,0)");
  EXPECT_THROW(parse_weight("3 2 1 0"), InputError);
  EXPECT_THROW(parse_weight("3 | 2 | 1"), InputError);
  EXPECT_THROW(parse_weight("| 3 2"), InputError);
  EXPECT_THROW(parse_weight("3 x | 1"), InputError);
}

TEST(Weight, Normalization) {
  Weight w({5, 4, 7, 3}, 2);
  EXPECT_FALSE(w.is_normalized());
  EXPECT_EQ(w.normalized().tuple(), (std::vector<long>{2, 1, 4, 0}));
  EXPECT_EQ(Weight({-1, -3, -2}, 1).normalized().tuple(), (std::vector<long>{2, 0, 1}));
}

TEST(Dynkin, Examples) {
  EXPECT_EQ(dynkin_to_tuple({0, 0, 0}, 2), Weight({3, 2, 1, 0}, 2));
  EXPECT_EQ(dynkin_to_tuple({0, 0, 0, 0, 0}, 3), Weight({5, 4, 3, 2, 1, 0}, 3));
  EXPECT_EQ(dynkin_to_tuple({0}, 1), Weight({1, 0}, 1));
  EXPECT_EQ(tuple_to_dynkin(Weight({3, 2, 1, 0}, 2)), (std::vector<long>{0, 0, 0}));
  EXPECT_EQ(tuple_to_dynkin(Weight({3, 1, 2, 0}, 2)), (std::vector<long>{1, -2, 1}));
  EXPECT_EQ(tuple_to_dynkin(Weight({2, 1, 1, 0}, 2)), (std::vector<long>{0, -1, 0}));
}

TEST(Dynkin, RoundTripRandom) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    int p = 1 + static_cast<int>(rng() % (n - 1));
    std::vector<long> t(n);
    for (auto& x : t) x = entry(rng);
    Weight w = Weight(t, p).normalized();
    EXPECT_EQ(dynkin_to_tuple(tuple_to_dynkin(w), p), w);
  }
}

TEST(Dominance, Examples) {
  Weight a({3, 1, 2, 0}, 2);
  EXPECT_TRUE(is_p_dominant(a));
  EXPECT_FALSE(is_g_dominant(a));
  EXPECT_FALSE(is_p_dominant(Weight({1, 1, 2, 0}, 2)));
  EXPECT_TRUE(is_p_dominant(Weight({2, 1, 1, 0}, 2)));
  EXPECT_TRUE(is_g_dominant(Weight({3, 2, 1, 0}, 2)));
}

TEST(EAction, Examples) {
  EXPECT_EQ(e_action(Weight({3, 2, 1, 0}, 2)), 2);
  EXPECT_EQ(e_action(Weight({4, 3, 2, 1, 0}, 2)), 3);
  EXPECT_EQ(e_action(Weight({1, 0, 3, 2}, 2)), -2);
}

TEST(EAction, ShiftInvariant) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    int p = 1 + static_cast<int>(rng() % (n - 1));
    std::vector<long> t(n);
    for (auto& x : t) x = static_cast<long>(rng() % 21) - 10;
    auto shifted = t;
    long c = static_cast<long>(rng() % 11) - 5;
    for (auto& x : shifted) x += c;
    EXPECT_EQ(e_action(Weight(t, p)), e_action(Weight(shifted, p)));
  }
}

// The tuple formula agrees with pairing the labels against the inverse
// Cartan row of the crossed node.
TEST(EAction, MatchesInverseCartanRow) {
  for (int n = 2; n <= 6; ++n) {
    for (int p = 1; p < n; ++p) {
      auto row = inverse_cartan_row(n, p);
      Rational base = e_action(dynkin_to_tuple(std::vector<long>(n - 1, 0), p));
      std::vector<long> labels(n - 1, -2);
      while (true) {
        Rational expected = 0;
        for (int i = 0; i < n - 1; ++i) expected += row[i] * labels[i];
        ASSERT_EQ(e_action(dynkin_to_tuple(labels, p)) - base, expected);
        int i = 0;
        while (i < n - 1 && labels[i] == 2) labels[i++] = -2;
        if (i == n - 1) break;
        ++labels[i];
      }
    }
  }
}

TEST(InfChar, Examples) {
  EXPECT_TRUE(same_inf_char(Weight({3, 2, 1, 0}, 2), Weight({1, 0, 3, 2}, 2)));
  EXPECT_FALSE(same_inf_char(Weight({3, 2, 1, 0}, 2), Weight({4, 2, 1, 0}, 2)));
  EXPECT_TRUE(same_inf_char(Weight({2, 1, 1, 0}, 2), Weight({1, 0, 2, 1}, 2)));
  EXPECT_TRUE(same_inf_char(Weight({3, 2, 1, 0}, 2), Weight({13, 12, 11, 10}, 2)));
  EXPECT_THROW(same_inf_char(Weight({3, 2, 1, 0}, 2), Weight({3, 2, 1, 0}, 1)), InputError);
  EXPECT_THROW(same_inf_char(Weight({3, 2, 1, 0}, 2), Weight({2, 1, 0}, 2)), InputError);
}

TEST(Singularity, Examples) {
  EXPECT_EQ(singularity_level(Weight({3, 2, 1, 0}, 2)), 0);
  EXPECT_EQ(singularity_level(Weight({2, 1, 1, 0}, 2)), 1);
  EXPECT_EQ(singularity_level(Weight({1, 1, 0, 0}, 2)), 2);
}
