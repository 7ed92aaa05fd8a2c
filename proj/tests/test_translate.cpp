#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "vermakit/errors.hpp"
#include "vermakit/translate.hpp"

using namespace vermakit;

namespace {

const ParabolicData pd(4, 2);

std::map<Rational, long> levels_of(const GModuleWeightData& w, const ParabolicData& q) {
  std::map<Rational, long> out;
  for (const auto& l : filtration_levels(w, q)) out[l.level] = l.multiplicity;
  return out;
}

std::vector<std::string> labels_of(const std::vector<Candidate>& cs, bool dominant_only) {
  std::vector<std::string> out;
  for (const auto& c : cs)
    if (!dominant_only || c.p_dominant) out.push_back(c.weight.label());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(WeightSupport, Examples) {
  auto standard = weight_support({1, 0, 0}, 4);
  EXPECT_EQ(standard.dimension(), 4);
  ASSERT_EQ(standard.support.size(), 4u);
  for (const auto& [v, m] : standard.support) {
    EXPECT_EQ(m, 1);
    EXPECT_EQ(std::count(v.begin(), v.end(), 1L), 1);
  }

  auto sl2 = weight_support({2}, 2);
  std::vector<std::pair<std::vector<long>, long>> expected{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}};
  EXPECT_EQ(sl2.support, expected);

  auto adjoint = weight_support({1, 0, 1}, 4);
  EXPECT_EQ(adjoint.dimension(), 15);
  EXPECT_EQ(adjoint.support.size(), 13u);
  long zero_multiplicity = 0;
  for (const auto& [v, m] : adjoint.support) {
    if (v == std::vector<long>{1, 1, 1, 1}) zero_multiplicity = m;
    else EXPECT_EQ(m, 1);
  }
  EXPECT_EQ(zero_multiplicity, 3);

  EXPECT_THROW(weight_support({-1, 0, 0}, 4), InputError);
  EXPECT_THROW(weight_support({1, 0}, 4), InputError);
}

TEST(WeightSupport, DimensionAndWeylSymmetry) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<long> labels(n - 1, 0);
    while (true) {
      long total = 0;
      for (long l : labels) total += l;
      if (total <= 3) {
        auto w = weight_support(labels, n);
        EXPECT_EQ(w.dimension(), weyl_dimension(labels, n));
        std::map<std::vector<long>, long> mult(w.support.begin(), w.support.end());
        for (const auto& [v, m] : w.support) {
          // Closed under permutations with equal multiplicities.
          auto perm = v;
          std::sort(perm.begin(), perm.end());
          do {
            ASSERT_TRUE(mult.count(perm));
            EXPECT_EQ(mult[perm], m);
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
      int i = 0;
      while (i < n - 1 && labels[i] == 3) labels[i++] = 0;
      if (i == n - 1) break;
      ++labels[i];
    }
  }
}

TEST(Filtration, Examples) {
  EXPECT_EQ(levels_of(weight_support({1, 0, 0}, 4), pd),
            (std::map<Rational, long>{{make_rational(1, 2), 2}, {make_rational(-1, 2), 2}}));
  EXPECT_EQ(levels_of(weight_support({1, 0, 1}, 4), pd),
            (std::map<Rational, long>{{Rational(1), 4}, {Rational(0), 7}, {Rational(-1), 4}}));
  EXPECT_EQ(levels_of(weight_support({0, 0, 0}, 4), pd), (std::map<Rational, long>{{Rational(0), 1}}));
  auto levels = filtration_levels(weight_support({1, 0, 1}, 4), pd);
  EXPECT_EQ(levels.front().level, 1);
  EXPECT_EQ(levels.back().level, -1);
}

TEST(Filtration, SumsAndSelfDualSymmetry) {
  for (int p = 1; p <= 4; ++p) {
    ParabolicData q(5, p);
    for (const std::vector<long>& labels : {std::vector<long>{1, 0, 0, 1}, std::vector<long>{0, 1, 1, 0},
                                            std::vector<long>{2, 0, 1, 0}}) {
      auto w = weight_support(labels, 5);
      auto levels = levels_of(w, q);
      long total = 0;
      for (const auto& [l, m] : levels) total += m;
      EXPECT_EQ(total, w.dimension());
      auto reversed = labels;
      std::reverse(reversed.begin(), reversed.end());
      if (reversed == labels) {
        for (const auto& [l, m] : levels) EXPECT_EQ(levels[-l], m);
      }
    }
  }
}

TEST(Candidates, Examples) {
  Weight trivial({3, 2, 1, 0}, 2);
  auto cs = candidate_factors(trivial, weight_support({1, 0, 0}, 4));
  // Candidates are normalized to minimum entry 0, so (3,2|1,1) prints as (21|00).
  EXPECT_EQ(labels_of(cs, false), (std::vector<std::string>{"(21|00)", "(32|20)", "(33|10)", "(42|10)"}));
  EXPECT_EQ(labels_of(cs, true), (std::vector<std::string>{"(32|20)", "(42|10)"}));
  for (const auto& c : cs) EXPECT_NE(c.key, inf_char_key(trivial));

  auto same = candidate_factors(trivial, weight_support({0, 0, 0}, 4));
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0].weight, trivial);
  EXPECT_THROW(candidate_factors(trivial, weight_support({1, 0}, 3)), InputError);
}

TEST(Candidates, DualShiftsAreNegated) {
  Weight source({5, 3, 2, 0}, 2);
  for (const std::vector<long>& labels : {std::vector<long>{1, 0, 0}, std::vector<long>{0, 1, 0}, std::vector<long>{2, 0, 1}}) {
    auto w = weight_support(labels, 4);
    auto forward = candidate_factors(source, w);
    auto backward = candidate_factors(source, w.dual());
    ASSERT_EQ(forward.size(), backward.size());
    std::multiset<std::vector<long>> a, b;
    for (const auto& c : forward) {
      auto s = c.shift;
      for (auto& x : s) x = -x;
      a.insert(s);
    }
    for (const auto& c : backward) b.insert(c.shift);
    EXPECT_EQ(a, b);
  }
}

TEST(Screen, YamabePairWithStandard) {
  auto screen = screen_translation(Weight({2, 1, 1, 0}, 2), Weight({1, 0, 2, 1}, 2), weight_support({1, 0, 0}, 4));
  EXPECT_FALSE(screen.pairs.empty());
  EXPECT_TRUE(std::any_of(screen.pairs.begin(), screen.pairs.end(), [](const PairVerdict& v) { return v.isolated(); }));
  for (const auto& v : screen.pairs) EXPECT_TRUE(same_inf_char(v.f_target, v.e_target));
}

TEST(Screen, TrivialModule) {
  Weight f({3, 1, 2, 0}, 2), e({1, 0, 3, 2}, 2);
  auto screen = screen_translation(f, e, weight_support({0, 0, 0}, 4));
  ASSERT_EQ(screen.pairs.size(), 1u);
  EXPECT_TRUE(screen.pairs[0].isolated());
  EXPECT_EQ(screen.pairs[0].f_target, f);
  EXPECT_EQ(screen.pairs[0].e_target, e);
}

TEST(Screen, AdjointBlocksSingularSource) {
  Weight f({2, 1, 1, 0}, 2), e({1, 0, 2, 1}, 2);
  auto screen = screen_translation(f, e, weight_support({1, 0, 1}, 4));
  auto self = std::find_if(screen.pairs.begin(), screen.pairs.end(),
                           [&](const PairVerdict& v) { return v.f_target == f && v.e_target == e; });
  ASSERT_NE(self, screen.pairs.end());
  EXPECT_FALSE(self->isolated());
  EXPECT_FALSE(self->f_target_isolated);
}

TEST(Screen, SymmetricUnderDual) {
  struct Case {
    Weight f, e;
    std::vector<long> labels;
  };
  std::vector<Case> cases{{Weight({2, 1, 1, 0}, 2), Weight({1, 0, 2, 1}, 2), {1, 0, 0}},
                          {Weight({3, 2, 1, 0}, 2), Weight({2, 0, 3, 1}, 2), {0, 0, 1}},
                          {Weight({3, 2, 1, 0}, 2), Weight({1, 0, 3, 2}, 2), {1, 0, 1}}};
  for (const auto& c : cases) {
    auto w = weight_support(c.labels, 4);
    auto forward = screen_translation(c.f, c.e, w);
    for (const auto& v : forward.pairs) {
      auto backward = screen_translation(v.f_target, v.e_target, w.dual());
      auto it = std::find_if(backward.pairs.begin(), backward.pairs.end(),
                             [&](const PairVerdict& b) { return b.f_target == c.f && b.e_target == c.e; });
      ASSERT_NE(it, backward.pairs.end());
      EXPECT_EQ(it->f_target_isolated, v.f_source_isolated);
      EXPECT_EQ(it->e_target_isolated, v.e_source_isolated);
      EXPECT_EQ(it->f_source_isolated, v.f_target_isolated);
      EXPECT_EQ(it->e_source_isolated, v.e_target_isolated);
    }
  }
  EXPECT_THROW(screen_translation(Weight({3, 2, 1, 0}, 2), Weight({4, 2, 1, 0}, 2), weight_support({1, 0, 0}, 4)),
               InputError);
}

TEST(OneWay, Examples) {
  auto w = weight_support({1, 0, 0}, 4);
  Weight a({3, 1, 2, 0}, 2), b({3, 0, 2, 1}, 2), c({2, 1, 3, 0}, 2), d({2, 0, 3, 1}, 2);
  auto v = screen_one_way(a, b, c, d, w);
  EXPECT_EQ(v.alpha_e1, 1);
  EXPECT_EQ(v.alpha_e2, 0);
  EXPECT_EQ(v.alpha_f1, 0);
  EXPECT_EQ(v.alpha_f2, -1);
  EXPECT_TRUE(v.shared_inf_char);
  EXPECT_FALSE(v.e_order);
  EXPECT_TRUE(v.f_order);
  EXPECT_TRUE(v.approximate);
  EXPECT_FALSE(v.requires_external_input.empty());
  EXPECT_FALSE(v.components_present.has_value());

  auto swapped = screen_one_way(b, a, c, d, w);
  EXPECT_TRUE(swapped.e_order);

  auto distinct = screen_one_way(Weight({3, 2, 1, 0}, 2), Weight({4, 2, 1, 0}, 2), Weight({5, 2, 1, 0}, 2),
                                 Weight({6, 2, 1, 0}, 2), w);
  EXPECT_FALSE(distinct.shared_inf_char);

  auto equal = screen_one_way(b, b, c, d, w);
  EXPECT_FALSE(equal.e_order);

  EXPECT_THROW(screen_one_way(Weight({1, 3, 2, 0}, 2), b, c, d, w), InputError);
}

TEST(OneWay, WithSources) {
  auto w = weight_support({1, 0, 0}, 4);
  Weight e({3, 2, 1, 0}, 2), f({2, 1, 3, 0}, 2);
  auto ec = candidate_factors(e, w);
  auto fc = candidate_factors(f, w);
  std::vector<Weight> ed, fd;
  for (const auto& c : ec)
    if (c.p_dominant) ed.push_back(c.weight);
  for (const auto& c : fc)
    if (c.p_dominant) fd.push_back(c.weight);
  ASSERT_GE(ed.size(), 2u);
  ASSERT_GE(fd.size(), 2u);
  auto v = screen_one_way(ed[0], ed[1], fd[0], fd[1], w, std::make_pair(e, f));
  ASSERT_TRUE(v.components_present.has_value());
  EXPECT_TRUE(*v.components_present);
  ASSERT_TRUE(v.separated_from_rest.has_value());
}

TEST(Curvability, Examples) {
  auto adjoint = weight_support({1, 0, 1}, 4);
  auto outer = splitting_depths(adjoint, pd, {2, 1, 1, 0}, {0, 1, 1, 2});
  EXPECT_EQ(outer.embed, 0);
  EXPECT_EQ(outer.project, 0);
  auto middle = splitting_depths(adjoint, pd, {1, 1, 1, 1}, {1, 1, 1, 1});
  EXPECT_EQ(middle.embed, 1);
  EXPECT_EQ(middle.project, 1);

  EXPECT_TRUE(curvability_filter(Rational(1), {Rational(5), Rational(5)}));
  EXPECT_TRUE(curvability_filter(Rational(2), {Rational(3), Rational(3)}));
  EXPECT_FALSE(curvability_filter(Rational(4), {Rational(3), Rational(0)}));
  EXPECT_TRUE(curvability_filter(Rational(4), {Rational(2), Rational(2)}));
}
