#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "vermakit/errors.hpp"
#include "vermakit/weyl_patterns.hpp"

using namespace vermakit;

namespace {

Weight staircase(int n, int p) {
  std::vector<long> t(n);
  for (int i = 0; i < n; ++i) t[i] = n - 1 - i;
  return Weight(t, p);
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::string> labels(const std::vector<OrbitElement>& orbit) {
  std::vector<std::string> out;
  for (const auto& el : orbit) out.push_back(el.weight.label());
  return out;
}

}  // namespace

TEST(Orbit, Examples) {
  auto orbit = affine_orbit_p_dominant(staircase(4, 2));
  EXPECT_EQ(labels(orbit), (std::vector<std::string>{"(32|10)", "(31|20)", "(30|21)", "(21|30)", "(20|31)", "(10|32)"}));
  EXPECT_EQ(affine_orbit_p_dominant(staircase(3, 1)).size(), 3u);
  EXPECT_EQ(affine_orbit_p_dominant(staircase(6, 3)).size(), 20u);
  EXPECT_THROW(affine_orbit_p_dominant(Weight({1, 2, 0}, 1)), InputError);
}

TEST(Orbit, SizesPermutationsAndCharacters) {
  for (int n = 2; n <= 7; ++n) {
    for (int p = 1; p < n; ++p) {
      Weight dom = staircase(n, p);
      auto orbit = affine_orbit_p_dominant(dom);
      ASSERT_EQ(static_cast<long>(orbit.size()), binomial(n, p));
      for (const auto& el : orbit) {
        EXPECT_TRUE(is_p_dominant(el.weight));
        EXPECT_TRUE(same_inf_char(el.weight, dom));
        EXPECT_EQ(el.length, length_of(el.weight));
        for (int i = 0; i < n; ++i) EXPECT_EQ(el.weight[i], dom[el.perm[i]]);
      }
    }
  }
}

TEST(Length, Examples) {
  EXPECT_EQ(length_of(Weight({3, 2, 1, 0}, 2)), 0);
  EXPECT_EQ(length_of(Weight({2, 1, 3, 0}, 2)), 2);
  EXPECT_EQ(length_of(Weight({1, 0, 3, 2}, 2)), 4);
  EXPECT_THROW(length_of(Weight({2, 1, 1, 0}, 2)), ContractError);
}

TEST(Pattern, ColumnProfile22) {
  auto g = build_pattern(staircase(4, 2));
  std::vector<int> sizes(g.max_length() + 1, 0);
  for (const auto& node : g.nodes) ++sizes[node.element.length];
  EXPECT_EQ(sizes, (std::vector<int>{1, 1, 2, 1, 1}));
}

TEST(Pattern, StandardEdges22) {
  auto g = build_pattern(staircase(4, 2));
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : g.edges) {
    edges.emplace(g.nodes[e.from].element.weight.label(), g.nodes[e.to].element.weight.label());
    EXPECT_EQ(e.order, 1);
    EXPECT_TRUE(e.standard);
  }
  std::set<std::pair<std::string, std::string>> expected{
      {"(31|20)", "(32|10)"}, {"(21|30)", "(31|20)"}, {"(30|21)", "(31|20)"},
      {"(20|31)", "(21|30)"}, {"(20|31)", "(30|21)"}, {"(10|32)", "(20|31)"}};
  EXPECT_EQ(edges, expected);
}

TEST(Pattern, EdgeInvariants) {
  for (int n = 2; n <= 6; ++n) {
    for (int p = 1; p < n; ++p) {
      auto g = build_pattern(staircase(n, p));
      for (const auto& e : g.edges) {
        const auto& from = g.nodes[e.from].element;
        const auto& to = g.nodes[e.to].element;
        EXPECT_EQ(from.length, to.length + 1);
        int differing = 0;
        for (int i = 0; i < n; ++i) differing += from.weight[i] != to.weight[i];
        EXPECT_EQ(differing, 2);
        EXPECT_EQ(e.order, e_action(to.weight) - e_action(from.weight));
      }
    }
  }
}

TEST(Pattern, RelabeledShape) {
  auto a = build_pattern(staircase(4, 2));
  auto b = build_pattern(Weight({4, 2, 1, 0}, 2));
  ASSERT_EQ(a.nodes.size(), b.nodes.size());
  ASSERT_EQ(a.edges.size(), b.edges.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    EXPECT_EQ(a.nodes[i].element.perm, b.nodes[i].element.perm);
    EXPECT_EQ(a.nodes[i].element.length, b.nodes[i].element.length);
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    EXPECT_EQ(a.edges[i].from, b.edges[i].from);
    EXPECT_EQ(a.edges[i].to, b.edges[i].to);
  }
  // Orders follow the grading difference, which exceeds 1 when entries are not consecutive.
  bool has_order_two = std::any_of(b.edges.begin(), b.edges.end(), [](const PatternEdge& e) { return e.order == 2; });
  EXPECT_TRUE(has_order_two);
}

TEST(PairOrder, Examples) {
  EXPECT_EQ(pair_order(Weight({3, 2, 1, 0}, 2), Weight({1, 0, 3, 2}, 2)), 4);
  EXPECT_EQ(pair_order(Weight({5, 4, 3, 2, 1, 0}, 3), Weight({2, 1, 0, 5, 4, 3}, 3)), 9);
  EXPECT_EQ(pair_order(Weight({5, 4, 2, 3, 1, 0}, 3), Weight({3, 1, 0, 5, 4, 2}, 3)), 7);
  EXPECT_THROW(pair_order(Weight({3, 2, 1, 0}, 2), Weight({4, 2, 1, 0}, 2)), ContractError);
}

TEST(SingularPattern, YamabeLayout) {
  auto g = build_singular_pattern(Weight({2, 1, 1, 0}, 2), build_pattern(staircase(4, 2)));
  EXPECT_EQ(g.singularity, 1);
  std::vector<std::pair<int, std::string>> nodes;
  for (const auto& node : g.nodes) nodes.emplace_back(node.element.length, node.dominant ? node.element.weight.label() : "x");
  std::sort(nodes.begin(), nodes.end());
  EXPECT_EQ(nodes, (std::vector<std::pair<int, std::string>>{
                       {0, "(21|10)"}, {1, "(21|10)"}, {2, "x"}, {2, "x"}, {3, "(10|21)"}, {4, "(10|21)"}}));
  auto pairs = distinct_weight_pairs(g);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].order, 2);
  for (const auto& e : g.edges) EXPECT_EQ(e.order, 0);
}

TEST(SingularPattern, TwoSingular) {
  auto g = build_singular_pattern(Weight({1, 1, 0, 0}, 2), build_pattern(staircase(4, 2)));
  EXPECT_EQ(g.singularity, 2);
  int dominant = 0, crosses = 0;
  for (const auto& node : g.nodes) {
    if (node.dominant) {
      ++dominant;
      EXPECT_EQ(node.element.weight.label(), "(10|10)");
    } else {
      ++crosses;
    }
  }
  EXPECT_EQ(dominant, 4);
  EXPECT_EQ(crosses, 2);
}

TEST(SingularPattern, RegularTemplateIsIdempotent) {
  auto t = build_pattern(staircase(5, 2));
  auto g = build_singular_pattern(staircase(5, 2), t);
  ASSERT_EQ(g.nodes.size(), t.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    EXPECT_EQ(g.nodes[i].element.weight, t.nodes[i].element.weight);
    EXPECT_TRUE(g.nodes[i].dominant);
  }
  EXPECT_EQ(g.edges.size(), t.edges.size());
  EXPECT_THROW(build_singular_pattern(Weight({2, 1, 1, 0}, 2), t), InputError);
  EXPECT_THROW(build_pattern(Weight({2, 1, 1, 0}, 2)), InputError);
}
