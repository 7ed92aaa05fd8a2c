#include "vermakit/weyl_patterns.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vermakit/errors.hpp"

namespace vermakit {

namespace {

bool weakly_decreasing(const Weight& w) {
  for (int i = 0; i + 1 < w.n(); ++i) {
    if (w[i] < w[i + 1]) return false;
  }
  return true;
}

int strict_inversions(const std::vector<long>& t) {
  int count = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] < t[j]) ++count;
    }
  }
  return count;
}

bool node_order(const OrbitElement& a, const OrbitElement& b) {
  if (a.length != b.length) return a.length < b.length;
  return a.weight.tuple() > b.weight.tuple();
}

}  // namespace

int PatternGraph::max_length() const {
  int m = 0;
  for (const auto& node : nodes) m = std::max(m, node.element.length);
  return m;
}

int length_of(const Weight& w) {
  if (singularity_level(w) != 0) {
    throw ContractError("length_of " + w.label() + ": repeated entries, take the length from a template");
  }
  return strict_inversions(w.tuple());
}

std::vector<OrbitElement> affine_orbit_p_dominant(const Weight& dominant) {
  if (!weakly_decreasing(dominant)) {
    throw InputError("orbit enumeration needs a weakly decreasing tuple, got " + dominant.label());
  }
  const int n = dominant.n();
  const int p = dominant.p();
  const auto& values = dominant.tuple();

  std::set<std::vector<long>> seen;
  std::vector<OrbitElement> out;
  // Choose which sorted positions go to block one; both blocks stay sorted.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + p, true);
  do {
    std::vector<long> t;
    t.reserve(n);
    for (int k = 0; k < n; ++k) {
      if (pick[k]) t.push_back(values[k]);
    }
    for (int k = 0; k < n; ++k) {
      if (!pick[k]) t.push_back(values[k]);
    }
    Weight w(t, p);
    if (!is_p_dominant(w) || !seen.insert(t).second) continue;

    // Stable position map: equal values consume sorted positions in order.
    std::vector<int> perm(n);
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (!used[k] && values[k] == t[i]) {
          used[k] = true;
          perm[i] = k;
          break;
        }
      }
    }
    out.push_back({std::move(w), std::move(perm), strict_inversions(t)});
  } while (std::prev_permutation(pick.begin(), pick.end()));

  std::sort(out.begin(), out.end(), node_order);
  return out;
}

std::vector<PatternEdge> standard_edges(const std::vector<OrbitElement>& orbit) {
  std::vector<PatternEdge> edges;
  for (std::size_t a = 0; a < orbit.size(); ++a) {
    for (std::size_t b = 0; b < orbit.size(); ++b) {
      if (orbit[a].length != orbit[b].length + 1) continue;
      const auto& ta = orbit[a].weight.tuple();
      const auto& tb = orbit[b].weight.tuple();
      std::vector<std::size_t> diff;
      for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i] != tb[i]) diff.push_back(i);
      }
      if (diff.size() != 2) continue;
      if (ta[diff[0]] != tb[diff[1]] || ta[diff[1]] != tb[diff[0]]) continue;
      edges.push_back({static_cast<int>(a), static_cast<int>(b),
                       e_action(orbit[b].weight) - e_action(orbit[a].weight), true});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const PatternEdge& l, const PatternEdge& r) { return std::tie(l.from, l.to) < std::tie(r.from, r.to); });
  return edges;
}

Rational pair_order(const Weight& u, const Weight& v) {
  if (!same_inf_char(u, v)) {
    throw ContractError("pair_order: " + u.label() + " and " + v.label() + " have different infinitesimal characters");
  }
  Rational d = e_action(u) - e_action(v);
  return abs(d);
}

Rational pair_order(const OrbitElement& u, const OrbitElement& v) { return pair_order(u.weight, v.weight); }

PatternGraph build_pattern(const Weight& dominant) {
  if (!weakly_decreasing(dominant)) {
    throw InputError("pattern needs a dominant (decreasing) tuple, got " + dominant.label());
  }
  if (!is_g_dominant(dominant)) {
    throw InputError("tuple " + dominant.label() + " is singular; build it with a singular pattern template");
  }
  Weight start = dominant.normalized();
  PatternGraph g;
  g.n = start.n();
  g.p = start.p();
  g.singularity = 0;
  auto orbit = affine_orbit_p_dominant(start);
  g.edges = standard_edges(orbit);
  for (auto& e : orbit) g.nodes.push_back({std::move(e), true});
  return g;
}

PatternGraph build_singular_pattern(const Weight& singular, const PatternGraph& templ) {
  if (singular.n() != templ.n || singular.p() != templ.p) {
    throw InputError("template shape (n=" + std::to_string(templ.n) + ", p=" + std::to_string(templ.p) +
                     ") does not match " + singular.label());
  }
  if (!weakly_decreasing(singular)) {
    throw InputError("singular pattern needs a weakly decreasing tuple, got " + singular.label());
  }
  Weight base = singular.normalized();
  PatternGraph g;
  g.n = templ.n;
  g.p = templ.p;
  g.singularity = singularity_level(base);
  for (const auto& node : templ.nodes) {
    const auto& perm = node.element.perm;
    std::vector<long> t(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) t[i] = base[perm[i]];
    Weight w(std::move(t), g.p);
    bool dominant = is_p_dominant(w);
    g.nodes.push_back({{std::move(w), perm, node.element.length}, dominant});
  }
  for (const auto& e : templ.edges) {
    const auto& from = g.nodes[e.from];
    const auto& to = g.nodes[e.to];
    if (!from.dominant || !to.dominant) continue;
    Rational order = e_action(to.element.weight) - e_action(from.element.weight);
    g.edges.push_back({e.from, e.to, order, e.standard && order != 0});
  }
  return g;
}

PatternGraph pattern_for(const Weight& dominant) {
  if (is_g_dominant(dominant)) return build_pattern(dominant);
  std::vector<long> rho(dominant.n());
  for (int i = 0; i < dominant.n(); ++i) rho[i] = dominant.n() - 1 - i;
  return build_singular_pattern(dominant, build_pattern(Weight(rho, dominant.p())));
}

std::vector<PairAnnotation> distinct_weight_pairs(const PatternGraph& g) {
  std::vector<int> firsts;
  std::set<std::vector<long>> seen;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (!g.nodes[i].dominant) continue;
    if (seen.insert(g.nodes[i].element.weight.tuple()).second) firsts.push_back(static_cast<int>(i));
  }
  std::vector<PairAnnotation> out;
  for (std::size_t a = 0; a < firsts.size(); ++a) {
    for (std::size_t b = a + 1; b < firsts.size(); ++b) {
      const auto& lo = g.nodes[firsts[a]].element;
      const auto& hi = g.nodes[firsts[b]].element;
      Rational order = pair_order(lo, hi);
      if (order > 0) out.push_back({firsts[b], firsts[a], order});
    }
  }
  return out;
}

}  // namespace vermakit
