#include "vermakit/translate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "vermakit/errors.hpp"

namespace vermakit {

namespace {

using Partition = std::vector<long>;

// Kostka number K(lambda, mu) by stripping horizontal strips of size
// mu.back() off lambda.
long kostka(const Partition& lambda, Partition mu, std::map<std::pair<Partition, Partition>, long>& memo) {
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  long total = std::accumulate(lambda.begin(), lambda.end(), 0L);
  if (mu.empty()) return total == 0 ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const long strip = mu.back();
  Partition rest(mu.begin(), mu.end() - 1);
  long count = 0;
  Partition nu(lambda.size());
  // nu interlaces lambda: lambda[i+1] <= nu[i] <= lambda[i].
  std::function<void(std::size_t, long)> place = [&](std::size_t i, long removed) {
    if (i == lambda.size()) {
      if (removed == strip) count += kostka(nu, rest, memo);
      return;
    }
    long low = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (long v = lambda[i]; v >= low; --v) {
      long r = removed + (lambda[i] - v);
      if (r > strip) break;
      nu[i] = v;
      place(i + 1, r);
    }
  };
  place(0, 0);
  memo.emplace(std::move(key), count);
  return count;
}

void partitions_into(long total, long largest, std::size_t parts, Partition& current, std::vector<Partition>& out) {
  if (current.size() == parts) {
    if (total == 0) out.push_back(current);
    return;
  }
  for (long v = std::min(total, largest); v >= 0; --v) {
    current.push_back(v);
    partitions_into(total - v, v, parts, current, out);
    current.pop_back();
  }
}

std::map<InfCharKey, long> key_counts(const std::vector<Candidate>& list) {
  std::map<InfCharKey, long> out;
  for (const auto& c : list) {
    if (c.p_dominant) out[c.key] += c.multiplicity;
  }
  return out;
}

std::vector<Candidate> dominant_only(std::vector<Candidate> list) {
  std::erase_if(list, [](const Candidate& c) { return !c.p_dominant; });
  return list;
}

// True when `target` is among the p-dominant candidates of source (x) w and no
// other candidate (counted with multiplicity) shares its key.
bool isolated_in(const Weight& target, const Weight& source, const GModuleWeightData& w) {
  auto list = candidate_factors(source, w);
  bool present = std::any_of(list.begin(), list.end(), [&](const Candidate& c) {
    return c.p_dominant && c.weight.normalized() == target.normalized();
  });
  return present && key_counts(list)[inf_char_key(target)] == 1;
}

Rational level_of(const std::vector<long>& nu, const std::vector<Rational>& grading) {
  Rational s = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) s += grading[i] * nu[i];
  return s;
}

}  // namespace

long GModuleWeightData::dimension() const {
  long d = 0;
  for (const auto& [nu, m] : support) d += m;
  return d;
}

GModuleWeightData GModuleWeightData::dual() const {
  GModuleWeightData out;
  out.n = n;
  out.labels.assign(labels.rbegin(), labels.rend());
  out.highest.assign(n, 0);
  for (int i = n - 2; i >= 0; --i) out.highest[i] = out.highest[i + 1] + out.labels[i];
  for (const auto& [nu, m] : support) {
    std::vector<long> neg(nu.size());
    std::transform(nu.begin(), nu.end(), neg.begin(), std::negate<>());
    out.support.emplace_back(std::move(neg), m);
  }
  std::sort(out.support.begin(), out.support.end(), std::greater<>());
  return out;
}

long weyl_dimension(const std::vector<long>& labels, int n) {
  if (n < 2 || static_cast<int>(labels.size()) != n - 1) throw InputError("weyl_dimension needs n-1 labels");
  std::vector<long> a(n, 0);
  for (int i = n - 2; i >= 0; --i) a[i] = a[i + 1] + labels[i] + 1;
  Rational d = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d *= make_rational(a[i] - a[j], j - i);
  }
  if (d.get_den() != 1) throw ContractError("Weyl dimension is not an integer");
  return d.get_num().get_si();
}

GModuleWeightData weight_support(const std::vector<long>& labels, int n) {
  if (n < 2) throw InputError("weight_support needs n >= 2");
  if (static_cast<int>(labels.size()) != n - 1) {
    throw InputError("expected " + std::to_string(n - 1) + " Dynkin labels, got " + std::to_string(labels.size()));
  }
  for (long l : labels) {
    if (l < 0) throw InputError("Dynkin labels must be non-negative");
  }
  GModuleWeightData out;
  out.n = n;
  out.labels = labels;
  out.highest.assign(n, 0);
  for (int i = n - 2; i >= 0; --i) out.highest[i] = out.highest[i + 1] + labels[i];
  const long total = std::accumulate(out.highest.begin(), out.highest.end(), 0L);

  std::vector<Partition> dominant;
  Partition scratch;
  partitions_into(total, total, n, scratch, dominant);
  std::map<std::pair<Partition, Partition>, long> memo;
  for (const auto& mu : dominant) {
    long m = kostka(out.highest, mu, memo);
    if (m == 0) continue;
    Partition perm = mu;  // weakly decreasing, so prev_permutation visits each arrangement once
    do {
      out.support.emplace_back(perm, m);
    } while (std::prev_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.support.begin(), out.support.end(), std::greater<>());
  if (out.dimension() != weyl_dimension(labels, n)) {
    throw ContractError("weight support dimension disagrees with the Weyl dimension formula");
  }
  return out;
}

std::vector<FiltrationLevel> filtration_levels(const GModuleWeightData& w, const ParabolicData& pd) {
  if (w.n != pd.n()) throw InputError("module and parabolic have different n");
  auto grading = grading_element(pd);
  std::map<Rational, long, std::greater<>> levels;
  for (const auto& [nu, m] : w.support) levels[level_of(nu, grading)] += m;
  std::vector<FiltrationLevel> out;
  for (const auto& [l, m] : levels) out.push_back({l, m});
  return out;
}

std::vector<Candidate> candidate_factors(const Weight& source, const GModuleWeightData& w) {
  if (source.n() != w.n) throw InputError("weight and module have different n");
  std::vector<Candidate> out;
  for (const auto& [nu, m] : w.support) {
    std::vector<long> t = source.tuple();
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += nu[i];
    Weight cand = Weight(std::move(t), source.p()).normalized();
    out.push_back({cand, nu, m, e_action(cand), inf_char_key(cand), is_p_dominant(cand)});
  }
  return out;
}

TranslationScreen screen_translation(const Weight& f_source, const Weight& e_source, const GModuleWeightData& w) {
  if (!same_inf_char(f_source, e_source)) {
    throw InputError("sources " + f_source.label() + " and " + e_source.label() + " have different infinitesimal characters");
  }
  if (f_source.n() != w.n) throw InputError("weights and module have different n");
  TranslationScreen screen{f_source, e_source, w.labels, candidate_factors(f_source, w), candidate_factors(e_source, w), {}};
  const auto dual = w.dual();
  auto f_counts = key_counts(screen.f_candidates);
  auto e_counts = key_counts(screen.e_candidates);

  for (const auto& f : dominant_only(screen.f_candidates)) {
    for (const auto& e : dominant_only(screen.e_candidates)) {
      if (f.key != e.key) continue;
      PairVerdict v{f.weight, e.weight};
      v.f_target_isolated = f_counts[f.key] == 1;
      v.e_target_isolated = e_counts[e.key] == 1;
      v.f_source_isolated = isolated_in(f_source, f.weight, dual);
      v.e_source_isolated = isolated_in(e_source, e.weight, dual);
      screen.pairs.push_back(std::move(v));
    }
  }
  return screen;
}

OneWayVerdict screen_one_way(const Weight& e1, const Weight& e2, const Weight& f1, const Weight& f2,
                             const GModuleWeightData& w, const std::optional<std::pair<Weight, Weight>>& sources) {
  for (const Weight* x : {&e1, &e2, &f1, &f2}) {
    if (!is_p_dominant(*x)) throw InputError(x->label() + " is not p-dominant");
    if (x->n() != w.n) throw InputError("weights and module have different n");
  }
  OneWayVerdict v;
  v.alpha_e1 = e_action(e1);
  v.alpha_e2 = e_action(e2);
  v.alpha_f1 = e_action(f1);
  v.alpha_f2 = e_action(f2);
  auto key = inf_char_key(e1);
  v.shared_inf_char = inf_char_key(e2) == key && inf_char_key(f1) == key && inf_char_key(f2) == key;
  v.e_order = v.alpha_e1 < v.alpha_e2;
  v.f_order = v.alpha_f1 > v.alpha_f2;

  if (sources) {
    auto ec = candidate_factors(sources->first, w);
    auto fc = candidate_factors(sources->second, w);
    auto has = [](const std::vector<Candidate>& list, const Weight& x) {
      return std::any_of(list.begin(), list.end(),
                         [&](const Candidate& c) { return c.p_dominant && c.weight == x.normalized(); });
    };
    v.components_present = has(ec, e1) && has(ec, e2) && has(fc, f1) && has(fc, f2);
    // Every other candidate must carry a different key than the shared one.
    auto others_clear = [&](const std::vector<Candidate>& list, const Weight& a, const Weight& b) {
      long hits = 0;
      for (const auto& c : list) {
        if (!c.p_dominant || c.key != key) continue;
        if (c.weight == a.normalized() || c.weight == b.normalized()) hits += c.multiplicity;
        else return false;
      }
      return hits == 2 || (a.normalized() == b.normalized() && hits == 1);
    };
    v.separated_from_rest = others_clear(ec, e1, e2) && others_clear(fc, f1, f2);
  }
  v.requires_external_input = {
      "(iii) all remaining composition factors have different infinitesimal characters",
      "V(F) splits off from V(F1 (x) W*)",
      "no nontrivial homomorphism V(E2) -> V(F)",
  };
  return v;
}

SplittingDepths splitting_depths(const GModuleWeightData& w, const ParabolicData& pd, const std::vector<long>& embed_shift,
                                 const std::vector<long>& project_shift) {
  auto levels = filtration_levels(w, pd);
  if (levels.empty()) throw InputError("empty module");
  auto grading = grading_element(pd);
  return {levels.front().level - level_of(embed_shift, grading), level_of(project_shift, grading) - levels.back().level};
}

bool curvability_filter(const Rational& edge_order, const SplittingDepths& depths) {
  return edge_order <= 2 || (depths.embed <= 2 && depths.project <= 2);
}

}  // namespace vermakit
