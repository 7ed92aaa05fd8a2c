#include "vermakit/emit.hpp"

#include <map>
#include <json.hpp>
#include <sstream>

namespace vermakit {

namespace {

using json = nlohmann::ordered_json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json rational_json(const Rational& r) { return to_string(r); }

std::string node_label(const PatternNode& node) { return node.dominant ? node.element.weight.label() : "x"; }

json pairs_json(const std::vector<PairAnnotation>& pairs) {
  json out = json::array();
  for (const auto& a : pairs) out.push_back({{"from", a.from}, {"to", a.to}, {"order", rational_json(a.order)}});
  return out;
}

json weight_object(const Weight& w) {
  json j;
  j["tuple"] = w.tuple();
  j["p"] = w.p();
  j["normalized"] = w.normalized().tuple();
  j["dynkin"] = tuple_to_dynkin(w);
  j["p_dominant"] = is_p_dominant(w);
  j["g_dominant"] = is_g_dominant(w);
  j["e_action"] = rational_json(e_action(w));
  j["inf_char_key"] = inf_char_key(w).entries;
  j["singularity"] = singularity_level(w);
  return j;
}

json candidate_json(const Candidate& c) {
  return {{"tuple", c.weight.tuple()},       {"shift", c.shift},
          {"multiplicity", c.multiplicity},  {"e_action", rational_json(c.level)},
          {"inf_char_key", c.key.entries},   {"p_dominant", c.p_dominant}};
}

std::string flag(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string pattern_text(const PatternGraph& g, const std::vector<PairAnnotation>& pairs) {
  std::ostringstream os;
  os << "pattern n=" << g.n << " p=" << g.p << " singularity=" << g.singularity << " nodes=" << g.nodes.size()
     << " edges=" << g.edges.size() << "\n";
  std::map<int, std::vector<std::size_t>> columns;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) columns[g.nodes[i].element.length].push_back(i);
  for (const auto& [len, ids] : columns) {
    os << "length " << len << ":";
    for (auto i : ids) {
      os << "  [" << i << "] " << node_label(g.nodes[i]);
      if (g.nodes[i].dominant) os << " E=" << to_string(e_action(g.nodes[i].element.weight));
    }
    os << "\n";
  }
  if (!g.edges.empty()) os << "edges:\n";
  for (const auto& e : g.edges) {
    os << "  [" << e.from << "] " << node_label(g.nodes[e.from]) << " -> [" << e.to << "] " << node_label(g.nodes[e.to])
       << "  order " << to_string(e.order) << (e.standard ? "" : "  (identity)") << "\n";
  }
  if (!pairs.empty()) os << "pairs:\n";
  for (const auto& a : pairs) {
    os << "  [" << a.from << "] " << node_label(g.nodes[a.from]) << " .. [" << a.to << "] " << node_label(g.nodes[a.to])
       << "  order " << to_string(a.order) << "\n";
  }
  return os.str();
}

std::string pattern_json(const PatternGraph& g, const std::vector<PairAnnotation>& pairs) {
  json j;
  j["n"] = g.n;
  j["p"] = g.p;
  j["singularity"] = g.singularity;
  j["nodes"] = json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& node = g.nodes[i];
    json jn;
    jn["id"] = i;
    jn["tuple"] = node.element.weight.tuple();
    jn["length"] = node.element.length;
    if (node.dominant) jn["e_action"] = rational_json(e_action(node.element.weight));
    jn["dominant"] = node.dominant;
    j["nodes"].push_back(std::move(jn));
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"order", rational_json(e.order)}, {"standard", e.standard}});
  }
  if (!pairs.empty()) j["pairs"] = pairs_json(pairs);
  return dump(j);
}

std::string pattern_dot(const PatternGraph& g, const std::vector<PairAnnotation>& pairs) {
  std::ostringstream os;
  os << "digraph pattern {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << node_label(g.nodes[i]) << "\"];\n";
  }
  std::map<int, std::vector<std::size_t>> columns;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) columns[g.nodes[i].element.length].push_back(i);
  for (const auto& [len, ids] : columns) {
    os << "  { rank=same;";
    for (auto i : ids) os << " n" << i << ";";
    os << " }\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to;
    if (!e.standard) os << " [style=bold, dir=none]";
    os << ";\n";
  }
  for (const auto& a : pairs) {
    os << "  n" << a.from << " -> n" << a.to << " [style=dotted, label=\"" << to_string(a.order) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string orbit_text(const std::vector<OrbitElement>& orbit) {
  std::ostringstream os;
  for (const auto& el : orbit) {
    os << el.weight.label() << "  length " << el.length << "  E=" << to_string(e_action(el.weight)) << "\n";
  }
  return os.str();
}

std::string orbit_json(const std::vector<OrbitElement>& orbit) {
  json j = json::array();
  for (const auto& el : orbit) {
    j.push_back({{"tuple", el.weight.tuple()},
                 {"perm", el.perm},
                 {"length", el.length},
                 {"e_action", rational_json(e_action(el.weight))}});
  }
  return dump({{"elements", j}});
}

std::string weight_text(const Weight& w) {
  std::ostringstream os;
  os << "weight      " << w.label() << "\n";
  os << "normalized  " << w.normalized().label() << "\n";
  os << "dynkin     ";
  for (long d : tuple_to_dynkin(w)) os << " " << d;
  os << "\n";
  os << "p-dominant  " << flag(is_p_dominant(w)) << "\n";
  os << "g-dominant  " << flag(is_g_dominant(w)) << "\n";
  os << "E action    " << to_string(e_action(w)) << "\n";
  os << "singularity " << singularity_level(w) << "\n";
  return os.str();
}

std::string weight_json(const Weight& w) { return dump(weight_object(w)); }

std::string singular_text(const SingularVectorReport& r, std::size_t layer_dimension) {
  std::ostringstream os;
  os << "k=" << r.k << " w=" << to_string(r.w) << " variant=" << to_string(r.variant) << " target=" << to_string(r.target)
     << " layer=" << layer_dimension << " g1-kernel=" << r.kernel_dimension << " singular=" << r.vectors.size() << "\n";
  for (const auto& v : r.vectors) os << v.to_string() << "\n";
  return os.str();
}

std::string singular_json(const SingularVectorReport& r, std::size_t layer_dimension, int n, int p) {
  json j;
  j["n"] = n;
  j["p"] = p;
  j["k"] = r.k;
  j["w"] = rational_json(r.w);
  j["variant"] = to_string(r.variant);
  j["target"] = to_string(r.target);
  j["layer_dimension"] = layer_dimension;
  j["kernel_dimension"] = r.kernel_dimension;
  j["dimension"] = r.vectors.size();
  j["vectors"] = json::array();
  for (const auto& v : r.vectors) j["vectors"].push_back(v.to_string());
  return dump(j);
}

std::string scan_text(const std::vector<ScanEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) os << "w=" << to_string(e.w) << "  dimension " << e.dimension << "\n";
  return os.str();
}

std::string scan_json(const std::vector<ScanEntry>& entries, int k, int n, int p, Variant variant, SingularTarget target) {
  json j;
  j["n"] = n;
  j["p"] = p;
  j["k"] = k;
  j["variant"] = to_string(variant);
  j["target"] = to_string(target);
  j["entries"] = json::array();
  for (const auto& e : entries) j["entries"].push_back({{"w", rational_json(e.w)}, {"dimension", e.dimension}});
  return dump(j);
}

std::string cover_text(const AlgebraElement& input, const CoverReport& r) {
  std::ostringstream os;
  os << "input: " << input.to_string() << "\n";
  os << "preimage dimension: " << r.preimage_dimension << "\n";
  if (r.exists) {
    os << "LIFT\nwitness: " << r.witness->to_string() << "\n";
    return os.str();
  }
  os << "NO LIFT";
  if (r.obstruction && r.obstruction->generator) {
    os << "; obstructing generator " << r.obstruction->generator->name() << "\n";
    os << "residual: " << r.obstruction->residual->to_string() << "\n";
    os << "all obstructing generators:";
    for (const auto& g : r.obstruction->all_generators) os << " " << g.name();
    os << "\n";
  } else {
    os << "; no single generator isolates the obstruction\n";
  }
  return os.str();
}

std::string cover_json(const AlgebraElement& input, const CoverReport& r) {
  json j;
  j["input"] = input.to_string();
  j["degree"] = input.homogeneous_degree();
  j["exists"] = r.exists;
  j["preimage_dimension"] = r.preimage_dimension;
  j["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
  if (r.obstruction) {
    json o;
    o["generator"] = r.obstruction->generator ? json(r.obstruction->generator->name()) : json(nullptr);
    o["residual"] = r.obstruction->residual ? json(r.obstruction->residual->to_string()) : json(nullptr);
    o["all_generators"] = json::array();
    for (const auto& g : r.obstruction->all_generators) o["all_generators"].push_back(g.name());
    j["obstruction"] = std::move(o);
  } else {
    j["obstruction"] = nullptr;
  }
  return dump(j);
}

std::string translate_text(const TranslationScreen& s) {
  std::ostringstream os;
  os << "sources F=" << s.f_source.label() << " E=" << s.e_source.label() << "  W labels";
  for (long l : s.labels) os << " " << l;
  os << "\n";
  auto list = [&](const char* name, const std::vector<Candidate>& cs) {
    os << name << " candidates:\n";
    for (const auto& c : cs) {
      os << "  " << c.weight.label() << (c.p_dominant ? "" : " x") << "  E=" << to_string(c.level);
      if (c.multiplicity > 1) os << "  mult " << c.multiplicity;
      os << "\n";
    }
  };
  list("F", s.f_candidates);
  list("E", s.e_candidates);
  os << "pairs:\n";
  for (const auto& v : s.pairs) {
    os << "  F'=" << v.f_target.label() << " E'=" << v.e_target.label() << "  " << (v.isolated() ? "isolated" : "blocked")
       << "  [F' " << flag(v.f_target_isolated) << ", E' " << flag(v.e_target_isolated) << ", F " << flag(v.f_source_isolated)
       << ", E " << flag(v.e_source_isolated) << "]\n";
  }
  return os.str();
}

std::string translate_json(const TranslationScreen& s) {
  json j;
  j["f_source"] = s.f_source.tuple();
  j["e_source"] = s.e_source.tuple();
  j["p"] = s.f_source.p();
  j["labels"] = s.labels;
  j["f_candidates"] = json::array();
  for (const auto& c : s.f_candidates) j["f_candidates"].push_back(candidate_json(c));
  j["e_candidates"] = json::array();
  for (const auto& c : s.e_candidates) j["e_candidates"].push_back(candidate_json(c));
  j["pairs"] = json::array();
  for (const auto& v : s.pairs) {
    j["pairs"].push_back({{"f_target", v.f_target.tuple()},
                          {"e_target", v.e_target.tuple()},
                          {"f_target_isolated", v.f_target_isolated},
                          {"e_target_isolated", v.e_target_isolated},
                          {"f_source_isolated", v.f_source_isolated},
                          {"e_source_isolated", v.e_source_isolated},
                          {"verdict", v.isolated() ? "isolated" : "blocked"}});
  }
  return dump(j);
}

std::string one_way_text(const OneWayVerdict& v) {
  std::ostringstream os;
  os << "alpha E1=" << to_string(v.alpha_e1) << " E2=" << to_string(v.alpha_e2) << " F1=" << to_string(v.alpha_f1)
     << " F2=" << to_string(v.alpha_f2) << "\n";
  os << "(ii) shared infinitesimal character: " << flag(v.shared_inf_char) << "\n";
  os << "(iv) alpha(E1) < alpha(E2): " << flag(v.e_order) << "\n";
  os << "(iv) alpha(F1) > alpha(F2): " << flag(v.f_order) << "\n";
  if (v.components_present) os << "(i) factors present: " << flag(*v.components_present) << "\n";
  if (v.separated_from_rest) os << "(iii) separated (approximate): " << flag(*v.separated_from_rest) << "\n";
  for (const auto& r : v.requires_external_input) os << "requires external input: " << r << "\n";
  return os.str();
}

std::string one_way_json(const OneWayVerdict& v) {
  json j;
  j["alpha"] = {{"e1", rational_json(v.alpha_e1)},
                {"e2", rational_json(v.alpha_e2)},
                {"f1", rational_json(v.alpha_f1)},
                {"f2", rational_json(v.alpha_f2)}};
  j["shared_inf_char"] = v.shared_inf_char;
  j["e_order"] = v.e_order;
  j["f_order"] = v.f_order;
  j["components_present"] = v.components_present ? json(*v.components_present) : json(nullptr);
  j["separated_from_rest"] = v.separated_from_rest ? json(*v.separated_from_rest) : json(nullptr);
  j["approximate"] = v.approximate;
  j["requires_external_input"] = v.requires_external_input;
  return dump(j);
}

}  // namespace vermakit
