// vermakit command-line front end.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vermakit/acceptance.hpp"
#include "vermakit/emit.hpp"
#include "vermakit/errors.hpp"

using namespace vermakit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitContract = 3;

int degree_cap(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("VERMAKIT_DEGREE_CAP")) {
    try {
      int cap = std::stoi(env);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("VERMAKIT_DEGREE_CAP must be a positive integer, got '") + env + "'");
  }
  return 4;
}

// "3 2 | 1 0", or a plain list together with --p.
Weight read_weight(const std::string& text, int p) {
  if (text.find('|') != std::string::npos) {
    Weight w = parse_weight(text);
    if (p > 0 && w.p() != p) throw InputError("--p disagrees with the bar position in '" + text + "'");
    return w;
  }
  if (p <= 0) throw InputError("weight '" + text + "' has no '|' and no --p was given");
  return Weight(parse_integer_list(text), p);
}

void check_n(int n, const Weight& w) {
  if (n > 0 && w.n() != n) throw InputError("--n " + std::to_string(n) + " but the weight has " + std::to_string(w.n()) + " entries");
}

std::string read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::string line, out;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    out += line + " ";
  }
  return out;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw InputError("unsupported --format " + format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Patterns, singular vectors and lifting checks for |1|-graded sl(n) geometries"};
  app.require_subcommand(1);

  std::string format = "text";
  int n = 0, p = 0;
  std::string weight_text_arg;

  auto* pattern = app.add_subcommand("pattern", "p-dominant pattern of a dominant weight");
  bool pairs_flag = false;
  pattern->add_option("--n", n, "rank + 1");
  pattern->add_option("--p", p, "crossed node");
  pattern->add_option("--weight", weight_text_arg, "dominant rho-shifted tuple, e.g. \"3 2 1 0\"")->required();
  pattern->add_option("--format", format, "text, json or dot");
  pattern->add_flag("--pair", pairs_flag, "annotate every pair of distinct weights with its order");

  auto* orbit = app.add_subcommand("orbit", "p-dominant affine Weyl orbit");
  orbit->add_option("--n", n);
  orbit->add_option("--p", p);
  orbit->add_option("--weight", weight_text_arg)->required();
  orbit->add_option("--format", format, "text or json");

  auto* weight = app.add_subcommand("weight", "invariants of a single weight");
  weight->add_option("--n", n);
  weight->add_option("--p", p);
  weight->add_option("--weight", weight_text_arg)->required();
  weight->add_option("--format", format, "text or json");

  int k = 0, cap_flag = 0;
  std::string w_text = "0", variant_text = "holonomic", target_text = "invariant";
  auto* singular = app.add_subcommand("singular", "singular vectors in one layer of the induced module of a density");
  singular->add_option("--n", n)->required();
  singular->add_option("--p", p)->required();
  singular->add_option("--k", k, "layer degree")->required();
  singular->add_option("--w", w_text, "density weight (rational)");
  singular->add_option("--variant", variant_text, "holonomic or semiholonomic");
  singular->add_option("--target", target_text, "invariant or highest");
  singular->add_option("--cap", cap_flag, "degree cap (default 4, or VERMAKIT_DEGREE_CAP)");
  singular->add_option("--format", format, "text or json");

  long w_from = -3, w_to = 3;
  auto* scan = app.add_subcommand("scan", "singular vector dimensions over a range of density weights");
  scan->add_option("--n", n)->required();
  scan->add_option("--p", p)->required();
  scan->add_option("--k", k)->required();
  scan->add_option("--from", w_from, "first integer weight");
  scan->add_option("--to", w_to, "last integer weight");
  scan->add_option("--variant", variant_text);
  scan->add_option("--target", target_text);
  scan->add_option("--cap", cap_flag);
  scan->add_option("--format", format, "text or json");

  std::string vector_text, input_path;
  auto* cover = app.add_subcommand("cover", "decide whether a holonomic singular vector lifts to a semiholonomic one");
  cover->add_option("--n", n)->required();
  cover->add_option("--p", p)->required();
  cover->add_option("--w", w_text, "density weight");
  auto* vec_opt = cover->add_option("--vector", vector_text, "element text, e.g. \"y[3,1] y[4,2] - y[3,2] y[4,1]\"");
  auto* in_opt = cover->add_option("--input", input_path, "file holding the element text");
  vec_opt->excludes(in_opt);
  cover->add_option("--cap", cap_flag);
  cover->add_option("--format", format, "text or json");

  std::string f_text, e_text, labels_text, e1, e2, f1, f2;
  auto* translate = app.add_subcommand("translate", "translation screening against a finite-dimensional module");
  translate->add_option("--labels", labels_text, "Dynkin labels of W, e.g. \"1 0 0\"")->required();
  translate->add_option("--p", p);
  translate->add_option("--f", f_text, "source F");
  translate->add_option("--e", e_text, "source E");
  translate->add_option("--e1", e1);
  translate->add_option("--e2", e2);
  translate->add_option("--f1", f1);
  translate->add_option("--f2", f2);
  translate->add_option("--format", format, "text or json");

  std::string golden_dir = default_golden_dir();
  bool selftest_json = false;
  std::vector<int> only;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--golden-dir", golden_dir);
  selftest->add_flag("--json", selftest_json);
  selftest->add_option("--only", only, "criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (pattern->parsed()) {
      check_format(format, {"text", "json", "dot"});
      Weight w = read_weight(weight_text_arg, p);
      check_n(n, w);
      auto g = pattern_for(w);
      std::vector<PairAnnotation> pairs;
      if (pairs_flag || g.singularity > 0) pairs = distinct_weight_pairs(g);
      std::cout << (format == "json" ? pattern_json(g, pairs) : format == "dot" ? pattern_dot(g, pairs) : pattern_text(g, pairs));
    } else if (orbit->parsed()) {
      check_format(format, {"text", "json"});
      Weight w = read_weight(weight_text_arg, p);
      check_n(n, w);
      auto elements = affine_orbit_p_dominant(w);
      std::cout << (format == "json" ? orbit_json(elements) : orbit_text(elements));
    } else if (weight->parsed()) {
      check_format(format, {"text", "json"});
      Weight w = read_weight(weight_text_arg, p);
      check_n(n, w);
      std::cout << (format == "json" ? weight_json(w) : vermakit::weight_text(w));
    } else if (singular->parsed()) {
      check_format(format, {"text", "json"});
      int cap = degree_cap(cap_flag);
      if (k > cap) throw InputError("k = " + std::to_string(k) + " exceeds the degree cap " + std::to_string(cap));
      ParabolicData pd(n, p);
      Variant variant = parse_variant(variant_text);
      auto r = ModuleRealization::density(pd, parse_rational(w_text));
      std::size_t layer = layer_basis(k, *r, variant).size();
      std::cerr << "layer " << k << ": dimension " << layer << "\n";
      auto report = find_singular_vectors(k, r, variant, parse_singular_target(target_text));
      std::cout << (format == "json" ? singular_json(report, layer, n, p) : singular_text(report, layer));
    } else if (scan->parsed()) {
      check_format(format, {"text", "json"});
      int cap = degree_cap(cap_flag);
      if (k > cap) throw InputError("k = " + std::to_string(k) + " exceeds the degree cap " + std::to_string(cap));
      if (w_from > w_to) throw InputError("--from must not exceed --to");
      ParabolicData pd(n, p);
      Variant variant = parse_variant(variant_text);
      SingularTarget target = parse_singular_target(target_text);
      std::vector<Rational> ws;
      for (long w = w_from; w <= w_to; ++w) ws.emplace_back(w);
      auto entries = scan_critical_weights(k, pd, variant, ws, target);
      std::cout << (format == "json" ? scan_json(entries, k, n, p, variant, target) : scan_text(entries));
    } else if (cover->parsed()) {
      check_format(format, {"text", "json"});
      if (vector_text.empty() && input_path.empty()) throw InputError("cover needs --vector or --input");
      std::string text = input_path.empty() ? vector_text : read_vector_file(input_path);
      ParabolicData pd(n, p);
      auto r = ModuleRealization::density(pd, parse_rational(w_text));
      auto s = parse_element(text, r, Variant::Holonomic);
      int cap = degree_cap(cap_flag);
      if (s.max_degree() > cap) throw InputError("degree " + std::to_string(s.max_degree()) + " exceeds the degree cap");
      auto report = cover_check(s);
      std::cout << (format == "json" ? cover_json(s, report) : cover_text(s, report));
    } else if (translate->parsed()) {
      check_format(format, {"text", "json"});
      auto labels = parse_integer_list(labels_text);
      auto module = weight_support(labels, static_cast<int>(labels.size()) + 1);
      if (!e1.empty() || !e2.empty() || !f1.empty() || !f2.empty()) {
        if (e1.empty() || e2.empty() || f1.empty() || f2.empty()) throw InputError("one-way screening needs --e1 --e2 --f1 --f2");
        std::optional<std::pair<Weight, Weight>> sources;
        if (!e_text.empty() && !f_text.empty()) sources.emplace(read_weight(e_text, p), read_weight(f_text, p));
        auto v = screen_one_way(read_weight(e1, p), read_weight(e2, p), read_weight(f1, p), read_weight(f2, p), module, sources);
        std::cout << (format == "json" ? one_way_json(v) : one_way_text(v));
      } else {
        if (f_text.empty() || e_text.empty()) throw InputError("translate needs --f and --e (or the one-way quadruple)");
        auto screen = screen_translation(read_weight(f_text, p), read_weight(e_text, p), module);
        std::cout << (format == "json" ? translate_json(screen) : translate_text(screen));
      }
    } else if (selftest->parsed()) {
      auto results = run_acceptance(golden_dir, only);
      std::cout << (selftest_json ? acceptance_json(results) : acceptance_text(results));
      return all_passed(results) ? kExitOk : kExitInternal;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ContractError& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
