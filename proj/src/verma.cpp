#include "vermakit/verma.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "vermakit/errors.hpp"

namespace vermakit {

std::string to_string(Variant v) { return v == Variant::Holonomic ? "holonomic" : "semiholonomic"; }

Variant parse_variant(std::string_view text) {
  if (text == "holonomic") return Variant::Holonomic;
  if (text == "semiholonomic") return Variant::Semiholonomic;
  throw InputError("unknown variant '" + std::string(text) + "' (expected holonomic or semiholonomic)");
}

// ---------------------------------------------------------------------------
// ModuleRealization

ModuleRealization::ModuleRealization(const ParabolicData& pd, std::string name, std::size_t dimension,
                                     const Rational& w, std::map<BasisElement, Matrix> action)
    : pd_(pd), name_(std::move(name)), dimension_(dimension), weight_(w), action_(std::move(action)) {}

const Matrix& ModuleRealization::action(const BasisElement& h) const {
  auto it = action_.find(h);
  if (it == action_.end()) throw ContractError("no g_0 action registered for " + h.name());
  return it->second;
}

Matrix ModuleRealization::action(const LieElement& h) const {
  Matrix out(dimension_, dimension_);
  for (const auto& [b, c] : h.terms()) out = out + c * action(b);
  return out;
}

RealizationPtr ModuleRealization::from_matrices(const ParabolicData& pd, std::string name, std::size_t dimension,
                                                const Rational& w, std::map<BasisElement, Matrix> action) {
  if (dimension == 0) throw ContractError("module realization must have positive dimension");
  auto g0 = pd.basis_of_degree(0);
  for (const auto& h : g0) {
    auto it = action.find(h);
    if (it == action.end()) throw ContractError("realization " + name + " lacks a matrix for " + h.name());
    if (it->second.rows() != dimension || it->second.cols() != dimension) {
      throw ContractError("realization " + name + ": matrix of " + h.name() + " has the wrong size");
    }
  }
  if (action.size() != g0.size()) throw ContractError("realization " + name + " has matrices for non-g_0 elements");
  std::shared_ptr<ModuleRealization> r(new ModuleRealization(pd, std::move(name), dimension, w, std::move(action)));
  for (const auto& a : g0) {
    for (const auto& b : g0) {
      if (!(a < b)) continue;
      Matrix lhs = r->action(bracket(a, b, pd));
      Matrix rhs = r->action(a) * r->action(b) - r->action(b) * r->action(a);
      if (!(lhs == rhs)) {
        throw ContractError("realization " + r->name() + " is not a representation: fails on [" + a.name() + ", " +
                            b.name() + "]");
      }
    }
  }
  return r;
}

RealizationPtr ModuleRealization::density(const ParabolicData& pd, const Rational& w) {
  std::map<BasisElement, Matrix> action;
  for (const auto& h : pd.basis_of_degree(0)) {
    Matrix m(1, 1);
    m(0, 0) = w * density_functional(pd, LieElement(h));
    action.emplace(h, std::move(m));
  }
  return from_matrices(pd, "R[" + vermakit::to_string(w) + "]", 1, w, std::move(action));
}

namespace {

std::string factor_name(ModuleRealization::Factor f) {
  switch (f) {
    case ModuleRealization::Factor::BlockOneStandard: return "A";
    case ModuleRealization::Factor::BlockOneDual: return "A*";
    case ModuleRealization::Factor::BlockTwoStandard: return "B";
    case ModuleRealization::Factor::BlockTwoDual: return "B*";
  }
  return "?";
}

// Trace-free part of a diagonal block of h, or minus its transpose.
Matrix factor_matrix(const ParabolicData& pd, const Matrix& h, ModuleRealization::Factor f) {
  bool first = f == ModuleRealization::Factor::BlockOneStandard || f == ModuleRealization::Factor::BlockOneDual;
  bool dual = f == ModuleRealization::Factor::BlockOneDual || f == ModuleRealization::Factor::BlockTwoDual;
  std::size_t off = first ? 0 : pd.p();
  std::size_t d = first ? pd.p() : pd.q();
  Matrix m(d, d);
  Rational tr = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = h(off + i, off + j);
    tr += m(i, i);
  }
  Rational shift = tr / Rational(static_cast<long>(d));
  for (std::size_t i = 0; i < d; ++i) m(i, i) -= shift;
  return dual ? Rational(-1) * m.transpose() : m;
}

// Index tuples over {0..d-1} of length k: non-decreasing (symmetric) or
// strictly increasing (antisymmetric).
void sorted_tuples(std::size_t d, std::size_t k, bool strict, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  std::size_t start = cur.empty() ? 0 : cur.back() + (strict ? 1 : 0);
  for (std::size_t x = start; x < d; ++x) {
    cur.push_back(x);
    sorted_tuples(d, k, strict, cur, out);
    cur.pop_back();
  }
}

std::size_t flat_index(const std::vector<std::size_t>& t, std::size_t d) {
  std::size_t idx = 0;
  for (std::size_t x : t) idx = idx * d + x;
  return idx;
}

}  // namespace

RealizationPtr ModuleRealization::tensor(const ParabolicData& pd, const std::vector<Factor>& factors,
                                         Symmetry symmetry, const Rational& w) {
  if (factors.empty()) return density(pd, w);
  if (symmetry != Symmetry::None &&
      !std::all_of(factors.begin(), factors.end(), [&](Factor f) { return f == factors.front(); })) {
    throw InputError("symmetric or antisymmetric powers need identical tensor factors");
  }

  std::string name;
  if (symmetry != Symmetry::None) {
    name = (symmetry == Symmetry::Symmetric ? "S^" : "L^") + std::to_string(factors.size()) + "(" +
           factor_name(factors.front()) + ")";
  } else {
    for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? " x " : "") + factor_name(factors[i]);
  }
  name += "[" + vermakit::to_string(w) + "]";

  std::size_t k = factors.size();
  std::size_t d = 0;  // only meaningful for symmetric powers
  std::vector<std::vector<std::size_t>> sub_basis;
  if (symmetry != Symmetry::None) {
    bool first = factors.front() == Factor::BlockOneStandard || factors.front() == Factor::BlockOneDual;
    d = static_cast<std::size_t>(first ? pd.p() : pd.q());
    std::vector<std::size_t> cur;
    sorted_tuples(d, k, symmetry == Symmetry::Antisymmetric, cur, sub_basis);
    if (sub_basis.empty()) throw InputError("antisymmetric power " + name + " is zero");
  }

  std::map<BasisElement, Matrix> action;
  for (const auto& h : pd.basis_of_degree(0)) {
    Matrix hm = pd.to_matrix(LieElement(h));
    std::vector<Matrix> fm;
    for (auto f : factors) fm.push_back(factor_matrix(pd, hm, f));
    // Derivation on the full tensor product.
    std::size_t full = 1;
    for (const auto& m : fm) full *= m.rows();
    Matrix t(full, full);
    for (std::size_t s = 0; s < k; ++s) {
      Matrix term = Matrix::identity(1);
      for (std::size_t u = 0; u < k; ++u) term = kron(term, u == s ? fm[u] : Matrix::identity(fm[u].rows()));
      t = t + term;
    }
    Matrix restricted;
    if (symmetry == Symmetry::None) {
      restricted = std::move(t);
    } else {
      restricted = Matrix(sub_basis.size(), sub_basis.size());
      std::map<std::size_t, std::size_t> position;
      for (std::size_t b = 0; b < sub_basis.size(); ++b) position[flat_index(sub_basis[b], d)] = b;
      for (std::size_t b = 0; b < sub_basis.size(); ++b) {
        // Embed the basis vector as a (signed) sum over its rearrangements.
        std::vector<Rational> v(full);
        std::vector<std::size_t> perm(k);
        for (std::size_t i = 0; i < k; ++i) perm[i] = i;
        std::vector<std::size_t> seen;
        do {
          std::vector<std::size_t> tup(k);
          for (std::size_t i = 0; i < k; ++i) tup[i] = sub_basis[b][perm[i]];
          std::size_t idx = flat_index(tup, d);
          if (std::find(seen.begin(), seen.end(), idx) != seen.end()) continue;
          seen.push_back(idx);
          int sign = 1;
          if (symmetry == Symmetry::Antisymmetric) {
            for (std::size_t i = 0; i < k; ++i) {
              for (std::size_t j = i + 1; j < k; ++j) {
                if (perm[i] > perm[j]) sign = -sign;
              }
            }
          }
          v[idx] = sign;
        } while (std::next_permutation(perm.begin(), perm.end()));
        auto image = t.apply(v);
        for (const auto& [flat, row] : position) restricted(row, b) = image[flat];
      }
    }
    Rational central = w * density_functional(pd, LieElement(h));
    if (central != 0) restricted = restricted + central * Matrix::identity(restricted.rows());
    action.emplace(h, std::move(restricted));
  }
  std::size_t dim = action.begin()->second.rows();
  return from_matrices(pd, std::move(name), dim, w, std::move(action));
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(RealizationPtr realization, Variant variant)
    : realization_(std::move(realization)), variant_(variant) {
  if (!realization_) throw ContractError("algebra element without a module realization");
}

AlgebraElement AlgebraElement::generator(RealizationPtr realization, Variant variant, int index) {
  return monomial(std::move(realization), variant, {}, index);
}

AlgebraElement AlgebraElement::monomial(RealizationPtr realization, Variant variant, Word word, int index,
                                        const Rational& coefficient) {
  if (index < 0 || static_cast<std::size_t>(index) >= realization->dimension()) {
    throw InputError("module basis index e" + std::to_string(index) + " out of range for " + realization->name());
  }
  for (const auto& b : word) realization->parabolic().validate(b);
  AlgebraElement e(std::move(realization), variant);
  e.add({std::move(word), index}, coefficient);
  return e;
}

Rational AlgebraElement::coefficient(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const TermKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool AlgebraElement::is_normal() const {
  for (const auto& [key, c] : terms_) {
    for (const auto& b : key.word) {
      if (b.degree != -1) return false;
    }
    if (variant_ == Variant::Holonomic && !std::is_sorted(key.word.begin(), key.word.end())) return false;
  }
  return true;
}

int AlgebraElement::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  std::size_t len = terms_.begin()->first.word.size();
  for (const auto& [key, c] : terms_) {
    if (key.word.size() != len) return -1;
  }
  return static_cast<int>(len);
}

int AlgebraElement::max_degree() const {
  std::size_t m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, key.word.size());
  return static_cast<int>(m);
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const {
  if (variant_ != other.variant_) {
    throw ContractError("cannot combine " + vermakit::to_string(variant_) + " and " +
                        vermakit::to_string(other.variant_) + " elements");
  }
  if (realization_ != other.realization_ && realization_->name() != other.realization_->name()) {
    throw ContractError("cannot combine elements of " + realization_->name() + " and " +
                        other.realization_->name());
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

AlgebraElement operator*(const Rational& s, const AlgebraElement& a) {
  AlgebraElement out(a.realization_, a.variant_);
  if (s == 0) return out;
  for (const auto& [key, c] : a.terms_) out.terms_.emplace(key, s * c);
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.variant_ == b.variant_ && a.realization_->name() == b.realization_->name() && a.terms_ == b.terms_;
}

std::string letter_name(const BasisElement& b) {
  if (b.is_coroot()) return b.name();
  std::string head = b.degree == -1 ? "y" : "E";
  return head + "[" + std::to_string(b.i) + "," + std::to_string(b.j) + "]";
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  bool show_index = realization_->dimension() > 1;
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (key.word.empty()) {
      out += vermakit::to_string(mag);
    } else {
      if (mag != 1) out += vermakit::to_string(mag) + " * ";
      for (std::size_t i = 0; i < key.word.size(); ++i) {
        if (i) out += ' ';
        out += letter_name(key.word[i]);
      }
    }
    if (show_index) out += " | e" + std::to_string(key.index);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

struct PendingTerm {
  Word word;
  int index;
  Rational coefficient;
};

// Positions where a rule applies: a p-letter followed by a g_-1 letter, or
// a trailing p-letter.
std::vector<std::size_t> reducible_positions(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].degree < 0) continue;
    if (i + 1 == w.size() || w[i + 1].degree == -1) out.push_back(i);
  }
  return out;
}

void rewrite_at(const PendingTerm& t, std::size_t i, const ModuleRealization& r, std::vector<PendingTerm>& stack) {
  const ParabolicData& pd = r.parabolic();
  const Word& w = t.word;
  if (i + 1 == w.size()) {
    if (w[i].degree == 1) return;  // g_1 kills the generator
    const Matrix& m = r.action(w[i]);
    Word shorter(w.begin(), w.end() - 1);
    for (std::size_t b = 0; b < r.dimension(); ++b) {
      const Rational& x = m(b, static_cast<std::size_t>(t.index));
      if (x != 0) stack.push_back({shorter, static_cast<int>(b), t.coefficient * x});
    }
    return;
  }
  Word swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  stack.push_back({std::move(swapped), t.index, t.coefficient});
  const LieElement commutator = bracket(w[i], w[i + 1], pd);
  for (const auto& [letter, c] : commutator.terms()) {
    Word replaced;
    replaced.reserve(w.size() - 1);
    replaced.insert(replaced.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    replaced.push_back(letter);
    replaced.insert(replaced.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
    stack.push_back({std::move(replaced), t.index, t.coefficient * c});
  }
}

template <typename Choose>
AlgebraElement rewrite(const AlgebraElement& e, Choose choose) {
  const ModuleRealization& r = *e.realization();
  AlgebraElement out(e.realization(), e.variant());
  std::vector<PendingTerm> stack;
  for (const auto& [key, c] : e.terms()) stack.push_back({key.word, key.index, c});
  while (!stack.empty()) {
    PendingTerm t = std::move(stack.back());
    stack.pop_back();
    auto positions = reducible_positions(t.word);
    if (positions.empty()) {
      if (e.variant() == Variant::Holonomic) std::sort(t.word.begin(), t.word.end());
      out.add({std::move(t.word), t.index}, t.coefficient);
      continue;
    }
    rewrite_at(t, choose(positions), r, stack);
  }
  return out;
}

}  // namespace

AlgebraElement normal_form(const AlgebraElement& e) {
  return rewrite(e, [](const std::vector<std::size_t>& positions) { return positions.back(); });
}

AlgebraElement normal_form_randomized(const AlgebraElement& e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return rewrite(e, [&rng](const std::vector<std::size_t>& positions) {
    std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
    return positions[pick(rng)];
  });
}

AlgebraElement act(const BasisElement& x, const AlgebraElement& e) {
  e.parabolic().validate(x);
  AlgebraElement prefixed(e.realization(), e.variant());
  for (const auto& [key, c] : e.terms()) {
    Word w;
    w.reserve(key.word.size() + 1);
    w.push_back(x);
    w.insert(w.end(), key.word.begin(), key.word.end());
    prefixed.add({std::move(w), key.index}, c);
  }
  return normal_form(prefixed);
}

AlgebraElement act(const LieElement& x, const AlgebraElement& e) {
  AlgebraElement out(e.realization(), e.variant());
  for (const auto& [b, c] : x.terms()) out += c * act(b, e);
  return out;
}

AlgebraElement symmetrize_projection(const AlgebraElement& e) {
  if (e.variant() != Variant::Semiholonomic) throw ContractError("symmetrize_projection expects a semiholonomic element");
  if (!e.is_normal()) throw ContractError("symmetrize_projection expects an element in normal form");
  AlgebraElement out(e.realization(), Variant::Holonomic);
  for (const auto& [key, c] : e.terms()) {
    Word w = key.word;
    std::sort(w.begin(), w.end());
    out.add({std::move(w), key.index}, c);
  }
  return out;
}

AlgebraElement split2(const AlgebraElement& e) {
  if (e.variant() != Variant::Holonomic) throw ContractError("split2 expects a holonomic element");
  if (!e.is_normal()) throw ContractError("split2 expects an element in normal form");
  if (e.max_degree() > 2) throw ContractError("split2 is defined on filtration degree <= 2 only");
  const ParabolicData& pd = e.parabolic();
  AlgebraElement out(e.realization(), Variant::Semiholonomic);
  const Rational half = make_rational(1, 2);
  for (const auto& [key, c] : e.terms()) {
    if (key.word.size() < 2) {
      out.add(key, c);
      continue;
    }
    const auto& x = key.word[0];
    const auto& y = key.word[1];
    out.add({{x, y}, key.index}, half * c);
    out.add({{y, x}, key.index}, half * c);
    const LieElement commutator = bracket(x, y, pd);
    for (const auto& [letter, cl] : commutator.terms()) out.add({{letter}, key.index}, half * c * cl);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Layers and coordinates

namespace {

void layer_words(const std::vector<BasisElement>& alphabet, std::size_t k, bool sorted, Word& cur,
                 std::size_t start, std::vector<Word>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t a = sorted ? start : 0; a < alphabet.size(); ++a) {
    cur.push_back(alphabet[a]);
    layer_words(alphabet, k, sorted, cur, a, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TermKey> layer_basis(int k, const ModuleRealization& r, Variant variant) {
  if (k < 0) throw ContractError("layer degree must be non-negative");
  auto alphabet = r.parabolic().basis_of_degree(-1);
  std::vector<Word> words;
  Word cur;
  layer_words(alphabet, static_cast<std::size_t>(k), variant == Variant::Holonomic, cur, 0, words);
  std::vector<TermKey> out;
  out.reserve(words.size() * r.dimension());
  for (const auto& w : words) {
    for (std::size_t b = 0; b < r.dimension(); ++b) out.push_back({w, static_cast<int>(b)});
  }
  return out;
}

std::vector<Rational> coordinates(const AlgebraElement& e, std::span<const TermKey> basis) {
  std::vector<Rational> out(basis.size());
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i] = e.coefficient(basis[i]);
    if (out[i] != 0) ++found;
  }
  if (found != e.terms().size()) throw ContractError("element has terms outside the requested layer basis");
  return out;
}

AlgebraElement from_coordinates(RealizationPtr realization, Variant variant, std::span<const TermKey> basis,
                                std::span<const Rational> coords) {
  if (coords.size() != basis.size()) throw ContractError("coordinate vector does not match the basis size");
  AlgebraElement out(std::move(realization), variant);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], coords[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, RealizationPtr r, Variant v) : text_(text), r_(std::move(r)), variant_(v) {}

  AlgebraElement parse() {
    AlgebraElement out(r_, variant_);
    skip_ws();
    if (text_.substr(pos_) == "0") return out;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) {
        if (first) fail("empty element");
        break;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      parse_term(out, sign);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("cannot parse element at offset " + std::to_string(pos_) + ": " + msg + " in '" +
                     std::string(text_) + "'");
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (!at_end() && peek() == '-') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  BasisElement parse_letter() {
    const ParabolicData& pd = r_->parabolic();
    char head = peek();
    ++pos_;
    expect('[');
    if (head == 'H') {
      long i = parse_int();
      expect(']');
      return pd.h(static_cast<int>(i));
    }
    long i = parse_int();
    expect(',');
    long j = parse_int();
    expect(']');
    BasisElement b = pd.e(static_cast<int>(i), static_cast<int>(j));
    if (head == 'y' && b.degree != -1) fail("y[" + std::to_string(i) + "," + std::to_string(j) + "] is not in g_-1");
    return b;
  }

  void parse_term(AlgebraElement& out, int sign) {
    skip_ws();
    Rational coeff = 1;
    bool have_coeff = false;
    Word word;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      coeff = parse_rational(text_.substr(start, pos_ - start));
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (!at_end() && peek() == '1' &&
            (pos_ + 1 == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
          ++pos_;  // explicit empty word
        } else {
          parse_letters(word);
          if (word.empty()) fail("expected letters after '*'");
        }
      }
    } else {
      parse_letters(word);
      if (word.empty()) fail("expected a coefficient or a letter");
    }
    (void)have_coeff;
    skip_ws();
    int index = 0;
    if (!at_end() && peek() == '|') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'e') fail("expected module basis index 'e<k>'");
      ++pos_;
      long idx = parse_int();
      if (idx < 0 || static_cast<std::size_t>(idx) >= r_->dimension()) fail("module basis index out of range");
      index = static_cast<int>(idx);
    } else if (r_->dimension() > 1) {
      fail("module basis index '| e<k>' required for " + r_->name());
    }
    out.add({std::move(word), index}, Rational(sign) * coeff);
  }

  void parse_letters(Word& word) {
    while (true) {
      skip_ws();
      if (at_end()) return;
      char c = peek();
      if (c != 'y' && c != 'E' && c != 'H') return;
      word.push_back(parse_letter());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RealizationPtr r_;
  Variant variant_;
};

}  // namespace

AlgebraElement parse_element(std::string_view text, RealizationPtr realization, Variant variant) {
  return ElementParser(text, std::move(realization), variant).parse();
}

}  // namespace vermakit
