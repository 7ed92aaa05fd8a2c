#include "vermakit/weights.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "vermakit/errors.hpp"

namespace vermakit {

Weight::Weight(std::vector<long> tuple, int p) : tuple_(std::move(tuple)), p_(p) {
  if (tuple_.size() < 2) throw InputError("a weight needs at least two entries");
  if (p_ < 1 || p_ >= n()) {
    throw InputError("block cut p = " + std::to_string(p_) + " must lie strictly inside a tuple of length " +
                     std::to_string(n()));
  }
}

bool Weight::is_normalized() const { return *std::min_element(tuple_.begin(), tuple_.end()) == 0; }

Weight Weight::normalized() const {
  long m = *std::min_element(tuple_.begin(), tuple_.end());
  std::vector<long> t = tuple_;
  for (auto& x : t) x -= m;
  return Weight(std::move(t), p_);
}

std::string Weight::to_string() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i > 0) out += ' ';
    if (i == p_) out += "| ";
    out += std::to_string(tuple_[i]);
  }
  return out;
}

std::string Weight::label() const {
  bool wide = std::any_of(tuple_.begin(), tuple_.end(), [](long x) { return x < 0 || x > 9; });
  std::string out = "(";
  for (int i = 0; i < n(); ++i) {
    if (i == p_) {
      out += '|';
    } else if (i > 0 && wide) {
      out += ',';
    }
    out += std::to_string(tuple_[i]);
  }
  return out + ")";
}

std::vector<long> parse_integer_list(std::string_view text) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != ',') ++end;
    std::string_view token = text.substr(pos, end - pos);
    long value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError("expected an integer, got '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

Weight parse_weight(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw InputError("weight '" + std::string(text) + "' has no block cut '|'");
  if (text.find('|', bar + 1) != std::string_view::npos) {
    throw InputError("weight '" + std::string(text) + "' has more than one '|'");
  }
  auto left = parse_integer_list(text.substr(0, bar));
  auto right = parse_integer_list(text.substr(bar + 1));
  if (left.empty() || right.empty()) throw InputError("both blocks of weight '" + std::string(text) + "' must be nonempty");
  int p = static_cast<int>(left.size());
  left.insert(left.end(), right.begin(), right.end());
  return Weight(std::move(left), p);
}

Weight dynkin_to_tuple(const std::vector<long>& labels, int p) {
  std::vector<long> t(labels.size() + 1, 0);
  for (std::size_t i = labels.size(); i-- > 0;) t[i] = t[i + 1] + labels[i] + 1;
  return Weight(std::move(t), p).normalized();
}

std::vector<long> tuple_to_dynkin(const Weight& w) {
  std::vector<long> labels(w.n() - 1);
  for (int i = 0; i + 1 < w.n(); ++i) labels[i] = w[i] - w[i + 1] - 1;
  return labels;
}

bool is_p_dominant(const Weight& w) {
  for (int i = 0; i + 1 < w.n(); ++i) {
    if (i + 1 == w.p()) continue;
    if (w[i] <= w[i + 1]) return false;
  }
  return true;
}

bool is_g_dominant(const Weight& w) {
  for (int i = 0; i + 1 < w.n(); ++i) {
    if (w[i] <= w[i + 1]) return false;
  }
  return true;
}

Rational e_action(const Weight& w) {
  long top = 0;
  long bottom = 0;
  for (int i = 0; i < w.n(); ++i) (i < w.p() ? top : bottom) += w[i];
  long q = w.n() - w.p();
  return make_rational(q * top - static_cast<long>(w.p()) * bottom, w.n());
}

InfCharKey inf_char_key(const Weight& w) {
  auto t = w.normalized().tuple();
  std::sort(t.begin(), t.end(), std::greater<>());
  return {std::move(t)};
}

bool same_inf_char(const Weight& u, const Weight& v) {
  if (u.n() != v.n() || u.p() != v.p()) {
    throw InputError("weights " + u.label() + " and " + v.label() + " live on different parabolics");
  }
  return inf_char_key(u) == inf_char_key(v);
}

int singularity_level(const Weight& w) {
  std::set<long> distinct(w.tuple().begin(), w.tuple().end());
  return w.n() - static_cast<int>(distinct.size());
}

}  // namespace vermakit
