#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "vermakit/rational.hpp"

namespace vermakit {

/// A weight lambda + rho of sl(n) written as an integer n-tuple with a block
/// cut after position p. Tuples differing by a common constant describe the
/// same weight; the canonical representative has minimum entry 0.
class Weight {
 public:
  Weight(std::vector<long> tuple, int p);

  const std::vector<long>& tuple() const { return tuple_; }
  int n() const { return static_cast<int>(tuple_.size()); }
  int p() const { return p_; }
  long operator[](std::size_t i) const { return tuple_[i]; }

  bool is_normalized() const;
  Weight normalized() const;

  /// Text form "3 2 | 1 0".
  std::string to_string() const;
  /// Compact display form "(32|10)" used in diagrams; entries are separated
  /// by commas when any entry has more than one character.
  std::string label() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<long> tuple_;
  int p_;
};

/// Parses "3 2 | 1 0". Exactly one '|' which must sit strictly inside the
/// tuple. Throws InputError otherwise.
Weight parse_weight(std::string_view text);

/// Parses a whitespace-separated integer list, e.g. "3 2 1 0".
std::vector<long> parse_integer_list(std::string_view text);

/// Infinitesimal-character key: the sorted multiset of normalised entries.
struct InfCharKey {
  std::vector<long> entries;
  friend bool operator==(const InfCharKey&, const InfCharKey&) = default;
  friend auto operator<=>(const InfCharKey&, const InfCharKey&) = default;
};

/// Dynkin labels of lambda -> rho-shifted tuple with a_i - a_{i+1} = label_i + 1.
Weight dynkin_to_tuple(const std::vector<long>& labels, int p);
/// Inverse of dynkin_to_tuple: a_i - a_{i+1} - 1.
std::vector<long> tuple_to_dynkin(const Weight& w);

bool is_p_dominant(const Weight& w);
bool is_g_dominant(const Weight& w);

/// Scalar by which the grading element acts:
/// (q/n) sum_{i<=p} a_i - (p/n) sum_{i>p} a_i.
Rational e_action(const Weight& w);

InfCharKey inf_char_key(const Weight& w);

/// Throws InputError on mismatched n or p.
bool same_inf_char(const Weight& u, const Weight& v);

/// n minus the number of distinct entries.
int singularity_level(const Weight& w);

}  // namespace vermakit
