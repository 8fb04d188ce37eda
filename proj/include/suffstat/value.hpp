#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace suffstat {

// Canonical outcome value: an integer, a label, a tuple of values, or a
// multiset of values. Everything a distribution can range over in this
// library is a Value, so distributions over sequences, multisets,
// partitions and joint pairs all share one representation and one total
// order.
//
// The order is chosen so that the enumeration order of multisets of a given
// size (and of integer partitions of a given sum) coincides with ascending
// Value order: multisets compare by their count vectors along ascending
// keys, with a larger count at the first differing key sorting first.
// Sorted containers keyed by Value therefore iterate in canonical display
// order.
class Value {
 public:
  enum class Kind { Int, Label, Tuple, MSet };

  Value() : kind_(Kind::Int), int_(0) {}

  static Value of_int(long long i);
  static Value label(std::string name);
  static Value tuple(std::vector<Value> items);
  // Normalizes: merges duplicate keys, drops zero counts, sorts ascending.
  // Negative resulting counts are an error.
  static Value mset(std::vector<std::pair<Value, long long>> entries);

  Kind kind() const { return kind_; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_label() const { return kind_ == Kind::Label; }
  bool is_tuple() const { return kind_ == Kind::Tuple; }
  bool is_mset() const { return kind_ == Kind::MSet; }

  long long as_int() const;
  const std::string& as_label() const;
  // Tuple components, or multiset keys in ascending order.
  const std::vector<Value>& items() const;
  // Multiset multiplicities, parallel to items().
  const std::vector<long long>& counts() const;

  // Canonical text form: 12, abc, (a,b), {a:3,b:1}.
  std::string to_text() const;

  // Three-way comparison defining the canonical total order.
  friend int compare(const Value& a, const Value& b);

  friend bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Value& a, const Value& b) { return compare(a, b) != 0; }
  friend bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Value& a, const Value& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Value& a, const Value& b) { return compare(a, b) >= 0; }

 private:
  Kind kind_;
  long long int_ = 0;
  std::string label_;
  std::vector<Value> items_;
  std::vector<long long> counts_;
};

// Convenience for building pair outcomes (x,y).
Value pair_value(const Value& x, const Value& y);

}  // namespace suffstat
