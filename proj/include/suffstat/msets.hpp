#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "suffstat/rational.hpp"
#include "suffstat/value.hpp"

namespace suffstat {

// Finite ordered set of distinct outcomes. Elements are kept in ascending
// canonical order, so carriers double as the deterministic iteration order
// for every enumerator and channel in the library.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<Value> elems);
  static Carrier of_labels(const std::vector<std::string>& labels);
  // {1,...,k} as integer values.
  static Carrier of_range(long long lo, long long hi);

  const std::vector<Value>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const Value& v) const;
  std::size_t index_of(const Value& v) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.elems_ == b.elems_;
  }

 private:
  std::vector<Value> elems_;
};

// Finite multiset: outcome -> positive multiplicity.
class Multiset {
 public:
  Multiset() = default;

  static Multiset from_counts(const std::map<Value, long long>& counts);
  static Multiset from_value(const Value& v);
  // {label: count, ...} convenience.
  static Multiset of_labels(const std::vector<std::pair<std::string, long long>>& entries);

  void add(const Value& x, long long n = 1);
  long long count(const Value& x) const;  // 0 when absent
  const std::map<Value, long long>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  Value to_value() const;
  std::string to_text() const { return to_value().to_text(); }

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.counts_ == b.counts_;
  }
  friend bool operator!=(const Multiset& a, const Multiset& b) { return !(a == b); }
  friend bool operator<(const Multiset& a, const Multiset& b) {
    return a.to_value() < b.to_value();
  }

 private:
  std::map<Value, long long> counts_;
};

// Total number of elements counted with multiplicity.
long long mset_size(const Multiset& phi);

// Product of the factorials of the multiplicities.
Int mset_facto(const Multiset& phi);

// Multinomial coefficient size! / facto: the number of sequences that
// accumulate to phi.
Int mset_coefm(const Multiset& phi);

// n! / (facto(phi) * (n - size(phi))!). Requires n >= size(phi).
Int mset_binom(long long n, const Multiset& phi);

// Pushforward along f: sums multiplicities over fibers.
Multiset mset_map(const std::function<Value(const Value&)>& f, const Multiset& phi);

// Collapses a sequence to the multiset of its entries.
Multiset acc(const std::vector<Value>& seq);

// All multisets over x of size exactly k, ascending canonical order.
std::vector<Multiset> enum_msets(const Carrier& x, long long k);

// All sequences of length size(phi) accumulating to phi, lexicographic order;
// there are mset_coefm(phi) of them.
std::vector<std::vector<Value>> enum_acc_fiber(const Multiset& phi);

// All |X|! bijections X -> X in lexicographic order of their image rows:
// row[i] is the image of x.elems()[i].
std::vector<std::vector<Value>> enum_perms(const Carrier& x);

// The bijection given by an enum_perms row, as a callable on carrier elements.
std::function<Value(const Value&)> perm_fn(const Carrier& x, const std::vector<Value>& row);

}  // namespace suffstat
