#pragma once

#include <functional>
#include <map>
#include <vector>

#include "suffstat/rational.hpp"
#include "suffstat/value.hpp"

namespace suffstat {

// Finite-support probability distribution with exact rational weights.
// Invariants enforced at construction: weights are in (0,1], zero weights
// are dropped, and the total is exactly 1. Two distributions are equal iff
// their weight maps are equal.
class Dist {
 public:
  Dist() = default;

  static Dist from_map(std::map<Value, Rat> weights);
  static Dist from_terms(const std::vector<std::pair<Value, Rat>>& terms);

  const std::map<Value, Rat>& weights() const { return w_; }
  Rat prob(const Value& x) const;  // 0 when outside the support
  std::vector<Value> support() const;

  friend bool operator==(const Dist& a, const Dist& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Dist& a, const Dist& b) { return !(a == b); }
  friend bool operator<(const Dist& a, const Dist& b) { return a.w_ < b.w_; }

 private:
  std::map<Value, Rat> w_;
};

// Fuzzy predicate: a total map from an explicit finite carrier into [0,1].
class Predicate {
 public:
  Predicate() = default;

  static Predicate from_map(std::map<Value, Rat> values);
  static Predicate constant(const std::vector<Value>& carrier, const Rat& r);
  // Indicator of y; y must be in the carrier.
  static Predicate point(const std::vector<Value>& carrier, const Value& y);

  const std::map<Value, Rat>& values() const { return vals_; }
  const Rat& at(const Value& x) const;  // error when x is outside the carrier
  std::vector<Value> carrier() const;

  // Pointwise product; carriers must coincide.
  Predicate conj(const Predicate& other) const;

 private:
  std::map<Value, Rat> vals_;
};

// Point mass 1|x>.
Dist dirac(const Value& x);

// Pushforward along f, summing weights over fibers.
Dist dmap(const std::function<Value(const Value&)>& f, const Dist& omega);

// Product distribution over pairs (x,y).
Dist dtensor(const Dist& omega, const Dist& rho);

// Projection of a distribution over tuples onto component `index` (1-based).
Dist marginal(const Dist& tau, std::size_t index);

// Expected value of p under omega; p must cover the support of omega.
Rat validity(const Dist& omega, const Predicate& p);

// Conditioning: omega(x) p(x) / (omega |= p). Error when the validity is 0.
Dist update(const Dist& omega, const Predicate& p);

// Uniform distribution on a nonempty duplicate-free list of outcomes.
Dist uniform_dist(const std::vector<Value>& outcomes);

}  // namespace suffstat
