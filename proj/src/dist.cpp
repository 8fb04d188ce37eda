#include "suffstat/dist.hpp"

#include <algorithm>

namespace suffstat {

Dist Dist::from_map(std::map<Value, Rat> weights) {
  Rat total = 0;
  for (auto it = weights.begin(); it != weights.end();) {
    if (it->second == 0) {
      it = weights.erase(it);
      continue;
    }
    if (it->second < 0) {
      throw Error("Dist: negative weight " + format_rat(it->second) + " at " +
                  it->first.to_text());
    }
    total += it->second;
    ++it;
  }
  if (total != 1) {
    throw Error("Dist: weights sum to " + format_rat(total) + ", not 1");
  }
  Dist d;
  d.w_ = std::move(weights);
  return d;
}

Dist Dist::from_terms(const std::vector<std::pair<Value, Rat>>& terms) {
  std::map<Value, Rat> weights;
  for (const auto& [x, r] : terms) {
    weights[x] += r;
  }
  return from_map(std::move(weights));
}

Rat Dist::prob(const Value& x) const {
  const auto it = w_.find(x);
  return it == w_.end() ? Rat(0) : it->second;
}

std::vector<Value> Dist::support() const {
  std::vector<Value> out;
  out.reserve(w_.size());
  for (const auto& [x, r] : w_) {
    out.push_back(x);
  }
  return out;
}

Predicate Predicate::from_map(std::map<Value, Rat> values) {
  for (const auto& [x, r] : values) {
    if (r < 0 || r > 1) {
      throw Error("Predicate: value " + format_rat(r) + " at " + x.to_text() +
                  " outside [0,1]");
    }
  }
  Predicate p;
  p.vals_ = std::move(values);
  return p;
}

Predicate Predicate::constant(const std::vector<Value>& carrier, const Rat& r) {
  std::map<Value, Rat> values;
  for (const auto& x : carrier) {
    values[x] = r;
  }
  return from_map(std::move(values));
}

Predicate Predicate::point(const std::vector<Value>& carrier, const Value& y) {
  bool found = false;
  std::map<Value, Rat> values;
  for (const auto& x : carrier) {
    const bool hit = x == y;
    values[x] = hit ? 1 : 0;
    found = found || hit;
  }
  if (!found) {
    throw Error("Predicate::point: " + y.to_text() + " not in carrier");
  }
  return from_map(std::move(values));
}

const Rat& Predicate::at(const Value& x) const {
  const auto it = vals_.find(x);
  if (it == vals_.end()) {
    throw Error("Predicate: carrier does not cover " + x.to_text());
  }
  return it->second;
}

std::vector<Value> Predicate::carrier() const {
  std::vector<Value> out;
  out.reserve(vals_.size());
  for (const auto& [x, r] : vals_) {
    out.push_back(x);
  }
  return out;
}

Predicate Predicate::conj(const Predicate& other) const {
  if (vals_.size() != other.vals_.size()) {
    throw Error("Predicate::conj: carrier mismatch");
  }
  std::map<Value, Rat> values;
  for (const auto& [x, r] : vals_) {
    values[x] = r * other.at(x);
  }
  return from_map(std::move(values));
}

Dist dirac(const Value& x) { return Dist::from_terms({{x, Rat(1)}}); }

Dist dmap(const std::function<Value(const Value&)>& f, const Dist& omega) {
  std::map<Value, Rat> weights;
  for (const auto& [x, r] : omega.weights()) {
    weights[f(x)] += r;
  }
  return Dist::from_map(std::move(weights));
}

Dist dtensor(const Dist& omega, const Dist& rho) {
  std::map<Value, Rat> weights;
  for (const auto& [x, rx] : omega.weights()) {
    for (const auto& [y, ry] : rho.weights()) {
      weights[pair_value(x, y)] = rx * ry;
    }
  }
  return Dist::from_map(std::move(weights));
}

Dist marginal(const Dist& tau, std::size_t index) {
  if (index == 0) {
    throw Error("marginal: component index is 1-based");
  }
  return dmap(
      [index](const Value& v) {
        if (!v.is_tuple() || v.items().size() < index) {
          throw Error("marginal: outcome " + v.to_text() + " has no component " +
                      std::to_string(index));
        }
        return v.items()[index - 1];
      },
      tau);
}

Rat validity(const Dist& omega, const Predicate& p) {
  Rat total = 0;
  for (const auto& [x, r] : omega.weights()) {
    total += r * p.at(x);
  }
  return total;
}

Dist update(const Dist& omega, const Predicate& p) {
  const Rat v = validity(omega, p);
  if (v == 0) {
    throw Error("update: conditioning on evidence with zero validity");
  }
  std::map<Value, Rat> weights;
  for (const auto& [x, r] : omega.weights()) {
    weights[x] = r * p.at(x) / v;
  }
  return Dist::from_map(std::move(weights));
}

Dist uniform_dist(const std::vector<Value>& outcomes) {
  if (outcomes.empty()) {
    throw Error("uniform_dist: empty outcome list");
  }
  std::map<Value, Rat> weights;
  const Rat w = make_rat(1, static_cast<long>(outcomes.size()));
  for (const auto& x : outcomes) {
    if (weights.count(x) > 0) {
      throw Error("uniform_dist: duplicate outcome " + x.to_text());
    }
    weights[x] = w;
  }
  return Dist::from_map(std::move(weights));
}

}  // namespace suffstat
