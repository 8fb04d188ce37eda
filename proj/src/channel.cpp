#include "suffstat/channel.hpp"

#include <algorithm>

namespace suffstat {

namespace {

std::vector<Value> sorted_unique(std::vector<Value> v, const char* what) {
  std::sort(v.begin(), v.end());
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] == v[i]) {
      throw Error(std::string(what) + ": duplicate element " + v[i].to_text());
    }
  }
  return v;
}

bool subset_of(const std::vector<Value>& sub, const std::vector<Value>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::vector<Value> pair_carrier(const std::vector<Value>& a,
                                const std::vector<Value>& b) {
  std::vector<Value> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      out.push_back(pair_value(x, y));
    }
  }
  return out;
}

}  // namespace

Channel Channel::from_kernel(std::vector<Value> dom, std::vector<Value> cod,
                             std::map<Value, Dist> kernel) {
  Channel c;
  c.dom_ = sorted_unique(std::move(dom), "Channel domain");
  c.cod_ = sorted_unique(std::move(cod), "Channel codomain");
  for (const auto& x : c.dom_) {
    const auto it = kernel.find(x);
    if (it == kernel.end()) {
      throw Error("Channel: kernel missing entry for " + x.to_text());
    }
    if (!subset_of(it->second.support(), c.cod_)) {
      throw Error("Channel: entry for " + x.to_text() +
                  " is supported outside the codomain");
    }
  }
  if (kernel.size() != c.dom_.size()) {
    throw Error("Channel: kernel has entries outside the domain");
  }
  c.kernel_ = std::move(kernel);
  return c;
}

Channel Channel::identity(const std::vector<Value>& carrier) {
  std::map<Value, Dist> kernel;
  for (const auto& x : carrier) {
    kernel[x] = dirac(x);
  }
  return from_kernel(carrier, carrier, std::move(kernel));
}

Channel Channel::lift(const std::vector<Value>& dom,
                      const std::function<Value(const Value&)>& f) {
  std::vector<Value> image;
  image.reserve(dom.size());
  for (const auto& x : dom) {
    image.push_back(f(x));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return lift(dom, std::move(image), f);
}

Channel Channel::lift(const std::vector<Value>& dom, std::vector<Value> cod,
                      const std::function<Value(const Value&)>& f) {
  std::map<Value, Dist> kernel;
  for (const auto& x : dom) {
    kernel[x] = dirac(f(x));
  }
  return from_kernel(dom, std::move(cod), std::move(kernel));
}

const Dist& Channel::at(const Value& x) const {
  const auto it = kernel_.find(x);
  if (it == kernel_.end()) {
    throw Error("Channel: " + x.to_text() + " outside the domain");
  }
  return it->second;
}

bool Channel::deterministic() const {
  for (const auto& [x, d] : kernel_) {
    if (d.weights().size() != 1) {
      return false;
    }
  }
  return true;
}

std::function<Value(const Value&)> Channel::as_function() const {
  if (!deterministic()) {
    throw Error("Channel::as_function: channel is not deterministic");
  }
  std::map<Value, Value> table;
  for (const auto& [x, d] : kernel_) {
    table.emplace(x, d.weights().begin()->first);
  }
  return [table](const Value& x) {
    const auto it = table.find(x);
    if (it == table.end()) {
      throw Error("lifted function: " + x.to_text() + " outside the domain");
    }
    return it->second;
  };
}

Dist push(const Channel& c, const Dist& omega) {
  std::map<Value, Rat> weights;
  for (const auto& [x, r] : omega.weights()) {
    for (const auto& [y, s] : c.at(x).weights()) {
      weights[y] += r * s;
    }
  }
  return Dist::from_map(std::move(weights));
}

Channel compose(const Channel& d, const Channel& c) {
  if (!std::includes(d.dom().begin(), d.dom().end(), c.cod().begin(),
                     c.cod().end())) {
    throw Error("compose: codomain of inner channel not contained in domain of outer");
  }
  std::map<Value, Dist> kernel;
  for (const auto& x : c.dom()) {
    kernel[x] = push(d, c.at(x));
  }
  return Channel::from_kernel(c.dom(), d.cod(), std::move(kernel));
}

Channel ctensor(const Channel& c, const Channel& d) {
  std::map<Value, Dist> kernel;
  for (const auto& x : c.dom()) {
    for (const auto& y : d.dom()) {
      kernel[pair_value(x, y)] = dtensor(c.at(x), d.at(y));
    }
  }
  return Channel::from_kernel(pair_carrier(c.dom(), d.dom()),
                              pair_carrier(c.cod(), d.cod()), std::move(kernel));
}

Channel tuple_chan(const Channel& c, const Channel& d) {
  if (c.dom() != d.dom()) {
    throw Error("tuple_chan: channels have different domains");
  }
  std::map<Value, Dist> kernel;
  for (const auto& x : c.dom()) {
    kernel[x] = dtensor(c.at(x), d.at(x));
  }
  return Channel::from_kernel(c.dom(), pair_carrier(c.cod(), d.cod()),
                              std::move(kernel));
}

Predicate pull(const Channel& c, const Predicate& q) {
  std::map<Value, Rat> values;
  for (const auto& x : c.dom()) {
    Rat total = 0;
    for (const auto& [y, s] : c.at(x).weights()) {
      total += s * q.at(y);
    }
    values[x] = total;
  }
  return Predicate::from_map(std::move(values));
}

Channel dagger(const Channel& c, const Dist& omega) {
  const Dist fwd = push(c, omega);
  for (const auto& y : c.cod()) {
    if (fwd.prob(y) == 0) {
      throw Error("dagger: pushforward lacks full support at " + y.to_text());
    }
  }
  std::map<Value, Dist> kernel;
  for (const auto& y : c.cod()) {
    std::map<Value, Rat> weights;
    for (const auto& [x, r] : omega.weights()) {
      const Rat w = r * c.at(x).prob(y);
      if (w != 0) {
        weights[x] = w / fwd.prob(y);
      }
    }
    kernel[y] = Dist::from_map(std::move(weights));
  }
  return Channel::from_kernel(c.cod(), c.dom(), std::move(kernel));
}

Report check_det_dagger_epi(const Channel& f, const Dist& omega) {
  if (!f.deterministic()) {
    throw Error("check_det_dagger_epi: channel is not deterministic");
  }
  Report rep("det-dagger-epi");
  const Dist fwd = push(f, omega);
  const Channel dag = dagger(f, omega);

  const Dist recovered = push(dag, fwd);
  rep.add("dagger recovers prior from pushforward", recovered == omega);

  const Channel retract = compose(f, dag);
  rep.add("function retracts its dagger", retract == Channel::identity(f.cod()));

  const Channel e = compose(dag, f);
  const Channel e_dag = dagger(e, omega);
  rep.add("dagger-after-function is a dagger fixed point", e_dag == e);
  return rep;
}

Channel disintegrate(const Channel& c) {
  for (const auto& p : c.cod()) {
    if (!p.is_tuple() || p.items().size() != 2) {
      throw Error("disintegrate: codomain element " + p.to_text() + " is not a pair");
    }
  }
  std::vector<Value> x_carrier;
  std::vector<Value> y_carrier;
  for (const auto& p : c.cod()) {
    x_carrier.push_back(p.items()[0]);
    y_carrier.push_back(p.items()[1]);
  }
  std::sort(x_carrier.begin(), x_carrier.end());
  x_carrier.erase(std::unique(x_carrier.begin(), x_carrier.end()), x_carrier.end());
  std::sort(y_carrier.begin(), y_carrier.end());
  y_carrier.erase(std::unique(y_carrier.begin(), y_carrier.end()), y_carrier.end());

  std::vector<Value> dom;
  std::map<Value, Dist> kernel;
  for (const auto& a : c.dom()) {
    const Dist& joint = c.at(a);
    const Dist y_marg = marginal(joint, 2);
    for (const auto& [y, mass] : y_marg.weights()) {
      // Conditional of the first component given the second, computed by
      // updating on the point predicate of y and projecting.
      const Predicate on_y = pull(
          Channel::lift(joint.support(),
                        [](const Value& p) { return p.items()[1]; }),
          Predicate::point(y_carrier, y));
      const Dist cond = marginal(update(joint, on_y), 1);
      const Value key = pair_value(a, y);
      dom.push_back(key);
      kernel[key] = cond;
    }
  }
  return Channel::from_kernel(std::move(dom), x_carrier, std::move(kernel));
}

Report check_disintegration(const Channel& c, const Channel& d) {
  Report rep("disintegration");
  for (const auto& a : c.dom()) {
    const Dist& joint = c.at(a);
    const Dist y_marg = marginal(joint, 2);
    std::map<Value, Rat> rebuilt;
    for (const auto& [y, mass] : y_marg.weights()) {
      for (const auto& [x, p] : d.at(pair_value(a, y)).weights()) {
        rebuilt[pair_value(x, y)] += mass * p;
      }
    }
    const bool ok = Dist::from_map(std::move(rebuilt)) == joint;
    rep.add("reconstruction at " + a.to_text(), ok);
    if (!ok) {
      return rep;
    }
  }
  return rep;
}

SplitIdempotentResult check_split_idempotent(const Channel& section,
                                             const Channel& retraction) {
  if (section.cod() != retraction.dom() || retraction.cod() != section.dom()) {
    throw Error("check_split_idempotent: section and retraction carriers do not match");
  }
  Report rep("split-idempotent");
  const Channel round_trip = compose(retraction, section);
  rep.add("retraction after section is the identity",
          round_trip == Channel::identity(section.dom()));
  Channel e = compose(section, retraction);
  return {std::move(rep), std::move(e)};
}

StateFamily::StateFamily(std::vector<std::string> labels, std::vector<Dist> states)
    : labels_(std::move(labels)), states_(std::move(states)) {
  if (labels_.size() != states_.size()) {
    throw Error("StateFamily: label/state count mismatch");
  }
}

StateFamily StateFamily::from_params(
    const std::vector<std::string>& labels,
    const std::function<Dist(const std::string&)>& evaluator) {
  std::vector<Dist> states;
  states.reserve(labels.size());
  for (const auto& l : labels) {
    states.push_back(evaluator(l));
  }
  return StateFamily(labels, std::move(states));
}

}  // namespace suffstat
