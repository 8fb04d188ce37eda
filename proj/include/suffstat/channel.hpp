#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suffstat/dist.hpp"
#include "suffstat/report.hpp"

namespace suffstat {

// Probabilistic function: a finite table assigning a distribution over a
// shared codomain carrier to every element of a domain carrier. Channels
// compose by Kleisli composition; deterministic channels are exactly those
// whose every entry is a point mass.
class Channel {
 public:
  Channel() = default;

  // Domain and codomain are sorted and checked for duplicates; the kernel
  // must cover the whole domain, with each entry supported inside the
  // codomain.
  static Channel from_kernel(std::vector<Value> dom, std::vector<Value> cod,
                             std::map<Value, Dist> kernel);
  static Channel identity(const std::vector<Value>& carrier);
  // Deterministic channel from a function; codomain defaults to the image.
  static Channel lift(const std::vector<Value>& dom,
                      const std::function<Value(const Value&)>& f);
  static Channel lift(const std::vector<Value>& dom, std::vector<Value> cod,
                      const std::function<Value(const Value&)>& f);

  const std::vector<Value>& dom() const { return dom_; }
  const std::vector<Value>& cod() const { return cod_; }
  const Dist& at(const Value& x) const;
  bool deterministic() const;
  // The underlying function of a deterministic channel.
  std::function<Value(const Value&)> as_function() const;

  // Exact kernel-by-kernel equality on the same domain.
  friend bool operator==(const Channel& a, const Channel& b) {
    return a.dom_ == b.dom_ && a.kernel_ == b.kernel_;
  }
  friend bool operator!=(const Channel& a, const Channel& b) { return !(a == b); }

 private:
  std::vector<Value> dom_;
  std::vector<Value> cod_;
  std::map<Value, Dist> kernel_;
};

// State transformation: (c >> omega)(y) = sum_x omega(x) c(x)(y). The support
// of omega must lie inside dom(c).
Dist push(const Channel& c, const Dist& omega);

// Kleisli composition d after c; cod(c) must lie inside dom(d).
Channel compose(const Channel& d, const Channel& c);

// Parallel product on pairs: (x,y) -> c(x) (x) d(y).
Channel ctensor(const Channel& c, const Channel& d);

// Tuple channel <c,d> on a shared domain: x -> c(x) (x) d(x).
Channel tuple_chan(const Channel& c, const Channel& d);

// Backward predicate transformation: (c << q)(x) = sum_y c(x)(y) q(y).
Predicate pull(const Channel& c, const Predicate& q);

// Bayesian inversion of c with prior omega. Requires push(c, omega) to have
// full support on cod(c).
Channel dagger(const Channel& c, const Dist& omega);

// Checks the three dagger equations making a function a deterministic dagger
// epi with prior omega: dagger recovers omega from the pushforward, the
// function retracts its dagger, and dagger-after-function is a fixed point of
// inversion. `f` must be deterministic.
Report check_det_dagger_epi(const Channel& f, const Dist& omega);

// Disintegration of a channel into pairs (x,y): the result maps each pair
// (a,y) with nonzero y-mass under c(a) to the conditional distribution of x
// given y. Pairs with zero mass are omitted from the domain.
Channel disintegrate(const Channel& c);

// Exact check of the disintegration equation: rebuilding the pair output of
// c from its y-marginal through d reproduces c on every input.
Report check_disintegration(const Channel& c, const Channel& d);

struct SplitIdempotentResult {
  Report report;
  Channel idempotent;  // section after retraction
};

// Verifies retraction . section = identity and returns the induced
// idempotent section . retraction.
SplitIdempotentResult check_split_idempotent(const Channel& section,
                                             const Channel& retraction);

// A channel with an infinite parameter space restricted to a finite list of
// sampled parameters: a printable label and an evaluated state per sample.
class StateFamily {
 public:
  StateFamily() = default;
  StateFamily(std::vector<std::string> labels, std::vector<Dist> states);
  static StateFamily from_params(
      const std::vector<std::string>& labels,
      const std::function<Dist(const std::string&)>& evaluator);

  std::size_t size() const { return states_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Dist>& states() const { return states_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Dist> states_;
};

}  // namespace suffstat
