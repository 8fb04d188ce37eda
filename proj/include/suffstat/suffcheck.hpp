#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "suffstat/channel.hpp"
#include "suffstat/dist.hpp"
#include "suffstat/msets.hpp"
#include "suffstat/report.hpp"

namespace suffstat {

// One sufficiency situation: a parameterized family of states on a carrier,
// a statistic on that carrier, and a candidate parameter-free reverse
// channel from statistic outcomes back to the carrier.
struct SufficiencyCase {
  std::string name;
  StateFamily family;
  std::vector<Value> x_carrier;
  std::function<Value(const Value&)> statistic;
  Channel reverse;
};

// Joint-state formulation: for every sampled parameter,
//   <id, s> . c(a)  =  <d, id> . D(s)(c(a))
// compared exactly; the first counterexample (parameter, outcome, both
// weights) is reported on failure.
Report check_ket(const SufficiencyCase& c);

// Predicate formulation: validity equality over all point-predicate pairs
// plus seeded random rational predicates (denominators <= 16).
Report check_pred(const SufficiencyCase& c, std::uint64_t seed, int random_pairs = 5);

struct ConditionalIndependenceResult {
  Report report;
  std::optional<Channel> extracted;  // present when the conditionals agree
};

// Conditions each family state on each statistic outcome and passes iff the
// conditional does not depend on the parameter; on success the common
// conditional is returned as the induced reverse channel. All states must
// reach the same statistic outcomes.
ConditionalIndependenceResult check_conditional_independence(
    const StateFamily& family, const std::vector<Value>& x_carrier,
    const std::function<Value(const Value&)>& statistic);

// Split-idempotent route: verifies retraction . section = identity and that
// the idempotent fixes every family state, then confirms the sufficiency
// conclusion via check_ket with the retraction's function as statistic and
// the section as reverse channel. The retraction must be deterministic.
Report check_via_split_idempotent(const StateFamily& family, const Channel& section,
                                  const Channel& retraction);

// Deterministic parameter grid: every full-support distribution over the
// carrier whose weights share a denominator <= max_den, deduplicated,
// ascending order.
std::vector<Dist> dist_grid(const Carrier& x, int max_den);

// Seeded rational predicate with denominators <= max_den.
Predicate random_predicate(const std::vector<Value>& carrier, SplitMix64& rng,
                           int max_den = 16);

// Options for the bundled verification cases exposed to the CLI.
struct BundledOptions {
  Carrier carrier = Carrier::of_labels({"a", "b"});
  long long k = 2;
  std::vector<Rat> ts = {make_rat(1, 2), Rat(1), Rat(2), make_rat(7, 3)};
  std::vector<Rat> lambdas = {make_rat(1, 2), Rat(1), make_rat(3, 2)};
  long long trunc = 8;
  int max_den = 8;
  std::uint64_t seed = 0;
};

// Named cases: "acc-iid", "mc-swapmn", "size-ewens", "sum-poisson".
Report run_bundled(const std::string& name, const BundledOptions& opts);
std::vector<std::string> bundled_case_names();

}  // namespace suffstat
