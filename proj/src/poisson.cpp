#include "suffstat/poisson.hpp"

#include <algorithm>

namespace suffstat {

Rat pois_weight(const Rat& lambda, long long j) {
  if (lambda <= 0) {
    throw Error("pois_weight: lambda must be positive");
  }
  if (j < 0) {
    throw Error("pois_weight: negative count");
  }
  return rat_pow(lambda, j) / Rat(factorial(j));
}

long long som(const std::vector<long long>& vec) {
  long long total = 0;
  for (const long long v : vec) {
    if (v < 0) {
      throw Error("som: negative entry");
    }
    total += v;
  }
  return total;
}

Value som_value(const Value& tuple) {
  long long total = 0;
  for (const Value& v : tuple.items()) {
    total += v.as_int();
  }
  return Value::of_int(total);
}

namespace {

Value tuple_value(const std::vector<long long>& tuple) {
  std::vector<Value> items;
  items.reserve(tuple.size());
  for (const long long v : tuple) {
    items.push_back(Value::of_int(v));
  }
  return Value::tuple(std::move(items));
}

void enum_sum_rec(long long slots, long long remaining, std::vector<long long>& prefix,
                  std::vector<std::vector<long long>>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (long long v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    enum_sum_rec(slots - 1, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long long>> enum_tuples_with_sum(long long k, long long n) {
  if (k < 1) {
    throw Error("enum_tuples_with_sum: arity must be at least 1");
  }
  if (n < 0) {
    throw Error("enum_tuples_with_sum: negative sum");
  }
  std::vector<std::vector<long long>> out;
  std::vector<long long> prefix;
  enum_sum_rec(k, n, prefix, out);
  return out;
}

Dist som_dagger(long long n, long long k) {
  if (k < 1) {
    throw Error("som_dagger: arity must be at least 1");
  }
  if (n < 0) {
    throw Error("som_dagger: negative sum");
  }
  const Rat denom = Rat(int_pow(to_int(k), n));
  std::map<Value, Rat> weights;
  for (const auto& tuple : enum_tuples_with_sum(k, n)) {
    Int facs = 1;
    for (const long long j : tuple) {
      facs *= factorial(j);
    }
    weights[tuple_value(tuple)] = Rat(factorial(n)) / (denom * Rat(facs));
  }
  return Dist::from_map(std::move(weights));
}

WeightVector::WeightVector(Rat lambda, long long bound, long long arity)
    : lambda_(std::move(lambda)), bound_(bound), arity_(arity) {
  if (lambda_ <= 0) {
    throw Error("WeightVector: lambda must be positive");
  }
  if (bound_ < 0 || arity_ < 1) {
    throw Error("WeightVector: bad truncation or arity");
  }
  levels_.reserve(static_cast<std::size_t>(bound_) + 1);
  for (long long n = 0; n <= bound_; ++n) {
    levels_.push_back(enum_tuples_with_sum(arity_, n));
  }
}

Rat WeightVector::weight(const std::vector<long long>& tuple) const {
  if (static_cast<long long>(tuple.size()) != arity_) {
    throw Error("WeightVector: tuple arity mismatch");
  }
  Rat w = 1;
  for (const long long j : tuple) {
    w *= pois_weight(lambda_, j);
  }
  return w;
}

Report verify_sum_sufficiency(long long k, const std::vector<Rat>& lambdas,
                              long long trunc, std::uint64_t seed,
                              int predicate_pairs) {
  Report rep("sum-poisson sufficiency");
  if (k < 1 || trunc < 1) {
    throw Error("verify_sum_sufficiency: arity and truncation must be at least 1");
  }
  rep.note("truncation bound N = " + std::to_string(trunc) +
           "; weights carry the un-normalized convention (common factor e^{-k lambda} cancels)");
  rep.note("predicate adjointness checked over finitely supported predicates on the truncated carrier");

  // Splitting identity, parameter-free.
  bool split_ok = true;
  for (long long n = 0; n <= trunc && split_ok; ++n) {
    split_ok = dmap(som_value, som_dagger(n, k)) == dirac(Value::of_int(n));
  }
  rep.add("som . som_dagger = identity on 0.." + std::to_string(trunc), split_ok);

  std::vector<std::vector<Dist>> conditionals_per_lambda;
  for (const Rat& lambda : lambdas) {
    const std::string tag = " at lambda = " + format_rat(lambda);
    const WeightVector wv(lambda, trunc, k);

    // (i) pushforward identity: per-level sums match the k*lambda Poisson
    // weight.
    bool push_ok = true;
    for (long long n = 0; n <= trunc && push_ok; ++n) {
      Rat level_sum = 0;
      for (const auto& tuple : wv.levels()[static_cast<std::size_t>(n)]) {
        level_sum += wv.weight(tuple);
      }
      push_ok = level_sum == pois_weight(to_rat(k) * lambda, n);
    }
    rep.add("pushforward weight identity" + tag, push_ok);

    // (ii) normalized conditional per level equals som_dagger.
    std::vector<Dist> conditionals;
    bool cond_ok = true;
    for (long long n = 0; n <= trunc; ++n) {
      Rat level_sum = 0;
      std::map<Value, Rat> weights;
      for (const auto& tuple : wv.levels()[static_cast<std::size_t>(n)]) {
        const Rat w = wv.weight(tuple);
        weights[tuple_value(tuple)] = w;
        level_sum += w;
      }
      for (auto& [key, w] : weights) {
        w /= level_sum;
      }
      const Dist cond = Dist::from_map(std::move(weights));
      conditionals.push_back(cond);
      if (cond != som_dagger(n, k)) {
        cond_ok = false;
      }
    }
    rep.add("conditional equals som_dagger" + tag, cond_ok);
    conditionals_per_lambda.push_back(std::move(conditionals));

    // (iii) predicate adjointness with seeded rational predicates. Both
    // sides are un-normalized rational sums over the truncated support.
    SplitMix64 rng(seed);
    bool adjoint_ok = true;
    for (int trial = 0; trial < predicate_pairs && adjoint_ok; ++trial) {
      // p on tuples with sum <= trunc, q on {0..trunc}; zero outside by
      // construction.
      std::map<Value, Rat> p_vals;
      for (long long n = 0; n <= trunc; ++n) {
        for (const auto& tuple : wv.levels()[static_cast<std::size_t>(n)]) {
          const long long den = 1 + static_cast<long long>(rng.below(16));
          const long long num = static_cast<long long>(rng.below(
              static_cast<std::uint64_t>(den) + 1));
          p_vals[tuple_value(tuple)] = make_rat(to_int(num), to_int(den));
        }
      }
      std::map<Value, Rat> q_vals;
      for (long long n = 0; n <= trunc; ++n) {
        const long long den = 1 + static_cast<long long>(rng.below(16));
        const long long num = static_cast<long long>(rng.below(
            static_cast<std::uint64_t>(den) + 1));
        q_vals[Value::of_int(n)] = make_rat(to_int(num), to_int(den));
      }

      Rat lhs = 0;
      for (long long n = 0; n <= trunc; ++n) {
        for (const auto& tuple : wv.levels()[static_cast<std::size_t>(n)]) {
          lhs += wv.weight(tuple) * p_vals.at(tuple_value(tuple)) *
                 q_vals.at(Value::of_int(n));
        }
      }
      Rat rhs = 0;
      for (long long n = 0; n <= trunc; ++n) {
        Rat pulled = 0;  // (som_dagger << p)(n)
        const Dist splitter = som_dagger(n, k);
        for (const auto& [tuple, w] : splitter.weights()) {
          pulled += w * p_vals.at(tuple);
        }
        rhs += pois_weight(to_rat(k) * lambda, n) * pulled * q_vals.at(Value::of_int(n));
      }
      adjoint_ok = lhs == rhs;
    }
    rep.add("predicate adjointness on " + std::to_string(predicate_pairs) +
                " seeded pairs" + tag,
            adjoint_ok);
  }

  // Lambda independence of the conditionals, pairwise across the sweep.
  bool indep_ok = true;
  for (std::size_t i = 1; i < conditionals_per_lambda.size(); ++i) {
    if (conditionals_per_lambda[i] != conditionals_per_lambda[0]) {
      indep_ok = false;
    }
  }
  if (lambdas.size() > 1) {
    rep.add("conditionals agree across all lambdas", indep_ok);
  }
  return rep;
}

}  // namespace suffstat
