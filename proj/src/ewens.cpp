#include "suffstat/ewens.hpp"

#include "suffstat/msets.hpp"

namespace suffstat {

namespace {

// prod_{0 <= i < k} (t + i), the normalizer shared by the Ewens and
// Stirling distributions.
Rat rising_product(const Rat& t, long long k) {
  Rat product = 1;
  for (long long i = 0; i < k; ++i) {
    product *= t + to_rat(i);
  }
  return product;
}

std::vector<Value> partition_carrier(long long k) {
  std::vector<Value> out;
  for (const Partition& sigma : enum_partitions(k)) {
    out.push_back(sigma.to_value());
  }
  return out;
}

}  // namespace

EwensParam::EwensParam(Rat t) : t_(std::move(t)) {
  if (t_ <= 0) {
    throw Error("EwensParam: t must be positive, got " + format_rat(t_));
  }
}

Int stirling1(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  if (n == 0) {
    return k == 0 ? 1 : 0;
  }
  // Row-by-row recurrence.
  std::vector<Int> row{1};  // row for n = 0
  for (long long m = 0; m < n; ++m) {
    std::vector<Int> next(static_cast<std::size_t>(m) + 2, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += to_int(m) * row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Dist ewens_dist(long long k, const EwensParam& t) {
  if (k < 1) {
    throw Error("ewens_dist: k must be at least 1");
  }
  const Rat normalizer = Rat(factorial(k)) / rising_product(t.t(), k);
  std::map<Value, Rat> weights;
  for (const Partition& sigma : enum_partitions(k)) {
    weights[sigma.to_value()] =
        normalizer * rat_pow(t.t(), psize(sigma)) /
        (Rat(part_facto(sigma)) * Rat(maal(sigma)));
  }
  return Dist::from_map(std::move(weights));
}

Dist stirling_dist(long long k, const EwensParam& t) {
  if (k < 1) {
    throw Error("stirling_dist: k must be at least 1");
  }
  const Rat normalizer = rising_product(t.t(), k);
  std::map<Value, Rat> weights;
  for (long long j = 1; j <= k; ++j) {
    weights[Value::of_int(j)] = Rat(stirling1(k, j)) * rat_pow(t.t(), j) / normalizer;
  }
  return Dist::from_map(std::move(weights));
}

Dist size_dagger(long long k, long long n) {
  if (n < 1 || n > k) {
    throw Error("size_dagger: size " + std::to_string(n) + " out of range 1.." +
                std::to_string(k));
  }
  std::map<Value, Rat> raw;
  Rat total = 0;
  for (const Partition& sigma : enum_partitions(k)) {
    if (psize(sigma) != n) {
      continue;
    }
    const Rat w = Rat(1) / (Rat(part_facto(sigma)) * Rat(maal(sigma)));
    raw[sigma.to_value()] = w;
    total += w;
  }
  std::map<Value, Rat> weights;
  for (const auto& [sigma, w] : raw) {
    weights[sigma] = w / total;
  }
  return Dist::from_map(std::move(weights));
}

Value psize_value(const Value& partition) {
  return Value::of_int(psize(Partition::from_value(partition)));
}

Channel pda(long long k, const EwensParam& t) {
  if (k < 1) {
    throw Error("pda: k must be at least 1");
  }
  const Rat denom = to_rat(k) + t.t();
  std::map<Value, Dist> kernel;
  const std::vector<Value> dom = partition_carrier(k);
  for (const Value& sv : dom) {
    const Partition sigma = Partition::from_value(sv);
    std::map<Value, Rat> weights;
    {
      Multiset grown = sigma.to_multiset();
      grown.add(Value::of_int(1));
      weights[grown.to_value()] += t.t() / denom;
    }
    for (const auto& [part, mult] : sigma.counts()) {
      Multiset grown = sigma.to_multiset();
      grown.add(Value::of_int(part), -1);
      grown.add(Value::of_int(part + 1));
      weights[grown.to_value()] += to_rat(mult) * to_rat(part) / denom;
    }
    kernel[sv] = Dist::from_map(std::move(weights));
  }
  return Channel::from_kernel(dom, partition_carrier(k + 1), std::move(kernel));
}

Channel sda(long long k, const EwensParam& t) {
  if (k < 1) {
    throw Error("sda: k must be at least 1");
  }
  const Rat denom = to_rat(k) + t.t();
  std::map<Value, Dist> kernel;
  std::vector<Value> dom;
  std::vector<Value> cod;
  for (long long j = 1; j <= k + 1; ++j) {
    cod.push_back(Value::of_int(j));
  }
  for (long long j = 1; j <= k; ++j) {
    dom.push_back(Value::of_int(j));
    kernel[Value::of_int(j)] = Dist::from_terms(
        {{Value::of_int(j + 1), t.t() / denom}, {Value::of_int(j), to_rat(k) / denom}});
  }
  return Channel::from_kernel(std::move(dom), std::move(cod), std::move(kernel));
}

Report verify_size_sufficiency(long long k, const std::vector<EwensParam>& ts) {
  Report rep("size-ewens sufficiency");
  if (k < 1) {
    throw Error("verify_size_sufficiency: k must be at least 1");
  }
  const std::vector<Value> parts = partition_carrier(k);
  std::vector<Value> sizes;
  for (long long j = 1; j <= k; ++j) {
    sizes.push_back(Value::of_int(j));
  }
  const Channel size_chan = Channel::lift(parts, sizes, psize_value);
  std::map<Value, Dist> dagger_kernel;
  for (long long n = 1; n <= k; ++n) {
    dagger_kernel[Value::of_int(n)] = size_dagger(k, n);
  }
  const Channel dagger_chan = Channel::from_kernel(sizes, parts, std::move(dagger_kernel));
  const Channel lhs_chan = tuple_chan(Channel::identity(parts), size_chan);
  const Channel rhs_chan = tuple_chan(dagger_chan, Channel::identity(sizes));

  for (const EwensParam& t : ts) {
    const std::string tag = " at t = " + format_rat(t.t());
    const Dist ew = ewens_dist(k, t);
    const Dist st = stirling_dist(k, t);

    rep.add("size . ewens = stirling" + tag, dmap(psize_value, ew) == st);
    rep.add("joint state equation" + tag,
            push(lhs_chan, ew) == push(rhs_chan, st));

    const Channel grow_part = pda(k, t);
    const Channel grow_size = sda(k, t);
    bool rectangle = true;
    for (const Value& sv : parts) {
      if (dmap(psize_value, grow_part.at(sv)) !=
          grow_size.at(psize_value(sv))) {
        rectangle = false;
        break;
      }
    }
    rep.add("draw-add rectangle commutes" + tag, rectangle);

    rep.add("ewens reconstruction" + tag,
            push(grow_part, ew) == ewens_dist(k + 1, t));
    rep.add("stirling reconstruction" + tag,
            push(grow_size, st) == stirling_dist(k + 1, t));

    if (!rep.passed()) {
      break;
    }
  }
  return rep;
}

}  // namespace suffstat
