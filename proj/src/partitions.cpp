#include "suffstat/partitions.hpp"

#include <algorithm>

#include "suffstat/ket.hpp"
#include "suffstat/seqmult.hpp"

namespace suffstat {

Partition Partition::from_counts(const std::map<long long, long long>& counts) {
  Partition p;
  for (const auto& [part, mult] : counts) {
    if (part < 1) {
      throw Error("Partition: part value must be positive, got " + std::to_string(part));
    }
    if (mult < 1) {
      throw Error("Partition: multiplicity must be positive, got " + std::to_string(mult));
    }
    p.counts_.emplace(part, mult);
  }
  return p;
}

Partition Partition::from_value(const Value& v) {
  return from_multiset(Multiset::from_value(v));
}

Partition Partition::from_multiset(const Multiset& m) {
  std::map<long long, long long> counts;
  for (const auto& [k, c] : m.counts()) {
    counts[k.as_int()] = c;
  }
  return from_counts(counts);
}

Value Partition::to_value() const { return to_multiset().to_value(); }

Multiset Partition::to_multiset() const {
  Multiset m;
  for (const auto& [part, mult] : counts_) {
    m.add(Value::of_int(part), mult);
  }
  return m;
}

long long psum(const Partition& sigma) {
  long long total = 0;
  for (const auto& [part, mult] : sigma.counts()) {
    total += part * mult;
  }
  return total;
}

long long psize(const Partition& sigma) {
  long long total = 0;
  for (const auto& [part, mult] : sigma.counts()) {
    total += mult;
  }
  return total;
}

Int maal(const Partition& sigma) {
  Int product = 1;
  for (const auto& [part, mult] : sigma.counts()) {
    product *= int_pow(to_int(part), mult);
  }
  return product;
}

Int part_facto(const Partition& sigma) { return mset_facto(sigma.to_multiset()); }

Int partcoefm(const Partition& sigma) {
  Int denom = 1;
  for (const auto& [part, mult] : sigma.counts()) {
    denom *= int_pow(factorial(part), mult);
  }
  return factorial(psum(sigma)) / denom;
}

namespace {

void enum_partitions_rec(long long part, long long remaining,
                         std::map<long long, long long>& current,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_counts(current));
    return;
  }
  if (part > remaining) {
    return;
  }
  // Highest multiplicity of the smallest part first: ascending canonical
  // order of the resulting partitions.
  for (long long mult = remaining / part; mult >= 0; --mult) {
    if (mult > 0) {
      current[part] = mult;
    }
    enum_partitions_rec(part + 1, remaining - mult * part, current, out);
    current.erase(part);
  }
}

}  // namespace

std::vector<Partition> enum_partitions(long long k) {
  if (k < 1) {
    throw Error("enum_partitions: sum must be positive");
  }
  std::vector<Partition> out;
  std::map<long long, long long> current;
  enum_partitions_rec(1, k, current, out);
  return out;
}

Partition mc(const Multiset& phi) {
  if (phi.empty()) {
    throw Error("mc: empty multiset");
  }
  std::map<long long, long long> counts;
  for (const auto& [x, c] : phi.counts()) {
    counts[c] += 1;
  }
  return Partition::from_counts(counts);
}

Value mc_value(const Value& mset) {
  return mc(Multiset::from_value(mset)).to_value();
}

Dist stk(const Partition& sigma, const Carrier& x) {
  const long long k = psum(sigma);
  // A multiset with multiplicity count sigma needs psize(sigma) distinct
  // elements; the fiber is nonempty exactly when the carrier has that many.
  if (static_cast<long long>(x.size()) < psize(sigma)) {
    throw Error("stk: carrier of size " + std::to_string(x.size()) +
                " has no multisets with multiplicity count " + sigma.to_text());
  }
  std::vector<Value> fiber;
  for (const Multiset& phi : enum_msets(x, k)) {
    if (mc(phi) == sigma) {
      fiber.push_back(phi.to_value());
    }
  }
  if (fiber.empty()) {
    throw Error("stk: no multisets with multiplicity count " + sigma.to_text());
  }
  return uniform_dist(fiber);
}

Channel stk_channel(const Carrier& x, long long k) {
  std::vector<Value> dom;
  std::vector<Value> cod;
  std::map<Value, Dist> kernel;
  for (const Multiset& phi : enum_msets(x, k)) {
    cod.push_back(phi.to_value());
  }
  for (const Partition& sigma : enum_partitions(k)) {
    const Value key = sigma.to_value();
    dom.push_back(key);
    kernel[key] = stk(sigma, x);
  }
  return Channel::from_kernel(std::move(dom), std::move(cod), std::move(kernel));
}

Channel ep(const Carrier& x, long long k) {
  if (k < 1) {
    throw Error("ep: size must be positive");
  }
  // Stack after multiplicity count, assembled fiberwise: every multiplicity
  // count reached from M[K](X) has a nonempty fiber, so this is defined even
  // when K exceeds the carrier size.
  std::vector<Value> dom;
  std::map<Value, Dist> kernel;
  for (const Multiset& phi : enum_msets(x, k)) {
    const Value key = phi.to_value();
    dom.push_back(key);
    kernel[key] = stk(mc(phi), x);
  }
  const Channel composed = Channel::from_kernel(dom, dom, std::move(kernel));

  // Independent route: uniform average over all carrier permutations.
  const auto perms = enum_perms(x);
  const Rat share = make_rat(1, factorial(static_cast<long long>(x.size())));
  for (const Value& phi_val : composed.dom()) {
    const Multiset phi = Multiset::from_value(phi_val);
    std::map<Value, Rat> weights;
    for (const auto& row : perms) {
      weights[mset_map(perm_fn(x, row), phi).to_value()] += share;
    }
    if (Dist::from_map(std::move(weights)) != composed.at(phi_val)) {
      throw Error("ep: permutation-average route disagrees with stk . mc at " +
                  phi_val.to_text());
    }
  }
  return composed;
}

Dist smn(const Dist& omega, long long k) {
  const Carrier x{omega.support()};
  if (static_cast<long long>(x.size()) < k) {
    throw Error("smn: support of size " + std::to_string(x.size()) +
                " is too small for draw size " + std::to_string(k));
  }
  const auto perms = enum_perms(x);
  const Rat share = make_rat(1, factorial(static_cast<long long>(x.size())));
  std::map<Value, Rat> weights;
  for (const auto& row : perms) {
    const auto fn = perm_fn(x, row);
    const Dist swapped = multinomial(dmap(fn, omega), k);
    for (const auto& [phi, w] : swapped.weights()) {
      weights[phi] += share * w;
    }
  }
  return Dist::from_map(std::move(weights));
}

Dist pamn(const Dist& omega, long long k) {
  const Carrier x{omega.support()};
  if (static_cast<long long>(x.size()) < k) {
    throw Error("pamn: support of size " + std::to_string(x.size()) +
                " is too small for draw size " + std::to_string(k));
  }
  const Dist via_multinomial = dmap(mc_value, multinomial(omega, k));

  // Concrete form: partcoefm(sigma) * sum over the mc-fiber of the
  // product weights.
  std::map<Value, Rat> concrete;
  for (const Partition& sigma : enum_partitions(k)) {
    Rat fiber_sum = 0;
    for (const Multiset& phi : enum_msets(x, k)) {
      if (mc(phi) != sigma) {
        continue;
      }
      Rat w = 1;
      for (const auto& [e, c] : phi.counts()) {
        w *= rat_pow(omega.prob(e), c);
      }
      fiber_sum += w;
    }
    concrete[sigma.to_value()] = Rat(partcoefm(sigma)) * fiber_sum;
  }
  if (Dist::from_map(std::move(concrete)) != via_multinomial) {
    throw Error("pamn: concrete coefficient formula disagrees with the pushforward");
  }
  if (dmap(mc_value, smn(omega, k)) != via_multinomial) {
    throw Error("pamn: swapped-multinomial route disagrees with the pushforward");
  }
  return via_multinomial;
}

Report verify_mc_sufficiency(const std::vector<Dist>& omegas, long long k) {
  Report rep("mc-swapmn sufficiency");
  if (k < 1) {
    throw Error("verify_mc_sufficiency: k must be at least 1");
  }
  std::vector<Value> elems;
  for (const Dist& omega : omegas) {
    for (const auto& [v, r] : omega.weights()) {
      elems.push_back(v);
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const Carrier x{elems};
  for (const Dist& omega : omegas) {
    if (omega.weights().size() != x.size()) {
      throw Error("verify_mc_sufficiency: omega without full support: " +
                  format_ket(omega));
    }
  }

  const Channel stack = stk_channel(x, k);
  const Channel permute = ep(x, k);
  const Channel count = Channel::lift(stack.cod(), stack.dom(), mc_value);
  const Channel ident_mset = Channel::identity(stack.cod());
  const Channel ident_part = Channel::identity(stack.dom());
  const Channel lhs_chan = tuple_chan(ident_mset, count);
  const Channel rhs_chan = tuple_chan(stack, ident_part);

  for (const Dist& omega : omegas) {
    const std::string tag = " for omega = " + format_ket(omega);
    const Dist swapped = smn(omega, k);
    const Dist parts = pamn(omega, k);

    rep.add("ep . smn = smn" + tag, push(permute, swapped) == swapped);
    rep.add("joint state equation" + tag,
            push(lhs_chan, swapped) == push(rhs_chan, parts));

    if (!rep.passed()) {
      break;
    }
  }
  return rep;
}

}  // namespace suffstat
