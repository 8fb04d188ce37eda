#include "suffstat/seqmult.hpp"

#include <algorithm>

#include "suffstat/ket.hpp"

namespace suffstat {

std::vector<Value> seq_carrier(const Carrier& x, long long k) {
  if (k < 0) {
    throw Error("seq_carrier: negative length");
  }
  std::vector<Value> out;
  std::vector<std::size_t> odometer(static_cast<std::size_t>(k), 0);
  if (x.size() == 0 && k > 0) {
    return out;
  }
  while (true) {
    std::vector<Value> tup;
    tup.reserve(odometer.size());
    for (const std::size_t i : odometer) {
      tup.push_back(x.elems()[i]);
    }
    out.push_back(Value::tuple(std::move(tup)));
    std::size_t pos = odometer.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < x.size()) {
        break;
      }
      odometer[pos] = 0;
      if (pos == 0) {
        return out;
      }
    }
    if (odometer.empty()) {
      return out;
    }
  }
}

Value acc_value(const Value& tuple) { return acc(tuple.items()).to_value(); }

Dist iid(const Dist& omega, long long k) {
  if (k < 1) {
    throw Error("iid: length must be at least 1");
  }
  Dist result = dmap([](const Value& x) { return Value::tuple({x}); }, omega);
  for (long long i = 1; i < k; ++i) {
    const Dist joint = dtensor(result, omega);
    result = dmap(
        [](const Value& p) {
          std::vector<Value> items = p.items()[0].items();
          items.push_back(p.items()[1]);
          return Value::tuple(std::move(items));
        },
        joint);
  }
  return result;
}

Dist multinomial(const Dist& omega, long long k) {
  if (k < 1) {
    throw Error("multinomial: draw size must be at least 1");
  }
  const Carrier support{omega.support()};
  std::map<Value, Rat> weights;
  for (const Multiset& phi : enum_msets(support, k)) {
    Rat w = Rat(mset_coefm(phi));
    for (const auto& [x, c] : phi.counts()) {
      w *= rat_pow(omega.prob(x), c);
    }
    weights[phi.to_value()] = w;
  }
  return Dist::from_map(std::move(weights));
}

Dist arr(const Multiset& phi) {
  if (phi.empty()) {
    throw Error("arr: empty multiset has no arrangements");
  }
  std::vector<Value> sequences;
  for (const auto& seq : enum_acc_fiber(phi)) {
    sequences.push_back(Value::tuple(seq));
  }
  return uniform_dist(sequences);
}

Channel arr_channel(const Carrier& x, long long k) {
  std::vector<Value> dom;
  std::map<Value, Dist> kernel;
  for (const Multiset& phi : enum_msets(x, k)) {
    const Value key = phi.to_value();
    dom.push_back(key);
    kernel[key] = arr(phi);
  }
  return Channel::from_kernel(std::move(dom), seq_carrier(x, k), std::move(kernel));
}

Channel acc_channel(const Carrier& x, long long k) {
  std::vector<Value> cod;
  for (const Multiset& phi : enum_msets(x, k)) {
    cod.push_back(phi.to_value());
  }
  return Channel::lift(seq_carrier(x, k), std::move(cod), acc_value);
}

Channel tp(const Carrier& x, long long k) {
  const std::vector<Value> tuples = seq_carrier(x, k);
  // Permutations of the K coordinate positions.
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    idx[i] = i;
  }
  std::vector<std::vector<std::size_t>> perms;
  do {
    perms.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));

  const Rat share = make_rat(1, factorial(k));
  std::map<Value, Dist> kernel;
  for (const Value& t : tuples) {
    std::map<Value, Rat> weights;
    for (const auto& perm : perms) {
      std::vector<Value> image;
      image.reserve(perm.size());
      for (const std::size_t i : perm) {
        image.push_back(t.items()[i]);
      }
      weights[Value::tuple(std::move(image))] += share;
    }
    kernel[t] = Dist::from_map(std::move(weights));
  }
  return Channel::from_kernel(tuples, tuples, std::move(kernel));
}

Report verify_acc_sufficiency(const std::vector<Dist>& omegas, long long k) {
  Report rep("acc-iid sufficiency");
  if (k < 1) {
    throw Error("verify_acc_sufficiency: k must be at least 1");
  }
  std::vector<Value> elems;
  for (const Dist& omega : omegas) {
    for (const auto& [x, r] : omega.weights()) {
      elems.push_back(x);
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const Carrier x{elems};

  const Channel arrangement = arr_channel(x, k);
  const Channel accumulation = acc_channel(x, k);
  const Channel permute = tp(x, k);
  const Channel ident_seq = Channel::identity(seq_carrier(x, k));
  const Channel ident_mset = Channel::identity(arrangement.dom());

  const Channel lhs_chan = tuple_chan(ident_seq, accumulation);
  const Channel rhs_chan = tuple_chan(arrangement, ident_mset);

  for (const Dist& omega : omegas) {
    const std::string tag = " for omega = " + format_ket(omega);
    const Dist seqs = iid(omega, k);
    const Dist draws = multinomial(omega, k);

    rep.add("tp . iid = iid" + tag, push(permute, seqs) == seqs);
    rep.add("joint state equation" + tag,
            push(lhs_chan, seqs) == push(rhs_chan, draws));
    rep.add("arr . multinomial = iid" + tag, push(arrangement, draws) == seqs);
    rep.add("acc . iid = multinomial" + tag, dmap(acc_value, seqs) == draws);

    if (!rep.passed()) {
      break;
    }
  }
  return rep;
}

}  // namespace suffstat
