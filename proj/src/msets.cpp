#include "suffstat/msets.hpp"

#include <algorithm>

namespace suffstat {

Carrier::Carrier(std::vector<Value> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (elems_[i - 1] == elems_[i]) {
      throw Error("Carrier: duplicate element " + elems_[i].to_text());
    }
  }
}

Carrier Carrier::of_labels(const std::vector<std::string>& labels) {
  std::vector<Value> elems;
  elems.reserve(labels.size());
  for (const auto& l : labels) {
    elems.push_back(Value::label(l));
  }
  return Carrier(std::move(elems));
}

Carrier Carrier::of_range(long long lo, long long hi) {
  std::vector<Value> elems;
  for (long long i = lo; i <= hi; ++i) {
    elems.push_back(Value::of_int(i));
  }
  return Carrier(std::move(elems));
}

bool Carrier::contains(const Value& v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::size_t Carrier::index_of(const Value& v) const {
  const auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
  if (it == elems_.end() || *it != v) {
    throw Error("Carrier: element not present: " + v.to_text());
  }
  return static_cast<std::size_t>(it - elems_.begin());
}

Multiset Multiset::from_counts(const std::map<Value, long long>& counts) {
  Multiset m;
  for (const auto& [k, c] : counts) {
    m.add(k, c);
  }
  return m;
}

Multiset Multiset::from_value(const Value& v) {
  if (!v.is_mset()) {
    throw Error("Multiset::from_value: not a multiset value: " + v.to_text());
  }
  Multiset m;
  for (std::size_t i = 0; i < v.items().size(); ++i) {
    m.add(v.items()[i], v.counts()[i]);
  }
  return m;
}

Multiset Multiset::of_labels(
    const std::vector<std::pair<std::string, long long>>& entries) {
  Multiset m;
  for (const auto& [l, c] : entries) {
    m.add(Value::label(l), c);
  }
  return m;
}

void Multiset::add(const Value& x, long long n) {
  if (n == 0) {
    return;
  }
  const long long updated = counts_[x] + n;
  if (updated < 0) {
    throw Error("Multiset::add: multiplicity of " + x.to_text() + " would go negative");
  }
  if (updated == 0) {
    counts_.erase(x);
  } else {
    counts_[x] = updated;
  }
}

long long Multiset::count(const Value& x) const {
  const auto it = counts_.find(x);
  return it == counts_.end() ? 0 : it->second;
}

Value Multiset::to_value() const {
  std::vector<std::pair<Value, long long>> entries(counts_.begin(), counts_.end());
  return Value::mset(std::move(entries));
}

long long mset_size(const Multiset& phi) {
  long long total = 0;
  for (const auto& [k, c] : phi.counts()) {
    total += c;
  }
  return total;
}

Int mset_facto(const Multiset& phi) {
  Int product = 1;
  for (const auto& [k, c] : phi.counts()) {
    product *= factorial(c);
  }
  return product;
}

Int mset_coefm(const Multiset& phi) {
  return factorial(mset_size(phi)) / mset_facto(phi);
}

Int mset_binom(long long n, const Multiset& phi) {
  const long long size = mset_size(phi);
  if (n < size) {
    throw Error("mset_binom: carrier size " + std::to_string(n) +
                " below multiset size " + std::to_string(size));
  }
  return factorial(n) / (mset_facto(phi) * factorial(n - size));
}

Multiset mset_map(const std::function<Value(const Value&)>& f, const Multiset& phi) {
  Multiset out;
  for (const auto& [k, c] : phi.counts()) {
    out.add(f(k), c);
  }
  return out;
}

Multiset acc(const std::vector<Value>& seq) {
  Multiset out;
  for (const auto& x : seq) {
    out.add(x);
  }
  return out;
}

namespace {

void enum_msets_rec(const std::vector<Value>& elems, std::size_t index,
                    long long remaining, Multiset& current,
                    std::vector<Multiset>& out) {
  if (index == elems.size()) {
    if (remaining == 0) {
      out.push_back(current);
    }
    return;
  }
  if (index + 1 == elems.size()) {
    if (remaining > 0) {
      current.add(elems[index], remaining);
      out.push_back(current);
      current.add(elems[index], -remaining);
    } else {
      out.push_back(current);
    }
    return;
  }
  // Largest count for the first element first: this yields ascending
  // canonical order of the resulting multisets.
  for (long long c = remaining; c >= 0; --c) {
    if (c > 0) {
      current.add(elems[index], c);
    }
    enum_msets_rec(elems, index + 1, remaining - c, current, out);
    if (c > 0) {
      current.add(elems[index], -c);
    }
  }
}

void enum_fiber_rec(const std::vector<Value>& support, std::vector<long long>& left,
                    long long remaining, std::vector<Value>& prefix,
                    std::vector<std::vector<Value>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (left[i] == 0) {
      continue;
    }
    --left[i];
    prefix.push_back(support[i]);
    enum_fiber_rec(support, left, remaining - 1, prefix, out);
    prefix.pop_back();
    ++left[i];
  }
}

}  // namespace

std::vector<Multiset> enum_msets(const Carrier& x, long long k) {
  if (k < 0) {
    throw Error("enum_msets: negative size");
  }
  if (x.size() == 0) {
    if (k == 0) {
      return {Multiset()};
    }
    return {};
  }
  std::vector<Multiset> out;
  Multiset current;
  enum_msets_rec(x.elems(), 0, k, current, out);
  return out;
}

std::vector<std::vector<Value>> enum_acc_fiber(const Multiset& phi) {
  std::vector<Value> support;
  std::vector<long long> left;
  for (const auto& [k, c] : phi.counts()) {
    support.push_back(k);
    left.push_back(c);
  }
  std::vector<std::vector<Value>> out;
  std::vector<Value> prefix;
  enum_fiber_rec(support, left, mset_size(phi), prefix, out);
  return out;
}

std::vector<std::vector<Value>> enum_perms(const Carrier& x) {
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    idx[i] = i;
  }
  std::vector<std::vector<Value>> out;
  do {
    std::vector<Value> row;
    row.reserve(idx.size());
    for (const std::size_t i : idx) {
      row.push_back(x.elems()[i]);
    }
    out.push_back(std::move(row));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::function<Value(const Value&)> perm_fn(const Carrier& x,
                                           const std::vector<Value>& row) {
  if (row.size() != x.size()) {
    throw Error("perm_fn: row size does not match carrier");
  }
  return [x, row](const Value& v) { return row[x.index_of(v)]; };
}

}  // namespace suffstat
