#include "suffstat/value.hpp"

#include <algorithm>
#include <map>

#include "suffstat/rational.hpp"

namespace suffstat {

Value Value::of_int(long long i) {
  Value v;
  v.kind_ = Kind::Int;
  v.int_ = i;
  return v;
}

Value Value::label(std::string name) {
  Value v;
  v.kind_ = Kind::Label;
  v.label_ = std::move(name);
  return v;
}

Value Value::tuple(std::vector<Value> items) {
  Value v;
  v.kind_ = Kind::Tuple;
  v.items_ = std::move(items);
  return v;
}

Value Value::mset(std::vector<std::pair<Value, long long>> entries) {
  std::map<Value, long long> merged;
  for (auto& [key, count] : entries) {
    merged[key] += count;
  }
  Value v;
  v.kind_ = Kind::MSet;
  for (auto& [key, count] : merged) {
    if (count < 0) {
      throw Error("Value::mset: negative multiplicity for " + key.to_text());
    }
    if (count > 0) {
      v.items_.push_back(key);
      v.counts_.push_back(count);
    }
  }
  return v;
}

long long Value::as_int() const {
  if (kind_ != Kind::Int) {
    throw Error("Value: not an integer: " + to_text());
  }
  return int_;
}

const std::string& Value::as_label() const {
  if (kind_ != Kind::Label) {
    throw Error("Value: not a label: " + to_text());
  }
  return label_;
}

const std::vector<Value>& Value::items() const {
  if (kind_ != Kind::Tuple && kind_ != Kind::MSet) {
    throw Error("Value: no components: " + to_text());
  }
  return items_;
}

const std::vector<long long>& Value::counts() const {
  if (kind_ != Kind::MSet) {
    throw Error("Value: not a multiset: " + to_text());
  }
  return counts_;
}

std::string Value::to_text() const {
  switch (kind_) {
    case Kind::Int:
      return std::to_string(int_);
    case Kind::Label:
      return label_;
    case Kind::Tuple: {
      std::string s = "(";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i > 0) {
          s += ",";
        }
        s += items_[i].to_text();
      }
      return s + ")";
    }
    case Kind::MSet: {
      std::string s = "{";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i > 0) {
          s += ",";
        }
        s += items_[i].to_text() + ":" + std::to_string(counts_[i]);
      }
      return s + "}";
    }
  }
  return "";
}

namespace {

int compare_msets(const Value& a, const Value& b) {
  // Walk the merged ascending key sequence; at the first key where the
  // multiplicities differ, the multiset with the larger multiplicity sorts
  // first. This makes enumerations like {a:2} < {a:1,b:1} < {b:2} and the
  // textbook listing of integer partitions come out in ascending order.
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& ak = a.items();
  const auto& bk = b.items();
  while (i < ak.size() || j < bk.size()) {
    int key_cmp;
    if (i == ak.size()) {
      key_cmp = 1;
    } else if (j == bk.size()) {
      key_cmp = -1;
    } else {
      key_cmp = compare(ak[i], bk[j]);
    }
    long long ca = 0;
    long long cb = 0;
    if (key_cmp <= 0) {
      ca = a.counts()[i++];
    }
    if (key_cmp >= 0) {
      cb = b.counts()[j++];
    }
    if (ca != cb) {
      return ca > cb ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace

int compare(const Value& a, const Value& b) {
  auto rank = [](Value::Kind k) {
    switch (k) {
      case Value::Kind::Int:
        return 0;
      case Value::Kind::Label:
        return 1;
      case Value::Kind::Tuple:
        return 2;
      case Value::Kind::MSet:
        return 3;
    }
    return 4;
  };
  if (rank(a.kind()) != rank(b.kind())) {
    return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
  }
  switch (a.kind()) {
    case Value::Kind::Int: {
      if (a.as_int() != b.as_int()) {
        return a.as_int() < b.as_int() ? -1 : 1;
      }
      return 0;
    }
    case Value::Kind::Label: {
      const int c = a.as_label().compare(b.as_label());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Value::Kind::Tuple: {
      const auto& ai = a.items();
      const auto& bi = b.items();
      for (std::size_t i = 0; i < std::min(ai.size(), bi.size()); ++i) {
        if (const int c = compare(ai[i], bi[i]); c != 0) {
          return c;
        }
      }
      if (ai.size() != bi.size()) {
        return ai.size() < bi.size() ? -1 : 1;
      }
      return 0;
    }
    case Value::Kind::MSet:
      return compare_msets(a, b);
  }
  return 0;
}

Value pair_value(const Value& x, const Value& y) { return Value::tuple({x, y}); }

}  // namespace suffstat
