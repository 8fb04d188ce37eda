#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "suffstat/msets.hpp"
#include "suffstat/report.hpp"

using namespace suffstat;

namespace {

Value L(const std::string& s) { return Value::label(s); }

std::vector<Value> seq(const std::string& letters) {
  std::vector<Value> out;
  for (const char c : letters) {
    out.push_back(L(std::string(1, c)));
  }
  return out;
}

}  // namespace

TEST_CASE("mset_size") {
  CHECK(mset_size(Multiset()) == 0);
  CHECK(mset_size(Multiset::of_labels({{"a", 3}, {"b", 2}, {"c", 1}})) == 6);
  CHECK(mset_size(Multiset::of_labels({{"x", 7}})) == 7);
}

TEST_CASE("mset_facto") {
  CHECK(mset_facto(Multiset()) == 1);
  CHECK(mset_facto(Multiset::of_labels({{"a", 3}, {"b", 2}, {"c", 1}})) == 12);
  CHECK(mset_facto(Multiset::of_labels({{"a", 1}, {"b", 1}})) == 1);
}

TEST_CASE("mset_coefm against brute-force sequence counts") {
  // phi = {a:3,b:2,c:1}: count all 6-tuples over a 3-letter alphabet whose
  // occurrence counts are (3,2,1).
  const long long expected =
      oracles::count_sequences_with_counts(3, 6, {{0, 3}, {1, 2}, {2, 1}});
  CHECK(expected == 60);
  CHECK(mset_coefm(Multiset::of_labels({{"a", 3}, {"b", 2}, {"c", 1}})) ==
        to_int(expected));

  CHECK(mset_coefm(Multiset::of_labels({{"a", 5}})) == 1);
  CHECK(mset_coefm(Multiset::of_labels({{"a", 1}, {"b", 1}})) ==
        to_int(oracles::count_sequences_with_counts(2, 2, {{0, 1}, {1, 1}})));
}

TEST_CASE("mset_binom") {
  // Partition {1:3,2:1} over a 4-element carrier.
  Multiset sigma;
  sigma.add(Value::of_int(1), 3);
  sigma.add(Value::of_int(2), 1);
  CHECK(mset_binom(4, sigma) == 4);

  // All multiplicities one and a carrier of exactly that size: n! orderings.
  CHECK(mset_binom(3, Multiset::of_labels({{"a", 1}, {"b", 1}, {"c", 1}})) == 6);

  CHECK(mset_binom(3, Multiset::of_labels({{"a", 1}, {"b", 1}})) == 6);

  CHECK_THROWS_AS(mset_binom(2, Multiset::of_labels({{"a", 2}, {"b", 1}})), Error);
}

TEST_CASE("mset_map") {
  const Multiset phi = Multiset::of_labels({{"a", 3}, {"b", 2}, {"c", 1}});
  CHECK(mset_map([](const Value& v) { return v; }, phi) == phi);

  const auto merge = [](const Value& v) {
    return v.as_label() == "c" ? L("v") : L("u");
  };
  CHECK(mset_map(merge, phi) == Multiset::of_labels({{"u", 5}, {"v", 1}}));

  const auto constant = [](const Value&) { return L("z"); };
  CHECK(mset_map(constant, phi) == Multiset::of_labels({{"z", 6}}));
}

TEST_CASE("mset_map functor laws on sampled functions") {
  const Carrier x = Carrier::of_labels({"a", "b", "c"});
  SplitMix64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<Value, Value> f_tab;
    std::map<Value, Value> g_tab;
    for (const auto& e : x.elems()) {
      f_tab[e] = x.elems()[rng.below(x.size())];
      g_tab[e] = x.elems()[rng.below(x.size())];
    }
    const auto f = [&](const Value& v) { return f_tab.at(v); };
    const auto g = [&](const Value& v) { return g_tab.at(v); };
    Multiset phi;
    for (const auto& e : x.elems()) {
      phi.add(e, static_cast<long long>(rng.below(4)));
    }
    CHECK(mset_map(g, mset_map(f, phi)) ==
          mset_map([&](const Value& v) { return g(f(v)); }, phi));
    CHECK(mset_map([](const Value& v) { return v; }, phi) == phi);
  }
}

TEST_CASE("acc") {
  CHECK(acc(seq("aabacb")) == Multiset::of_labels({{"a", 3}, {"b", 2}, {"c", 1}}));
  CHECK(acc({}) == Multiset());
  CHECK(acc(seq("x")) == Multiset::of_labels({{"x", 1}}));
}

TEST_CASE("acc is permutation invariant") {
  SplitMix64 rng(5);
  const Carrier x = Carrier::of_labels({"a", "b", "c"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Value> s;
    for (int i = 0; i < 6; ++i) {
      s.push_back(x.elems()[rng.below(3)]);
    }
    std::vector<Value> shuffled = s;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    }
    CHECK(acc(s) == acc(shuffled));
  }
}

TEST_CASE("enum_msets order and counts") {
  const Carrier ab = Carrier::of_labels({"a", "b"});
  const auto two = enum_msets(ab, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == Multiset::of_labels({{"a", 2}}));
  CHECK(two[1] == Multiset::of_labels({{"a", 1}, {"b", 1}}));
  CHECK(two[2] == Multiset::of_labels({{"b", 2}}));

  const auto zero = enum_msets(ab, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Multiset());

  CHECK(enum_msets(Carrier::of_labels({"a", "b", "c"}), 3).size() == 10);

  // Count is C(n+k-1, k); order is ascending canonical.
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    const Carrier x = Carrier::of_labels(labels);
    for (long long k = 0; k <= 5; ++k) {
      const auto all = enum_msets(x, k);
      CHECK(to_int(static_cast<long long>(all.size())) == binomial(n + k - 1, k));
      for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(all[i - 1].to_value() < all[i].to_value());
      }
      for (const auto& phi : all) {
        CHECK(mset_size(phi) == k);
      }
    }
  }
}

TEST_CASE("enum_acc_fiber") {
  const auto two = enum_acc_fiber(Multiset::of_labels({{"a", 1}, {"b", 1}}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == seq("ab"));
  CHECK(two[1] == seq("ba"));

  const auto one = enum_acc_fiber(Multiset::of_labels({{"a", 2}}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == seq("aa"));

  const Multiset phi = Multiset::of_labels({{"a", 3}, {"b", 2}, {"c", 1}});
  const auto fiber = enum_acc_fiber(phi);
  CHECK(fiber.size() == 60);
  std::set<std::vector<Value>> distinct(fiber.begin(), fiber.end());
  CHECK(distinct.size() == fiber.size());
  for (const auto& s : fiber) {
    CHECK(acc(s) == phi);
  }
}

TEST_CASE("fiber sizes match the multinomial coefficient") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    const Carrier x = Carrier::of_labels(labels);
    for (long long k = 0; k <= 5; ++k) {
      Int total = 0;
      for (const auto& phi : enum_msets(x, k)) {
        const Int fiber = to_int(static_cast<long long>(enum_acc_fiber(phi).size()));
        CHECK(fiber == mset_coefm(phi));
        total += fiber;
      }
      CHECK(total == int_pow(to_int(n), k));
    }
  }
}

TEST_CASE("enum_perms") {
  CHECK(enum_perms(Carrier::of_labels({"a"})).size() == 1);
  CHECK(enum_perms(Carrier::of_labels({"a", "b", "c"})).size() == 6);
  CHECK(enum_perms(Carrier::of_labels({"a", "b", "c", "d"})).size() == 24);

  const Carrier x = Carrier::of_labels({"a", "b", "c"});
  std::set<std::vector<Value>> rows;
  for (const auto& row : enum_perms(x)) {
    rows.insert(row);
    std::set<Value> image(row.begin(), row.end());
    CHECK(image.size() == x.size());  // bijection
  }
  CHECK(rows.size() == 6);
}

TEST_CASE("carrier invariants") {
  CHECK_THROWS_AS(Carrier::of_labels({"a", "a"}), Error);
  const Carrier x = Carrier::of_labels({"c", "a", "b"});
  CHECK(x.elems()[0] == L("a"));  // ascending regardless of input order
  CHECK(x.index_of(L("b")) == 1);
  CHECK_THROWS_AS(x.index_of(L("z")), Error);
}

TEST_CASE("multiset text form") {
  const Multiset phi = Multiset::of_labels({{"b", 2}, {"a", 3}, {"c", 1}});
  CHECK(phi.to_text() == "{a:3,b:2,c:1}");
  CHECK(Multiset().to_text() == "{}");
}
