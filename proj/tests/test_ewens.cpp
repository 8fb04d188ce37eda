#include "doctest.h"

#include "suffstat/ewens.hpp"
#include "suffstat/ket.hpp"

using namespace suffstat;

namespace {

Partition P(const std::map<long long, long long>& counts) {
  return Partition::from_counts(counts);
}

const std::vector<Rat> kGrid = {make_rat(1, 2), Rat(1), Rat(2), make_rat(7, 3)};

}  // namespace

TEST_CASE("stirling numbers of the first kind") {
  CHECK(stirling1(0, 0) == 1);
  CHECK(stirling1(3, 1) == 2);
  CHECK(stirling1(3, 2) == 3);
  CHECK(stirling1(3, 3) == 1);
  for (long long k = 1; k <= 6; ++k) {
    CHECK(stirling1(k, 0) == 0);
  }
  CHECK(stirling1(0, 2) == 0);
  CHECK(stirling1(4, 5) == 0);
  CHECK(stirling1(4, -1) == 0);

  // Row sums count all permutations.
  for (long long n = 1; n <= 8; ++n) {
    Int total = 0;
    for (long long k = 0; k <= n; ++k) {
      total += stirling1(n, k);
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("stirling normalization identity") {
  // sum_k [K,k] t^k = prod_{0<=i<K} (t+i), exactly, on the parameter grid.
  for (long long k = 1; k <= 8; ++k) {
    for (const Rat& t : kGrid) {
      Rat lhs = 0;
      for (long long j = 1; j <= k; ++j) {
        lhs += Rat(stirling1(k, j)) * rat_pow(t, j);
      }
      Rat rhs = 1;
      for (long long i = 0; i < k; ++i) {
        rhs *= t + to_rat(i);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("ewens distribution base cases") {
  for (const Rat& t : kGrid) {
    CHECK(ewens_dist(1, EwensParam(t)) == dirac(P({{1, 1}}).to_value()));
  }

  // One draw-add step from the base case gives the K=2 weights.
  for (const Rat& t : kGrid) {
    const Dist two = ewens_dist(2, EwensParam(t));
    CHECK(two.prob(P({{1, 2}}).to_value()) == t / (t + 1));
    CHECK(two.prob(P({{2, 1}}).to_value()) == Rat(1) / (t + 1));
  }
}

TEST_CASE("ewens distribution matches iterated draw-add steps") {
  // Oracle: fold the draw-add channel forward from the base case and compare
  // against the closed formula, for K up to 6.
  for (const Rat& t : kGrid) {
    const EwensParam param(t);
    Dist rolled = dirac(P({{1, 1}}).to_value());
    for (long long k = 1; k <= 5; ++k) {
      rolled = push(pda(k, param), rolled);
      CHECK(rolled == ewens_dist(k + 1, param));
    }
  }
}

TEST_CASE("ewens weights sum to one for K up to 8") {
  for (long long k = 1; k <= 8; ++k) {
    for (const Rat& t : kGrid) {
      // Construction already asserts exact normalization; recompute anyway.
      const Dist ew = ewens_dist(k, EwensParam(t));
      Rat total = 0;
      for (const auto& [sigma, w] : ew.weights()) {
        total += w;
      }
      CHECK(total == 1);
    }
  }
}

TEST_CASE("stirling distribution") {
  for (const Rat& t : kGrid) {
    CHECK(stirling_dist(1, EwensParam(t)) == dirac(Value::of_int(1)));
  }

  const Dist two = stirling_dist(2, EwensParam(Rat(1)));
  CHECK(two.prob(Value::of_int(1)) == make_rat(1, 2));
  CHECK(two.prob(Value::of_int(2)) == make_rat(1, 2));

  // K = 4, t = 1: weights [4,k]/24 from the recurrence, i.e. 6/24, 11/24,
  // 6/24, 1/24.
  const Dist four = stirling_dist(4, EwensParam(Rat(1)));
  CHECK(four.prob(Value::of_int(1)) == make_rat(1, 4));
  CHECK(four.prob(Value::of_int(2)) == make_rat(11, 24));
  CHECK(four.prob(Value::of_int(3)) == make_rat(1, 4));
  CHECK(four.prob(Value::of_int(4)) == make_rat(1, 24));

  // Independent route: the size pushforward of the Ewens distribution.
  CHECK(dmap(psize_value, ewens_dist(4, EwensParam(Rat(1)))) == four);

  // One size-draw-add step from the base case.
  for (const Rat& t : kGrid) {
    const EwensParam param(t);
    CHECK(push(sda(1, param), stirling_dist(1, param)) == stirling_dist(2, param));
  }
}

TEST_CASE("size dagger") {
  CHECK(size_dagger(5, 5) == dirac(P({{1, 5}}).to_value()));
  CHECK(size_dagger(5, 1) == dirac(P({{5, 1}}).to_value()));

  const Dist mid = size_dagger(4, 2);
  REQUIRE(mid.weights().size() == 2);
  CHECK(mid.prob(P({{1, 1}, {3, 1}}).to_value()) == make_rat(8, 11));
  CHECK(mid.prob(P({{2, 2}}).to_value()) == make_rat(3, 11));

  CHECK_THROWS_AS(size_dagger(4, 0), Error);
  CHECK_THROWS_AS(size_dagger(4, 5), Error);
}

TEST_CASE("size dagger agrees with Bayesian inversion at any parameter") {
  // The dagger of the lifted size map with an Ewens prior must not depend on
  // t, and must equal the closed parameter-free formula.
  for (long long k = 2; k <= 5; ++k) {
    std::vector<Value> parts;
    for (const Partition& sigma : enum_partitions(k)) {
      parts.push_back(sigma.to_value());
    }
    std::vector<Value> sizes;
    for (long long n = 1; n <= k; ++n) {
      sizes.push_back(Value::of_int(n));
    }
    const Channel size_chan = Channel::lift(parts, sizes, psize_value);

    const Channel at_half = dagger(size_chan, ewens_dist(k, EwensParam(make_rat(1, 2))));
    const Channel at_two = dagger(size_chan, ewens_dist(k, EwensParam(Rat(2))));
    CHECK(at_half == at_two);
    for (long long n = 1; n <= k; ++n) {
      CHECK(at_half.at(Value::of_int(n)) == size_dagger(k, n));
    }
  }
}

TEST_CASE("draw-add channels") {
  const EwensParam one(Rat(1));

  const Dist step = pda(1, one).at(P({{1, 1}}).to_value());
  CHECK(step.prob(P({{1, 2}}).to_value()) == make_rat(1, 2));
  CHECK(step.prob(P({{2, 1}}).to_value()) == make_rat(1, 2));

  const Dist grown = pda(2, one).at(P({{2, 1}}).to_value());
  CHECK(grown.prob(P({{1, 1}, {2, 1}}).to_value()) == make_rat(1, 3));
  CHECK(grown.prob(P({{3, 1}}).to_value()) == make_rat(2, 3));

  // Every output partition has sum K+1.
  for (long long k = 1; k <= 5; ++k) {
    const Channel grow = pda(k, one);
    for (const auto& sv : grow.dom()) {
      for (const auto& [out, w] : grow.at(sv).weights()) {
        CHECK(psum(Partition::from_value(out)) == k + 1);
      }
    }
  }

  const Dist sstep = sda(1, one).at(Value::of_int(1));
  CHECK(sstep.prob(Value::of_int(1)) == make_rat(1, 2));
  CHECK(sstep.prob(Value::of_int(2)) == make_rat(1, 2));

  const Dist top = sda(3, one).at(Value::of_int(3));
  REQUIRE(top.weights().size() == 2);
  CHECK(top.prob(Value::of_int(3)) == make_rat(3, 4));
  CHECK(top.prob(Value::of_int(4)) == make_rat(1, 4));
}

TEST_CASE("ewens parameter validation") {
  CHECK_THROWS_AS(EwensParam(Rat(0)), Error);
  CHECK_THROWS_AS(EwensParam(Rat(-1)), Error);
}

TEST_CASE("verify_size_sufficiency") {
  std::vector<EwensParam> grid;
  for (const Rat& t : kGrid) {
    grid.emplace_back(t);
  }
  CHECK(verify_size_sufficiency(1, grid).passed());
  CHECK(verify_size_sufficiency(4, grid).passed());
  CHECK(verify_size_sufficiency(6, {EwensParam(Rat(1))}).passed());
}
