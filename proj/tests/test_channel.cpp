#include "doctest.h"

#include "suffstat/channel.hpp"
#include "suffstat/ewens.hpp"
#include "suffstat/seqmult.hpp"
#include "suffstat/suffcheck.hpp"

using namespace suffstat;

namespace {

Value L(const std::string& s) { return Value::label(s); }

// Seeded channel with rational kernel rows over the given carriers.
Channel random_channel(const std::vector<Value>& dom, const std::vector<Value>& cod,
                       SplitMix64& rng) {
  std::map<Value, Dist> kernel;
  for (const auto& x : dom) {
    std::map<Value, Rat> w;
    long long total = 0;
    std::vector<long long> parts;
    for (std::size_t i = 0; i < cod.size(); ++i) {
      parts.push_back(1 + static_cast<long long>(rng.below(4)));
      total += parts.back();
    }
    for (std::size_t i = 0; i < cod.size(); ++i) {
      w[cod[i]] = make_rat(to_int(parts[i]), to_int(total));
    }
    kernel[x] = Dist::from_map(std::move(w));
  }
  return Channel::from_kernel(dom, cod, std::move(kernel));
}

Dist random_state(const std::vector<Value>& carrier, SplitMix64& rng) {
  std::map<Value, Rat> w;
  long long total = 0;
  std::vector<long long> parts;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    parts.push_back(1 + static_cast<long long>(rng.below(4)));
    total += parts.back();
  }
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    w[carrier[i]] = make_rat(to_int(parts[i]), to_int(total));
  }
  return Dist::from_map(std::move(w));
}

const std::vector<Value> kABC = {L("a"), L("b"), L("c")};
const std::vector<Value> kUV = {L("u"), L("v")};

}  // namespace

TEST_CASE("channel construction invariants") {
  CHECK_THROWS_AS(Channel::from_kernel({L("a")}, {L("u")}, {}), Error);
  CHECK_THROWS_AS(
      Channel::from_kernel({L("a")}, {L("u")}, {{L("a"), dirac(L("x"))}}), Error);
  const Channel c = Channel::identity(kABC);
  CHECK(c.deterministic());
  CHECK_THROWS_AS(c.at(L("z")), Error);
}

TEST_CASE("push") {
  SplitMix64 rng(7);
  const Dist omega = random_state(kABC, rng);
  CHECK(push(Channel::identity(kABC), omega) == omega);

  const auto f = [](const Value& v) { return v == L("c") ? L("v") : L("u"); };
  CHECK(push(Channel::lift(kABC, f), omega) == dmap(f, omega));

  const Channel into_uv = random_channel(kUV, kABC, rng);
  CHECK_THROWS_AS(push(into_uv, omega), Error);
}

TEST_CASE("kleisli laws on sampled channels") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Channel c = random_channel(kABC, kUV, rng);
    const Channel d = random_channel(kUV, kABC, rng);
    const Channel e = random_channel(kABC, kUV, rng);

    CHECK(compose(Channel::identity(kUV), c) == c);
    CHECK(compose(c, Channel::identity(kABC)) == c);
    CHECK(compose(e, compose(d, c)) == compose(compose(e, d), c));

    const Dist omega = random_state(kABC, rng);
    CHECK(push(compose(d, c), omega) == push(d, push(c, omega)));
  }
}

TEST_CASE("lift is functorial") {
  const auto f = [](const Value& v) { return v == L("c") ? L("v") : L("u"); };
  const auto g = [](const Value& v) { return v == L("u") ? L("a") : L("b"); };
  const Channel lf = Channel::lift(kABC, kUV, f);
  const Channel lg = Channel::lift(kUV, kABC, g);
  CHECK(compose(lg, lf) ==
        Channel::lift(kABC, kABC, [&](const Value& v) { return g(f(v)); }));
  CHECK(Channel::lift(kABC, [](const Value& v) { return v; }) ==
        Channel::identity(kABC));
}

TEST_CASE("ctensor") {
  const auto f = [](const Value& v) { return v == L("c") ? L("v") : L("u"); };
  const auto g = [](const Value& v) { return v; };
  const Channel lhs = ctensor(Channel::lift(kABC, kUV, f), Channel::lift(kUV, kUV, g));
  std::vector<Value> dom;
  for (const auto& x : kABC) {
    for (const auto& y : kUV) {
      dom.push_back(pair_value(x, y));
    }
  }
  const Channel rhs = Channel::lift(dom, [&](const Value& p) {
    return pair_value(f(p.items()[0]), g(p.items()[1]));
  });
  CHECK(lhs == rhs);

  CHECK(ctensor(Channel::identity(kUV), Channel::identity(kUV)) ==
        Channel::identity({pair_value(L("u"), L("u")), pair_value(L("u"), L("v")),
                           pair_value(L("v"), L("u")), pair_value(L("v"), L("v"))}));
}

TEST_CASE("tuple_chan") {
  // <id,id> is the lifted copy map.
  const Channel copy = tuple_chan(Channel::identity(kUV), Channel::identity(kUV));
  CHECK(copy == Channel::lift(kUV, [](const Value& v) { return pair_value(v, v); }));

  // <id, lift s> pushes omega to sum_x omega(x)|x, s(x)>.
  SplitMix64 rng(13);
  const Dist omega = random_state(kABC, rng);
  const auto s = [](const Value& v) { return v == L("c") ? L("v") : L("u"); };
  const Channel joint = tuple_chan(Channel::identity(kABC), Channel::lift(kABC, kUV, s));
  std::vector<std::pair<Value, Rat>> expected;
  for (const auto& [x, w] : omega.weights()) {
    expected.emplace_back(pair_value(x, s(x)), w);
  }
  CHECK(push(joint, omega) == Dist::from_terms(expected));

  // <lift f, lift g> = lift <f,g>.
  const auto g = [](const Value& v) { return v; };
  CHECK(tuple_chan(Channel::lift(kABC, s), Channel::lift(kABC, g)) ==
        Channel::lift(kABC, [&](const Value& v) { return pair_value(s(v), g(v)); }));

  // Discarding the statistic component recovers the state.
  CHECK(marginal(push(joint, omega), 1) == omega);

  CHECK_THROWS_AS(tuple_chan(Channel::identity(kABC), Channel::identity(kUV)), Error);
}

TEST_CASE("ctensor multiplies kernel weights componentwise") {
  SplitMix64 rng(53);
  const Channel c = random_channel(kABC, kUV, rng);
  const Channel d = random_channel(kUV, kABC, rng);
  const Channel prod = ctensor(c, d);
  for (const auto& x : kABC) {
    for (const auto& y : kUV) {
      const Dist& cell = prod.at(pair_value(x, y));
      for (const auto& u : kUV) {
        for (const auto& v : kABC) {
          CHECK(cell.prob(pair_value(u, v)) == c.at(x).prob(u) * d.at(y).prob(v));
        }
      }
    }
  }
}

TEST_CASE("pull and the validity duality") {
  SplitMix64 rng(19);
  const Channel ident = Channel::identity(kABC);
  const Predicate q = random_predicate(kABC, rng);
  for (const auto& x : kABC) {
    CHECK(pull(ident, q).at(x) == q.at(x));
  }

  const auto s = [](const Value& v) { return v == L("c") ? L("v") : L("u"); };
  const Channel lifted = Channel::lift(kABC, kUV, s);
  const Predicate fiber = pull(lifted, Predicate::point(kUV, L("u")));
  CHECK(fiber.at(L("a")) == 1);
  CHECK(fiber.at(L("b")) == 1);
  CHECK(fiber.at(L("c")) == 0);

  for (int trial = 0; trial < 10; ++trial) {
    const Channel c = random_channel(kABC, kUV, rng);
    const Dist omega = random_state(kABC, rng);
    const Predicate qq = random_predicate(kUV, rng);
    CHECK(validity(push(c, omega), qq) == validity(omega, pull(c, qq)));
    CHECK(pull(c, Predicate::constant(kUV, Rat(1))).at(L("a")) == 1);
  }
}

TEST_CASE("dagger") {
  SplitMix64 rng(29);
  const Dist omega = random_state(kABC, rng);
  const Channel ident = Channel::identity(omega.support());
  const Channel inv = dagger(ident, omega);
  CHECK(inv == ident);

  // Constant function: the dagger returns the prior.
  const Channel constant = Channel::lift(kABC, [](const Value&) { return L("u"); });
  CHECK(dagger(constant, omega).at(L("u")) == omega);

  // dagger(c, omega)(y) = update(omega, pull(c, 1_y)).
  const Channel c = random_channel(kABC, kUV, rng);
  const Channel dag = dagger(c, omega);
  for (const auto& y : kUV) {
    CHECK(dag.at(y) == update(omega, pull(c, Predicate::point(kUV, y))));
  }

  // Full-support violation: nothing maps to v.
  const Channel partial =
      Channel::lift(kABC, kUV, [](const Value&) { return L("u"); });
  CHECK_THROWS_AS(dagger(partial, omega), Error);
}

TEST_CASE("deterministic dagger epi checks") {
  const Dist omega =
      Dist::from_terms({{L("a"), make_rat(1, 4)}, {L("b"), make_rat(1, 4)},
                        {L("c"), make_rat(1, 2)}});
  CHECK(check_det_dagger_epi(Channel::identity(kABC), omega).passed());

  // Accumulation on pairs with a uniform iid prior.
  const Carrier ab = Carrier::of_labels({"a", "b"});
  const Dist pairs = iid(uniform_dist(ab.elems()), 2);
  CHECK(check_det_dagger_epi(acc_channel(ab, 2), pairs).passed());

  // Size on the partitions of 3 under the Ewens distribution.
  const Dist ew = ewens_dist(3, EwensParam(Rat(1)));
  std::vector<Value> parts = ew.support();
  std::vector<Value> sizes = {Value::of_int(1), Value::of_int(2), Value::of_int(3)};
  CHECK(check_det_dagger_epi(Channel::lift(parts, sizes, psize_value), ew).passed());

  CHECK_THROWS_AS(
      check_det_dagger_epi(
          Channel::from_kernel(kUV, kUV,
                               {{L("u"), uniform_dist(kUV)}, {L("v"), uniform_dist(kUV)}}),
          uniform_dist(kUV)),
      Error);
}

TEST_CASE("disintegration") {
  SplitMix64 rng(37);

  // Independent joint: the conditional is the first marginal at every y.
  const Dist omega = random_state(kABC, rng);
  const Dist rho = random_state(kUV, rng);
  const Value star = L("s");
  const Dist joint = dtensor(omega, rho);
  const Channel c = Channel::from_kernel({star}, joint.support(), {{star, joint}});
  const Channel d = disintegrate(c);
  for (const auto& y : kUV) {
    CHECK(d.at(pair_value(star, y)) == omega);
  }
  CHECK(check_disintegration(c, d).passed());

  // Point mass: conditional is the point.
  const Dist pt = dirac(pair_value(L("x0"), L("y0")));
  const Channel cp = Channel::from_kernel({star}, pt.support(), {{star, pt}});
  const Channel dp = disintegrate(cp);
  CHECK(dp.at(pair_value(star, L("y0"))) == dirac(L("x0")));
  CHECK_THROWS_AS(dp.at(pair_value(star, L("y1"))), Error);

  // Sampled joint channels reconstruct exactly.
  std::vector<Value> pair_cod;
  for (const auto& x : kABC) {
    for (const auto& y : kUV) {
      pair_cod.push_back(pair_value(x, y));
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Channel jc = random_channel(kUV, pair_cod, rng);
    CHECK(check_disintegration(jc, disintegrate(jc)).passed());
  }
}

TEST_CASE("disintegrating the sequence/multiset joint gives the arrangement") {
  // Family over two parameter states; the joint pairs each iid sequence with
  // its accumulation. The conditional of the sequence given the multiset is
  // the arrangement, for every parameter.
  const Carrier ab = Carrier::of_labels({"a", "b"});
  const long long k = 2;
  const Channel joint_chan =
      tuple_chan(Channel::identity(seq_carrier(ab, k)), acc_channel(ab, k));
  const std::vector<Dist> omegas = {
      Dist::from_terms({{L("a"), make_rat(1, 4)}, {L("b"), make_rat(3, 4)}}),
      Dist::from_terms({{L("a"), make_rat(1, 2)}, {L("b"), make_rat(1, 2)}}),
  };
  std::vector<Value> params = {L("p"), L("q")};
  std::map<Value, Dist> kernel;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    kernel[params[i]] = push(joint_chan, iid(omegas[i], k));
  }
  const Channel family =
      Channel::from_kernel(params, joint_chan.cod(), std::move(kernel));
  const Channel cond = disintegrate(family);
  const Channel arrangement = arr_channel(ab, k);
  for (const auto& a : params) {
    for (const auto& phi : arrangement.dom()) {
      CHECK(cond.at(pair_value(a, phi)) == arr(Multiset::from_value(phi)));
    }
  }
}

TEST_CASE("split idempotents") {
  const Carrier ab = Carrier::of_labels({"a", "b"});

  auto arr_acc = check_split_idempotent(arr_channel(ab, 3), acc_channel(ab, 3));
  CHECK(arr_acc.report.passed());
  CHECK(arr_acc.idempotent == tp(ab, 3));
  CHECK(compose(arr_acc.idempotent, arr_acc.idempotent) == arr_acc.idempotent);

  auto ident = check_split_idempotent(Channel::identity(kUV), Channel::identity(kUV));
  CHECK(ident.report.passed());
  CHECK(ident.idempotent == Channel::identity(kUV));

  CHECK_THROWS_AS(
      check_split_idempotent(Channel::identity(kUV), Channel::identity(kABC)), Error);
}
