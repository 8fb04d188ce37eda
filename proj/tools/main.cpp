// Command-line front end: evaluate named channels on exact rational states,
// enumerate combinatorial carriers, run the bundled sufficiency
// verifications, and compute daggers/disintegrations. Output is canonical
// ket text or JSON.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "suffstat/ewens.hpp"
#include "suffstat/ket.hpp"
#include "suffstat/msets.hpp"
#include "suffstat/partitions.hpp"
#include "suffstat/poisson.hpp"
#include "suffstat/seqmult.hpp"
#include "suffstat/suffcheck.hpp"

namespace {

using namespace suffstat;

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_rat(item));
  }
  if (out.empty()) {
    throw Error("empty rational list");
  }
  return out;
}

Carrier parse_carrier(const std::string& text) {
  std::vector<std::string> labels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    labels.push_back(item);
  }
  return Carrier::of_labels(labels);
}

void print_dist(const Dist& d, bool json) {
  if (json) {
    std::cout << dist_to_json(d).dump() << "\n";
  } else {
    std::cout << format_ket(d) << "\n";
  }
}

void print_channel(const Channel& c, bool json) {
  if (json) {
    std::cout << channel_to_json(c).dump() << "\n";
  } else {
    std::cout << format_channel(c);
  }
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* env = std::getenv("SUFFSTAT_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return fallback;
}

int run_eval(const std::string& name, const std::string& omega_text,
             const std::string& phi_text, long long k, const std::string& t_text,
             long long n, bool json) {
  if (name == "multinomial" || name == "iid" || name == "smn" || name == "pamn") {
    const Dist omega = parse_ket(omega_text).to_dist();
    Dist result;
    if (name == "multinomial") {
      result = multinomial(omega, k);
    } else if (name == "iid") {
      result = iid(omega, k);
    } else if (name == "smn") {
      result = smn(omega, k);
    } else {
      result = pamn(omega, k);
    }
    print_dist(result, json);
    return 0;
  }
  if (name == "arr") {
    print_dist(arr(Multiset::from_value(parse_outcome(phi_text))), json);
    return 0;
  }
  if (name == "ewens" || name == "stirling") {
    const EwensParam t(parse_rat(t_text));
    print_dist(name == "ewens" ? ewens_dist(k, t) : stirling_dist(k, t), json);
    return 0;
  }
  if (name == "size-dagger") {
    print_dist(size_dagger(k, n), json);
    return 0;
  }
  if (name == "som-dagger") {
    print_dist(som_dagger(n, k), json);
    return 0;
  }
  throw Error("unknown channel '" + name +
              "' (expected multinomial|iid|smn|pamn|arr|ewens|stirling|size-dagger|som-dagger)");
}

int run_enumerate(const std::string& what, long long k, const std::string& carrier_text) {
  if (what == "partitions") {
    for (const Partition& sigma : enum_partitions(k)) {
      std::cout << sigma.to_text() << "\n";
    }
    return 0;
  }
  if (what == "msets") {
    for (const Multiset& phi : enum_msets(parse_carrier(carrier_text), k)) {
      std::cout << phi.to_text() << "\n";
    }
    return 0;
  }
  if (what == "perms") {
    const Carrier x = parse_carrier(carrier_text);
    for (const auto& row : enum_perms(x)) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) {
          line += " ";
        }
        line += x.elems()[i].to_text() + "->" + row[i].to_text();
      }
      std::cout << line << "\n";
    }
    return 0;
  }
  throw Error("unknown enumeration '" + what + "' (expected partitions|msets|perms)");
}

int run_verify(const std::string& case_name, BundledOptions opts, bool json) {
  const Report rep = run_bundled(case_name, opts);
  if (json) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks()) {
      checks.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
    }
    nlohmann::json out = {{"kind", "report"},
                          {"name", rep.name()},
                          {"passed", rep.passed()},
                          {"checks", checks},
                          {"notes", rep.notes()}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << rep.to_text();
    std::cout << (rep.passed() ? "PASS" : "FAIL") << " " << rep.name() << "\n";
  }
  return rep.passed() ? 0 : 1;
}

std::function<Value(const Value&)> builtin_fn(const std::string& name) {
  if (name == "acc") {
    return acc_value;
  }
  if (name == "mc") {
    return mc_value;
  }
  if (name == "size" || name == "psize") {
    return psize_value;
  }
  if (name == "som") {
    return som_value;
  }
  throw Error("unknown builtin function '" + name + "' (expected acc|mc|size|som)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact discrete probability channels and sufficiency checks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of ket text");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a named channel");
  std::string eval_name;
  std::string omega_text;
  std::string phi_text;
  std::string t_text = "1";
  long long k = 1;
  long long n = 0;
  eval_cmd->add_option("name", eval_name, "channel name")->required();
  eval_cmd->add_option("--omega", omega_text, "input state as a ket literal");
  eval_cmd->add_option("--phi", phi_text, "input multiset literal");
  eval_cmd->add_option("--k", k, "size / arity parameter");
  eval_cmd->add_option("--t", t_text, "Ewens parameter as p/q");
  eval_cmd->add_option("--n", n, "statistic outcome (size or sum)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a bundled sufficiency case");
  std::string case_name;
  std::string carrier_text = "a,b";
  std::string ts_text = "1/2,1,2,7/3";
  std::string lambdas_text = "1/2,1,3/2";
  long long trunc = 8;
  int max_den = 8;
  long long verify_k = 2;
  std::uint64_t seed = 0;
  verify_cmd->add_option("case", case_name, "acc-iid|mc-swapmn|size-ewens|sum-poisson")
      ->required();
  verify_cmd->add_option("--k", verify_k, "size / arity parameter");
  verify_cmd->add_option("--carrier", carrier_text, "comma-separated labels");
  verify_cmd->add_option("--t", ts_text, "comma-separated Ewens parameters");
  verify_cmd->add_option("--lambda", lambdas_text, "comma-separated Poisson parameters");
  verify_cmd->add_option("--trunc", trunc, "truncation bound for sum-poisson");
  verify_cmd->add_option("--max-den", max_den, "denominator bound of the state grid");
  verify_cmd->add_option("--seed", seed, "seed for generated predicates");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "list a combinatorial carrier");
  std::string what;
  long long enum_k = 1;
  std::string enum_carrier = "a,b";
  enum_cmd->add_option("what", what, "partitions|msets|perms")->required();
  enum_cmd->add_option("--k", enum_k, "size parameter");
  enum_cmd->add_option("--carrier", enum_carrier, "comma-separated labels");

  // dagger
  auto* dagger_cmd = app.add_subcommand("dagger", "Bayesian inversion of a builtin function");
  std::string fn_name;
  std::string dagger_omega;
  dagger_cmd->add_option("--f", fn_name, "builtin function: acc|mc|size|som")->required();
  dagger_cmd->add_option("--omega", dagger_omega, "prior state as a ket literal")->required();

  // disintegrate
  auto* disint_cmd = app.add_subcommand("disintegrate", "disintegrate a joint state over pairs");
  std::string disint_omega;
  disint_cmd->add_option("--omega", disint_omega, "joint state over pairs as a ket literal")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) {
      return run_eval(eval_name, omega_text, phi_text, k, t_text, n, json);
    }
    if (verify_cmd->parsed()) {
      BundledOptions opts;
      opts.carrier = parse_carrier(carrier_text);
      opts.k = verify_k;
      opts.ts = parse_rat_list(ts_text);
      opts.lambdas = parse_rat_list(lambdas_text);
      opts.trunc = trunc;
      opts.max_den = max_den;
      opts.seed = seed_from_env(seed);
      return run_verify(case_name, opts, json);
    }
    if (enum_cmd->parsed()) {
      return run_enumerate(what, enum_k, enum_carrier);
    }
    if (dagger_cmd->parsed()) {
      const Dist omega = parse_ket(dagger_omega).to_dist();
      const Channel lifted = Channel::lift(omega.support(), builtin_fn(fn_name));
      print_channel(dagger(lifted, omega), json);
      return 0;
    }
    if (disint_cmd->parsed()) {
      const Dist omega = parse_ket(disint_omega).to_dist();
      const Value star = Value::label("*");
      const Channel joint = Channel::from_kernel({star}, omega.support(), {{star, omega}});
      print_channel(disintegrate(joint), json);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
