#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "modalg/catalog.hpp"
#include "modalg/decomposition.hpp"
#include "modalg/error.hpp"
#include "modalg/group_ops.hpp"
#include "modalg/io.hpp"
#include "modalg/lemmas.hpp"

#ifndef MODALG_VERSION
#define MODALG_VERSION "0.0.0"
#endif

namespace modalg::cli {

namespace {

using nlohmann::json;

struct Item {
  std::string label;
  io::GroupInput input;
};

struct Outcome {
  json result;
  int code = kPass;
  double ms = 0;
};

unsigned log_exponent(const PGroup& g) {
  unsigned e = 0;
  for (std::uint64_t q = 1; q < g.exponent(); q *= g.prime()) ++e;
  return e;
}

io::GroupInput product_input(const std::string& spec, unsigned p) {
  const auto colon = spec.find(':');
  const PGroup a = parse_group_spec(spec.substr(0, colon), p);
  const PGroup b = parse_group_spec(spec.substr(colon + 1), p);
  if (a.prime() != b.prime()) throw InvalidInput(spec + ": factors over different primes");
  const PGroup g = direct_product(a, b).renamed(a.name() + "x" + b.name());
  io::FactorizationBases bases;
  const std::size_t n = g.order();
  for (Element x = 0; x < a.order(); ++x) bases.b.push_back(FpVector::unit(g.prime(), n, x * b.order()));
  for (Element y = 0; y < b.order(); ++y) bases.c.push_back(FpVector::unit(g.prime(), n, y));
  return {g, bases};
}

std::vector<Item> gather(const RunConfig& config) {
  std::vector<Item> items;
  for (const auto& path : config.inputs) items.push_back({path, io::load_group_file(path)});
  for (const auto& spec : config.catalog) {
    if (spec.find(':') != std::string::npos)
      items.push_back({spec, product_input(spec, config.p)});
    else
      items.push_back({spec, {parse_group_spec(spec, config.p), std::nullopt}});
  }
  if (config.inputs.empty() && config.catalog.empty())
    for (const auto& e : standard_catalog(config.p, config.max_order))
      items.push_back({e.spec, {parse_group_spec(e.spec), std::nullopt}});
  return items;
}

json lemmas_for(const PGroup& g, bool& pass) {
  const GroupAlgebra ctx(g);
  const unsigned e = std::max(1u, log_exponent(g));
  json checks = json::array();
  for (int item = 1; item <= 3; ++item)
    for (unsigned i = 1; i <= e; ++i)
      for (unsigned j = 1; j <= (item == 3 ? e : 1); ++j) {
        const IdentityReport r = lemma_identity_check(ctx, item, i, j);
        pass = pass && r.holds();
        checks.push_back(io::report_json(r));
      }
  return json{{"checks", checks}};
}

json cyclic_for(const PGroup& g, const RunConfig& config, bool& pass) {
  json rows = json::array();
  std::uint64_t q = 1;
  for (unsigned i = 1; i <= log_exponent(g); ++i) {
    q *= g.prime();
    const CyclicFactorResult r = cyclic_factor_test(g, i);
    const bool oracle = has_cyclic_factor_of_order(g, q, config.oracle_cap);
    json row = io::report_json(r);
    row["id"] = "lemma4-cyclic";
    row["oracle_has_factor"] = oracle;
    row["agrees"] = oracle == r.has_factor;
    row["exponent_matches"] = r.exponent_found == r.r_exponent;
    pass = pass && oracle == r.has_factor && r.exponent_found == r.r_exponent;
    rows.push_back(std::move(row));
  }
  return json{{"cases", rows}};
}

json recover_for(const Item& item, const RunConfig& config, bool& pass) {
  if (!item.input.factorization) throw InvalidInput(item.label + ": no factorization given");
  const PGroup& g = item.input.group;
  const GroupAlgebra ctx(g);
  const auto& bases = *item.input.factorization;
  const TensorFactorization fact = verify_tensor_factorization(
      ctx, AugmentedSubalgebra(ctx, FpSubspace::span(g.prime(), g.order(), bases.b)),
      AugmentedSubalgebra(ctx, FpSubspace::span(g.prime(), g.order(), bases.c)));
  RecoverOptions options;
  options.seed = config.seed;
  options.basis.seed = config.seed;
  options.basis.enum_cap = config.enum_cap;
  const DecompositionReport report = recover_decomposition(fact, options);
  json props = json::array();
  for (char part : {'a', 'c', 'd'}) {
    const IdentityReport r = babelian_checks(fact, part);
    pass = pass && r.holds();
    props.push_back(io::report_json(r));
  }
  pass = pass && report.verified;
  return json{{"dim_b", fact.b.dim()}, {"dim_c", fact.c.dim()}, {"decomposition", io::report_json(report)},
              {"propositions", props}};
}

json oracle_for(const PGroup& g, const RunConfig& config) {
  json pairs = json::array();
  for (const auto& [h, k] : direct_factor_oracle(g, config.oracle_cap))
    pairs.push_back(json{{"h", io::subgroup_json(h)}, {"k", io::subgroup_json(k)}});
  json factors = json::array();
  for (const auto& f : indecomposable_factors(g, config.oracle_cap)) factors.push_back(io::fingerprint_json(f));
  return json{{"pairs", pairs}, {"indecomposable_factors", factors}};
}

Outcome process(const Item& item, const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const PGroup& g = item.input.group;
  Outcome out;
  out.result = json{{"group", item.label}, {"p", g.prime()}, {"fingerprint", io::fingerprint_json(g)}};
  bool pass = true;
  try {
    const std::string& cmd = config.command;
    if (cmd == "catalog") {
      out.result["name"] = g.name();
    } else if (cmd == "lemmas") {
      out.result.update(lemmas_for(g, pass));
    } else if (cmd == "cyclic-factor") {
      out.result.update(cyclic_for(g, config, pass));
    } else if (cmd == "recover") {
      out.result.update(recover_for(item, config, pass));
    } else if (cmd == "certify") {
      out.result["certificate"] = io::report_json(certify_indecomposable(g, config.oracle_cap));
    } else if (cmd == "oracle") {
      out.result.update(oracle_for(g, config));
    }
    if (!pass) out.code = kCheckFailed;
  } catch (const CheckFailed& e) {
    pass = false;
    out.code = kCheckFailed;
    out.result["error"] = json{{"kind", "check"}, {"step", e.step()}, {"message", e.what()}};
  } catch (const CapExceeded& e) {
    pass = false;
    out.code = kCapExceeded;
    out.result["error"] = json{{"kind", "cap"}, {"message", e.what()}};
  } catch (const InvalidInput& e) {
    pass = false;
    out.code = kParseError;
    out.result["error"] = json{{"kind", "input"}, {"message", e.what()}};
  }
  out.result["pass"] = pass;
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

json config_json(const RunConfig& c) {
  return json{{"command", c.command},  {"p", c.p},           {"inputs", c.inputs},
              {"catalog", c.catalog},  {"max_order", c.max_order}, {"oracle_cap", c.oracle_cap},
              {"enum_cap", c.enum_cap}, {"seed", c.seed}};
}

int combine(int a, int b) {
  if (a == kCapExceeded || b == kCapExceeded) return kCapExceeded;
  if (a == kParseError || b == kParseError) return kParseError;
  return std::max(a, b);
}

}  // namespace

std::string render(const json& doc) { return doc.dump(2); }

std::string RunResult::body_text() const { return render(body()); }

RunResult run(const RunConfig& config) {
  static const std::vector<std::string> commands = {"catalog", "lemmas", "cyclic-factor", "recover", "certify", "oracle"};
  if (std::find(commands.begin(), commands.end(), config.command) == commands.end())
    throw InvalidInput("unknown command '" + config.command + "'");
  if (config.p != 2 && config.p != 3 && config.p != 5) throw InvalidInput("--p must be 2, 3 or 5");
  if (config.oracle_cap == 0 || config.enum_cap == 0 || config.max_order == 0)
    throw InvalidInput("caps must be positive");

  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  if (config.command == "catalog" && !config.emit_factorization.empty()) {
    const io::GroupInput in = product_input(config.emit_factorization, config.p);
    result.envelope = json{{"body", io::group_json(in.group, *in.factorization)}, {"timing", json::object()}};
    return result;
  }

  const std::vector<Item> items = gather(config);
  std::vector<Outcome> outcomes(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) outcomes[i] = process(items[i], config);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(config.workers, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json results = json::array(), per_group = json::array();
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    results.push_back(o.result);
    per_group.push_back(o.ms);
    result.exit_code = combine(result.exit_code, o.code);
    if (o.code == kPass) ++passed;
  }
  const json body{{"format", 1},
                  {"tool", json{{"name", "modalg"}, {"version", MODALG_VERSION}}},
                  {"config", config_json(config)},
                  {"results", results},
                  {"summary", json{{"groups", items.size()}, {"passed", passed}, {"failed", items.size() - passed}}}};
  const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  result.envelope = json{{"body", body}, {"timing", json{{"total_ms", total}, {"per_group_ms", per_group}}}};
  return result;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"modalg: modular group algebras of p-groups"};
  app.require_subcommand(1);
  RunConfig config;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", config.p, "prime (2, 3 or 5)");
    sub->add_option("--input", config.inputs, "group JSON file")->check(CLI::ExistingFile);
    sub->add_option("--catalog", config.catalog, "catalog spec, or A:B for a product factorization");
    sub->add_option("--max-order", config.max_order, "largest catalog group when no input is given");
    sub->add_option("--oracle-cap", config.oracle_cap, "largest order handed to the direct factor oracle");
    sub->add_option("--enum-cap", config.enum_cap, "largest 1+I(B) enumerated before sampling");
    sub->add_option("--seed", config.seed, "seed for randomized steps");
    sub->add_option("--out", config.out, "write the report here instead of stdout");
    sub->add_option("--workers", config.workers, "groups processed concurrently");
  };
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"catalog", "list built-in groups"},
      {"lemmas", "ideal identity battery"},
      {"cyclic-factor", "cyclic factor criterion against the oracle"},
      {"recover", "recover G = B-side x C-side from a factorization"},
      {"certify", "tensor indecomposability certificates"},
      {"oracle", "direct factor oracle dump"}};
  for (const auto& [name, help] : subs) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    if (name == "catalog")
      sub->add_option("--emit-factorization", config.emit_factorization, "A:B, write the product as a group file");
    sub->callback([&config, name = name] { config.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kParseError;
  }

  RunResult result;
  try {
    result = run(config);
  } catch (const InvalidInput& e) {
    std::cerr << "modalg: " << e.what() << "\n";
    return kParseError;
  } catch (const CapExceeded& e) {
    std::cerr << "modalg: " << e.what() << "\n";
    return kCapExceeded;
  }
  const bool group_file = config.command == "catalog" && !config.emit_factorization.empty();
  const std::string text = render(group_file ? result.body() : result.envelope) + "\n";
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.out);
    if (!out) {
      std::cerr << "modalg: cannot write " << config.out << "\n";
      return kParseError;
    }
    out << text;
  }
  return result.exit_code;
}

}  // namespace modalg::cli
