// arbor: command-line front end over the C API in arbor/arbor.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arbor/arbor.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string gamma = "0";
  std::optional<std::string> c;
  std::optional<std::string> a;
  std::string b = "0";
  std::uint64_t depth = 8;
  std::uint64_t from = 1;
  std::optional<std::uint64_t> to;
  std::optional<std::uint64_t> level;
  int genus = 1;
  std::uint64_t xbound = 0;
  std::uint64_t X = 1'000'000;
  std::vector<std::uint64_t> checkpoints;
  std::size_t threads = 1;
  std::optional<std::size_t> shards;
  std::size_t segment_size = 1 << 16;
  std::optional<double> kappa1, kappa2, kappa3;
  std::optional<std::uint64_t> n;
  std::string x = "0";
  double eps = 1e-6;
  std::optional<std::string> value;
  std::string format = "json";
  bool json_flag = false;
  arbor_budget budget{};
};

using FamilyPtr = std::unique_ptr<arbor_family, decltype(&arbor_family_destroy)>;
using MapPtr = std::unique_ptr<arbor_map, decltype(&arbor_map_destroy)>;

// Status from the library plus whatever output it produced.
struct CallResult {
  arbor_status status;
  std::string out;
};

CallResult call(const std::function<arbor_status(char**)>& fn) {
  char* raw = nullptr;
  arbor_status st = fn(&raw);
  CallResult r{st, raw ? raw : ""};
  arbor_string_free(raw);
  return r;
}

[[noreturn]] void fail(arbor_status st) {
  throw std::runtime_error(std::string(arbor_status_name(st)) + ": " + arbor_last_error());
}

FamilyPtr make_family(const Options& o) {
  if (!o.c) throw UsageError("--c is required for this subcommand");
  arbor_family* f = nullptr;
  if (auto st = arbor_family_create(o.gamma.c_str(), o.c->c_str(), &f); st != ARBOR_OK) {
    throw UsageError(std::string("--gamma/--c: ") + arbor_last_error());
  }
  return FamilyPtr(f, &arbor_family_destroy);
}

MapPtr make_map(const Options& o) {
  auto family = make_family(o);
  if (!o.a) throw UsageError("--a is required for this subcommand");
  arbor_map* m = nullptr;
  if (auto st = arbor_family_specialize(family.get(), o.a->c_str(), &m); st != ARBOR_OK) {
    throw UsageError(std::string("--a: ") + arbor_last_error());
  }
  return MapPtr(m, &arbor_map_destroy);
}

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

// Prints the library output in the requested format; returns the exit code.
int finish(const CallResult& r, const Options& o, bool json_lines = false) {
  if (r.status != ARBOR_OK && !arbor_is_budget_error(r.status)) fail(r.status);
  if (!r.out.empty()) {
    if (o.format == "text" && !json_lines && r.out.front() == '{') {
      render_text(json::parse(r.out), "", std::cout);
    } else {
      std::cout << r.out;
      if (r.out.back() != '\n') std::cout << '\n';
    }
  }
  if (r.status != ARBOR_OK) {
    std::cerr << "arbor: " << arbor_status_name(r.status) << ": " << arbor_last_error() << " (partial results above)\n";
    return kExitBudget;
  }
  return kExitOk;
}

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required for this subcommand");
  return *v;
}

int run(const std::string& cmd, Options& o) {
  if (o.json_flag) o.format = "json";
  if (o.format == "csv" && cmd != "density") throw UsageError("--format csv is only available for density");
  const arbor_budget* budget = &o.budget;

  if (cmd == "family-info") {
    auto f = make_family(o);
    return finish(call([&](char** out) { return arbor_family_info(f.get(), budget, out); }), o);
  }
  if (cmd == "nphi-bound") {
    auto f = make_family(o);
    if (!o.kappa1 || !o.kappa2 || !o.kappa3) throw UsageError("--kappa1, --kappa2 and --kappa3 are required");
    return finish(call([&](char** out) { return arbor_nphi_bound(f.get(), *o.kappa1, *o.kappa2, *o.kappa3, out); }), o);
  }
  if (cmd == "index-bound") {
    const auto n = need(o.n, "--n");
    return finish(call([&](char** out) { return arbor_index_bound(n, budget, out); }), o);
  }
  if (cmd == "factorize") {
    if (!o.value) throw UsageError("--value is required for factorize");
    return finish(call([&](char** out) { return arbor_factorize(o.value->c_str(), budget, out); }), o);
  }

  auto m = make_map(o);
  if (cmd == "orbit") {
    return finish(call([&](char** out) { return arbor_orbit(m.get(), o.b.c_str(), o.depth, budget, out); }), o, true);
  }
  if (cmd == "critical-orbit") {
    return finish(call([&](char** out) { return arbor_critical_orbit(m.get(), o.depth, budget, out); }), o);
  }
  if (cmd == "stability") {
    return finish(call([&](char** out) { return arbor_stability_scan(m.get(), o.depth, budget, out); }), o);
  }
  if (cmd == "certify") {
    const auto to = o.to.value_or(o.depth);
    return finish(call([&](char** out) { return arbor_certify_tower(m.get(), o.from, to, budget, out); }), o);
  }
  if (cmd == "primitive-divisors") {
    const auto level = o.level.value_or(o.depth);
    return finish(call([&](char** out) { return arbor_primitive_divisors(m.get(), level, budget, out); }), o);
  }
  if (cmd == "discriminant") {
    const auto level = o.level.value_or(o.depth);
    return finish(call([&](char** out) { return arbor_discriminant(m.get(), level, budget, out); }), o);
  }
  if (cmd == "curve") {
    const auto level = need(o.level, "--level");
    return finish(call([&](char** out) { return arbor_curve(m.get(), level, o.genus, o.xbound, budget, out); }), o);
  }
  if (cmd == "height") {
    return finish(call([&](char** out) { return arbor_canonical_height(m.get(), o.x.c_str(), o.eps, out); }), o);
  }
  if (cmd == "density") {
    arbor_density_options d;
    arbor_density_options_init(&d);
    d.X = o.X;
    d.checkpoints = o.checkpoints.empty() ? nullptr : o.checkpoints.data();
    d.checkpoint_count = o.checkpoints.size();
    d.threads = o.threads;
    d.shards = o.shards.value_or(o.threads);
    d.segment_size = o.segment_size;
    d.csv = o.format == "csv";
    return finish(call([&](char** out) { return arbor_density(m.get(), o.b.c_str(), &d, out); }), o, d.csv);
  }
  throw UsageError("unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  arbor_budget_init(&o.budget);

  CLI::App app{"arbor: critical orbits, primitive divisors and Galois tower certificates for quadratic families"};
  app.set_version_flag("--version", arbor_version());
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Key-value config file (flags win over config)");
  app.allow_config_extras(CLI::config_extras_mode::error);
  // Coefficient lists are comma separated, so commas must not split config values.
  app.get_config_formatter_base()->arrayDelimiter(';');

  app.add_option("--gamma", o.gamma, "gamma(t) coefficients, low to high")->capture_default_str();
  app.add_option("--c", o.c, "c(t) coefficients, low to high");
  app.add_option("--a", o.a, "Specialization parameter");
  app.add_option("--b", o.b, "Orbit starting point")->capture_default_str();
  app.add_option("-N,--depth", o.depth, "Iteration depth")->capture_default_str();
  app.add_option("--from", o.from, "First tower level")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--to", o.to, "Last tower level (default: depth)");
  app.add_option("--level", o.level, "Critical-orbit level");
  app.add_option("--genus", o.genus, "Curve genus (1 or 2)")->capture_default_str()->check(CLI::IsMember({1, 2}));
  app.add_option("--xbound", o.xbound, "Integral point search bound (0: no search)")->capture_default_str();
  app.add_option("--X", o.X, "Density prime bound")->capture_default_str();
  app.add_option("--checkpoints", o.checkpoints, "Density checkpoints")->delimiter(',');
  app.add_option("--threads", o.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--shards", o.shards, "Density prime shards (default: threads)")->check(CLI::PositiveNumber);
  app.add_option("--segment-size", o.segment_size, "Sieve segment size")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--kappa1", o.kappa1, "Hall-Lang constant kappa1 (> 0)");
  app.add_option("--kappa2", o.kappa2, "Hall-Lang constant kappa2");
  app.add_option("--kappa3", o.kappa3, "Hall-Lang constant kappa3");
  app.add_option("--n", o.n, "Level for index-bound");
  app.add_option("--x", o.x, "Point for canonical height (integer or p/q)")->capture_default_str();
  app.add_option("--eps", o.eps, "Canonical height tolerance")->capture_default_str();
  app.add_option("--value", o.value, "Integer to factor");
  app.add_option("--max-bits", o.budget.max_bits, "Bit budget per orbit value")->capture_default_str();
  app.add_option("--trial-bound", o.budget.trial_bound, "Trial division bound")->capture_default_str();
  app.add_option("--rho-iters", o.budget.rho_iters, "Pollard-rho iterations per cofactor")->capture_default_str();
  app.add_option("--seed", o.budget.seed, "Factorization seed")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--json", o.json_flag, "Shorthand for --format json");

  const std::map<std::string, std::string> commands = {
      {"family-info", "Isotriviality, m_phi, exceptional polynomial and set, height constants"},
      {"orbit", "Orbit of --b as JSON lines"},
      {"critical-orbit", "Critical orbit and conjugation identity"},
      {"stability", "Scan the critical orbit for rational squares"},
      {"certify", "Per-level maximality certificates"},
      {"primitive-divisors", "Square-free primitive prime divisors at --level"},
      {"discriminant", "|Delta_n| by recurrence, cross-checked directly for small n"},
      {"curve", "Curve model, forced integral point, optional point search"},
      {"height", "Canonical height estimate and the wandering-point lower bound"},
      {"density", "Proportion of primes dividing the orbit of --b"},
      {"nphi-bound", "Bound-chain constants and n_phi for given kappa"},
      {"index-bound", "2^(2^n - n - 1)"},
      {"factorize", "Factor --value within the budget"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const UsageError& e) {
    std::cerr << "arbor " << cmd << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "arbor " << cmd << ": " << e.what() << '\n';
    return kExitUsage;
  }
}
