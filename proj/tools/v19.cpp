#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "v19/cli.hpp"

using namespace v19;

namespace {

struct RawOptions {
  std::string model = "ik";
  std::string p, mu, x, y, q, backend, boundary;
  std::size_t L = 0;
  unsigned samples = 0;
  unsigned q_samples = 5;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string output = "json";
  bool timing = false;
};

void add_common(CLI::App* app, RawOptions& o) {
  app->add_option("--model", o.model, "ik or fz")->check(CLI::IsMember({"ik", "fz"}));
  app->add_option("--seed", o.seed, "seed of the mt19937_64 generator");
  app->add_option("--out", o.out, "report path, - for standard output");
  app->add_option("--output", o.output, "report format (json only)")->check(CLI::IsMember({"json"}));
  app->add_flag("--timing", o.timing, "add wall-clock timing to the report");
}

RunConfig to_config(Command cmd, const RawOptions& o) {
  RunConfig c;
  c.command = cmd;
  c.model = parse_model(o.model);
  if (!o.p.empty()) c.p = parse_rational(o.p);
  if (!o.mu.empty()) c.mu = parse_rational_list(o.mu);
  if (o.L) c.L = o.L;
  c.samples = o.samples;
  c.seed = o.seed;
  if (!o.backend.empty()) c.backend = parse_backend(o.backend);
  if (!o.x.empty()) c.x = parse_rational_list(o.x);
  if (!o.y.empty()) c.y = parse_rational_list(o.y);
  if (!o.q.empty()) c.q = parse_rational_list(o.q);
  c.boundary = o.boundary;
  c.q_samples = o.q_samples;
  c.out = o.out;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nineteen-vertex engine: R-matrices, partition functions, algebra checks, ZH solver.\n"
               "Spectral values are multiplicative: --x/--y take X = e^{2 lambda}, --mu takes m = e^{2 mu}.\n"
               "V19_THREADS caps the worker count."};
  app.require_subcommand(1);
  RawOptions o;
  Command cmd = Command::VerifyYbe;
  std::string kind;

  auto* verify = app.add_subcommand("verify", "exact identity checks");
  verify->require_subcommand(1);
  auto* ybe = verify->add_subcommand("ybe", "Yang-Baxter equation at random points");
  add_common(ybe, o);
  ybe->add_option("--p", o.p, "fixed q^{1/2}; drawn per sample if omitted");
  ybe->add_option("--samples", o.samples, "number of samples (default 20)");
  ybe->callback([&] { cmd = Command::VerifyYbe; });

  auto* alg = verify->add_subcommand("algebra", "Yang-Baxter algebra relations and functional relations");
  add_common(alg, o);
  alg->add_option("--L", o.L, "lattice length")->required();
  alg->add_option("--p", o.p, "fixed q^{1/2}; drawn per sample if omitted");
  alg->add_option("--samples", o.samples, "samples per relation (default 5)");
  alg->callback([&] { cmd = Command::VerifyAlgebra; });

  auto* st = verify->add_subcommand("structure", "degrees, zeros, symmetry and initial condition");
  add_common(st, o);
  st->add_option("--L", o.L, "lattice length (1..4)");
  st->add_option("--p", o.p, "q^{1/2}; drawn if omitted");
  st->add_option("--mu", o.mu, "m_1,...,m_L; drawn if omitted");
  st->callback([&] { cmd = Command::VerifyStructure; });

  auto* compute = app.add_subcommand("compute", "evaluate a partition function");
  compute->require_subcommand(1);
  for (const char* k : {"z", "f", "fbar", "bruteforce"}) {
    auto* sub = compute->add_subcommand(k, std::string("compute ") + k);
    add_common(sub, o);
    sub->add_option("--p", o.p, "q^{1/2}")->required();
    sub->add_option("--mu", o.mu, "m_1,...,m_L")->required();
    sub->add_option("--L", o.L, "lattice length (must match --mu)");
    if (std::string(k) == "bruteforce") {
      sub->add_option("--x", o.x, "row spectral values, bottom row first")->required();
      sub->add_option("--boundary", o.boundary, "z, f or fbar")->required()->check(CLI::IsMember({"z", "f", "fbar"}));
    } else {
      sub->add_option("--x", o.x, std::string(k) == "z" ? "X_1,...,X_L" : "U_1,...,U_{L-1}");
      if (std::string(k) != "z") sub->add_option("--y", o.y, "Y1,Y2")->required();
    }
    sub->callback([&, k] {
      cmd = Command::Compute;
      kind = k;
    });
  }

  auto* solve = app.add_subcommand("solve", "solve the ZH system for the ansatz coefficients");
  add_common(solve, o);
  solve->add_option("--L", o.L, "lattice length (1..3)")->required();
  solve->add_option("--p", o.p, "q^{1/2}")->required();
  solve->add_option("--mu", o.mu, "m_1,...,m_L (default all 1)");
  solve->add_option("--backend", o.backend, "rational or modular (default: rational for L<=2)")
      ->check(CLI::IsMember({"rational", "modular"}));
  solve->callback([&] { cmd = Command::Solve; });

  auto* tables = app.add_subcommand("tables", "compare L=2 solutions with the coefficient tables");
  add_common(tables, o);
  tables->add_option("--q-samples", o.q_samples, "number of sampled q values (default 5)");
  tables->add_option("--q", o.q, "explicit q values (squares of rationals) instead of sampling");
  tables->callback([&] { cmd = Command::Tables; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    RunConfig config = to_config(cmd, o);
    config.compute_kind = kind;
    const auto start = std::chrono::steady_clock::now();
    RunResult result = run(config);
    if (o.timing)
      result.report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    emit(result.report, config.out);
    return result.passed ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
