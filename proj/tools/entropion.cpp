// Copyright 2026 The Entropion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// entropion: run verification suites, evaluate entropy quantities on JSON
// inputs, and print quadrature convergence tables.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 some suite failed.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entropion/entropy.hpp"
#include "entropion/holevo.hpp"
#include "entropion/json_io.hpp"
#include "entropion/suites.hpp"

namespace {

using namespace entropion;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct VerifyArgs {
  std::vector<std::string> suites{"all"};
  std::vector<std::size_t> dims;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::string format = "json";
  std::string out;
  unsigned workers = 1;
  bool list = false;
};

int cmd_list() {
  for (const auto& s : suite_registry()) std::cout << s.name << "\t" << s.description << "\n";
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, bool seed_given) {
  if (args.list) return cmd_list();
  SuiteOptions opts;
  opts.dims = args.dims;
  opts.trials = args.trials;
  opts.tol = args.tol;
  opts.workers = args.workers;
  opts.seed = args.seed;
  if (!seed_given) {
    if (const char* env = std::getenv("ENTROPION_SEED")) {
      try {
        opts.seed = std::stoull(env);
      } catch (const std::exception&) {
        std::cerr << "error: ENTROPION_SEED is not an unsigned integer: " << env << "\n";
        return kExitUsage;
      }
    }
  }
  for (std::size_t d : opts.dims)
    if (d == 0) {
      std::cerr << "error: --dims entries must be positive\n";
      return kExitUsage;
    }

  std::vector<std::string> names;
  try {
    names = expand_suite_names(args.suites);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " (see `entropion verify --list`)\n";
    return kExitUsage;
  }

  std::vector<CheckReport> reports;
  bool all_pass = true;
  for (const auto& name : names) {
    CheckReport r = run_suite(name, opts);
    all_pass = all_pass && r.pass();
    std::cerr << (r.pass() ? "PASS " : "FAIL ") << name << " worst_margin=" << format_number(r.worst_margin)
              << " trials=" << r.trials << "\n";
    reports.push_back(std::move(r));
  }

  const std::string text = args.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(args.out, std::ios::binary);
    if (!(f << text)) {
      std::cerr << "error: cannot write '" << args.out << "'\n";
      return kExitUsage;
    }
  }
  return all_pass ? kExitOk : kExitFailed;
}

void print_value(const std::string& quantity, double value) {
  JsonWriter w;
  w.begin_object().key("quantity").value(quantity).key("value").value(value).end_object();
  std::cout << w.str() << "\n";
}

int cmd_compute(const std::string& quantity, const std::vector<std::string>& files) {
  const auto need = [&](std::size_t n) {
    if (files.size() != n)
      throw ParseError(quantity + " takes " + std::to_string(n) + " input file" + (n == 1 ? "" : "s"));
  };
  if (quantity == "entropy") {
    need(1);
    print_value(quantity, von_neumann_entropy(parse_density(read_file(files[0]))));
  } else if (quantity == "relent") {
    need(2);
    const HermitianMatrix p = parse_hermitian(read_file(files[0]));
    const HermitianMatrix q = parse_hermitian(read_file(files[1]));
    print_value(quantity, relative_entropy(p, q).value());
  } else if (quantity == "chi") {
    need(1);
    print_value(quantity, chi(parse_ensemble(read_file(files[0]))));
  } else if (quantity == "bures") {
    need(2);
    print_value(quantity, bures_distance(parse_density(read_file(files[0])), parse_density(read_file(files[1]))));
  } else {
    throw ParseError("unknown quantity '" + quantity + "'");
  }
  return kExitOk;
}

int cmd_convergence(const std::string& p_file, const std::string& q_file, std::size_t max_panels) {
  const HermitianMatrix p = parse_hermitian(read_file(p_file));
  const HermitianMatrix q = parse_hermitian(read_file(q_file));
  const EntropyValue reference = relative_entropy(p, q);
  if (!reference.is_finite()) throw KernelObstruction("convergence: ker(Q) is not contained in ker(P)");
  std::cout << "panels,abs_error\n";
  for (std::size_t panels = 1; panels <= max_panels; panels *= 2) {
    const double value = relative_entropy_integral_fixed(p, q, panels).value();
    std::cout << panels << "," << format_number(std::abs(value - reference.value())) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropion: relative entropy numerics and inequality verification"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run randomized verification suites");
  v->add_option("--suites", verify.suites, "suite names, comma separated, or 'all'")->delimiter(',');
  v->add_option("--dims", verify.dims, "dimensions to cycle through (suite defaults when omitted)")->delimiter(',');
  v->add_option("--trials", verify.trials, "trials per suite (suite default when omitted)")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = v->add_option("--seed", verify.seed, "base seed (falls back to ENTROPION_SEED, then 0)");
  v->add_option("--tol", verify.tol, "pass threshold: margin >= -tol")->check(CLI::PositiveNumber);
  v->add_option("--format", verify.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  v->add_option("--out", verify.out, "write the report here instead of stdout");
  v->add_option("--workers", verify.workers, "worker threads; reports do not depend on it")
      ->check(CLI::PositiveNumber);
  v->add_flag("--list", verify.list, "list suites and exit");

  std::string quantity;
  std::vector<std::string> files;
  auto* c = app.add_subcommand("compute", "evaluate a quantity on JSON inputs");
  c->add_option("quantity", quantity, "entropy | relent | chi | bures")
      ->required()
      ->check(CLI::IsMember({"entropy", "relent", "chi", "bures"}));
  c->add_option("files", files, "input files")->required();

  std::string p_file, q_file;
  std::size_t max_panels = 64;
  auto* k = app.add_subcommand("convergence", "quadrature error against the spectral value, panels doubling");
  k->add_option("P", p_file, "matrix JSON")->required();
  k->add_option("Q", q_file, "matrix JSON")->required();
  k->add_option("--max-panels", max_panels, "largest panel count")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*v) return cmd_verify(verify, seed_opt->count() > 0);
    if (*c) return cmd_compute(quantity, files);
    if (*k) return cmd_convergence(p_file, q_file, max_panels);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
