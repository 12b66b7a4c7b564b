// Copyright 2026 The grassembed Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "grassembed/acceptance.hpp"
#include "grassembed/catalog.hpp"
#include "grassembed/embeddings.hpp"
#include "grassembed/io.hpp"
#include "grassembed/parallel.hpp"

namespace grassembed::cli {

namespace {

// Raised for a legitimate negative answer after the report is written.
struct VerifiedFalse {};

const char* boolean(bool b) { return b ? "true" : "false"; }

std::uint64_t power(std::uint64_t q, std::size_t n) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) v *= q;
  return v;
}

struct GraphParams {
  std::uint64_t q = 2;
  std::size_t n = 4;
  std::size_t k = 2;
};

void add_graph_params(CLI::App* app, GraphParams& p) {
  app->add_option("--q", p.q, "field order")->required();
  app->add_option("--n", p.n, "ambient dimension")->required();
  app->add_option("--k", p.k, "grade")->required();
}

void cmd_gen(const GraphParams& p, const std::string& format_name, const std::string& path, std::ostream& out) {
  const GraphFormat format = parse_graph_format(format_name);
  const GrassmannGraph g(Field::of_order(p.q), p.n, p.k);
  const std::string text = export_graph(g, format);
  if (path.empty()) {
    out << text;
    return;
  }
  write_file(path, text);
  out << "vertices=" << g.size() << " edges=" << g.edge_count() << " format=" << format_name << " out=" << path
      << '\n';
}

void cmd_stats(const GraphParams& p, std::ostream& out) {
  const Field f = Field::of_order(p.q);
  if (p.k > p.n) throw Error("grade exceeds ambient dimension");
  const std::uint64_t vertices = gaussian_binomial(p.n, p.k, p.q);
  // q [k]_q [n-k]_q neighbours
  const std::uint64_t degree = p.q * ((power(p.q, p.k) - 1) / (p.q - 1)) * ((power(p.q, p.n - p.k) - 1) / (p.q - 1));
  const unsigned __int128 edges = static_cast<unsigned __int128>(vertices) * degree / 2;
  out << "vertices=" << vertices << " edges=" << static_cast<std::uint64_t>(edges)
      << " diameter=" << std::min(p.k, p.n - p.k) << " degree=" << degree;
  if (p.k >= 1) out << " star_size=" << star_size(p.n, p.k, p.q);
  if (p.k + 1 <= p.n) out << " top_size=" << top_size(p.k, p.q);
  out << '\n';
}

Subspace read_subspace(const std::string& path) { return Subspace::span(read_matrix(read_file(path))); }

struct ConstructArgs {
  std::string type;
  std::string map;
  std::string subspace;
  std::string partner;
  std::string flavor = "quotient";
  std::size_t k = 0;
  std::string out;
};

void cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const SemilinearMap l = read_semilinear(read_file(a.map));
  const Subspace s = read_subspace(a.subspace);
  GrassmannMap f;
  if (a.type == "A" || a.type == "B") {
    if (a.k == 0) throw Error("--k is required for type " + a.type);
    f = a.type == "A" ? construct_type_A(s, l, a.k) : construct_type_B(s, l, a.k);
  } else if (a.type == "balanced") {
    if (a.partner.empty()) throw Error("--partner is required for the balanced construction");
    if (a.flavor != "quotient" && a.flavor != "dual-quotient") throw Error("--flavor must be quotient or dual-quotient");
    f = construct_balanced(s, read_subspace(a.partner), l,
                           a.flavor == "quotient" ? BalancedFlavor::Quotient : BalancedFlavor::DualQuotient);
  } else {
    throw Error("--type must be A, B or balanced");
  }
  write_file(a.out, write_grassmann_map(f));
  out << "type=" << a.type << " domain_vertices=" << f.domain.size() << " codomain_vertices=" << f.codomain.size()
      << " out=" << a.out << '\n';
}

void cmd_verify(const std::string& path, std::ostream& out) {
  const GrassmannMap f = read_grassmann_map(read_file(path));
  const VerificationReport r = verify(f);
  out << "injective=" << boolean(r.injective) << " adjacency_forward=" << boolean(r.adjacency_forward)
      << " adjacency_backward=" << boolean(r.adjacency_backward) << " isometric=" << boolean(r.isometric)
      << " type=" << to_string(r.type) << '\n';
  for (const auto& [i, j] : r.witnesses) out << "witness=" << i << ',' << j << '\n';
  if (!r.isometric) throw VerifiedFalse{};
}

struct DecomposeArgs {
  std::string path;
  bool dualize_domain = false;
  bool full_validation = false;
  std::string out_map;
  std::string out_subspace;
};

void cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
  const GrassmannMap f = read_grassmann_map(read_file(a.path));
  Decomposition d = [&] {
    try {
      return decompose(f, {a.dualize_domain, a.full_validation});
    } catch (const BudgetError&) {
      throw;
    } catch (const Error& e) {
      out << "decomposed=false reason=\"" << e.what() << "\"\n";
      throw VerifiedFalse{};
    }
  }();
  out << "decomposed=true type=" << to_string(d.type) << " subspace_dim=" << d.subspace.dim()
      << " domain_dualized=" << boolean(d.domain_dualized) << " sigma=" << d.inner_map.sigma().generator_image()
      << " balanced=" << boolean(d.partner.has_value()) << '\n';
  if (!a.out_map.empty()) write_file(a.out_map, write_semilinear(d.inner_map));
  if (!a.out_subspace.empty()) write_file(a.out_subspace, write_matrix(d.subspace.basis()));
}

void cmd_rigidity(const std::string& path, std::uint64_t budget, std::ostream& out) {
  const GrassmannMap f = read_grassmann_map(read_file(path));
  const RigidityReport r = check_l_rigidity(f, budget);
  out << "rigid=" << boolean(r.rigid) << " generators=" << r.checked_generators.size()
      << " failures=" << r.failures.size() << '\n';
  for (auto i : r.failures) out << "failure=" << i << '\n';
  if (!r.rigid) throw VerifiedFalse{};
}

struct FeasibilityArgs {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t q2 = 0;
  std::size_t n2 = 0;
  std::size_t k2 = 0;
};

void cmd_feasibility(const FeasibilityArgs& a, std::ostream& out) {
  const FeasibilityReport r = feasibility(a.q, a.n, a.k, a.q2, a.n2, a.k2);
  out << "isometric_possible=" << boolean(r.isometric_possible) << " type_a_rigid=" << boolean(r.type_a_rigid_condition)
      << " type_b_rigid=" << boolean(r.type_b_rigid_condition) << " field_hom=" << boolean(r.field_hom_exists) << '\n';
}

void cmd_selftest(bool list, const std::vector<int>& only, bool timings, std::uint64_t seed, std::ostream& out) {
  if (list) {
    for (const auto& c : acceptance::criteria()) out << "criterion=" << c.id << " limit_s=" << c.limit_seconds << " name=\"" << c.name << "\"\n";
    return;
  }
  out << "seed=" << seed << '\n';
  bool all = true;
  for (const auto& c : acceptance::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto r = acceptance::run(c.id, seed);
    all = all && r.passed;
    if (timings) {
      out << acceptance::format(r) << '\n';
    } else {
      out << "criterion=" << r.id << " status=" << (r.passed ? "PASS" : "FAIL") << " name=\"" << r.name
          << "\" detail=\"" << r.detail << "\"\n";
    }
  }
  if (!all) throw VerifiedFalse{};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"grassembed: Grassmann graph embeddings over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  std::uint64_t budget = 1u << 16;
  std::uint64_t seed = catalog::kDefaultSeed;
  app.add_option("--threads", threads, "cap on worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", budget, "cap on search sizes");
  app.add_option("--seed", seed, "seed for random catalogs");

  GraphParams gen_params;
  std::string format = "edge-list";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "export a Grassmann graph");
  add_graph_params(gen, gen_params);
  gen->add_option("--format", format, "edge-list or dot");
  gen->add_option("--out", gen_out, "output file (default: standard output)");

  GraphParams stats_params;
  auto* stats = app.add_subcommand("stats", "vertex, edge and clique counts");
  add_graph_params(stats, stats_params);

  auto* embed = app.add_subcommand("embed", "embeddings between Grassmann graphs");
  embed->require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = embed->add_subcommand("construct", "build an embedding table");
  construct->add_option("--type", construct_args.type, "A, B or balanced")->required();
  construct->add_option("--map", construct_args.map, "semilinear map file")->required();
  construct->add_option("--subspace", construct_args.subspace, "matrix whose rows span S (type A) or U (type B)")
      ->required();
  construct->add_option("--partner", construct_args.partner, "balanced: matrix whose rows span U");
  construct->add_option("--flavor", construct_args.flavor, "balanced: quotient or dual-quotient");
  construct->add_option("--k", construct_args.k, "grade of the domain (types A and B)");
  construct->add_option("--out", construct_args.out, "output embedding file")->required();

  std::string verify_path;
  auto* verify_cmd = embed->add_subcommand("verify", "check injectivity, adjacency, isometry and type");
  verify_cmd->add_option("file", verify_path)->required();

  DecomposeArgs decompose_args;
  auto* decompose_cmd = embed->add_subcommand("decompose", "recover the subspace and semilinear map");
  decompose_cmd->add_option("file", decompose_args.path)->required();
  decompose_cmd->add_flag("--dualize-domain", decompose_args.dualize_domain, "allow k > n - k via the dual domain");
  decompose_cmd->add_flag("--full-validation", decompose_args.full_validation, "intersect whole stars");
  decompose_cmd->add_option("--out-map", decompose_args.out_map, "write the inner semilinear map");
  decompose_cmd->add_option("--out-subspace", decompose_args.out_subspace, "write the basis of S or U");

  std::string rigidity_path;
  auto* rigidity_cmd = embed->add_subcommand("rigidity", "check l-rigidity on generators of GL(V)");
  rigidity_cmd->add_option("file", rigidity_path)->required();

  FeasibilityArgs feas;
  auto* feasibility_cmd = embed->add_subcommand("feasibility", "necessary dimension conditions");
  feasibility_cmd->add_option("--q", feas.q)->required();
  feasibility_cmd->add_option("--n", feas.n)->required();
  feasibility_cmd->add_option("--k", feas.k)->required();
  feasibility_cmd->add_option("--q2", feas.q2)->required();
  feasibility_cmd->add_option("--n2", feas.n2)->required();
  feasibility_cmd->add_option("--k2", feas.k2)->required();

  bool list = false;
  bool timings = false;
  std::vector<int> only;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_flag("--list", list, "list the criteria without running them");
  selftest->add_option("--only", only, "run only these criterion ids");
  selftest->add_flag("--timings", timings, "include wall-clock times (output no longer reproducible)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    set_max_threads(threads);
    if (gen->parsed()) {
      cmd_gen(gen_params, format, gen_out, out);
    } else if (stats->parsed()) {
      cmd_stats(stats_params, out);
    } else if (construct->parsed()) {
      cmd_construct(construct_args, out);
    } else if (verify_cmd->parsed()) {
      cmd_verify(verify_path, out);
    } else if (decompose_cmd->parsed()) {
      cmd_decompose(decompose_args, out);
    } else if (rigidity_cmd->parsed()) {
      cmd_rigidity(rigidity_path, budget, out);
    } else if (feasibility_cmd->parsed()) {
      cmd_feasibility(feas, out);
    } else if (selftest->parsed()) {
      cmd_selftest(list, only, timings, seed, out);
    }
  } catch (const VerifiedFalse&) {
    set_max_threads(0);
    return kVerifiedFalse;
  } catch (const BudgetError& e) {
    set_max_threads(0);
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    set_max_threads(0);
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  set_max_threads(0);
  return kOk;
}

}  // namespace grassembed::cli
