// Command-line front end: enumeration, densities, products, SDP assembly,
// the built-in solver, and exact certificate handling.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagbound/algebra.hpp"
#include "flagbound/certify.hpp"
#include "flagbound/presets.hpp"
#include "flagbound/sdp_solve.hpp"

namespace fb = flagbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvalid = 4;

// A graph argument: a built-in name, an edge list, or graph6.
fb::Graph parse_graph_arg(const std::string& text) {
  if (auto g = fb::named_graph(text)) return *g;
  return fb::parse_graph(text);
}

// A flag argument: "graph | embedding: ..." for labeled flags; a bare graph
// is taken as unlabeled unless a type size is supplied, in which case the
// graph's first k vertices are the labels.
fb::Flag parse_flag_arg(const std::string& text, int type_size) {
  if (text.find('|') != std::string::npos) return fb::parse_flag(text);
  fb::Graph g = parse_graph_arg(text);
  if (type_size > g.size())
    throw fb::InputError("flag '" + text + "' is smaller than the type");
  return fb::Flag::prefix_labeled(g, type_size);
}

fb::FamilySpec parse_family(const std::vector<std::string>& specs) {
  std::vector<fb::Graph> members;
  for (const std::string& s : specs) members.push_back(parse_graph_arg(s));
  return fb::FamilySpec(members);
}

struct Options {
  std::string output = "text";
  std::string format = "edges";
  int size = 0;
  std::vector<std::string> forbid;
  std::string type_spec;
  std::string flag_a, flag_b;
  std::string target_spec = "K2";
  std::vector<std::string> block_specs;
  int expansion = 0;
  std::string preset;
  std::string out_path;
  std::string problem_path;
  std::string cert_path;
  std::string cert_out;
  std::string sdpa_out;
  std::string solver = "internal";
  long max_denominator = 1024;
  bool dump_q = false;
  fb::SolverConfig solver_cfg;
};

bool tsv(const Options& o) { return o.output == "tsv"; }

fb::GraphFormat graph_format(const Options& o) {
  return o.format == "g6" ? fb::GraphFormat::graph6 : fb::GraphFormat::edges;
}

fb::ProblemSpec spec_from_options(const Options& o) {
  if (!o.preset.empty()) {
    if (!fb::is_preset(o.preset))
      throw fb::InputError("unknown preset '" + o.preset + "'");
    return fb::preset_spec(o.preset);
  }
  fb::ProblemSpec spec;
  spec.family = parse_family(o.forbid);
  spec.target = parse_graph_arg(o.target_spec);
  if (o.expansion <= 0)
    throw fb::InputError("expansion size must be given for custom problems");
  spec.expansion = o.expansion;
  if (o.block_specs.empty())
    throw fb::InputError("at least one block must be given for custom problems");
  for (const std::string& bs : o.block_specs) {
    std::size_t colon = bs.rfind(':');
    if (colon == std::string::npos)
      throw fb::InputError("block spec '" + bs + "' should look like TYPE:SIZE");
    fb::Graph tg = parse_graph_arg(bs.substr(0, colon));
    int fsz = 0;
    try {
      fsz = std::stoi(bs.substr(colon + 1));
    } catch (const std::exception&) {
      throw fb::InputError("bad flag size in block spec '" + bs + "'");
    }
    spec.blocks.emplace_back(fb::TypeSigma{tg}, fsz);
  }
  return spec;
}

fb::NumericSolution run_solver(const Options& o, const fb::SdpProblem& p) {
  if (o.solver == "internal") return fb::solve(p, o.solver_cfg);
  if (o.solver.compare(0, 9, "external:") == 0) {
    std::string path = o.solver.substr(9);
    if (path.empty()) throw fb::InputError("external solver needs a result path");
    return fb::parse_solver_output(fb::read_text_file(path), p);
  }
  throw fb::InputError("unknown solver '" + o.solver + "' (use internal or external:PATH)");
}

int cmd_enumerate_graphs(const Options& o) {
  fb::FamilySpec family = parse_family(o.forbid);
  std::vector<fb::Graph> graphs = fb::enumerate_h_free(o.size, family);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::string s = fb::format_graph(graphs[i], graph_format(o));
    if (tsv(o))
      std::cout << i << "\t" << s << "\n";
    else
      std::cout << i << ": " << s << "\n";
  }
  std::cout << (tsv(o) ? "count\t" : "count: ") << graphs.size() << "\n";
  return kExitOk;
}

int cmd_enumerate_types(const Options& o) {
  fb::FamilySpec family = parse_family(o.forbid);
  std::vector<fb::TypeSigma> types = fb::enumerate_types(o.size, family);
  for (std::size_t i = 0; i < types.size(); ++i) {
    std::string s = o.format == "g6" ? fb::encode_graph6(types[i].graph)
                                     : fb::encode_edge_list(types[i].graph);
    if (tsv(o))
      std::cout << i << "\t" << s << "\n";
    else
      std::cout << i << ": " << s << "\n";
  }
  std::cout << (tsv(o) ? "count\t" : "count: ") << types.size() << "\n";
  return kExitOk;
}

int cmd_enumerate_flags(const Options& o) {
  fb::FamilySpec family = parse_family(o.forbid);
  fb::TypeSigma sigma{parse_graph_arg(o.type_spec)};
  std::vector<fb::Flag> flags = fb::enumerate_flags(sigma, o.size, family);
  for (std::size_t i = 0; i < flags.size(); ++i) {
    std::string s = fb::format_flag(flags[i], graph_format(o));
    if (tsv(o))
      std::cout << i << "\t" << s << "\n";
    else
      std::cout << i << ": " << s << "\n";
  }
  std::cout << (tsv(o) ? "count\t" : "count: ") << flags.size() << "\n";
  return kExitOk;
}

int cmd_density(const Options& o) {
  fb::Flag f = parse_flag_arg(o.flag_a, 0);
  fb::Flag g = parse_flag_arg(o.flag_b, 0);
  fb::Rational d = fb::density(f, g);
  if (tsv(o))
    std::cout << "density\t" << fb::format_rational(d) << "\n";
  else
    std::cout << fb::format_rational(d) << "\n";
  return kExitOk;
}

int cmd_product(const Options& o) {
  fb::FamilySpec family = parse_family(o.forbid);
  fb::Graph type_graph = parse_graph_arg(o.type_spec);
  fb::Flag a = parse_flag_arg(o.flag_a, type_graph.size());
  fb::Flag b = parse_flag_arg(o.flag_b, type_graph.size());
  if (a.type_graph() != type_graph || b.type_graph() != type_graph)
    throw fb::InputError("flag labels do not induce the requested type");
  fb::AlgebraElement prod =
      fb::product(fb::lift(a, family), fb::lift(b, family));
  for (const auto& [form, c] : prod.coeffs()) {
    std::string fs = fb::format_flag(fb::canonical_flag(form), graph_format(o));
    if (tsv(o))
      std::cout << fb::format_rational(c) << "\t" << fs << "\n";
    else
      std::cout << fb::format_rational(c) << "  " << fs << "\n";
  }
  return kExitOk;
}

int cmd_build_sdp(const Options& o) {
  if (o.out_path.empty()) throw fb::InputError("--out is required");
  fb::SdpProblem p = fb::assemble(spec_from_options(o));
  fb::write_sdpa(p, o.out_path);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    if (p.blocks[b].degenerate_warning)
      std::cerr << "warning: block " << b
                << " has no flags at some size up to the expansion size\n";
  if (tsv(o)) {
    std::cout << "sdpa\t" << o.out_path << "\n";
    std::cout << "manifest\t" << o.out_path << ".manifest\n";
    std::cout << "fingerprint\t" << p.fingerprint << "\n";
    std::cout << "constraints\t" << p.graphs.size() << "\n";
    std::cout << "blocks\t" << p.blocks.size() << "\n";
  } else {
    std::cout << "wrote " << o.out_path << " and " << o.out_path << ".manifest\n";
    std::cout << "fingerprint: " << p.fingerprint << ", constraints: " << p.graphs.size()
              << ", blocks: " << p.blocks.size() << "\n";
  }
  return kExitOk;
}

void print_matrix(const fb::DMatrix& q) {
  for (int i = 0; i < q.dim; ++i) {
    for (int j = 0; j < q.dim; ++j) std::cout << (j ? " " : "") << q.at(i, j);
    std::cout << "\n";
  }
}

int cmd_solve(const Options& o) {
  if (o.problem_path.empty()) throw fb::InputError("--problem is required");
  fb::SdpProblem p = fb::load_problem(o.problem_path);
  fb::NumericSolution ns = run_solver(o, p);
  if (tsv(o)) {
    std::cout << "lambda\t" << ns.lambda << "\n";
    std::cout << "iterations\t" << ns.history.size() << "\n";
  } else {
    std::cout << "lambda: " << ns.lambda << "\n";
    std::cout << "iterations: " << ns.history.size() << "\n";
  }
  if (o.dump_q)
    for (std::size_t b = 0; b < ns.q.size(); ++b) {
      std::cout << "Q " << b << " " << ns.q[b].dim << "\n";
      print_matrix(ns.q[b]);
    }
  return kExitOk;
}

int cmd_certify(const Options& o) {
  if (o.problem_path.empty()) throw fb::InputError("--problem is required");
  if (o.cert_path.empty()) throw fb::InputError("--cert is required");
  fb::SdpProblem p = fb::load_problem(o.problem_path);
  fb::Certificate c = fb::parse_certificate(fb::read_text_file(o.cert_path));
  fb::VerificationReport rep = fb::verify(p, c);
  if (tsv(o)) {
    std::cout << "valid\t" << (rep.valid ? 1 : 0) << "\n";
    std::cout << "bound\t" << fb::format_rational(rep.bound) << "\n";
    for (std::size_t b = 0; b < rep.psd_ok.size(); ++b)
      std::cout << "psd\t" << b << "\t" << (rep.psd_ok[b] ? 1 : 0) << "\n";
    for (std::size_t g = 0; g < rep.slacks.size(); ++g)
      std::cout << "slack\t" << g << "\t" << fb::format_rational(rep.slacks[g]) << "\n";
  } else {
    std::cout << "valid: " << (rep.valid ? "yes" : "no") << "\n";
    std::cout << "bound: " << fb::format_rational(rep.bound) << "\n";
    for (std::size_t b = 0; b < rep.psd_ok.size(); ++b)
      if (!rep.psd_ok[b]) std::cout << "block " << b << " is not positive semidefinite\n";
    for (std::size_t g = 0; g < rep.slacks.size(); ++g)
      if (rep.slacks[g] < 0)
        std::cout << "constraint " << g << " violated by "
                  << fb::format_rational(-rep.slacks[g]) << "\n";
  }
  return rep.valid ? kExitOk : kExitInvalid;
}

int cmd_run(const Options& o) {
  fb::ProblemSpec spec = spec_from_options(o);
  fb::SdpProblem p = fb::assemble(spec);
  if (!o.sdpa_out.empty()) fb::write_sdpa(p, o.sdpa_out);

  fb::NumericSolution ns = run_solver(o, p);
  fb::Certificate cert = fb::round_solution(p, ns, o.max_denominator);
  fb::VerificationReport rep = fb::verify(p, cert);

  std::string cert_out = o.cert_out;
  if (cert_out.empty() && !o.preset.empty()) cert_out = o.preset + ".cert";
  if (cert_out.empty()) cert_out = "flagbound.cert";
  fb::write_text_file(cert_out, fb::format_certificate(cert));

  if (tsv(o)) {
    std::cout << "valid\t" << (rep.valid ? 1 : 0) << "\n";
    std::cout << "bound\t" << fb::format_rational(rep.bound) << "\n";
    std::cout << "statement\t" << fb::describe_bound(spec) << "\n";
    std::cout << "certificate\t" << cert_out << "\n";
    std::cout << "solver-lambda\t" << ns.lambda << "\n";
  } else {
    if (rep.valid)
      std::cout << "certified: " << fb::describe_bound(spec)
                << " <= " << fb::format_rational(rep.bound) << "\n";
    else
      std::cout << "verification failed for " << fb::describe_bound(spec) << "\n";
    std::cout << "certificate written to " << cert_out << "\n";
  }
  return rep.valid ? kExitOk : kExitInvalid;
}

void add_output_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--output", o.output, "Output style")
      ->check(CLI::IsMember({"text", "tsv"}));
}

void add_format_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Graph serialization")
      ->check(CLI::IsMember({"edges", "g6"}));
}

void add_solver_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--solver", o.solver, "internal or external:RESULT_PATH");
  cmd->add_option("--iters", o.solver_cfg.max_iters, "Iteration cap");
  cmd->add_option("--step", o.solver_cfg.initial_step, "Initial step size");
  cmd->add_option("--decay", o.solver_cfg.step_decay, "Step decay rate");
  cmd->add_option("--temp", o.solver_cfg.smoothing_temperature, "Softmax temperature");
  cmd->add_option("--tol", o.solver_cfg.tolerance, "Improvement tolerance");
  cmd->add_option("--seed", o.solver_cfg.seed, "Random seed");
}

void add_problem_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--preset", o.preset, "mantel, k4-n3, or k4-n4");
  cmd->add_option("--forbid", o.forbid, "Forbidden graphs");
  cmd->add_option("--target", o.target_spec, "Graph whose density is bounded");
  cmd->add_option("--expansion,-N", o.expansion, "Constraint basis size");
  cmd->add_option("--block", o.block_specs, "Block spec TYPE:SIZE (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact upper bounds on subgraph densities"};
  app.require_subcommand(1);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List graphs, types, or flags");
  enumerate->require_subcommand(1);
  CLI::App* en_graphs = enumerate->add_subcommand("graphs", "Graphs avoiding a family");
  en_graphs->add_option("--size", o.size, "Vertex count")->required();
  en_graphs->add_option("--forbid", o.forbid, "Forbidden graphs");
  add_output_option(en_graphs, o);
  add_format_option(en_graphs, o);

  CLI::App* en_types = enumerate->add_subcommand("types", "Fully labeled graphs");
  en_types->add_option("--size", o.size, "Label count")->required();
  en_types->add_option("--forbid", o.forbid, "Forbidden graphs");
  add_output_option(en_types, o);
  add_format_option(en_types, o);

  CLI::App* en_flags = enumerate->add_subcommand("flags", "Flags over a type");
  en_flags->add_option("--type", o.type_spec, "Type graph")->required();
  en_flags->add_option("--size", o.size, "Flag size")->required();
  en_flags->add_option("--forbid", o.forbid, "Forbidden graphs");
  add_output_option(en_flags, o);
  add_format_option(en_flags, o);

  CLI::App* density = app.add_subcommand("density", "Exact density of one flag in another");
  density->add_option("--F", o.flag_a, "Inner flag")->required();
  density->add_option("--G", o.flag_b, "Host flag")->required();
  add_output_option(density, o);

  CLI::App* product = app.add_subcommand("product", "Algebra product of two flags");
  product->add_option("--type", o.type_spec, "Type graph")->required();
  product->add_option("--a", o.flag_a, "Left flag")->required();
  product->add_option("--b", o.flag_b, "Right flag")->required();
  product->add_option("--forbid", o.forbid, "Forbidden graphs");
  add_output_option(product, o);
  add_format_option(product, o);

  CLI::App* build = app.add_subcommand("build-sdp", "Assemble and export a problem");
  add_problem_options(build, o);
  build->add_option("--out", o.out_path, "Output path for the SDPA file")->required();
  add_output_option(build, o);

  CLI::App* solve = app.add_subcommand("solve", "Numeric solve of an assembled problem");
  solve->add_option("--problem", o.problem_path, "Manifest path")->required();
  solve->add_flag("--dump-q", o.dump_q, "Print the block matrices");
  add_solver_options(solve, o);
  add_output_option(solve, o);

  CLI::App* certify = app.add_subcommand("certify", "Exact check of a certificate");
  certify->add_option("--problem", o.problem_path, "Manifest path")->required();
  certify->add_option("--cert", o.cert_path, "Certificate path")->required();
  add_output_option(certify, o);

  CLI::App* run = app.add_subcommand("run", "Assemble, solve, round, and verify");
  add_problem_options(run, o);
  add_solver_options(run, o);
  run->add_option("--max-denominator", o.max_denominator, "Rounding denominator cap");
  run->add_option("--cert-out", o.cert_out, "Certificate output path");
  run->add_option("--sdpa-out", o.sdpa_out, "Also export the SDPA file here");
  add_output_option(run, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (en_graphs->parsed()) return cmd_enumerate_graphs(o);
    if (en_types->parsed()) return cmd_enumerate_types(o);
    if (en_flags->parsed()) return cmd_enumerate_flags(o);
    if (density->parsed()) return cmd_density(o);
    if (product->parsed()) return cmd_product(o);
    if (build->parsed()) return cmd_build_sdp(o);
    if (solve->parsed()) return cmd_solve(o);
    if (certify->parsed()) return cmd_certify(o);
    if (run->parsed()) return cmd_run(o);
  } catch (const fb::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const fb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
