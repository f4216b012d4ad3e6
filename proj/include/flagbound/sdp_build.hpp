#pragma once

#include <string>
#include <vector>

#include "flagbound/algebra.hpp"
#include "flagbound/numeric.hpp"

namespace flagbound {

// What to bound: the maximum density of `target` in large `family`-free
// graphs. Each block contributes the averaged square of one type's flag
// vector at the given flag size.
struct ProblemSpec {
  FamilySpec family;
  Graph target;
  std::vector<std::pair<TypeSigma, int>> blocks;  // (type, flag size)
  int expansion = 0;                              // basis size N
};

// Matrix of algebra elements [[F_i * F_j]] over one type's flag list.
using OuterMatrix = std::vector<std::vector<AlgebraElement>>;
OuterMatrix build_outer_matrix(const TypeSigma& sigma, int n, const FamilySpec& h);

// One linear constraint per graph G in F_N:
//   lambda >= rhs[G] + sum over blocks of <M[block][G], Q[block]>.
struct SdpBlock {
  TypeSigma sigma;
  int flag_size = 0;
  std::vector<Flag> flags;        // basis, canonical order
  std::vector<RatMatrix> m;       // one |flags| x |flags| matrix per graph
  bool degenerate_warning = false;
};

struct SdpProblem {
  ProblemSpec spec;
  std::vector<Graph> graphs;      // F_N, canonical order
  std::vector<Rational> rhs;      // p(target; G)
  std::vector<SdpBlock> blocks;
  std::string manifest;
  std::string fingerprint;        // FNV-1a 64 of the manifest text
};

SdpProblem assemble(const ProblemSpec& spec);

// Render the problem in sparse SDPA format (variables: lambda first, then
// the upper triangle of each block matrix; one diagonal slack block holds
// the per-graph constraints).
std::string sdpa_text(const SdpProblem& p);

// Write sdpa_text to path and the manifest to path + ".manifest".
void write_sdpa(const SdpProblem& p, const std::string& path);

void write_manifest(const SdpProblem& p, const std::string& path);

// Rebuild the problem a manifest describes and cross-check every recorded
// ordering against the rebuilt one.
SdpProblem load_problem_from_manifest_text(const std::string& text);
SdpProblem load_problem(const std::string& manifest_path);

// Accepts either an SDPA-style result containing "xVec = { ... }" or a bare
// list of numbers, length exactly 1 + sum of block upper-triangle sizes.
// The returned lambda is recomputed from the problem at the parsed matrices.
NumericSolution parse_solver_output(const std::string& text, const SdpProblem& p);

std::uint64_t fnv1a64(const std::string& bytes);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace flagbound
