#include "flagbound/sdp_build.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace flagbound {

OuterMatrix build_outer_matrix(const TypeSigma& sigma, int n, const FamilySpec& h) {
  std::vector<Flag> flags = enumerate_flags(sigma, n, h);
  int d = static_cast<int>(flags.size());
  OuterMatrix out(d, std::vector<AlgebraElement>(d));
  for (int i = 0; i < d; ++i) {
    AlgebraElement li = lift(flags[i], h);
    for (int j = i; j < d; ++j) {
      AlgebraElement e = downward(product(li, lift(flags[j], h)));
      out[i][j] = e;
      if (j != i) out[j][i] = e;
    }
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc())
    throw InputError("cannot format floating-point value");
  return std::string(buf, p);
}

std::string render_manifest(const SdpProblem& p) {
  std::ostringstream out;
  out << "flagbound-manifest v1\n";
  out << "forbidden:";
  for (const Graph& m : p.spec.family.members()) out << ' ' << encode_graph6(m);
  out << "\n";
  out << "target: " << encode_graph6(p.spec.target) << "\n";
  out << "expansion: " << p.spec.expansion << "\n";
  out << "blocks: " << p.blocks.size() << "\n";
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const SdpBlock& blk = p.blocks[b];
    out << "block " << b << ": k=" << blk.sigma.size()
        << " type=" << encode_graph6(blk.sigma.graph) << " n=" << blk.flag_size
        << " dim=" << blk.flags.size() << "\n";
  }
  out << "graphs: " << p.graphs.size() << "\n";
  for (std::size_t i = 0; i < p.graphs.size(); ++i)
    out << "g " << i << " " << encode_graph6(p.graphs[i]) << "\n";
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const SdpBlock& blk = p.blocks[b];
    out << "flags " << b << ": " << blk.flags.size() << "\n";
    for (std::size_t i = 0; i < blk.flags.size(); ++i)
      out << "f " << b << " " << i << " " << format_flag(blk.flags[i]) << "\n";
  }
  return out.str();
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace

SdpProblem assemble(const ProblemSpec& spec) {
  if (spec.target.size() == 0) throw InputError("empty target graph");
  if (spec.target.size() > spec.expansion)
    throw InputError("target larger than expansion size");
  if (spec.expansion > kMaxVertices)
    throw CapacityError("expansion size " + std::to_string(spec.expansion) +
                        " exceeds limit of " + std::to_string(kMaxVertices));
  if (!is_h_free(spec.target, spec.family))
    throw InputError("target graph contains a forbidden subgraph");

  SdpProblem p;
  p.spec = spec;
  p.spec.target = canonical_graph(spec.target);

  p.graphs = enumerate_h_free(spec.expansion, spec.family);
  if (p.graphs.empty())
    throw InputError("no family-free graphs at the expansion size");

  Flag target_flag = Flag::prefix_labeled(p.spec.target, 0);
  for (const Graph& g : p.graphs)
    p.rhs.push_back(density(target_flag, Flag::prefix_labeled(g, 0)));

  int m = static_cast<int>(p.graphs.size());
  for (const auto& [sigma, flag_size] : spec.blocks) {
    if (flag_size < sigma.size())
      throw InputError("block flag size smaller than its type");
    if (2 * flag_size - sigma.size() > spec.expansion)
      throw InputError("block product size exceeds expansion size");
    SdpBlock blk;
    blk.sigma = sigma;
    blk.flag_size = flag_size;
    blk.flags = enumerate_flags(sigma, flag_size, spec.family);
    blk.degenerate_warning = !check_nondegenerate(sigma, spec.family, spec.expansion);
    int d = static_cast<int>(blk.flags.size());
    blk.m.assign(m, RatMatrix(d));

    OuterMatrix outer = build_outer_matrix(sigma, flag_size, spec.family);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        AlgebraElement e = expand_to(outer[i][j], spec.expansion);
        for (int gi = 0; gi < m; ++gi) {
          CanonicalForm cf = canonical_form(p.graphs[gi]);
          Rational c = e.coeff(FlagForm{cf.n, 0, cf.bits});
          blk.m[gi].at(i, j) = c;
          blk.m[gi].at(j, i) = c;
        }
      }
    p.blocks.push_back(std::move(blk));
  }

  p.manifest = render_manifest(p);
  p.fingerprint = hex64(fnv1a64(p.manifest));
  return p;
}

std::string sdpa_text(const SdpProblem& p) {
  int m = static_cast<int>(p.graphs.size());
  int mdim = 1;
  for (const SdpBlock& blk : p.blocks) {
    int d = static_cast<int>(blk.flags.size());
    mdim += d * (d + 1) / 2;
  }

  std::ostringstream out;
  out << "* flagbound export, fingerprint " << p.fingerprint << "\n";
  out << mdim << " = mDIM\n";
  out << (p.blocks.size() + 1) << " = nBLOCK\n";
  for (const SdpBlock& blk : p.blocks) out << blk.flags.size() << " ";
  out << "-" << m << "\n";
  out << "1";
  for (int i = 1; i < mdim; ++i) out << " 0";
  out << "\n";

  int slack_block = static_cast<int>(p.blocks.size()) + 1;
  // Constant side F_0: the rhs on the slack diagonal.
  for (int g = 0; g < m; ++g)
    if (p.rhs[g] != 0)
      out << "0 " << slack_block << " " << g + 1 << " " << g + 1 << " "
          << format_double(p.rhs[g].get_d()) << "\n";
  // Variable 1 is lambda: identity on the slack diagonal.
  for (int g = 0; g < m; ++g)
    out << "1 " << slack_block << " " << g + 1 << " " << g + 1 << " 1\n";
  // Remaining variables: one per upper-triangle entry of each block matrix.
  int var = 2;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const SdpBlock& blk = p.blocks[b];
    int d = static_cast<int>(blk.flags.size());
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        out << var << " " << b + 1 << " " << i + 1 << " " << j + 1 << " 1\n";
        for (int g = 0; g < m; ++g) {
          Rational c = blk.m[g].at(i, j);
          if (i != j) c *= 2;
          if (c != 0)
            out << var << " " << slack_block << " " << g + 1 << " " << g + 1 << " "
                << format_double(Rational(-c).get_d()) << "\n";
        }
        ++var;
      }
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading file: " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("error while writing file: " + path);
}

void write_manifest(const SdpProblem& p, const std::string& path) {
  write_text_file(path, p.manifest);
}

void write_sdpa(const SdpProblem& p, const std::string& path) {
  write_text_file(path, sdpa_text(p));
  write_manifest(p, path + ".manifest");
}

namespace {

// Minimal line parsing for the manifest header; the body is checked by
// rebuilding the whole manifest and requiring byte equality.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string expect_prefix(const std::string& line, const std::string& prefix,
                          std::size_t lineno) {
  if (line.compare(0, prefix.size(), prefix) != 0)
    throw ParseError("manifest line " + std::to_string(lineno) + " should start with '" +
                     prefix + "'");
  return line.substr(prefix.size());
}

int parse_int_field(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    while (used < s.size() && (s[used] == ' ' || s[used] == '\t')) ++used;
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " in manifest: '" + s + "'");
  }
}

}  // namespace

SdpProblem load_problem_from_manifest_text(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty() || lines[0] != "flagbound-manifest v1")
    throw ParseError("missing manifest header");
  if (lines.size() < 5) throw ParseError("manifest truncated");

  ProblemSpec spec;
  std::string forb = expect_prefix(lines[1], "forbidden:", 2);
  std::vector<Graph> members;
  std::istringstream fs(forb);
  std::string tok;
  while (fs >> tok) members.push_back(parse_graph6(tok));
  spec.family = FamilySpec(members);

  spec.target = parse_graph6(expect_prefix(lines[2], "target: ", 3));
  spec.expansion = parse_int_field(expect_prefix(lines[3], "expansion: ", 4), "expansion");
  int nblocks = parse_int_field(expect_prefix(lines[4], "blocks: ", 5), "block count");
  if (nblocks < 0 || 5 + nblocks > static_cast<int>(lines.size()))
    throw ParseError("manifest truncated in block list");

  for (int b = 0; b < nblocks; ++b) {
    std::string line = lines[5 + b];
    std::istringstream ls(line);
    std::string w0, w1, kf, tf, nf, df;
    if (!(ls >> w0 >> w1 >> kf >> tf >> nf >> df) || w0 != "block")
      throw ParseError("bad block line in manifest: '" + line + "'");
    if (kf.compare(0, 2, "k=") != 0 || tf.compare(0, 5, "type=") != 0 ||
        nf.compare(0, 2, "n=") != 0 || df.compare(0, 4, "dim=") != 0)
      throw ParseError("bad block line in manifest: '" + line + "'");
    TypeSigma sigma{parse_graph6(tf.substr(5))};
    int fsz = parse_int_field(nf.substr(2), "block flag size");
    if (sigma.size() != parse_int_field(kf.substr(2), "block type size"))
      throw ParseError("block type size disagrees with its graph: '" + line + "'");
    spec.blocks.emplace_back(sigma, fsz);
  }

  SdpProblem p = assemble(spec);
  if (p.manifest != text) {
    std::vector<std::string> rebuilt = split_lines(p.manifest);
    std::size_t i = 0;
    while (i < rebuilt.size() && i < lines.size() && rebuilt[i] == lines[i]) ++i;
    throw InputError("manifest does not match the rebuilt problem (first difference at line " +
                     std::to_string(i + 1) + ")");
  }
  return p;
}

SdpProblem load_problem(const std::string& manifest_path) {
  return load_problem_from_manifest_text(read_text_file(manifest_path));
}

NumericSolution parse_solver_output(const std::string& text, const SdpProblem& p) {
  std::string payload = text;
  std::size_t xv = text.find("xVec");
  if (xv != std::string::npos) {
    std::size_t open = text.find('{', xv);
    if (open == std::string::npos)
      throw ParseError("missing '{' after xVec", xv);
    std::size_t close = text.find('}', open);
    if (close == std::string::npos)
      throw ParseError("unterminated xVec list", open);
    payload = text.substr(open + 1, close - open - 1);
  }

  std::vector<double> values;
  std::size_t pos = 0;
  while (pos < payload.size()) {
    char c = payload[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < payload.size() && payload[pos] != ' ' && payload[pos] != '\t' &&
           payload[pos] != '\n' && payload[pos] != '\r' && payload[pos] != ',')
      ++pos;
    std::string tok = payload.substr(start, pos - start);
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + tok.size())
      throw ParseError("bad numeric token '" + tok + "' in solver output", start);
    values.push_back(v);
  }

  std::size_t expected = 1;
  for (const SdpBlock& blk : p.blocks) {
    std::size_t d = blk.flags.size();
    expected += d * (d + 1) / 2;
  }
  if (values.size() != expected)
    throw InputError("solver output has " + std::to_string(values.size()) +
                     " values, expected " + std::to_string(expected));

  NumericSolution ns;
  std::size_t at = 1;
  for (const SdpBlock& blk : p.blocks) {
    int d = static_cast<int>(blk.flags.size());
    DMatrix q(d);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        q.at(i, j) = values[at];
        q.at(j, i) = values[at];
        ++at;
      }
    ns.q.push_back(std::move(q));
  }

  // Ignore the reported objective; the invariant is that lambda is the exact
  // float maximum of the constraint forms at these matrices.
  double best = 0.0;
  for (std::size_t g = 0; g < p.graphs.size(); ++g) {
    double v = p.rhs[g].get_d();
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      const RatMatrix& mg = p.blocks[b].m[g];
      for (int i = 0; i < mg.dim; ++i)
        for (int j = 0; j < mg.dim; ++j) v += mg.at(i, j).get_d() * ns.q[b].at(i, j);
    }
    if (g == 0 || v > best) best = v;
  }
  ns.lambda = best;
  return ns;
}

}  // namespace flagbound
