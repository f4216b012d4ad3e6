#include "flagbound/presets.hpp"

#include <algorithm>

namespace flagbound {

std::vector<std::string> preset_names() { return {"mantel", "k4-n3", "k4-n4"}; }

bool is_preset(const std::string& name) {
  auto names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ProblemSpec preset_spec(const std::string& name) {
  ProblemSpec spec;
  spec.target = *named_graph("K2");
  TypeSigma point{*named_graph("K1")};
  if (name == "mantel") {
    spec.family = FamilySpec({*named_graph("K3")});
    spec.blocks = {{point, 2}};
    spec.expansion = 3;
  } else if (name == "k4-n3") {
    spec.family = FamilySpec({*named_graph("K4")});
    spec.blocks = {{point, 2}};
    spec.expansion = 3;
  } else if (name == "k4-n4") {
    spec.family = FamilySpec({*named_graph("K4")});
    spec.blocks = {{point, 2}};
    spec.expansion = 4;
  } else {
    throw InputError("unknown preset '" + name + "'");
  }
  return spec;
}

namespace {

std::string graph_label(const Graph& g) {
  // Prefer the short built-in names when the graph matches one.
  static const char* names[] = {"K1", "K2", "K3", "K4", "P3", "C5", "E3"};
  CanonicalForm cf = canonical_form(g);
  for (const char* name : names) {
    Graph n = *named_graph(name);
    if (canonical_form(n) == cf) return name == std::string("K2") ? "edge" : name;
  }
  return format_graph(g, GraphFormat::graph6);
}

}  // namespace

std::string describe_bound(const ProblemSpec& spec) {
  std::string s = "ex(" + graph_label(spec.target) + ",{";
  bool first = true;
  for (const Graph& m : spec.family.members()) {
    if (!first) s += ",";
    s += graph_label(m);
    first = false;
  }
  s += "})";
  return s;
}

std::optional<Certificate> preset_certificate(const std::string& name,
                                              const SdpProblem& assembled) {
  if (name != "mantel") return std::nullopt;
  Certificate c;
  c.lambda = make_rational(1, 2);
  RatMatrix q(2);
  q.at(0, 0) = make_rational(1, 2);
  q.at(0, 1) = make_rational(-1, 2);
  q.at(1, 0) = make_rational(-1, 2);
  q.at(1, 1) = make_rational(1, 2);
  c.q.push_back(q);
  c.fingerprint = assembled.fingerprint;
  return c;
}

}  // namespace flagbound
