#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagbound/certify.hpp"
#include "flagbound/sdp_build.hpp"

namespace flagbound {

// Ready-made problems: "mantel" (edge density without triangles, one
// 1-labeled block of 2-vertex flags, basis size 3), "k4-n3" and "k4-n4"
// (edge density without K4 at basis sizes 3 and 4).
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
ProblemSpec preset_spec(const std::string& name);

// Human-readable statement of what the bound means, e.g. "ex(edge,{K3})".
std::string describe_bound(const ProblemSpec& spec);

// A known-good certificate bundled with the preset, stamped with the
// assembled problem's fingerprint. Only "mantel" has one.
std::optional<Certificate> preset_certificate(const std::string& name,
                                              const SdpProblem& assembled);

}  // namespace flagbound
