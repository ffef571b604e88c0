#pragma once

#include <optional>
#include <string>

#include "rootfp/e6.hpp"
#include "rootfp/e7.hpp"
#include "rootfp/root_system.hpp"

namespace rootfp {

// All renderers return complete documents as strings and are deterministic:
// fixed traversal order, no floating point, no timestamps.

enum class Format { svg, ascii, dot, json };
std::optional<Format> format_from_string(const std::string& s);

// Three 3x3 faces seen at the corner of a 3x3x3 cube: the 27 top-stratum
// codes, optionally shading the T-graph link of `highlight` within them.
std::string render_cube_corner(Format fmt, std::optional<F3Code> highlight);

// The same corner with each cell carrying its open-map label instead of the
// vector digits.
std::string render_openmap7(Format fmt);

// 4x4 square of the 16 top-stratum vectors of the E6 model, optional link
// shading.
std::string render_square(Format fmt, std::optional<FpVec> highlight);

// Cover graph of a stratum poset.
std::string render_hasse(Format fmt, const RootSystem& rs, int s);

// Dynkin diagram of a system.
std::string render_dynkin(Format fmt, const RootSystem& rs);

// T-graph of the E7 target (64 vertices) or the E6 target (243 vertices).
std::string render_tgraph(Format fmt, int p);

}  // namespace rootfp
