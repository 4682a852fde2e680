#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hsurf/surface.hpp"

namespace hsurf {

// Parsed surface document. The text format is line based:
//
//   # comment
//   surface <name>
//   meta genus <g>            (optional)
//   meta cusps <n>            (optional)
//   edge <id> <length>
//   face <id> compact <e> <e> <e>
//   face <id> cusp <e>
//   cusp <id> <face> <face> ...
//
// Compact gluing is implied by each edge id appearing in exactly two face
// slots; cusp lines give the ideal gluing as ordered cycles.
struct SurfaceFile {
    std::string name;
    MarkedSurface surface;
    std::optional<int> expected_genus;
    std::optional<int> expected_cusps;
};

SurfaceFile parse_surface(std::istream& in, const std::string& filename = "<input>");
SurfaceFile parse_surface_file(const std::string& path);
std::string serialize_surface(const SurfaceFile& f);

}  // namespace hsurf
