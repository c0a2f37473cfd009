#pragma once

#include "annulus/quiver.hpp"
#include "annulus/triangulation.hpp"

namespace annulus {

// Vertices are arc ids; finite quivers have opposite arrows cancelled, asymptotic ones keep
// loops and 2-cycles.
Quiver quiver_of(const Triangulation& t);

std::string left_copy(const std::string& id);
std::string right_copy(const std::string& id);

// Quiver of the frame cut at a strictly asymptotic arc: only arcs on its boundary take part.
Quiver framed_quiver(const Triangulation& t, const std::string& framing_id);

Quiver switch_frame(const Quiver& q, const Vertex& new_framing_vertex);

}  // namespace annulus
