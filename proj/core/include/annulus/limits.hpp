#pragma once

#include "annulus/quiver.hpp"
#include "annulus/triangulation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace annulus {

struct CyclicQuiverView {
  Quiver quiver;
  std::vector<Vertex> cyclic_order;
};

Triangulation cox_limit(const Triangulation& t);

// Bridging arcs ordered around the core so that arcs sharing an outer endpoint are consecutive.
std::vector<Vertex> bridging_cyclic_order(const Triangulation& t);
CyclicQuiverView cyclic_view_of(const Triangulation& t);

// Cycle order of a cycle quiver: from vertices[0] towards the neighbour listed later.
std::vector<Vertex> default_cyclic_order(const Quiver& cycle);

// Returns (Q_outer, Q_inner): w-contraction of counter-clockwise runs, u-contraction of clockwise runs.
std::pair<Quiver, Quiver> contract_paths(const CyclicQuiverView& view);

std::pair<Quiver, Quiver> contract_with_shape(const Quiver& q, const Quiver& shape,
                                              const std::optional<std::vector<Vertex>>& order = std::nullopt);

Quiver shape_of(const Triangulation& t);

// Connected component of quiver_of(asymptotic t) on the given boundary.
Quiver boundary_component(const Triangulation& t, Boundary b);

}  // namespace annulus
