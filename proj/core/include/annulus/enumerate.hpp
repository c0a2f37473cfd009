#pragma once

#include "annulus/triangulation.hpp"

#include <functional>
#include <random>
#include <vector>

namespace annulus {

struct EnumerationOptions {
  bool bridging_only = false;
  size_t limit = 0;  // 0 = unbounded
};

constexpr int kMaxEnumerationSize = 12;

// Bridging arcs of the finite window |displacement| <= 2pq plus all peripheral arcs.
std::vector<Arc> finite_candidates(const AnnulusShape& s, bool bridging_only = false);

void for_each_triangulation(const AnnulusShape& s, TriangulationKind kind,
                            const std::function<void(const Triangulation&)>& fn, EnumerationOptions opt = {});
std::vector<Triangulation> enumerate_triangulations(const AnnulusShape& s, TriangulationKind kind,
                                                    EnumerationOptions opt = {});

// Random walk of flips from the fan triangulation; stays finite.
Triangulation random_triangulation(const AnnulusShape& s, std::mt19937_64& rng, int steps = 40);

}  // namespace annulus
