#pragma once

#include <cstdint>

#include "beyondplanar/drawing.hpp"
#include "beyondplanar/verdict.hpp"

namespace bp {

// All topological checks reject non-simple structures with InputError.
Verdict check_k_planar(const CrossingStructure& cs, int k);
Verdict check_fcf(const CrossingStructure& cs);
Verdict check_fan(const CrossingStructure& cs);

// No k pairwise crossing edges, k >= 3. The clique search gives up with
// ResourceBoundError after `node_budget` search nodes.
Verdict check_quasi(const CrossingStructure& cs, int k, std::uint64_t node_budget = 10'000'000);

// Crossings assignable to one of their edges with at most k per edge. On
// success the verdict carries the assignment; on failure its edge set S
// contains more than k |S| crossings with both edges in S.
Verdict check_k_gap(const CrossingStructure& cs, int k);

// At most max_bends bends per edge and every crossing at an exact right angle.
Verdict check_rac(const Drawing& d, int max_bends);

// Re-checks a gap assignment: each crossing owned by one of its edges, loads <= k.
bool verify_assignment(const CrossingStructure& cs, const GapAssignment& assignment);

// Crossing graph: for every edge the sorted list of edges crossing it.
std::vector<std::vector<EdgeId>> crossing_graph(const CrossingStructure& cs);

}  // namespace bp
