#pragma once

#include "beyondplanar/drawing.hpp"
#include "beyondplanar/verdict.hpp"

// Exhaustive reference implementations, used to cross-check the checkers.
namespace bp::oracle {

// Tries all 2^c assignments; at most 20 crossings.
Verdict brute_gap(const CrossingStructure& cs, int k);

// Tries all k-subsets of edges; at most 25 edges.
Verdict brute_quasi(const CrossingStructure& cs, int k);

// Number of crossings of K_n with its vertices in convex position.
Integer convex_crossing_count(int n);

}  // namespace bp::oracle
