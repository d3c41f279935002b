#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beyondplanar/graph.hpp"
#include "beyondplanar/rational.hpp"

namespace bp {

// owner[c] is the edge that crossing c (index into CrossingStructure::crossings)
// is assigned to.
struct GapAssignment {
    int k = 0;
    std::vector<EdgeId> owner;

    friend bool operator==(const GapAssignment&, const GapAssignment&) = default;
};

// Result of a predicate check. The meaning of `edges` depends on the predicate:
//   kplanar  [overloaded edge, its crossers...]
//   fcf      [e, f, f'] with f, f' crossing e and sharing a vertex
//   fan      [e, crossers of e...] whose endpoint sets have empty intersection
//   quasi    the k pairwise crossing edges
//   gap      deficient edge set (fewer than k * |S| slots for the crossings inside S)
//   rac      [a, b] for a non-perpendicular crossing, or [e] for an over-bent edge
//   simple   the offending edges
struct Verdict {
    std::string predicate;
    std::optional<int> k;
    bool holds = true;
    std::string reason;
    std::vector<EdgeId> edges;
    std::optional<GapAssignment> assignment;
    std::optional<Point> at;
    std::optional<Point> dir_a;
    std::optional<Point> dir_b;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline Verdict verdict_for(std::string predicate, std::optional<int> k = std::nullopt) {
    Verdict v;
    v.predicate = std::move(predicate);
    v.k = k;
    return v;
}

}  // namespace bp
