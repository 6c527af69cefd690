#pragma once

#include <variant>

#include "terratri/terrain.hpp"

namespace terratri {

// Where a candidate triangle came from: a crossing of prolongation segments
// charged to a segment-tree node, a 1-D maximization over a boundary piece,
// or the n=3 special case.
struct InteriorApex {
    int node = -1;
    int i = -1;
    int j = -1;
};
struct BoundaryApex {
    int piece = -1;
};
struct WholeTerrain {};

using Provenance = std::variant<InteriorApex, BoundaryApex, WholeTerrain>;

template <class S>
struct Candidate {
    GroundedTriangle<S> triangle;
    Provenance provenance;
};

using CandidateQ = Candidate<Rat>;

// Deterministic preference: larger area first, then the lexicographically
// smaller apex. Returns true when a should replace b.
template <class S>
bool tri_prefers(const GroundedTriangle<S>& a, const GroundedTriangle<S>& b) {
    if (a.area != b.area) return a.area > b.area;
    if (a.apex.x != b.apex.x) return a.apex.x < b.apex.x;
    return a.apex.y < b.apex.y;
}

} // namespace terratri
