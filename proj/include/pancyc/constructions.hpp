#pragma once

#include "pancyc/graph.hpp"

namespace pancyc {

/// Five-chord family on n = 21 + x vertices: base vertices 1..22 carry the
/// chords (1,3), (2,8), (4,7), (5,13), (9,22) and the cycle segment from 22
/// back to 1 has x edges (subdivision vertices 23..21+x). Requires x >= 1.
ChordedCycle figure1(int x);

inline int figure1_vertices(int x) { return 21 + x; }

/// Fourteen vertices, chords (1,13), (3,14), (9,14): pancyclic with 17
/// edges, and its length-6 arc from 3 to 9 cannot be contracted.
ChordedCycle figure2();

/// Splices a new vertex n+1 between n and 1. The old edge {n, 1} survives as
/// a chord, so the result has two more edges. Requires g pancyclic.
ChordedCycle extend_by_one(const ChordedCycle& g);

} // namespace pancyc
