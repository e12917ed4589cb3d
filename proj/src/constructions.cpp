#include "pancyc/constructions.hpp"

#include <string>

#include "pancyc/analysis.hpp"

namespace pancyc {

ChordedCycle figure1(int x) {
    if (x < 1) {
        throw PreconditionError("figure1 needs x >= 1, got " + std::to_string(x));
    }
    return make_graph(21 + x, {{1, 3}, {2, 8}, {4, 7}, {5, 13}, {9, 22}});
}

ChordedCycle figure2() { return make_graph(14, {{1, 13}, {3, 14}, {9, 14}}); }

ChordedCycle extend_by_one(const ChordedCycle& g) {
    if (!is_pancyclic(g)) {
        throw PreconditionError("extend_by_one requires a pancyclic graph");
    }
    return add_chord(ChordedCycle(g.n() + 1, {g.chords().begin(), g.chords().end()}), Chord{1, g.n()});
}

} // namespace pancyc
