#pragma once

// Pancyclicity predicates and structural reductions on minimal pancyclic
// graphs: parallel crossing chord deletion, arc contraction, and the
// half-arc dichotomy with its small-graph extraction.

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "pancyc/cycle_enum.hpp"
#include "pancyc/graph.hpp"

namespace pancyc {

bool is_pancyclic(const ChordedCycle& g);

/// {3..n} minus the spectrum; empty iff pancyclic.
std::vector<int> missing_lengths(const ChordedCycle& g);

enum class ReductionKind { prop3_delete_chord, thm4a_contract, thm4b_contract, prop5_dichotomy };

std::string_view to_string(ReductionKind kind);

struct ReductionReport {
    ReductionKind kind;
    std::variant<Arc, std::pair<Chord, Chord>> witness;
    ChordedCycle result_graph;
    bool result_pancyclic = false;
};

/// Looks for chords p = (i, j), q = (i+1, j+1) (indices mod n) that cross
/// only each other, in a graph with at least two 4-cycles. When found,
/// deletes p and reports whether the smaller graph is still pancyclic
/// (it always should be). Throws PreconditionError if g is not pancyclic.
std::optional<ReductionReport> prop3_reduce(const ChordedCycle& g);

enum class ContractionCase : char { a = 'a', b = 'b' };

struct QualifyingArc {
    Arc arc;
    ContractionCase which;
};

/// Arcs meeting the contraction hypotheses:
///   (a) no chord joins the ends of A and 2|A| >= n - 1, or
///   (b) a chord joins the ends of A and 3|A| >= n + 2.
/// Pure inequality check; requires n > 6.
std::vector<QualifyingArc> qualifying_arcs(const ChordedCycle& g);

/// qualifying_arcs for a pancyclic g; contracting one edge of any returned
/// arc keeps the graph pancyclic.
std::vector<QualifyingArc> thm4_applicable(const ChordedCycle& g);

/// Contracts every qualifying arc and reports each result.
std::vector<ReductionReport> thm4_reduce(const ChordedCycle& g);

/// Simple graph with an explicit vertex labelling, used for subgraphs that
/// are not presented along a Hamiltonian cycle.
struct SimpleGraph {
    std::vector<Vertex> labels; // labels[i] is the original name of vertex i+1
    std::vector<std::pair<int, int>> edges; // 1-based indices into labels

    int order() const { return static_cast<int>(labels.size()); }
};

/// Finds a Hamiltonian cycle (depth-first, smallest neighbour first) and
/// relabels the graph along it. Returns the presentation and, for each new
/// vertex 1..n, its index in the input graph. nullopt if not Hamiltonian.
struct HamiltonianPresentation {
    ChordedCycle graph;
    std::vector<int> order; // order[i] = input vertex placed at position i+1
};
std::optional<HamiltonianPresentation> present_hamiltonian(const SimpleGraph& g);

/// The subgraph G' obtained by removing the interior of an arc (its edges
/// and every vertex except its two ends).
SimpleGraph remove_arc_interior(const ChordedCycle& g, const Arc& a);

struct Prop5Result {
    enum class Case { contraction_pancyclic = 1, subgraph_missing_one = 2 };

    Case which;
    ChordedCycle contracted; // G_A, always computed
    // Case 2 only:
    std::optional<SimpleGraph> subgraph;
    std::optional<HamiltonianPresentation> subgraph_presented;
    std::optional<CycleSpectrum> subgraph_spectrum;
    /// Case 2: the subgraph is Hamiltonian with spectrum exactly
    /// {3..n/2+2} minus {n/2+1}. Always true in case 1.
    bool claim_holds = true;
};

/// Requires g pancyclic, n even, and a an arc of g of length n/2 - 1.
Prop5Result prop5_analyze(const ChordedCycle& g, const Arc& a);

/// Returns g itself if already pancyclic, otherwise g plus the
/// lexicographically smallest admissible chord that makes it pancyclic, or
/// nullopt if no single chord suffices.
std::optional<ChordedCycle> cor3_build_small(const ChordedCycle& g);

/// Same, for a subgraph given without a Hamiltonian presentation. Throws
/// PreconditionError if it has no Hamiltonian cycle.
std::optional<ChordedCycle> cor3_build_small(const SimpleGraph& g);

} // namespace pancyc
