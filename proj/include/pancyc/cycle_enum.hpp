#pragma once

// Exact cycle enumeration for chorded Hamiltonian cycles.
//
// Every cycle of such a graph traverses each arc either completely or not at
// all, so contracting arcs to weighted edges between chord endpoints gives a
// small multigraph (at most 2k nodes, 3k edges) whose simple cycles are in
// bijection with the cycles of the original graph. Cycle length is the sum
// of edge weights along the multigraph cycle.

#include <array>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

/// Capacity of the fixed-size reduced multigraph. Spectrum enumeration is
/// exponential in k anyway; 2^13 cycles is far past anything pancyclic.
inline constexpr int kMaxReducedChords = 12;
inline constexpr int kMaxReducedNodes = 2 * kMaxReducedChords;
inline constexpr int kMaxReducedEdges = 3 * kMaxReducedChords;
inline constexpr int kMaxNodeDegree = 2 + kMaxReducedChords;

enum class EdgeKind : std::uint8_t { arc, chord };

struct ReducedEdge {
    std::uint8_t a = 0; // node indices
    std::uint8_t b = 0;
    std::int16_t weight = 0;
    EdgeKind kind = EdgeKind::arc;
    std::int8_t chord = -1; // index into the chord list for chord edges

    std::uint8_t other(std::uint8_t x) const { return x == a ? b : a; }
};

/// Nodes are the distinct chord endpoints in cycle order. Arc edges come
/// first (edge i joins node i and node i+1 mod nodes), then chord edges.
class ReducedMultigraph {
public:
    ReducedMultigraph(int n, std::span<const Chord> chords);

    int n() const { return n_; }
    int node_count() const { return node_count_; }
    int edge_count() const { return edge_count_; }
    int chord_count() const { return edge_count_ - node_count_; }
    Vertex node_vertex(int i) const { return nodes_[i]; }
    const ReducedEdge& edge(int e) const { return edges_[e]; }
    int degree(int node) const { return degree_[node]; }
    int incident(int node, int slot) const { return adjacency_[node][slot]; }

    std::span<const ReducedEdge> edges() const { return {edges_.data(), static_cast<std::size_t>(edge_count_)}; }

private:
    int n_ = 0;
    int node_count_ = 0;
    int edge_count_ = 0;
    std::array<Vertex, kMaxReducedNodes> nodes_{};
    std::array<ReducedEdge, kMaxReducedEdges> edges_{};
    std::array<std::uint8_t, kMaxReducedNodes> degree_{};
    std::array<std::array<std::uint8_t, kMaxNodeDegree>, kMaxReducedNodes> adjacency_{};
};

/// Throws PreconditionError for k = 0 (the bare cycle has no chord
/// endpoints) or k above kMaxReducedChords.
ReducedMultigraph reduce(const ChordedCycle& g);

namespace detail {

template <class Visit>
struct CycleWalker {
    const ReducedMultigraph& m;
    Visit& visit;
    int root = 0;
    int first_edge = -1;
    std::uint32_t on_path = 0;

    // Returns false when the visitor asked to stop.
    bool extend(int node, int length, std::uint32_t chord_mask) {
        const int deg = m.degree(node);
        for (int s = 0; s < deg; ++s) {
            const int e = m.incident(node, s);
            const ReducedEdge& edge = m.edge(e);
            const int next = edge.other(static_cast<std::uint8_t>(node));
            const std::uint32_t mask =
                edge.kind == EdgeKind::chord ? chord_mask | (1u << edge.chord) : chord_mask;
            if (next == root) {
                // Each cycle is seen in both directions; keep the one whose
                // first edge id is smaller than its closing edge id.
                if (e != first_edge && first_edge < e) {
                    if (!visit(length + edge.weight, mask)) return false;
                }
                continue;
            }
            if (next < root || (on_path >> next & 1u)) continue;
            on_path |= 1u << next;
            if (!extend(next, length + edge.weight, mask)) return false;
            on_path &= ~(1u << next);
        }
        return true;
    }

    bool run() {
        for (root = 0; root < m.node_count(); ++root) {
            on_path = 1u << root;
            const int deg = m.degree(root);
            for (int s = 0; s < deg; ++s) {
                first_edge = m.incident(root, s);
                const ReducedEdge& edge = m.edge(first_edge);
                const int next = edge.other(static_cast<std::uint8_t>(root));
                if (next < root) continue;
                const std::uint32_t mask = edge.kind == EdgeKind::chord ? 1u << edge.chord : 0u;
                on_path |= 1u << next;
                if (!extend(next, edge.weight, mask)) return false;
                on_path &= ~(1u << next);
            }
        }
        return true;
    }
};

} // namespace detail

/// Calls visit(length, chord_mask) once per cycle of the underlying graph.
/// chord_mask has bit i set when chord i of the input list is used. The
/// visitor returns false to stop early; the function returns false in that
/// case. The Hamiltonian cycle is included.
template <class Visit>
bool for_each_cycle(const ReducedMultigraph& m, Visit&& visit) {
    detail::CycleWalker<std::remove_reference_t<Visit>> walker{m, visit};
    return walker.run();
}

/// Set of cycle lengths stored as a bitmask over 0..n.
class LengthSet {
public:
    LengthSet() = default;
    explicit LengthSet(int max_length) : words_(static_cast<std::size_t>(max_length) / 64 + 1, 0) {}

    void insert(int length) { words_[static_cast<std::size_t>(length) / 64] |= std::uint64_t{1} << (length % 64); }
    bool contains(int length) const {
        const auto w = static_cast<std::size_t>(length) / 64;
        return w < words_.size() && (words_[w] >> (length % 64) & 1u);
    }
    /// True iff every length in [lo, hi] is present.
    bool contains_range(int lo, int hi) const;
    std::vector<int> to_vector() const;
    std::size_t size() const;

    bool operator==(const LengthSet&) const = default;

private:
    std::vector<std::uint64_t> words_;
};

struct CycleSpectrum {
    int n = 0;
    LengthSet lengths;
    std::uint64_t cycle_count = 0;

    bool operator==(const CycleSpectrum&) const = default;
};

/// Exact spectrum through the reduced multigraph.
CycleSpectrum spectrum(const ChordedCycle& g);

/// Number of cycles of exactly the given length.
std::uint64_t count_cycles_of_length(const ChordedCycle& g, int length);

/// Independent oracle: depth-first search over the full graph, rooting each
/// cycle at its smallest vertex. Throws PreconditionError for n > 20.
CycleSpectrum brute_force_spectrum(const ChordedCycle& g);
inline constexpr int kBruteForceMaxN = 20;

/// Upper bound 2^(k+1) - 1 on the number of cycles with k chords.
std::uint64_t max_cycle_bound(int k);

/// One candidate cycle from the alternating-arc construction.
struct ShiCycle {
    std::vector<Chord> chords;
    std::vector<Vertex> vertices; // in traversal order
    int length = 0;
};

/// The (at most two) cycles that use exactly the chord subset K: K together
/// with the odd-indexed or the even-indexed arcs of the cycle-plus-K graph.
/// Each candidate is validated before being returned. Requires all chord
/// endpoints of g to be distinct; throws PreconditionError otherwise. K = {}
/// yields the Hamiltonian cycle.
std::vector<ShiCycle> shi_candidates(const ChordedCycle& g, std::span<const Chord> subset);

/// True iff no two chords of g share an endpoint.
bool has_distinct_endpoints(const ChordedCycle& g);

/// Fast pancyclicity test used by the search kernel: enumerates until all
/// lengths 3..n are seen. Requires 1 <= chords.size() <= kMaxReducedChords
/// and n < 64.
bool pancyclic_fast(int n, std::span<const Chord> chords);

} // namespace pancyc
