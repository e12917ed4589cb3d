#pragma once

// Hamiltonian cycle 1-2-...-n-1 plus a set of chords. Every graph in this
// library is presented this way; vertices are 1-indexed.

#include <algorithm>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pancyc {

using Vertex = int;

/// Raised when a graph violates the chorded-cycle invariants.
class InvalidGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its hypotheses.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Chord {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Chord&) const = default;
};

/// Chord with endpoints ordered so that u < v. Throws InvalidGraph on a loop.
Chord make_chord(Vertex a, Vertex b);

std::string to_string(const Chord& c);

/// Cyclic distance between two vertices of an n-cycle.
int cyclic_distance(Vertex a, Vertex b, int n);

class ChordedCycle {
public:
    /// Validates and normalizes: chords are sorted, endpoints ordered, and
    /// loops, duplicates, cycle edges and out-of-range vertices are rejected.
    ChordedCycle(int n, std::vector<Chord> chords);

    int n() const { return n_; }
    int k() const { return static_cast<int>(chords_.size()); }
    int edge_count() const { return n_ + k(); }
    std::span<const Chord> chords() const { return chords_; }

    bool has_chord(Chord c) const;
    bool is_edge(Vertex a, Vertex b) const;
    /// Degree in the host graph (2 plus incident chords).
    int degree(Vertex x) const;
    int max_degree() const;

    bool operator==(const ChordedCycle&) const = default;
    /// Orders by n, then lexicographically by sorted chord list.
    std::strong_ordering operator<=>(const ChordedCycle& o) const;

private:
    int n_;
    std::vector<Chord> chords_;
};

ChordedCycle make_graph(int n, std::span<const std::pair<int, int>> pairs);
inline ChordedCycle make_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return make_graph(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}
inline ChordedCycle cycle_graph(int n) { return ChordedCycle(n, {}); }

/// Maximal segment of the Hamiltonian cycle between consecutive distinct
/// chord endpoints, walked clockwise from start to end. Length is in edges.
struct Arc {
    Vertex start = 0;
    Vertex end = 0;
    int length = 0;

    bool operator==(const Arc&) const = default;
};

/// Arcs clockwise from the lowest chord endpoint. With no chords, a single
/// full-circle arc (1 -> 1, length n) is returned.
std::vector<Arc> arcs_of(const ChordedCycle& g);

/// True iff the four endpoints are distinct and interleave around the cycle.
bool is_crossing(Chord p, Chord q, int n);

/// Number of chords incident to each vertex; index 0 unused.
std::vector<int> chord_degrees(const ChordedCycle& g);
int max_chord_degree(const ChordedCycle& g);

// --- symmetry -------------------------------------------------------------

/// Image of x under the dihedral map "optionally reflect through vertex 1,
/// then rotate by shift".
Vertex dihedral_image(Vertex x, int n, int shift, bool reflect);

ChordedCycle apply_dihedral(const ChordedCycle& g, int shift, bool reflect);

struct CanonicalForm {
    int n = 0;
    std::vector<Chord> key;

    auto operator<=>(const CanonicalForm&) const = default;
};

/// Lexicographically least sorted chord list over all 2n dihedral images.
CanonicalForm canonical_form(const ChordedCycle& g);

inline bool is_canonical(const ChordedCycle& g) {
    auto form = canonical_form(g);
    return std::ranges::equal(form.key, g.chords());
}

// --- surgery --------------------------------------------------------------

/// G_A: contract one edge of arc A. A must be an arc of g with length >= 1.
/// Throws InvalidGraph when the contraction would turn a chord into a cycle
/// edge or a duplicate.
ChordedCycle contract_arc(const ChordedCycle& g, const Arc& a);

ChordedCycle delete_chord(const ChordedCycle& g, Chord p);
ChordedCycle add_chord(const ChordedCycle& g, Chord p);

} // namespace pancyc
