#include "pancyc/graph.hpp"

#include <algorithm>

namespace pancyc {

Chord make_chord(Vertex a, Vertex b) {
    if (a == b) {
        throw InvalidGraph("loop at vertex " + std::to_string(a));
    }
    return a < b ? Chord{a, b} : Chord{b, a};
}

std::string to_string(const Chord& c) {
    return "(" + std::to_string(c.u) + "," + std::to_string(c.v) + ")";
}

int cyclic_distance(Vertex a, Vertex b, int n) {
    int d = a > b ? a - b : b - a;
    return std::min(d, n - d);
}

ChordedCycle::ChordedCycle(int n, std::vector<Chord> chords) : n_(n), chords_(std::move(chords)) {
    if (n_ < 3) {
        throw InvalidGraph("a Hamiltonian cycle needs n >= 3, got n=" + std::to_string(n_));
    }
    for (auto& c : chords_) {
        if (c.u < 1 || c.u > n_ || c.v < 1 || c.v > n_) {
            throw InvalidGraph("chord " + to_string(c) + " has a vertex outside 1.." + std::to_string(n_));
        }
        c = make_chord(c.u, c.v);
        if (cyclic_distance(c.u, c.v, n_) < 2) {
            throw InvalidGraph("chord " + to_string(c) + " coincides with a Hamiltonian cycle edge");
        }
    }
    std::ranges::sort(chords_);
    auto dup = std::ranges::adjacent_find(chords_);
    if (dup != chords_.end()) {
        throw InvalidGraph("duplicate chord " + to_string(*dup));
    }
}

bool ChordedCycle::has_chord(Chord c) const {
    if (c.u > c.v) std::swap(c.u, c.v);
    return std::ranges::binary_search(chords_, c);
}

bool ChordedCycle::is_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    if (cyclic_distance(a, b, n_) == 1) return true;
    return has_chord(Chord{std::min(a, b), std::max(a, b)});
}

int ChordedCycle::degree(Vertex x) const {
    int d = 2;
    for (const auto& c : chords_) {
        if (c.u == x || c.v == x) ++d;
    }
    return d;
}

int ChordedCycle::max_degree() const { return 2 + max_chord_degree(*this); }

std::strong_ordering ChordedCycle::operator<=>(const ChordedCycle& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(chords_.begin(), chords_.end(), o.chords_.begin(),
                                                  o.chords_.end());
}

ChordedCycle make_graph(int n, std::span<const std::pair<int, int>> pairs) {
    std::vector<Chord> chords;
    chords.reserve(pairs.size());
    for (auto [a, b] : pairs) chords.push_back(Chord{a, b});
    return ChordedCycle(n, std::move(chords));
}

namespace {

std::vector<Vertex> distinct_endpoints(std::span<const Chord> chords) {
    std::vector<Vertex> ends;
    ends.reserve(2 * chords.size());
    for (const auto& c : chords) {
        ends.push_back(c.u);
        ends.push_back(c.v);
    }
    std::ranges::sort(ends);
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    return ends;
}

} // namespace

std::vector<Arc> arcs_of(const ChordedCycle& g) {
    const int n = g.n();
    auto ends = distinct_endpoints(g.chords());
    if (ends.empty()) return {Arc{1, 1, n}};

    std::vector<Arc> arcs;
    arcs.reserve(ends.size());
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
        arcs.push_back(Arc{ends[i], ends[i + 1], ends[i + 1] - ends[i]});
    }
    arcs.push_back(Arc{ends.back(), ends.front(), n - ends.back() + ends.front()});
    return arcs;
}

bool is_crossing(Chord p, Chord q, int /*n*/) {
    p = make_chord(p.u, p.v);
    q = make_chord(q.u, q.v);
    if (p.u == q.u || p.u == q.v || p.v == q.u || p.v == q.v) return false;
    const bool u_inside = p.u < q.u && q.u < p.v;
    const bool v_inside = p.u < q.v && q.v < p.v;
    return u_inside != v_inside;
}

std::vector<int> chord_degrees(const ChordedCycle& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n()) + 1, 0);
    for (const auto& c : g.chords()) {
        ++deg[c.u];
        ++deg[c.v];
    }
    return deg;
}

int max_chord_degree(const ChordedCycle& g) {
    auto deg = chord_degrees(g);
    return *std::ranges::max_element(deg);
}

Vertex dihedral_image(Vertex x, int n, int shift, bool reflect) {
    int y = x - 1;
    if (reflect) y = (n - y) % n;
    return (y + shift) % n + 1;
}

ChordedCycle apply_dihedral(const ChordedCycle& g, int shift, bool reflect) {
    std::vector<Chord> out;
    out.reserve(g.chords().size());
    for (const auto& c : g.chords()) {
        out.push_back(make_chord(dihedral_image(c.u, g.n(), shift, reflect),
                                 dihedral_image(c.v, g.n(), shift, reflect)));
    }
    return ChordedCycle(g.n(), std::move(out));
}

CanonicalForm canonical_form(const ChordedCycle& g) {
    const int n = g.n();
    CanonicalForm best{n, {g.chords().begin(), g.chords().end()}};
    std::vector<Chord> image(g.chords().size());
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int shift = 0; shift < n; ++shift) {
            for (std::size_t i = 0; i < image.size(); ++i) {
                const auto& c = g.chords()[i];
                image[i] = make_chord(dihedral_image(c.u, n, shift, reflect != 0),
                                      dihedral_image(c.v, n, shift, reflect != 0));
            }
            std::ranges::sort(image);
            if (image < best.key) best.key = image;
        }
    }
    return best;
}

namespace {

// Remove vertex r from the cycle, relabelling later vertices down by one.
Vertex drop_label(Vertex x, Vertex r) { return x > r ? x - 1 : x; }

} // namespace

ChordedCycle contract_arc(const ChordedCycle& g, const Arc& a) {
    if (a.length < 1) {
        throw PreconditionError("cannot contract a degenerate arc of length 0");
    }
    auto arcs = arcs_of(g);
    if (std::ranges::find(arcs, a) == arcs.end()) {
        throw PreconditionError("arc " + std::to_string(a.start) + "->" + std::to_string(a.end) +
                                " is not an arc of the graph");
    }
    const int n = g.n();
    if (n - 1 < 3) {
        throw InvalidGraph("contraction would leave fewer than 3 vertices");
    }

    // Length >= 2 (or the chordless full circle): delete the interior vertex
    // following start. Length 1: merge end into start.
    const bool merge = a.length == 1 && g.k() > 0;
    const Vertex removed = merge ? a.end : a.start % n + 1;

    std::vector<Chord> chords;
    chords.reserve(g.chords().size());
    for (auto c : g.chords()) {
        if (merge && c.u == removed) c.u = a.start;
        if (merge && c.v == removed) c.v = a.start;
        if (c.u == c.v) {
            throw InvalidGraph("contraction collapses a chord into a loop");
        }
        chords.push_back(make_chord(drop_label(c.u, removed), drop_label(c.v, removed)));
    }
    return ChordedCycle(n - 1, std::move(chords));
}

ChordedCycle delete_chord(const ChordedCycle& g, Chord p) {
    p = make_chord(p.u, p.v);
    if (!g.has_chord(p)) {
        throw PreconditionError("chord " + to_string(p) + " is not in the graph");
    }
    std::vector<Chord> chords;
    for (const auto& c : g.chords()) {
        if (c != p) chords.push_back(c);
    }
    return ChordedCycle(g.n(), std::move(chords));
}

ChordedCycle add_chord(const ChordedCycle& g, Chord p) {
    std::vector<Chord> chords(g.chords().begin(), g.chords().end());
    chords.push_back(p);
    return ChordedCycle(g.n(), std::move(chords));
}

} // namespace pancyc
