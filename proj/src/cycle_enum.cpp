#include "pancyc/cycle_enum.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace pancyc {

ReducedMultigraph::ReducedMultigraph(int n, std::span<const Chord> chords) : n_(n) {
    const int k = static_cast<int>(chords.size());
    if (k < 1 || k > kMaxReducedChords) {
        throw PreconditionError("reduced multigraph needs 1.." + std::to_string(kMaxReducedChords) +
                                " chords, got " + std::to_string(k));
    }

    // Distinct endpoints in cycle order; insertion sort keeps this heap-free.
    for (const auto& c : chords) {
        for (Vertex x : {c.u, c.v}) {
            int i = node_count_;
            bool seen = false;
            for (int j = 0; j < node_count_; ++j) {
                if (nodes_[j] == x) {
                    seen = true;
                    break;
                }
            }
            if (seen) continue;
            while (i > 0 && nodes_[i - 1] > x) {
                nodes_[i] = nodes_[i - 1];
                --i;
            }
            nodes_[i] = x;
            ++node_count_;
        }
    }

    auto add_edge = [this](int a, int b, int weight, EdgeKind kind, int chord) {
        const int e = edge_count_++;
        edges_[e] = ReducedEdge{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                static_cast<std::int16_t>(weight), kind, static_cast<std::int8_t>(chord)};
        adjacency_[a][degree_[a]++] = static_cast<std::uint8_t>(e);
        adjacency_[b][degree_[b]++] = static_cast<std::uint8_t>(e);
    };

    for (int i = 0; i < node_count_; ++i) {
        const int j = (i + 1) % node_count_;
        const int weight = j == 0 ? n - nodes_[i] + nodes_[0] : nodes_[j] - nodes_[i];
        add_edge(i, j, weight, EdgeKind::arc, -1);
    }
    auto index_of = [this](Vertex x) {
        int i = 0;
        while (nodes_[i] != x) ++i;
        return i;
    };
    for (int c = 0; c < k; ++c) {
        add_edge(index_of(chords[c].u), index_of(chords[c].v), 1, EdgeKind::chord, c);
    }
}

ReducedMultigraph reduce(const ChordedCycle& g) {
    if (g.k() == 0) {
        throw PreconditionError("the chordless cycle has no reduced multigraph");
    }
    return ReducedMultigraph(g.n(), g.chords());
}

bool LengthSet::contains_range(int lo, int hi) const {
    for (int l = lo; l <= hi; ++l) {
        if (!contains(l)) return false;
    }
    return true;
}

std::vector<int> LengthSet::to_vector() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        for (int b = 0; b < 64; ++b) {
            if (words_[w] >> b & 1u) out.push_back(static_cast<int>(w * 64) + b);
        }
    }
    return out;
}

std::size_t LengthSet::size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

CycleSpectrum spectrum(const ChordedCycle& g) {
    CycleSpectrum s{g.n(), LengthSet(g.n()), 0};
    if (g.k() == 0) {
        s.lengths.insert(g.n());
        s.cycle_count = 1;
        return s;
    }
    for_each_cycle(reduce(g), [&s](int length, std::uint32_t) {
        s.lengths.insert(length);
        ++s.cycle_count;
        return true;
    });
    return s;
}

std::uint64_t count_cycles_of_length(const ChordedCycle& g, int length) {
    if (g.k() == 0) return length == g.n() ? 1 : 0;
    std::uint64_t count = 0;
    for_each_cycle(reduce(g), [&](int l, std::uint32_t) {
        if (l == length) ++count;
        return true;
    });
    return count;
}

namespace {

struct BruteForce {
    int n;
    std::vector<std::uint32_t> adj; // bitmask adjacency over 0-based vertices
    int start = 0;
    std::uint32_t used = 0;
    int second = -1;
    CycleSpectrum* out;

    void walk(int v, int depth) {
        for (std::uint32_t rest = adj[v]; rest != 0; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (w == start) {
                // depth counts path vertices; orient by second < last.
                if (depth >= 3 && second < v) {
                    out->lengths.insert(depth);
                    ++out->cycle_count;
                }
                continue;
            }
            if (w < start || (used >> w & 1u)) continue;
            used |= 1u << w;
            if (depth == 1) second = w;
            walk(w, depth + 1);
            used &= ~(1u << w);
        }
    }
};

} // namespace

CycleSpectrum brute_force_spectrum(const ChordedCycle& g) {
    const int n = g.n();
    if (n > kBruteForceMaxN) {
        throw PreconditionError("brute-force oracle is limited to n <= " + std::to_string(kBruteForceMaxN));
    }
    CycleSpectrum s{n, LengthSet(n), 0};
    BruteForce bf{n, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0), 0, 0, -1, &s};
    auto link = [&](int a, int b) {
        bf.adj[a] |= 1u << b;
        bf.adj[b] |= 1u << a;
    };
    for (int i = 0; i < n; ++i) link(i, (i + 1) % n);
    for (const auto& c : g.chords()) link(c.u - 1, c.v - 1);

    for (bf.start = 0; bf.start < n; ++bf.start) {
        bf.used = 1u << bf.start;
        bf.walk(bf.start, 1);
    }
    return s;
}

std::uint64_t max_cycle_bound(int k) {
    if (k < 0 || k > 62) {
        throw PreconditionError("max_cycle_bound needs 0 <= k <= 62");
    }
    return (std::uint64_t{1} << (k + 1)) - 1;
}

bool has_distinct_endpoints(const ChordedCycle& g) {
    std::vector<Vertex> ends;
    for (const auto& c : g.chords()) {
        ends.push_back(c.u);
        ends.push_back(c.v);
    }
    std::ranges::sort(ends);
    return std::ranges::adjacent_find(ends) == ends.end();
}

namespace {

// Validates an edge set as a single cycle and returns its vertex sequence,
// or an empty vector when it is not one.
std::vector<Vertex> as_single_cycle(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    Vertex first = 0;
    for (Vertex x = 1; x <= n; ++x) {
        if (adj[x].empty()) continue;
        if (adj[x].size() != 2) return {};
        if (first == 0) first = x;
    }
    if (first == 0) return {};

    std::vector<Vertex> order{first};
    Vertex prev = first;
    Vertex cur = adj[first][0];
    while (cur != first) {
        order.push_back(cur);
        const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        if (order.size() > edges.size()) return {};
    }
    if (order.size() != edges.size()) return {}; // more than one component
    return order;
}

} // namespace

std::vector<ShiCycle> shi_candidates(const ChordedCycle& g, std::span<const Chord> subset) {
    if (!has_distinct_endpoints(g)) {
        throw PreconditionError("alternating-arc candidates need distinct chord endpoints");
    }
    const int n = g.n();
    std::vector<Chord> chosen;
    for (const auto& c : subset) {
        const auto norm = make_chord(c.u, c.v);
        if (!g.has_chord(norm)) {
            throw PreconditionError("chord " + to_string(norm) + " is not in the graph");
        }
        chosen.push_back(norm);
    }
    std::ranges::sort(chosen);

    if (chosen.empty()) {
        ShiCycle ham;
        for (Vertex x = 1; x <= n; ++x) ham.vertices.push_back(x);
        ham.length = n;
        return {ham};
    }

    // Arcs of the cycle plus the chosen chords only: A_1 starts at the lowest
    // endpoint, A_i runs from endpoint i-1 to endpoint i.
    std::vector<Vertex> ends;
    for (const auto& c : chosen) {
        ends.push_back(c.u);
        ends.push_back(c.v);
    }
    std::ranges::sort(ends);
    const auto arcs = static_cast<int>(ends.size());

    std::vector<ShiCycle> out;
    for (int parity : {1, 0}) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int i = 1; i <= arcs; ++i) {
            if (i % 2 != parity) continue;
            const Vertex from = ends[i - 1];
            const Vertex to = ends[i % arcs];
            for (Vertex x = from; x != to; x = x % n + 1) edges.emplace_back(x, x % n + 1);
        }
        for (const auto& c : chosen) edges.emplace_back(c.u, c.v);
        auto order = as_single_cycle(n, edges);
        if (order.empty()) continue;
        out.push_back(ShiCycle{chosen, std::move(order), static_cast<int>(edges.size())});
    }
    return out;
}

bool pancyclic_fast(int n, std::span<const Chord> chords) {
    if (n >= 64) {
        throw PreconditionError("pancyclic_fast needs n < 64");
    }
    if (chords.empty()) return n == 3;
    const std::uint64_t target = (n == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n + 1)) - 1) & ~std::uint64_t{7};
    std::uint64_t seen = 0;
    ReducedMultigraph m(n, chords);
    const bool finished = for_each_cycle(m, [&](int length, std::uint32_t) {
        seen |= std::uint64_t{1} << length;
        return seen != target;
    });
    return !finished;
}

} // namespace pancyc
