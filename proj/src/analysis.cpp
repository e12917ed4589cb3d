#include "pancyc/analysis.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace pancyc {

bool is_pancyclic(const ChordedCycle& g) {
    if (g.n() < 64 && g.k() <= kMaxReducedChords) return pancyclic_fast(g.n(), g.chords());
    return spectrum(g).lengths.contains_range(3, g.n());
}

std::vector<int> missing_lengths(const ChordedCycle& g) {
    const auto s = spectrum(g);
    std::vector<int> missing;
    for (int l = 3; l <= g.n(); ++l) {
        if (!s.lengths.contains(l)) missing.push_back(l);
    }
    return missing;
}

std::string_view to_string(ReductionKind kind) {
    switch (kind) {
    case ReductionKind::prop3_delete_chord: return "prop3_delete_chord";
    case ReductionKind::thm4a_contract: return "thm4a_contract";
    case ReductionKind::thm4b_contract: return "thm4b_contract";
    case ReductionKind::prop5_dichotomy: return "prop5_dichotomy";
    }
    return "unknown";
}

namespace {

void require_pancyclic(const ChordedCycle& g, const char* op) {
    if (!is_pancyclic(g)) {
        throw PreconditionError(std::string(op) + " requires a pancyclic graph");
    }
}

Vertex step(Vertex x, int n) { return x % n + 1; }

} // namespace

std::optional<ReductionReport> prop3_reduce(const ChordedCycle& g) {
    require_pancyclic(g, "prop3_reduce");
    const int n = g.n();
    const auto chords = g.chords();

    auto crossers = [&](Chord p) {
        std::vector<Chord> out;
        for (const auto& c : chords) {
            if (is_crossing(p, c, n)) out.push_back(c);
        }
        return out;
    };

    std::optional<std::pair<Chord, Chord>> pair;
    for (const auto& p : chords) {
        for (auto [i, j] : {std::pair{p.u, p.v}, std::pair{p.v, p.u}}) {
            const Vertex i1 = step(i, n);
            const Vertex j1 = step(j, n);
            if (i1 == j1 || cyclic_distance(i1, j1, n) < 2) continue;
            const Chord q = make_chord(i1, j1);
            if (!g.has_chord(q)) continue;
            const auto xp = crossers(p);
            const auto xq = crossers(q);
            if (xp.size() == 1 && xp[0] == q && xq.size() == 1 && xq[0] == p) {
                pair = std::pair{p, q};
                break;
            }
        }
        if (pair) break;
    }
    if (!pair) return std::nullopt;
    if (count_cycles_of_length(g, 4) < 2) return std::nullopt;

    auto reduced = delete_chord(g, pair->first);
    const bool ok = is_pancyclic(reduced);
    return ReductionReport{ReductionKind::prop3_delete_chord, *pair, std::move(reduced), ok};
}

std::vector<QualifyingArc> qualifying_arcs(const ChordedCycle& g) {
    const int n = g.n();
    if (n <= 6) {
        throw PreconditionError("arc contraction theorem needs n > 6");
    }
    std::vector<QualifyingArc> out;
    for (const auto& arc : arcs_of(g)) {
        if (arc.length < 1 || arc.start == arc.end) continue;
        const bool joined = g.has_chord(make_chord(arc.start, arc.end));
        // Exact integer forms of |A| >= (n-1)/2 and |A| >= (n+2)/3.
        if (!joined && 2 * arc.length >= n - 1) {
            out.push_back({arc, ContractionCase::a});
        } else if (joined && 3 * arc.length >= n + 2) {
            out.push_back({arc, ContractionCase::b});
        }
    }
    return out;
}

std::vector<QualifyingArc> thm4_applicable(const ChordedCycle& g) {
    if (g.n() <= 6) {
        throw PreconditionError("arc contraction theorem needs n > 6");
    }
    require_pancyclic(g, "thm4_applicable");
    return qualifying_arcs(g);
}

std::vector<ReductionReport> thm4_reduce(const ChordedCycle& g) {
    std::vector<ReductionReport> out;
    for (const auto& q : thm4_applicable(g)) {
        auto contracted = contract_arc(g, q.arc);
        const bool ok = is_pancyclic(contracted);
        out.push_back(ReductionReport{
            q.which == ContractionCase::a ? ReductionKind::thm4a_contract : ReductionKind::thm4b_contract, q.arc,
            std::move(contracted), ok});
    }
    return out;
}

std::optional<HamiltonianPresentation> present_hamiltonian(const SimpleGraph& g) {
    const int n = g.order();
    if (n < 3) return std::nullopt;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (auto [a, b] : g.edges) {
        if (a < 1 || a > n || b < 1 || b > n || a == b) {
            throw InvalidGraph("edge outside the vertex range or a loop");
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nbrs : adj) {
        std::ranges::sort(nbrs);
        if (std::ranges::adjacent_find(nbrs) != nbrs.end()) {
            throw InvalidGraph("duplicate edge in simple graph");
        }
    }

    std::vector<int> path{1};
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    used[1] = 1;
    std::function<bool()> extend = [&]() -> bool {
        const int v = path.back();
        if (static_cast<int>(path.size()) == n) {
            return std::ranges::binary_search(adj[v], 1);
        }
        for (int w : adj[v]) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    if (!extend()) return std::nullopt;

    std::vector<int> position(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) position[path[i]] = i + 1;
    std::vector<Chord> chords;
    for (auto [a, b] : g.edges) {
        const int pa = position[a];
        const int pb = position[b];
        if (cyclic_distance(pa, pb, n) == 1) continue;
        chords.push_back(make_chord(pa, pb));
    }
    return HamiltonianPresentation{ChordedCycle(n, std::move(chords)), std::move(path)};
}

SimpleGraph remove_arc_interior(const ChordedCycle& g, const Arc& a) {
    const int n = g.n();
    std::vector<char> interior(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex x = step(a.start, n); x != a.end; x = step(x, n)) interior[x] = 1;

    SimpleGraph out;
    std::vector<int> index(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex x = 1; x <= n; ++x) {
        if (interior[x]) continue;
        out.labels.push_back(x);
        index[x] = out.order();
    }
    // Cycle edges outside the arc: the walk from end back to start.
    for (Vertex x = a.end; x != a.start; x = step(x, n)) {
        out.edges.emplace_back(index[x], index[step(x, n)]);
    }
    for (const auto& c : g.chords()) out.edges.emplace_back(index[c.u], index[c.v]);
    return out;
}

Prop5Result prop5_analyze(const ChordedCycle& g, const Arc& a) {
    const int n = g.n();
    if (n % 2 != 0) {
        throw PreconditionError("half-arc dichotomy needs even n");
    }
    if (a.length != n / 2 - 1) {
        throw PreconditionError("half-arc dichotomy needs an arc of length n/2 - 1 = " + std::to_string(n / 2 - 1));
    }
    auto arcs = arcs_of(g);
    if (std::ranges::find(arcs, a) == arcs.end()) {
        throw PreconditionError("arc is not an arc of the graph");
    }
    require_pancyclic(g, "prop5_analyze");

    Prop5Result result{Prop5Result::Case::contraction_pancyclic, contract_arc(g, a), {}, {}, {}, true};
    if (is_pancyclic(result.contracted)) return result;

    result.which = Prop5Result::Case::subgraph_missing_one;
    result.subgraph = remove_arc_interior(g, a);
    result.subgraph_presented = present_hamiltonian(*result.subgraph);
    if (!result.subgraph_presented) {
        result.claim_holds = false;
        return result;
    }
    result.subgraph_spectrum = spectrum(result.subgraph_presented->graph);

    const int order = n / 2 + 2;
    LengthSet expected(order);
    for (int l = 3; l <= order; ++l) {
        if (l != n / 2 + 1) expected.insert(l);
    }
    result.claim_holds = result.subgraph_presented->graph.n() == order && result.subgraph_spectrum->lengths == expected;
    return result;
}

std::optional<ChordedCycle> cor3_build_small(const ChordedCycle& g) {
    if (is_pancyclic(g)) return g;
    const int n = g.n();
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 2; v <= n; ++v) {
            const Chord c{u, v};
            if (cyclic_distance(u, v, n) < 2 || g.has_chord(c)) continue;
            auto candidate = add_chord(g, c);
            if (is_pancyclic(candidate)) return candidate;
        }
    }
    return std::nullopt;
}

std::optional<ChordedCycle> cor3_build_small(const SimpleGraph& g) {
    auto presented = present_hamiltonian(g);
    if (!presented) {
        throw PreconditionError("graph has no Hamiltonian cycle to present it along");
    }
    return cor3_build_small(presented->graph);
}

} // namespace pancyc
