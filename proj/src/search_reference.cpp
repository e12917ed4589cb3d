#include <chrono>

#include "pancyc/bounds.hpp"
#include "pancyc/cycle_enum.hpp"
#include "pancyc/search.hpp"

namespace pancyc::reference {

namespace {

// Walks every k-subset of chords in lexicographic order; stops at the first
// canonical pancyclic one.
ExhaustionCertificate scan(int n, int k) {
    std::vector<Chord> all;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 2; v <= n; ++v) {
            if (cyclic_distance(u, v, n) >= 2) all.push_back(Chord{u, v});
        }
    }
    ExhaustionCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.complete = true;
    const int total = static_cast<int>(all.size());
    if (k > total) return cert;

    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Chord> chords;
        for (int i : idx) chords.push_back(all[i]);
        ChordedCycle g(n, std::move(chords));
        if (is_canonical(g)) {
            ++cert.examined;
            if (spectrum(g).lengths.contains_range(3, n)) {
                cert.counterexample = g;
                return cert;
            }
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == total - k + i) --i;
        if (i < 0) return cert;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

SearchResult find_min_chords(int n, int max_k) {
    const auto started = std::chrono::steady_clock::now();
    SearchResult result;
    result.n = n;
    for (int k = bondy_min_chords(n); k <= max_k; ++k) {
        auto cert = scan(n, k);
        result.explored += cert.examined;
        if (cert.counterexample) {
            result.k_min = k;
            result.m = n + k;
            result.witness = *cert.counterexample;
            result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            return result;
        }
    }
    throw SearchFailure("reference search found no pancyclic graph");
}

ExhaustionCertificate prove_no_pancyclic(int n, int k) { return scan(n, k); }

} // namespace pancyc::reference
