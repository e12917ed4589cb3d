#include "pancyc/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "pancyc/bounds.hpp"
#include "pancyc/cycle_enum.hpp"

namespace pancyc {

namespace {

using Code = std::uint16_t;
using ChordSet = std::array<Chord, kMaxSearchChords>;
using CodeSet = std::array<Code, kMaxSearchChords>;

constexpr Code code_of(Vertex a, Vertex b) {
    return a < b ? static_cast<Code>(a * 64 + b) : static_cast<Code>(b * 64 + a);
}

struct Shard {
    int first = -1;  // chord index, -1 for k = 0
    int second = -1; // chord index, -1 for k < 2
};

// Everything a worker needs to scan one (n, k) space; read-only once built.
struct SearchSpace {
    int n = 0;
    int k = 0;
    std::vector<Chord> chords; // all admissible chords, lexicographic
    // Dihedral maps sending some vertex e to 1: maps[2 (e-1) + o][x].
    std::vector<std::array<std::uint8_t, 64>> maps;
    std::vector<Shard> shards;

    SearchSpace(int n_, int k_) : n(n_), k(k_) {
        if (n < 3 || n > kMaxSearchVertices) {
            throw PreconditionError("search supports 3 <= n <= " + std::to_string(kMaxSearchVertices));
        }
        if (k < 0 || k > kMaxSearchChords) {
            throw PreconditionError("search supports 0 <= k <= " + std::to_string(kMaxSearchChords));
        }
        for (Vertex u = 1; u <= n; ++u) {
            for (Vertex v = u + 2; v <= n; ++v) {
                if (cyclic_distance(u, v, n) >= 2) chords.push_back(Chord{u, v});
            }
        }
        maps.resize(static_cast<std::size_t>(2 * n));
        for (Vertex e = 1; e <= n; ++e) {
            for (int o = 0; o < 2; ++o) {
                auto& m = maps[static_cast<std::size_t>(2 * (e - 1) + o)];
                for (Vertex x = 1; x <= n; ++x) {
                    const int d = o == 0 ? (x - e + n) % n : (e - x + n) % n;
                    m[x] = static_cast<std::uint8_t>(d + 1);
                }
            }
        }

        const int total = static_cast<int>(chords.size());
        if (k == 0) {
            shards.push_back({});
            return;
        }
        if (total < k) return;
        // A representative starts with (1, v) and reflection through vertex 1
        // maps (1, v) to (1, n + 2 - v), so v <= n/2 + 1.
        for (int i = 0; i < total && chords[i].u == 1; ++i) {
            if (chords[i].v > n + 2 - chords[i].v) break;
            if (k == 1) {
                shards.push_back({i, -1});
                continue;
            }
            for (int j = i + 1; j < total; ++j) shards.push_back({i, j});
        }
    }

    std::string shard_id(std::size_t s) const {
        const auto& sh = shards[s];
        if (sh.first < 0) return "C";
        std::string id = std::to_string(chords[sh.first].u) + "-" + std::to_string(chords[sh.first].v);
        if (sh.second >= 0) {
            id += "." + std::to_string(chords[sh.second].u) + "-" + std::to_string(chords[sh.second].v);
        }
        return id;
    }

    // True iff the sorted chord set is the least of its dihedral images.
    // Only maps sending a chord endpoint to vertex 1 can produce a smaller
    // list, since the representative itself starts with a chord at 1.
    bool is_canonical(const ChordSet& set) const {
        CodeSet codes{};
        std::array<Vertex, 2 * kMaxSearchChords> ends{};
        int nends = 0;
        for (int i = 0; i < k; ++i) {
            codes[i] = code_of(set[i].u, set[i].v);
            for (Vertex x : {set[i].u, set[i].v}) {
                bool seen = false;
                for (int j = 0; j < nends; ++j) seen |= ends[j] == x;
                if (!seen) ends[nends++] = x;
            }
        }
        for (int t = 0; t < nends; ++t) {
            for (int o = 0; o < 2; ++o) {
                if (ends[t] == 1 && o == 0) continue; // identity
                const auto& m = maps[static_cast<std::size_t>(2 * (ends[t] - 1) + o)];
                CodeSet image{};
                for (int i = 0; i < k; ++i) {
                    const Code c = code_of(m[set[i].u], m[set[i].v]);
                    int p = i;
                    while (p > 0 && image[p - 1] > c) {
                        image[p] = image[p - 1];
                        --p;
                    }
                    image[p] = c;
                }
                for (int i = 0; i < k; ++i) {
                    if (image[i] != codes[i]) {
                        if (image[i] < codes[i]) return false;
                        break;
                    }
                }
            }
        }
        return true;
    }

    // Visits every canonical set of the shard in lexicographic order.
    // visit(set) returns true to stop; returns false if stopped.
    template <class Visit>
    bool scan_shard(std::size_t s, Visit&& visit) const {
        ChordSet set{};
        const auto& sh = shards[s];
        if (k == 0) return !visit(set);
        set[0] = chords[sh.first];
        if (k == 1) return is_canonical(set) ? !visit(set) : true;
        set[1] = chords[sh.second];

        const int total = static_cast<int>(chords.size());
        const int rest = k - 2;
        std::array<int, kMaxSearchChords> idx{};
        for (int i = 0; i < rest; ++i) idx[i] = sh.second + 1 + i;
        if (rest > 0 && idx[rest - 1] >= total) return true;
        while (true) {
            for (int i = 0; i < rest; ++i) set[2 + i] = chords[idx[i]];
            if (is_canonical(set) && visit(set)) return false;
            // Next combination of `rest` indices from (second, total).
            int i = rest - 1;
            while (i >= 0 && idx[i] == total - rest + i) --i;
            if (i < 0) return true;
            ++idx[i];
            for (int j = i + 1; j < rest; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    ChordedCycle to_graph(const ChordSet& set) const {
        return ChordedCycle(n, std::vector<Chord>(set.begin(), set.begin() + k));
    }
};

struct ShardOutcome {
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    std::uint64_t violations = 0;
    std::optional<ChordSet> witness;
    bool complete = false;
    bool resumed = false;
};

struct JournalEntry {
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
};

std::unordered_map<std::string, JournalEntry> read_journal(const std::filesystem::path& path) {
    std::unordered_map<std::string, JournalEntry> done;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string id;
        JournalEntry e;
        if (fields >> id >> e.examined >> e.pruned) done[id] = e;
    }
    return done;
}

struct LevelOutcome {
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    std::uint64_t violations = 0;
    std::size_t shards = 0;
    std::size_t resumed = 0;
    std::optional<ChordedCycle> witness;
    bool complete = true;
};

// Scans one (n, k) space. Stops at the lexicographically least pancyclic
// set; shards after the one holding it may be abandoned.
LevelOutcome scan_level(int n, int k, const SearchConfig& config, double deadline) {
    const SearchSpace space(n, k);
    const std::size_t count = space.shards.size();
    std::vector<ShardOutcome> outcomes(count);

    std::optional<std::filesystem::path> journal;
    if (config.journal_dir) {
        std::filesystem::create_directories(*config.journal_dir);
        journal = journal_path(*config.journal_dir, n, k);
        const auto done = read_journal(*journal);
        for (std::size_t s = 0; s < count; ++s) {
            auto it = done.find(space.shard_id(s));
            if (it == done.end()) continue;
            outcomes[s] = ShardOutcome{it->second.examined, it->second.pruned, 0, std::nullopt, true, true};
        }
    }
    std::ofstream journal_out;
    if (journal) journal_out.open(*journal, std::ios::app);
    std::mutex journal_mutex;

    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{kNone};
    std::atomic<bool> out_of_time{false};
    const int threads = config.jobs > 0 ? config.jobs : omp_get_max_threads();
    const auto signed_count = static_cast<std::int64_t>(count);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t si = 0; si < signed_count; ++si) {
        const auto s = static_cast<std::size_t>(si);
        ShardOutcome& out = outcomes[s];
        if (out.resumed) continue;
        if (best.load(std::memory_order_relaxed) < s || out_of_time.load(std::memory_order_relaxed)) continue;

        std::uint64_t ticks = 0;
        bool aborted = false;
        const bool finished = space.scan_shard(s, [&](const ChordSet& set) {
            if ((++ticks & 0x3ff) == 0) {
                if (best.load(std::memory_order_relaxed) < s) {
                    aborted = true;
                    return true;
                }
                if (deadline > 0 && omp_get_wtime() > deadline) {
                    out_of_time = true;
                    aborted = true;
                    return true;
                }
            }
            ++out.examined;
            const std::span<const Chord> chords(set.data(), static_cast<std::size_t>(k));
            if (config.degree_prune && k > 0) {
                std::array<int, 64> deg{};
                int worst = 0;
                for (const auto& c : chords) {
                    worst = std::max({worst, ++deg[c.u], ++deg[c.v]});
                }
                if (!degree_capacity_admits(n, k, worst)) {
                    ++out.pruned;
                    if (config.validate && pancyclic_fast(n, chords)) ++out.violations;
                    return false;
                }
            }
            if (pancyclic_fast(n, chords)) {
                out.witness = set;
                return true;
            }
            return false;
        });

        if (out.witness) {
            std::size_t cur = best.load();
            while (s < cur && !best.compare_exchange_weak(cur, s)) {
            }
            out.complete = true;
        } else if (finished && !aborted) {
            out.complete = true;
            if (journal) {
                std::lock_guard lock(journal_mutex);
                journal_out << space.shard_id(s) << ' ' << out.examined << ' ' << out.pruned << '\n';
                journal_out.flush();
            }
        }
    }

    LevelOutcome level;
    level.shards = count;
    const std::size_t w = best.load();
    for (std::size_t s = 0; s < count && s <= w; ++s) {
        const auto& o = outcomes[s];
        level.examined += o.examined;
        level.pruned += o.pruned;
        level.violations += o.violations;
        level.resumed += o.resumed ? 1 : 0;
        if (!o.complete) level.complete = false;
    }
    if (w != kNone) level.witness = space.to_graph(*outcomes[w].witness);
    return level;
}

double deadline_for(const SearchConfig& config) {
    return config.time_budget_seconds ? omp_get_wtime() + *config.time_budget_seconds : 0.0;
}

} // namespace

std::filesystem::path journal_path(const std::filesystem::path& dir, int n, int k) {
    return dir / ("search-" + std::to_string(n) + "-" + std::to_string(k) + ".journal");
}

SearchResult find_min_chords(int n, const SearchConfig& config) {
    const double started = omp_get_wtime();
    const double deadline = deadline_for(config);
    if (n < 3 || n > kMaxSearchVertices) {
        throw PreconditionError("search supports 3 <= n <= " + std::to_string(kMaxSearchVertices));
    }
    const int max_k = std::min(config.max_k, kMaxSearchChords);
    const int start = config.lower_bound_skip ? bondy_min_chords(n) : 0;

    SearchResult result;
    result.n = n;
    for (int k = start; k <= max_k; ++k) {
        auto level = scan_level(n, k, config, deadline);
        result.explored += level.examined;
        result.pruned += level.pruned;
        if (level.violations > 0) {
            throw SearchFailure("degree prune skipped " + std::to_string(level.violations) +
                                " pancyclic graphs at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
        if (level.witness) {
            result.k_min = k;
            result.m = n + k;
            result.witness = *level.witness;
            result.wall_seconds = omp_get_wtime() - started;
            return result;
        }
        if (!level.complete) {
            throw SearchFailure("time budget exceeded at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    }
    throw SearchFailure("no pancyclic graph on " + std::to_string(n) + " vertices with at most " +
                        std::to_string(max_k) + " chords");
}

ExhaustionCertificate prove_no_pancyclic(int n, int k, const SearchConfig& config) {
    const double started = omp_get_wtime();
    auto level = scan_level(n, k, config, deadline_for(config));
    ExhaustionCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.examined = level.examined;
    cert.pruned = level.pruned;
    cert.validation_violations = level.violations;
    cert.shards = level.shards;
    cert.resumed_shards = level.resumed;
    cert.complete = level.complete;
    cert.counterexample = level.witness;
    cert.wall_seconds = omp_get_wtime() - started;
    return cert;
}

std::vector<TableEntry> build_table(int from, int to, const SearchConfig& config) {
    if (from < 3 || from > to) {
        throw PreconditionError("table needs 3 <= from <= to");
    }
    std::vector<TableEntry> rows;
    for (int n = from; n <= to; ++n) {
        TableEntry row{n, std::nullopt, {}};
        try {
            row.result = find_min_chords(n, config);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void enumerate_canonical_chord_sets(int n, int k, const std::function<void(const ChordedCycle&)>& visit) {
    const SearchSpace space(n, k);
    for (std::size_t s = 0; s < space.shards.size(); ++s) {
        space.scan_shard(s, [&](const ChordSet& set) {
            visit(space.to_graph(set));
            return false;
        });
    }
}

std::vector<ChordedCycle> canonical_chord_sets(int n, int k) {
    std::vector<ChordedCycle> out;
    enumerate_canonical_chord_sets(n, k, [&](const ChordedCycle& g) { out.push_back(g); });
    return out;
}

} // namespace pancyc
