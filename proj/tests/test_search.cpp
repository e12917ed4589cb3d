#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>

#include "pancyc/analysis.hpp"
#include "pancyc/search.hpp"

using namespace pancyc;

namespace {

// Known m(n) for n = 3..24.
const std::map<int, int> kTable{{3, 3},   {4, 5},   {5, 6},   {6, 8},   {7, 9},   {8, 10},  {9, 12},  {10, 13},
                                {11, 14}, {12, 15}, {13, 16}, {14, 17}, {15, 19}, {16, 20}, {17, 21}, {18, 22},
                                {19, 23}, {20, 24}, {21, 25}, {22, 26}, {23, 27}, {24, 28}};

// Orbits of k-subsets under the dihedral group, counted by explicit closure.
int orbit_count(int n, int k) {
    std::vector<Chord> pool;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 2; v <= n; ++v)
            if (!(u == 1 && v == n)) pool.push_back({u, v});
    std::set<std::set<Chord>> seen;
    int orbits = 0;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int depth, int from) {
        if (depth == k) {
            std::set<Chord> s;
            for (int i : idx) s.insert(pool[i]);
            if (seen.count(s)) return;
            ++orbits;
            for (int r = 0; r < n; ++r) {
                for (bool flip : {false, true}) {
                    std::set<Chord> img;
                    for (auto c : s) {
                        auto f = [&](int x) {
                            int y = x - 1;
                            if (flip) y = (n - y) % n;
                            return (y + r) % n + 1;
                        };
                        img.insert(make_chord(f(c.u), f(c.v)));
                    }
                    seen.insert(img);
                }
            }
            return;
        }
        for (int i = from; i < static_cast<int>(pool.size()); ++i) {
            idx[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return orbits;
}

SearchConfig serial() {
    SearchConfig c;
    c.jobs = 1;
    return c;
}

} // namespace

TEST_CASE("canonical enumeration counts one set per orbit") {
    CHECK(canonical_chord_sets(6, 1).size() == 2);
    CHECK(canonical_chord_sets(5, 1).size() == 1);
    CHECK(canonical_chord_sets(9, 0).size() == 1);
    CHECK(canonical_chord_sets(10, 3).size() == 365);
    for (int n = 4; n <= 10; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const auto sets = canonical_chord_sets(n, k);
            CHECK(static_cast<int>(sets.size()) == orbit_count(n, k));
            for (std::size_t i = 0; i < sets.size(); ++i) {
                CHECK(is_canonical(sets[i]));
                if (i > 0) CHECK(sets[i - 1] < sets[i]);
            }
        }
    }
}

TEST_CASE("table through n = 20") {
    const auto rows = build_table(3, 20, serial());
    REQUIRE(rows.size() == 18);
    for (const auto& row : rows) {
        REQUIRE(row.result.has_value());
        CHECK(row.result->m == kTable.at(row.n));
        CHECK(row.result->k_min == row.result->m - row.n);
        CHECK(row.result->witness.n() == row.n);
        CHECK(row.result->witness.k() == row.result->k_min);
        CHECK(is_pancyclic(row.result->witness));
        CHECK(is_canonical(row.result->witness));
    }
}

TEST_CASE("parallel kernel matches the serial reference") {
    for (int n = 3; n <= 11; ++n) {
        const auto ref = reference::find_min_chords(n);
        for (int jobs : {1, 3}) {
            SearchConfig c;
            c.jobs = jobs;
            const auto got = find_min_chords(n, c);
            CHECK(got.m == ref.m);
            CHECK(got.witness == ref.witness);
            CHECK(got.explored == ref.explored);
        }
    }
    for (auto [n, k] : {std::pair{9, 2}, std::pair{10, 2}, std::pair{8, 3}}) {
        const auto ref = reference::prove_no_pancyclic(n, k);
        const auto got = prove_no_pancyclic(n, k, serial());
        CHECK(got.complete);
        CHECK(got.examined == ref.examined);
        CHECK(got.counterexample == ref.counterexample);
    }
}

TEST_CASE("results do not depend on the thread count") {
    for (int n : {14, 17}) {
        SearchConfig one = serial();
        SearchConfig many;
        many.jobs = 8;
        const auto a = find_min_chords(n, one);
        const auto b = find_min_chords(n, many);
        CHECK(a.witness == b.witness);
        CHECK(a.explored == b.explored);
        CHECK(a.pruned == b.pruned);
    }
}

TEST_CASE("nonexistence certificates") {
    auto c = prove_no_pancyclic(15, 3, serial());
    CHECK(c.complete);
    CHECK_FALSE(c.counterexample.has_value());
    CHECK(c.examined > 0);

    auto found = prove_no_pancyclic(14, 3, serial());
    REQUIRE(found.counterexample.has_value());
    CHECK(is_pancyclic(*found.counterexample));
}

TEST_CASE("degree prune is validated") {
    for (int n : {12, 19, 20}) {
        SearchConfig plain = serial();
        SearchConfig pruned = serial();
        pruned.degree_prune = true;
        pruned.validate = true;
        const auto a = find_min_chords(n, plain);
        const auto b = find_min_chords(n, pruned);
        CHECK(a.witness == b.witness);
        CHECK(a.explored == b.explored);
        if (n >= 19) CHECK(b.pruned > 0);
    }
    SearchConfig pruned = serial();
    pruned.degree_prune = true;
    pruned.validate = true;
    auto cert = prove_no_pancyclic(21, 3, pruned);
    CHECK(cert.complete);
    CHECK(cert.validation_violations == 0);
    CHECK(cert.pruned > 0);
}

TEST_CASE("journal resume") {
    const auto dir = std::filesystem::temp_directory_path() / "pancyc-test-journal";
    std::filesystem::remove_all(dir);
    SearchConfig c = serial();
    c.journal_dir = dir;

    const auto first = prove_no_pancyclic(16, 3, c);
    REQUIRE(first.complete);
    CHECK(first.resumed_shards == 0);
    const auto path = journal_path(dir, 16, 3);
    REQUIRE(std::filesystem::exists(path));

    std::vector<std::string> lines;
    {
        std::ifstream in(path);
        for (std::string line; std::getline(in, line);) lines.push_back(line);
    }
    CHECK(lines.size() == first.shards);
    {
        std::ofstream out(path, std::ios::trunc);
        for (std::size_t i = 0; i < lines.size() / 2; ++i) out << lines[i] << '\n';
    }

    const auto second = prove_no_pancyclic(16, 3, c);
    CHECK(second.complete);
    CHECK(second.resumed_shards == lines.size() / 2);
    CHECK(second.examined == first.examined);

    const auto third = prove_no_pancyclic(16, 3, c);
    CHECK(third.resumed_shards == third.shards);
    CHECK(third.examined == first.examined);
    std::filesystem::remove_all(dir);
}

TEST_CASE("failures") {
    SearchConfig capped = serial();
    capped.max_k = 3;
    CHECK_THROWS_AS(find_min_chords(15, capped), SearchFailure);

    SearchConfig rushed = serial();
    rushed.time_budget_seconds = 1e-6;
    CHECK_THROWS_AS(find_min_chords(25, rushed), SearchFailure);
    CHECK_FALSE(prove_no_pancyclic(25, 4, rushed).complete);

    CHECK_THROWS_AS(find_min_chords(2), PreconditionError);
    CHECK_THROWS_AS(prove_no_pancyclic(10, 7), PreconditionError);
}
