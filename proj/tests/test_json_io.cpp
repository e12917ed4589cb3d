#include <doctest.h>

#include "pancyc/constructions.hpp"
#include "pancyc/json_io.hpp"

using namespace pancyc;

TEST_CASE("graph document round trip") {
    auto doc = parse_graph_document(R"({"n": 14, "chords": [[14, 9], [1, 13], [3, 14]], "source": "example"})");
    CHECK(doc.graph == figure2());
    REQUIRE(doc.source.has_value());
    CHECK(*doc.source == "example");
    CHECK_FALSE(doc.notes.has_value());

    const auto j = to_json(doc);
    CHECK(j["chords"] == Json::parse("[[1, 13], [3, 14], [9, 14]]"));
    CHECK(graph_document_from_json(j).graph == doc.graph);
    CHECK(to_json(make_graph(5, {})).dump() == R"({"chords":[],"n":5})");
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_graph_document("{"), MalformedDocument);
    CHECK_THROWS_AS(parse_graph_document("[]"), MalformedDocument);
    CHECK_THROWS_AS(parse_graph_document(R"({"chords": []})"), MalformedDocument);
    CHECK_THROWS_AS(parse_graph_document(R"({"n": 5.5, "chords": []})"), MalformedDocument);
    CHECK_THROWS_AS(parse_graph_document(R"({"n": 6})"), MalformedDocument);
    CHECK_THROWS_AS(parse_graph_document(R"({"n": 6, "chords": [[1, 3, 5]]})"), MalformedDocument);
    CHECK_THROWS_AS(parse_graph_document(R"({"n": 6, "chords": [["1", 3]]})"), MalformedDocument);
}

TEST_CASE("invalid graphs in well-formed documents") {
    CHECK_THROWS_AS(parse_graph_document(R"({"n": 6, "chords": [[1, 2]]})"), InvalidGraph);
    CHECK_THROWS_AS(parse_graph_document(R"({"n": 6, "chords": [[1, 3], [3, 1]]})"), InvalidGraph);
    CHECK_THROWS_AS(parse_graph_document(R"({"n": 2, "chords": []})"), InvalidGraph);
}

TEST_CASE("report serialization") {
    SearchResult r;
    r.n = 6;
    r.k_min = 2;
    r.m = 8;
    r.witness = make_graph(6, {{1, 3}, {1, 4}});
    r.explored = 3;
    r.wall_seconds = 1.5;
    auto j = to_json(r);
    CHECK(j["m"] == 8);
    CHECK(j["k"] == 2);
    CHECK(j["witness"]["chords"] == Json::parse("[[1, 3], [1, 4]]"));
    CHECK_FALSE(j.contains("wall_time_seconds"));
    CHECK(to_json(r, true)["wall_time_seconds"] == 1.5);

    ExhaustionCertificate c;
    c.n = 25;
    c.k = 4;
    c.complete = true;
    auto cj = to_json(c);
    CHECK(cj["pancyclic_found"] == false);
    CHECK(cj["counterexample"].is_null());

    auto bj = to_json(bounds_report(25));
    CHECK(bj["bondy_lower"] == 29);
    CHECK(bj["construction_upper"] == 30);

    auto sj = to_json(spectrum(figure2()));
    CHECK(sj["cycle_count"] == 13);
    CHECK(sj["lengths"].size() == 12);

    auto pj = to_json(prop5_analyze(figure2(), Arc{3, 9, 6}));
    CHECK(pj["case"] == 2);
    CHECK(pj["claim_holds"] == true);
    CHECK(pj["subgraph_spectrum"]["lengths"] == Json::parse("[3, 4, 5, 6, 7, 9]"));
    CHECK(pj["subgraph_cycle_order"].size() == 9);
}
