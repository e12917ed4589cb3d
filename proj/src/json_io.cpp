#include "pancyc/json_io.hpp"

namespace pancyc {

GraphDocument graph_document_from_json(const Json& j) {
    if (!j.is_object()) throw MalformedDocument("graph document must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw MalformedDocument("graph document needs an integer \"n\"");
    }
    if (!j.contains("chords") || !j["chords"].is_array()) {
        throw MalformedDocument("graph document needs a \"chords\" array");
    }
    std::vector<Chord> chords;
    for (const auto& c : j["chords"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
            throw MalformedDocument("each chord must be a pair of integers");
        }
        chords.push_back(Chord{c[0].get<int>(), c[1].get<int>()});
    }
    GraphDocument doc{ChordedCycle(j["n"].get<int>(), std::move(chords)), std::nullopt, std::nullopt};
    if (j.contains("source") && j["source"].is_string()) doc.source = j["source"].get<std::string>();
    if (j.contains("notes") && j["notes"].is_string()) doc.notes = j["notes"].get<std::string>();
    return doc;
}

GraphDocument parse_graph_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MalformedDocument(std::string("malformed JSON: ") + e.what());
    }
    return graph_document_from_json(j);
}

Json to_json(const ChordedCycle& g) {
    Json chords = Json::array();
    for (const auto& c : g.chords()) chords.push_back({c.u, c.v});
    return Json{{"n", g.n()}, {"chords", chords}};
}

Json to_json(const GraphDocument& doc) {
    Json j = to_json(doc.graph);
    if (doc.source) j["source"] = *doc.source;
    if (doc.notes) j["notes"] = *doc.notes;
    return j;
}

Json to_json(const Arc& a) { return Json{{"start", a.start}, {"end", a.end}, {"length", a.length}}; }

Json to_json(const CycleSpectrum& s) {
    return Json{{"n", s.n}, {"lengths", s.lengths.to_vector()}, {"cycle_count", s.cycle_count}};
}

Json to_json(const ReductionReport& r) {
    Json j{{"kind", std::string(to_string(r.kind))},
           {"result_graph", to_json(r.result_graph)},
           {"result_pancyclic", r.result_pancyclic}};
    if (const auto* arc = std::get_if<Arc>(&r.witness)) {
        j["witness"] = {{"arc", to_json(*arc)}};
    } else {
        const auto& [p, q] = std::get<std::pair<Chord, Chord>>(r.witness);
        j["witness"] = {{"p", {p.u, p.v}}, {"q", {q.u, q.v}}};
    }
    return j;
}

Json to_json(const SearchResult& r, bool include_timing) {
    Json j{{"n", r.n},
           {"k", r.k_min},
           {"m", r.m},
           {"witness", to_json(r.witness)},
           {"explored", r.explored},
           {"pruned", r.pruned}};
    if (include_timing) j["wall_time_seconds"] = r.wall_seconds;
    return j;
}

Json to_json(const ExhaustionCertificate& c, bool include_timing) {
    Json j{{"n", c.n},
           {"k", c.k},
           {"examined", c.examined},
           {"pruned", c.pruned},
           {"validation_violations", c.validation_violations},
           {"shards", c.shards},
           {"resumed_shards", c.resumed_shards},
           {"complete", c.complete},
           {"pancyclic_found", c.counterexample.has_value()}};
    j["counterexample"] = c.counterexample ? to_json(*c.counterexample) : Json(nullptr);
    if (include_timing) j["wall_time_seconds"] = c.wall_seconds;
    return j;
}

Json to_json(const BoundsReport& b) {
    Json j{{"n", b.n},
           {"bondy_lower", b.bondy_lower},
           {"rs_lower", b.rs_lower},
           {"rs_lower_strict", b.rs_lower_strict},
           {"h_of_n", b.h_of_n},
           {"upper_bound_note", b.upper_bound_note}};
    j["construction_upper"] = b.construction_upper ? Json(*b.construction_upper) : Json(nullptr);
    return j;
}

Json to_json(const Prop5Result& p) {
    Json j{{"case", static_cast<int>(p.which)},
           {"contracted", to_json(p.contracted)},
           {"claim_holds", p.claim_holds}};
    if (p.subgraph) {
        j["subgraph_vertices"] = p.subgraph->labels;
    }
    if (p.subgraph_presented) {
        j["subgraph"] = to_json(p.subgraph_presented->graph);
        std::vector<Vertex> original;
        for (int idx : p.subgraph_presented->order) original.push_back(p.subgraph->labels[idx - 1]);
        j["subgraph_cycle_order"] = original;
    }
    if (p.subgraph_spectrum) j["subgraph_spectrum"] = to_json(*p.subgraph_spectrum);
    return j;
}

} // namespace pancyc
