#pragma once

// JSON interchange: {"n": <int>, "chords": [[u, v], ...]} with u < v and the
// chord list sorted, plus optional "source"/"notes" metadata. Reports are
// emitted with sorted keys so output can be diffed byte for byte.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pancyc/analysis.hpp"
#include "pancyc/bounds.hpp"
#include "pancyc/cycle_enum.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/search.hpp"

namespace pancyc {

using Json = nlohmann::json;

/// Input that is not a well-formed graph document (syntax or shape).
class MalformedDocument : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphDocument {
    ChordedCycle graph;
    std::optional<std::string> source;
    std::optional<std::string> notes;
};

/// Throws MalformedDocument for bad JSON or missing fields and InvalidGraph
/// when the chords break the chorded-cycle invariants.
GraphDocument parse_graph_document(const std::string& text);
GraphDocument graph_document_from_json(const Json& j);

Json to_json(const GraphDocument& doc);
Json to_json(const ChordedCycle& g);
Json to_json(const Arc& a);
Json to_json(const CycleSpectrum& s);
Json to_json(const ReductionReport& r);
Json to_json(const SearchResult& r, bool include_timing = false);
Json to_json(const ExhaustionCertificate& c, bool include_timing = false);
Json to_json(const BoundsReport& b);
Json to_json(const Prop5Result& p);

} // namespace pancyc
