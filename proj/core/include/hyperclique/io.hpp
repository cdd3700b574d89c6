#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperclique/bounds.hpp"
#include "hyperclique/extractor.hpp"
#include "hyperclique/forbidden.hpp"
#include "hyperclique/geometry.hpp"
#include "hyperclique/hypergraph.hpp"
#include "hyperclique/search.hpp"

namespace hyperclique {

using Json = nlohmann::json;

// Hypergraph documents: {"n": int, "k": int, "edges": [[...], ...]} or the
// same with "missing" in place of "edges". Malformed documents throw
// InputError naming the offending position.
Hypergraph hypergraph_from_json(const Json& doc);
Json to_json(const Hypergraph& h);

CompleteTupleCertificate certificate_from_json(const Json& doc);
Json to_json(const CompleteTupleCertificate& cert);

// Box families: {"d": int, "boxes": [{"lo": [...], "hi": [...]}, ...]}.
BoxFamily box_family_from_json(const Json& doc);
Json to_json(const BoxFamily& family);

Json to_json(const TupleSearchResult& result);
Json to_json(const GraphExtractionOutcome& outcome);
Json to_json(const HypergraphExtractionOutcome& outcome);
Json to_json(const BoundReport& report);
Json to_json(const FrontierRecord& record);
Json to_json(const BetaUpperRow& row);
Json to_json(const HellyOutcome& outcome);

/// Parses JSON text; syntax errors become InputError with the byte offset.
Json parse_json(const std::string& text, const std::string& source = "<input>");
std::string read_file(const std::filesystem::path& path);

}  // namespace hyperclique
