#include "hyperclique/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "hyperclique/errors.hpp"

namespace hyperclique {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t unsigned_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_number_unsigned()) fail(where + "." + key, "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

void require_object(const Json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected a JSON object");
}

// A list of sorted k-subsets of [0, n), rejecting duplicates.
std::vector<Subset> subset_list(const Json& list, const std::string& name, std::size_t n, std::size_t k) {
  if (!list.is_array()) fail(name, "expected an array of " + std::to_string(k) + "-element arrays");
  std::vector<Subset> out;
  out.reserve(list.size());
  std::map<Subset, std::size_t> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = name + "[" + std::to_string(i) + "]";
    const Json& item = list[i];
    if (!item.is_array()) fail(where, "expected an array");
    if (item.size() != k)
      fail(where, "expected " + std::to_string(k) + " vertices, got " + std::to_string(item.size()));
    Subset s;
    for (std::size_t j = 0; j < item.size(); ++j) {
      const std::string at = where + "[" + std::to_string(j) + "]";
      if (!item[j].is_number_unsigned()) fail(at, "expected a nonnegative integer vertex");
      const auto v = item[j].get<std::uint64_t>();
      if (v >= n) fail(at, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
      if (!s.empty() && v <= s.back()) fail(at, "vertices must be strictly ascending");
      s.push_back(static_cast<Vertex>(v));
    }
    if (auto [it, fresh] = seen.emplace(s, i); !fresh)
      fail(where, "duplicate of " + name + "[" + std::to_string(it->second) + "]");
    out.push_back(std::move(s));
  }
  return out;
}

Json score_table_json(const ScoreTable& t) {
  Json out = Json::array();
  for (const auto& [tau, score] : t) out.push_back({{"tau", tau}, {"score", score}});
  return out;
}

void put_density(Json& j, const char* key, Density d) {
  j[key] = d.str();
  j[std::string(key) + "_value"] = d.value();
}

void put_result(Json& j, const ExtractionResult& r) {
  if (const auto* c = std::get_if<CliqueWitness>(&r)) {
    j["kind"] = "clique";
    j["vertices"] = c->vertices;
    j["size"] = c->size();
  } else {
    const auto& cert = std::get<CompleteTupleCertificate>(r);
    j["kind"] = "certificate";
    j["m"] = cert.m;
    j["tuples"] = cert.tuples;
  }
}

std::vector<Coord> coords(const Json& v, const std::string& where, std::size_t d) {
  if (!v.is_array()) fail(where, "expected an array of integers");
  if (v.size() != d) fail(where, "expected " + std::to_string(d) + " coordinates, got " + std::to_string(v.size()));
  std::vector<Coord> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j].is_number_integer()) fail(where + "[" + std::to_string(j) + "]", "expected an integer");
    out.push_back(v[j].get<Coord>());
  }
  return out;
}

}  // namespace

Hypergraph hypergraph_from_json(const Json& doc) {
  require_object(doc, "document");
  const auto n = unsigned_field(doc, "n", "document");
  const auto k = unsigned_field(doc, "k", "document");
  if (k < 2) fail("document.k", "arity must be at least 2");
  const bool has_edges = doc.contains("edges");
  const bool has_missing = doc.contains("missing");
  if (has_edges == has_missing) fail("document", "exactly one of \"edges\" or \"missing\" is required");
  if (has_edges) return Hypergraph(n, k, subset_list(doc["edges"], "edges", n, k));
  return Hypergraph::from_missing(n, k, subset_list(doc["missing"], "missing", n, k));
}

Json to_json(const Hypergraph& h) {
  return {{"n", h.n()}, {"k", h.k()}, {"edges", h.edges()}};
}

CompleteTupleCertificate certificate_from_json(const Json& doc) {
  require_object(doc, "document");
  const auto m = unsigned_field(doc, "m", "document");
  const Json& tuples = field(doc, "tuples", "document");
  if (!tuples.is_array()) fail("tuples", "expected an array");
  CompleteTupleCertificate cert{m, {}};
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const std::string where = "tuples[" + std::to_string(i) + "]";
    if (!tuples[i].is_array()) fail(where, "expected an array");
    Subset s;
    for (std::size_t j = 0; j < tuples[i].size(); ++j) {
      if (!tuples[i][j].is_number_unsigned())
        fail(where + "[" + std::to_string(j) + "]", "expected a nonnegative integer vertex");
      s.push_back(tuples[i][j].get<Vertex>());
    }
    cert.tuples.push_back(std::move(s));
  }
  return cert;
}

Json to_json(const CompleteTupleCertificate& cert) {
  return {{"m", cert.m}, {"tuples", cert.tuples}};
}

BoxFamily box_family_from_json(const Json& doc) {
  require_object(doc, "document");
  const auto d = unsigned_field(doc, "d", "document");
  if (d < 1) fail("document.d", "dimension must be at least 1");
  const Json& boxes = field(doc, "boxes", "document");
  if (!boxes.is_array()) fail("boxes", "expected an array");
  BoxFamily family{d, {}};
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const std::string where = "boxes[" + std::to_string(i) + "]";
    require_object(boxes[i], where);
    Box b{coords(field(boxes[i], "lo", where), where + ".lo", d), coords(field(boxes[i], "hi", where), where + ".hi", d)};
    for (std::size_t j = 0; j < d; ++j)
      if (b.lo[j] > b.hi[j]) fail(where, "lo[" + std::to_string(j) + "] > hi[" + std::to_string(j) + "]");
    family.boxes.push_back(std::move(b));
  }
  return family;
}

Json to_json(const BoxFamily& family) {
  Json boxes = Json::array();
  for (const auto& b : family.boxes) boxes.push_back({{"lo", b.lo}, {"hi", b.hi}});
  return {{"d", family.d}, {"boxes", std::move(boxes)}};
}

Json to_json(const TupleSearchResult& result) {
  Json j{{"verdict", to_string(result.verdict)}, {"nodes", result.nodes}};
  j["certificate"] = result.certificate ? to_json(*result.certificate) : Json(nullptr);
  return j;
}

Json to_json(const GraphExtractionOutcome& outcome) {
  const auto& t = outcome.trace;
  Json j;
  put_result(j, outcome.result);
  Json trace{{"method", "graph"},
             {"branch", to_string(t.branch)},
             {"matching_sizes", t.matching_sizes},
             {"neighborhood_missing", t.neighborhood_missing},
             {"tau_scores", score_table_json(t.tau_scores)}};
  trace["chosen_tau"] = t.chosen_tau ? Json(*t.chosen_tau) : Json(nullptr);
  j["trace"] = std::move(trace);
  put_density(j, "alpha", t.alpha);
  j["bound"] = t.bound;
  j["bound_met"] = t.bound_met;
  j["fallback"] = false;
  return j;
}

Json to_json(const HypergraphExtractionOutcome& outcome) {
  const auto& t = outcome.trace;
  Json j;
  put_result(j, outcome.result);
  Json rounds = Json::array();
  for (const auto& r : t.round_scores) rounds.push_back(score_table_json(r));
  j["trace"] = {{"method", "hypergraph"},
                {"chosen", t.chosen},
                {"family_sizes", t.family_sizes},
                {"round_scores", std::move(rounds)},
                {"clique_count", t.clique_count},
                {"beta", t.beta},
                {"fallback_reason", t.fallback_reason}};
  put_density(j, "alpha", t.alpha);
  j["bound"] = t.bound;
  j["bound_met"] = t.bound_met;
  j["fallback"] = t.fallback;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j{{"k", r.k}, {"m", r.m}, {"d", r.d}, {"theorem1", r.theorem1}, {"chordal", r.chordal},
         {"beta_recursive", r.beta_recursive}, {"kalai", r.kalai}, {"exponent", r.exponent}};
  put_density(j, "alpha", r.alpha);
  return j;
}

Json to_json(const FrontierRecord& r) {
  Json j{{"n", r.n},
         {"k", r.k},
         {"m", r.m},
         {"clique_count", r.clique_count},
         {"omega", r.omega},
         {"verified", to_string(r.verified)},
         {"search_nodes", r.search_nodes},
         {"instance", to_json(r.instance)}};
  put_density(j, "alpha", r.alpha);
  put_density(j, "omega_ratio", r.omega_ratio);
  return j;
}

Json to_json(const BetaUpperRow& row) {
  Json j{{"k", row.k}, {"m", row.m}, {"records", row.records}, {"beta_recursive", row.beta_recursive}};
  put_density(j, "alpha", row.alpha);
  put_density(j, "min_omega_ratio", row.min_omega_ratio);
  j["theorem1"] = row.theorem1 ? Json(*row.theorem1) : Json(nullptr);
  return j;
}

Json to_json(const HellyOutcome& o) {
  Json j{{"subfamily", o.subfamily},
         {"size", o.subfamily.size()},
         {"point", o.point},
         {"vacuous_clique", o.vacuous_clique},
         {"extraction", to_json(o.extraction)}};
  put_density(j, "alpha", o.alpha);
  return j;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hyperclique
