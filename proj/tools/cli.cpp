#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperclique/bounds.hpp"
#include "hyperclique/clique.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/extractor.hpp"
#include "hyperclique/forbidden.hpp"
#include "hyperclique/geometry.hpp"
#include "hyperclique/io.hpp"
#include "hyperclique/parallel.hpp"
#include "hyperclique/search.hpp"

#ifndef HYPERCLIQUE_VERSION
#define HYPERCLIQUE_VERSION "0.0.0"
#endif

namespace hyperclique::cli {

namespace {

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json versions() {
  return {{"hyperclique", HYPERCLIQUE_VERSION},
          {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
}

// Everything a subcommand produces besides the shared envelope.
struct Outcome {
  Json payload;
  Json digest = nullptr;
  int code = kOk;
};

struct Options {
  unsigned threads = default_threads();
  std::string input;
  std::string output;
  std::size_t m = 0;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string method = "auto";
  std::uint64_t max_family = ExtractionLimits{}.max_family;
  std::string verify;
  std::string alpha;
  int k = 2;
  int d = 1;
  std::string format = "json";
  std::size_t n = 0;
  std::uint64_t omega_cap = 0;
  std::uint64_t iters = 10'000;
  std::size_t restarts = 1;
  std::optional<std::uint64_t> seed;
  bool exhaustive = false;
  std::size_t max_subsets = ExhaustiveConfig{}.max_subsets;
  double removal = HillClimbConfig{}.removal_probability;
  Coord range = BoxGenParams{}.coord_range;
  Coord max_side = BoxGenParams{}.max_side;
};

Hypergraph load_hypergraph(const std::string& path, Json& digest) {
  const auto h = hypergraph_from_json(parse_json(read_file(path), path));
  // Digest the canonical form so "edges" and "missing" files agree.
  digest = fnv1a(to_json(h).dump());
  return h;
}

BoxFamily load_boxes(const std::string& path, Json& digest) {
  auto family = box_family_from_json(parse_json(read_file(path), path));
  digest = fnv1a(to_json(family).dump());
  return family;
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream f(path);
  if (!f) throw InputError(path + ": cannot open for writing");
  f << doc.dump(2) << "\n";
}

Outcome analyze(const Options& o) {
  Outcome r;
  const auto h = load_hypergraph(o.input, r.digest);
  const std::size_t m = o.m ? o.m : h.k();
  const auto omega = max_clique(h);
  const auto search = find_complete_tuple(h, m, o.budget);
  const auto cm = count_m_cliques(h, m);
  r.payload = {{"n", h.n()},
               {"k", h.k()},
               {"edges", h.edge_count()},
               {"missing", h.missing_count()},
               {"omega", omega.size()},
               {"max_clique", omega.vertices},
               {"m", m},
               {"clique_count", cm},
               {"complete_tuple", to_json(search)}};
  const auto density = Density::of(h.edge_count(), binomial(h.n(), h.k()));
  const auto alpha = Density::of(cm, binomial(h.n(), m));
  r.payload["density"] = density.str();
  r.payload["density_value"] = density.value();
  r.payload["alpha"] = alpha.str();
  r.payload["alpha_value"] = alpha.value();
  if (search.verdict == SearchVerdict::exhausted) r.code = kInconclusive;
  return r;
}

Outcome forbidden(const Options& o) {
  Outcome r;
  const auto h = load_hypergraph(o.input, r.digest);
  if (!o.verify.empty()) {
    const auto cert = certificate_from_json(parse_json(read_file(o.verify), o.verify));
    const auto check = verify_complete_tuple(h, cert);
    const char* names[] = {"none", "not_missing", "overlapping", "transversal_not_clique"};
    r.payload = {{"valid", check.ok},
                 {"violation", names[static_cast<int>(check.violation)]},
                 {"detail", check.detail},
                 {"certificate", to_json(cert)}};
    return r;
  }
  const std::size_t m = o.m ? o.m : h.k();
  const auto search = find_complete_tuple(h, m, o.budget);
  r.payload = to_json(search);
  r.payload["m"] = m;
  if (search.verdict == SearchVerdict::exhausted) r.code = kInconclusive;
  return r;
}

Outcome extract(const Options& o) {
  Outcome r;
  const auto h = load_hypergraph(o.input, r.digest);
  const std::size_t m = o.m ? o.m : h.k();
  std::string method = o.method;
  if (method == "auto") method = (h.k() == 2 && m == 2) ? "graph" : "hypergraph";
  if (method == "graph") {
    if (m != 2) throw ArgumentError("extract --method graph requires m = 2");
    r.payload = to_json(extract_graph(h));
  } else {
    ExtractionLimits limits;
    limits.max_family = o.max_family;
    r.payload = to_json(extract_hypergraph(h, m, limits));
  }
  return r;
}

std::string aligned_table(const BoundReport& b) {
  std::ostringstream s;
  auto row = [&](const std::string& name, const std::string& value) {
    s << std::left << std::setw(16) << name << value << "\n";
  };
  auto num = [](double v) {
    std::ostringstream t;
    t << std::setprecision(12) << v;
    return t.str();
  };
  row("quantity", "value");
  row("alpha", b.alpha.str() + " (" + num(b.alpha.value()) + ")");
  row("k", std::to_string(b.k));
  row("m", std::to_string(b.m));
  row("d", std::to_string(b.d));
  row("theorem1", num(b.theorem1));
  row("chordal", num(b.chordal));
  row("beta_recursive", num(b.beta_recursive));
  row("kalai", num(b.kalai));
  row("exponent", std::to_string(b.exponent));
  return s.str();
}

Outcome bounds(const Options& o) {
  Outcome r;
  const auto report = bound_report(Density::parse(o.alpha), o.k, o.m ? static_cast<int>(o.m) : o.k, o.d);
  r.payload = to_json(report);
  r.payload["table"] = aligned_table(report);
  return r;
}

Outcome nerve(const Options& o) {
  Outcome r;
  const auto family = load_boxes(o.input, r.digest);
  const auto nv = build_nerve(family);
  const Json hg = to_json(nv.hypergraph);
  if (!o.output.empty()) write_file(o.output, hg);
  r.payload = {{"hypergraph", hg}, {"alpha", nv.alpha.str()}, {"alpha_value", nv.alpha.value()}};
  return r;
}

Outcome helly(const Options& o) {
  Outcome r;
  const auto family = load_boxes(o.input, r.digest);
  ExtractionLimits limits;
  limits.max_family = o.max_family;
  const auto outcome = fractional_helly_pipeline(family, limits);
  const auto oracle = max_intersecting_subfamily(family);
  const std::size_t n = family.size();
  const int d = static_cast<int>(family.d);
  r.payload = to_json(outcome);
  r.payload["n"] = n;
  r.payload["kalai_bound"] = kalai_bound(outcome.alpha.value(), d);
  r.payload["kalai_times_n"] = kalai_bound(outcome.alpha.value(), d) * static_cast<double>(n);
  r.payload["max_intersecting"] = {{"size", oracle.size}, {"indices", oracle.indices}, {"point", oracle.point}};
  r.payload["max_meets_kalai"] = meets_kalai(outcome.alpha, Density(oracle.size, n), d);
  return r;
}

Outcome search(const Options& o, std::ostream& out) {
  Outcome r;
  std::vector<FrontierRecord> records;
  Json run;
  if (o.exhaustive) {
    ExhaustiveConfig c;
    c.n = o.n;
    c.k = static_cast<std::size_t>(o.k);
    c.m = o.m ? o.m : c.k;
    c.omega_cap = o.omega_cap;
    c.max_subsets = o.max_subsets;
    c.budget = o.budget;
    c.threads = o.threads;
    const auto result = exhaustive_frontier(c);
    run = {{"mode", "exhaustive"}, {"instances", result.instances}, {"inconclusive", result.inconclusive},
           {"best_count", result.best_count}};
    if (result.record) records.push_back(*result.record);
  } else {
    if (!o.seed) throw ArgumentError("search: --seed is required for hill climbing");
    HillClimbConfig c;
    c.n = o.n;
    c.k = static_cast<std::size_t>(o.k);
    c.m = o.m ? o.m : c.k;
    c.omega_cap = o.omega_cap;
    c.iterations = o.iters;
    c.restarts = o.restarts;
    c.seed = *o.seed;
    c.removal_probability = o.removal;
    c.budget = o.budget;
    c.threads = o.threads;
    records.push_back(hill_climb(c));
    run = {{"mode", "hill_climb"}};
  }
  for (const auto& rec : records) out << to_json(rec).dump() << "\n";
  Json table = Json::array();
  for (const auto& row : report_beta_upper(records)) table.push_back(to_json(row));
  run["records"] = records.size();
  run["table"] = std::move(table);
  r.payload = std::move(run);
  return r;
}

Outcome gen_boxes(const Options& o) {
  if (!o.seed) throw ArgumentError("gen-boxes: --seed is required");
  Outcome r;
  const auto family = random_box_family(o.n, static_cast<std::size_t>(o.d), *o.seed, {o.range, o.max_side});
  const Json doc = to_json(family);
  if (!o.output.empty()) write_file(o.output, doc);
  r.payload = {{"family", doc}};
  return r;
}

Json parameters(const std::string& sub, const Options& o) {
  Json p{{"threads", o.threads}};
  auto put_seed = [&] { p["seed"] = o.seed ? Json(*o.seed) : Json(nullptr); };
  if (sub == "analyze" || sub == "forbidden") {
    p["input"] = o.input;
    p["m"] = o.m;
    p["budget"] = o.budget;
    if (!o.verify.empty()) p["verify"] = o.verify;
  } else if (sub == "extract") {
    p["input"] = o.input;
    p["m"] = o.m;
    p["method"] = o.method;
    p["max_family"] = o.max_family;
  } else if (sub == "bounds") {
    p.update({{"alpha", o.alpha}, {"k", o.k}, {"m", o.m}, {"d", o.d}});
  } else if (sub == "nerve" || sub == "helly") {
    p["input"] = o.input;
  } else if (sub == "search") {
    p.update({{"n", o.n}, {"k", o.k}, {"m", o.m}, {"omega_cap", o.omega_cap}, {"iters", o.iters},
              {"restarts", o.restarts}, {"exhaustive", o.exhaustive}, {"budget", o.budget},
              {"removal", o.removal}});
    put_seed();
  } else if (sub == "gen-boxes") {
    p.update({{"n", o.n}, {"d", o.d}, {"range", o.range}, {"max_side", o.max_side}});
    put_seed();
  }
  return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique extraction and forbidden-substructure certificates for k-uniform hypergraphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* a = app.add_subcommand("analyze", "Clique number, clique counts and complete-tuple verdict");
  a->add_option("--input", o.input, "Hypergraph JSON")->required();
  a->add_option("--m", o.m, "Tuple size m (default k)");
  a->add_option("--budget", o.budget, "Backtracking node budget");

  auto* f = app.add_subcommand("forbidden", "Search for, or verify, a complete m-tuple of missing edges");
  f->add_option("--input", o.input, "Hypergraph JSON")->required();
  f->add_option("--m", o.m, "Tuple size m (default k)");
  f->add_option("--budget", o.budget, "Backtracking node budget");
  f->add_option("--verify", o.verify, "Certificate JSON to verify instead of searching");

  auto* x = app.add_subcommand("extract", "Return a clique or a complete-tuple certificate");
  x->add_option("--input", o.input, "Hypergraph JSON")->required();
  x->add_option("--m", o.m, "Tuple size m (default k)");
  x->add_option("--method", o.method, "auto, graph or hypergraph")
      ->check(CLI::IsMember({"auto", "graph", "hypergraph"}));
  x->add_option("--max-family", o.max_family, "Refuse when C(n, m) exceeds this");

  auto* b = app.add_subcommand("bounds", "Evaluate the bound formulas");
  b->add_option("--alpha", o.alpha, "Density as p/q or decimal")->required();
  b->add_option("--k", o.k, "Arity");
  b->add_option("--m", o.m, "Tuple size (default k)");
  b->add_option("--d", o.d, "Dimension for the Kalai bound");
  b->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* nv = app.add_subcommand("nerve", "Intersection hypergraph of a box family");
  nv->add_option("--input", o.input, "Box family JSON")->required();
  nv->add_option("--output", o.output, "Also write the hypergraph JSON here");

  auto* hl = app.add_subcommand("helly", "Fractional Helly extraction on a box family");
  hl->add_option("--input", o.input, "Box family JSON")->required();
  hl->add_option("--max-family", o.max_family, "Refuse when C(n, d+1) exceeds this");

  auto* s = app.add_subcommand("search", "Extremal instances: high c_m, small omega, no complete m-tuple");
  s->add_option("--n", o.n, "Vertices")->required();
  s->add_option("--k", o.k, "Arity");
  s->add_option("--m", o.m, "Tuple size (default k)");
  s->add_option("--omega-cap", o.omega_cap, "Maximum clique number")->required();
  s->add_option("--iters", o.iters, "Hill-climbing iterations per restart");
  s->add_option("--restarts", o.restarts, "Independent restarts");
  s->add_option("--seed", o.seed, "Master seed (required for hill climbing)");
  s->add_option("--removal", o.removal, "Probability of attempting an edge removal");
  s->add_option("--budget", o.budget, "Node budget per complete-tuple check");
  s->add_option("--max-subsets", o.max_subsets, "Exhaustive mode: refuse when C(n, k) exceeds this");
  s->add_flag("--exhaustive", o.exhaustive, "Enumerate every edge set");

  auto* g = app.add_subcommand("gen-boxes", "Random box family");
  g->add_option("--n", o.n, "Boxes")->required();
  g->add_option("--d", o.d, "Dimension");
  g->add_option("--seed", o.seed, "Seed")->required();
  g->add_option("--range", o.range, "Lower corners in [0, range)");
  g->add_option("--max-side", o.max_side, "Side lengths in [0, max-side]");
  g->add_option("--output", o.output, "Also write the family JSON here");

  std::vector<std::string> argv_store{"hyperclique"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s_ : argv_store) argv.push_back(s_.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Json report{{"subcommand", sub}, {"parameters", parameters(sub, o)}, {"versions", versions()}};
  int code = kOk;
  try {
    Outcome r;
    if (sub == "analyze") r = analyze(o);
    else if (sub == "forbidden") r = forbidden(o);
    else if (sub == "extract") r = extract(o);
    else if (sub == "bounds") r = bounds(o);
    else if (sub == "nerve") r = nerve(o);
    else if (sub == "helly") r = helly(o);
    else if (sub == "search") r = search(o, out);
    else r = gen_boxes(o);

    if (sub == "bounds" && o.format == "text") {
      out << r.payload["table"].get<std::string>();
      return kOk;
    }
    report["input_digest"] = r.digest;
    report["outcome"] = std::move(r.payload);
    code = r.code;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SizeRefusal& e) {
    err << "refused: " << e.what() << "\n";
    return kSizeRefusal;
  } catch (const ArgumentError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    report["input_digest"] = nullptr;
    report["outcome"] = {{"error", e.what()},
                         {"evidence", e.evidence().empty() ? Json(nullptr) : parse_json(e.evidence())}};
    code = kConsistency;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  report["wall_time_ms"] = elapsed.count();
  out << report.dump() << "\n";
  return code;
}

}  // namespace hyperclique::cli
