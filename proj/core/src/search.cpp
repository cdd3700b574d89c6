#include "hyperclique/search.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "hyperclique/bounds.hpp"
#include "hyperclique/clique.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/io.hpp"
#include "hyperclique/parallel.hpp"
#include "hyperclique/rng.hpp"

namespace hyperclique {

namespace {

void require_shape(std::size_t k, std::size_t m, const char* op) {
  if (k < 2 || m < k)
    throw ArgumentError(std::string(op) + ": need m >= k >= 2, got k = " + std::to_string(k) +
                        ", m = " + std::to_string(m));
}

std::vector<Subset> all_subsets(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  for_each_combination(n, k, [&](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

Hypergraph build(std::size_t n, std::size_t k, const std::vector<Subset>& subsets,
                 const std::vector<char>& present) {
  std::vector<Subset> edges;
  for (std::size_t j = 0; j < subsets.size(); ++j)
    if (present[j]) edges.push_back(subsets[j]);
  return Hypergraph(n, k, std::move(edges));
}

struct Candidate {
  bool valid = false;
  std::uint64_t count = 0;
  std::vector<Subset> edges;

  // Higher c_m wins; ties go to the lexicographically smaller edge list.
  bool beats(const Candidate& o) const {
    if (!valid) return false;
    if (!o.valid) return true;
    if (count != o.count) return count > o.count;
    return edges < o.edges;
  }
};

}  // namespace

FrontierRecord make_frontier_record(const Hypergraph& instance, std::size_t m, std::uint64_t budget) {
  require_shape(instance.k(), m, "make_frontier_record");
  const auto search = find_complete_tuple(instance, m, budget);
  if (search.verdict != SearchVerdict::none)
    throw ArgumentError(std::string("frontier instance not certified free of complete m-tuples (verdict: ") +
                        to_string(search.verdict) + ")");
  FrontierRecord r;
  r.n = instance.n();
  r.k = instance.k();
  r.m = m;
  r.clique_count = count_m_cliques(instance, m);
  r.omega = max_clique(instance).size();
  r.alpha = Density::of(r.clique_count, binomial(r.n, m));
  r.omega_ratio = Density::of(r.omega, r.n);
  r.instance = instance;
  r.verified = search.verdict;
  r.search_nodes = search.nodes;
  return r;
}

ExhaustiveResult exhaustive_frontier(const ExhaustiveConfig& config) {
  require_shape(config.k, config.m, "exhaustive_frontier");
  const std::uint64_t slots = binomial(config.n, config.k);
  if (slots > config.max_subsets || slots >= 63)
    throw SizeRefusal("exhaustive_frontier: 2^" + std::to_string(slots) +
                      " edge sets exceed the enumeration limit of 2^" + std::to_string(config.max_subsets));
  const auto subsets = all_subsets(config.n, config.k);
  const std::uint64_t total = std::uint64_t{1} << slots;

  // Fixed chunking keeps pruning, and so every reported count, independent
  // of the thread count.
  constexpr std::size_t kChunks = 64;
  std::vector<Candidate> best(kChunks);
  std::vector<std::uint64_t> inconclusive(kChunks, 0);

  parallel_for(kChunks, config.threads, [&](std::size_t chunk) {
    const std::uint64_t begin = total * chunk / kChunks;
    const std::uint64_t end = total * (chunk + 1) / kChunks;
    Candidate& local = best[chunk];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      Candidate c{true, 0, {}};
      for (std::size_t j = 0; j < slots; ++j)
        if ((mask >> j) & 1) c.edges.push_back(subsets[j]);
      const Hypergraph h(config.n, config.k, c.edges);
      c.count = count_m_cliques(h, config.m);
      if (!c.beats(local)) continue;
      if (max_clique(h).size() > config.omega_cap) continue;
      const auto verdict = find_complete_tuple(h, config.m, config.budget).verdict;
      if (verdict == SearchVerdict::exhausted) ++inconclusive[chunk];
      if (verdict != SearchVerdict::none) continue;
      local = std::move(c);
    }
  });

  ExhaustiveResult result;
  result.instances = total;
  Candidate winner;
  for (std::size_t chunk = 0; chunk < kChunks; ++chunk) {
    result.inconclusive += inconclusive[chunk];
    if (best[chunk].beats(winner)) winner = best[chunk];
  }
  if (winner.valid) {
    result.best_count = winner.count;
    result.record = make_frontier_record(Hypergraph(config.n, config.k, winner.edges), config.m, config.budget);
  }
  return result;
}

FrontierRecord hill_climb(const HillClimbConfig& config) {
  require_shape(config.k, config.m, "hill_climb");
  const Hypergraph empty(config.n, config.k);
  if (max_clique(empty).size() > config.omega_cap)
    throw ArgumentError("hill_climb: omega cap " + std::to_string(config.omega_cap) +
                        " is below the clique number of the empty hypergraph");
  const auto subsets = all_subsets(config.n, config.k);
  const std::size_t restarts = std::max<std::size_t>(config.restarts, 1);
  std::vector<Candidate> best(restarts);

  parallel_for(restarts, config.threads, [&](std::size_t r) {
    Rng rng(split_seed(config.seed, r));
    std::vector<char> present(subsets.size(), 0);
    std::uint64_t count = count_m_cliques(empty, config.m);
    Candidate local{true, count, {}};
    for (std::uint64_t it = 0; it < config.iterations && !subsets.empty(); ++it) {
      const std::size_t j = uniform_below(rng, subsets.size());
      const bool adding = !present[j];
      if (!adding && uniform_unit(rng) >= config.removal_probability) continue;
      present[j] ^= 1;
      const Hypergraph h = build(config.n, config.k, subsets, present);
      const bool ok = (!adding || max_clique(h).size() <= config.omega_cap) &&
                      find_complete_tuple(h, config.m, config.budget).verdict == SearchVerdict::none;
      if (!ok) {
        present[j] ^= 1;
        continue;
      }
      count = count_m_cliques(h, config.m);
      if (count > local.count) local = Candidate{true, count, h.edges()};
    }
    best[r] = std::move(local);
  });

  // Restart order breaks ties.
  std::size_t winner = 0;
  for (std::size_t r = 1; r < restarts; ++r)
    if (best[r].count > best[winner].count) winner = r;
  return make_frontier_record(Hypergraph(config.n, config.k, best[winner].edges), config.m, config.budget);
}

std::vector<BetaUpperRow> report_beta_upper(std::span<const FrontierRecord> records) {
  std::map<std::tuple<std::size_t, std::size_t, Density>, BetaUpperRow> rows;
  for (const auto& r : records) {
    auto [it, fresh] = rows.try_emplace({r.k, r.m, r.alpha});
    BetaUpperRow& row = it->second;
    if (fresh) {
      row.k = r.k;
      row.m = r.m;
      row.alpha = r.alpha;
      row.min_omega_ratio = r.omega_ratio;
    } else {
      row.min_omega_ratio = std::min(row.min_omega_ratio, r.omega_ratio);
    }
    ++row.records;
  }

  std::vector<BetaUpperRow> out;
  for (auto& [key, row] : rows) {
    if (row.k == 2 && row.m == 2) {
      row.theorem1 = theorem1_bound(row.alpha.value());
      if (!meets_theorem1(row.alpha, row.min_omega_ratio))
        throw ConsistencyError("empirical omega/n below (1 - sqrt(1 - alpha))^2", to_json(row).dump());
    }
    row.beta_recursive = row.alpha.is_zero()
                             ? 0.0
                             : beta_recursion(row.alpha.value(), static_cast<int>(row.k), static_cast<int>(row.m));
    if (row.min_omega_ratio.value() < row.beta_recursive)
      throw ConsistencyError("empirical omega/n below the recursive beta", to_json(row).dump());
    out.push_back(row);
  }
  return out;
}

}  // namespace hyperclique
