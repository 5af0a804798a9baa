#pragma once

#include <optional>
#include <string>
#include <vector>

#include "so2v/graph.hpp"

namespace so2v {

struct WalkConfig {
  double p = 1.0;               // return parameter
  double q = 1.0;               // in-out parameter
  std::size_t walk_length = 80;
  std::size_t walks_per_node = 10;
  std::uint64_t seed = 1;

  void validate() const;  // p, q > 0; walk_length, walks_per_node >= 1
};

struct TransitionProb {
  WordId target;
  double prob;
};

// Analytic next-step distribution of the p/q-biased second-order walk
// from cur given the previous node. Candidates are cur's out-neighbors
// in CSR order; each edge weight is scaled by 1/p when the candidate is
// prev, by 1 when the directed edge prev->candidate exists, and by 1/q
// otherwise, then the whole thing is normalized. Without prev (first
// step of a walk) the distribution is the normalized edge weights.
std::vector<TransitionProb> transition_distribution(const WeightedDigraph& g,
                                                    std::optional<WordId> prev,
                                                    WordId cur, double p,
                                                    double q);

// One biased step: alias draw on the edge weights, rejection on the
// bias factor. Produces exactly the distribution above.
WordId sample_next(const WeightedDigraph& g, const AliasTable& alias,
                   std::optional<WordId> prev, WordId cur, double p, double q,
                   Rng& rng);

// Walk of at most cfg.walk_length nodes starting at start; truncates
// early at nodes without out-edges.
std::vector<WordId> generate_walk(const WeightedDigraph& g,
                                  const AliasTable& alias, WordId start,
                                  const WalkConfig& cfg, Rng& rng);

struct WalkCorpus {
  std::vector<std::vector<WordId>> walks;

  std::size_t size() const noexcept { return walks.size(); }
  bool operator==(const WalkCorpus&) const = default;
};

// cfg.walks_per_node walks from every node. Node visit order is
// shuffled per round; each walk runs on an RNG stream derived from
// (seed, start node, round), so the corpus is reproducible from the
// seed and independent of the thread count.
WalkCorpus generate_corpus(const WeightedDigraph& g, const WalkConfig& cfg,
                           unsigned threads = 0);

// One walk per line, space-separated tokens.
void save_corpus(const WalkCorpus& corpus, const Vocabulary& vocab,
                 const std::string& path);

}  // namespace so2v
