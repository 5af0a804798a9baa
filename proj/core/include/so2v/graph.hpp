#pragma once

#include <span>
#include <string>
#include <vector>

#include "so2v/knn.hpp"
#include "so2v/rng.hpp"

namespace so2v {

// Directed weighted graph over the vocabulary in CSR form; out-edges of
// a node are sorted by target id. Weights lie in (0, 1]. Graphs induced
// from S neighbor-list samples carry weight m/S on an edge contained in
// m of the samples.
struct WeightedDigraph {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;  // size n + 1
  std::vector<WordId> targets;       // size E, sorted within each node
  std::vector<double> weights;       // size E

  std::size_t out_degree(WordId v) const {
    return offsets[v + 1] - offsets[v];
  }
  std::span<const WordId> out_targets(WordId v) const {
    return {targets.data() + offsets[v], out_degree(v)};
  }
  std::span<const double> out_weights(WordId v) const {
    return {weights.data() + offsets[v], out_degree(v)};
  }
  // Directed edge test via binary search in the sorted target range.
  bool has_edge(WordId u, WordId v) const;
  std::size_t edge_count() const noexcept { return targets.size(); }

  bool operator==(const WeightedDigraph&) const = default;
};

// One directed edge (v, w), weight 1, per neighbor entry. Components
// reachable in only one direction are expected and preserved.
WeightedDigraph induce_single(const NeighborList& nn);

// Union of the samples' edge sets; weight(v, w) = (number of samples
// whose neighbor list of v contains w) / S. All samples must share the
// vocabulary size and k.
WeightedDigraph induce_multi(std::span<const NeighborList> nns);

// Walker/Vose alias tables per node for O(1) weighted sampling of
// out-edges. Nodes without out-edges get an empty table.
class AliasTable {
 public:
  explicit AliasTable(const WeightedDigraph& g);

  // Uniform slot then alias coin; returns an out-edge slot of v (index
  // into the CSR range). v must have out-edges.
  std::size_t draw_slot(WordId v, Rng& rng) const;

  // Convenience: sampled target id.
  WordId draw(const WeightedDigraph& g, WordId v, Rng& rng) const {
    return g.targets[draw_slot(v, rng)];
  }

  std::span<const double> probs(WordId v) const {
    return {prob_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

inline AliasTable build_alias_tables(const WeightedDigraph& g) {
  return AliasTable(g);
}

// Edge-list TSV "src \t dst \t weight" with token-labeled endpoints,
// sorted by (src id, dst id). Weights print with shortest round-trip
// precision. Loading assigns ids by first appearance, so the labeled
// graph round-trips exactly (internal ids may be relabeled).
void save_graph(const WeightedDigraph& g, const Vocabulary& vocab,
                const std::string& path);

struct LoadedGraph {
  WeightedDigraph graph;
  Vocabulary vocab;
};
LoadedGraph load_graph(const std::string& path);

// Canonical token-labeled edge list, sorted lexicographically; two
// (graph, vocab) pairs describe the same graph iff these are equal.
std::vector<std::tuple<std::string, std::string, double>> labeled_edges(
    const WeightedDigraph& g, const Vocabulary& vocab);

}  // namespace so2v
