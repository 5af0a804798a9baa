#pragma once

#include <span>
#include <vector>

#include "so2v/embedding.hpp"

namespace so2v {

struct Neighbor {
  WordId id;
  double similarity;
  bool operator==(const Neighbor&) const = default;
};

// Per-word nearest-neighbor lists. entries[v] is sorted by similarity
// descending, ties by ascending word id; v never appears in its own
// list; every stored similarity lies in [-1, 1].
struct NeighborList {
  std::size_t k = 0;
  std::vector<std::vector<Neighbor>> entries;

  std::size_t size() const noexcept { return entries.size(); }
};

// dot(a,b) / (|a||b|), clamped to [-1, 1] against rounding.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

// The k most similar words to v (v excluded by id, so duplicate vectors
// of distinct words stay eligible). Requires a normalized set. Returns
// fewer than k entries only when n-1 < k.
std::vector<Neighbor> top_k_neighbors(const EmbeddingSet& e, WordId v,
                                      std::size_t k);

// top_k_neighbors for every word; parallel over query words, result
// independent of the thread count.
NeighborList all_neighbors(const EmbeddingSet& e, std::size_t k,
                           unsigned threads = 0);

// TSV interchange: "word \t neighbor \t similarity" rows, neighbors in
// rank order, similarity printed with 6 decimals.
void save_neighbors(const NeighborList& nn, const Vocabulary& vocab,
                    const std::string& path);

struct LoadedNeighbors {
  NeighborList nn;
  Vocabulary vocab;
};
LoadedNeighbors load_neighbors(const std::string& path);

}  // namespace so2v
