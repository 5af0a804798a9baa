#pragma once

#include <span>
#include <string>
#include <vector>

#include "so2v/knn.hpp"

namespace so2v {

// Arithmetic mean of the stored similarities of v's neighbor list.
double mean_nn_similarity(const EmbeddingSet& e, const NeighborList& nn,
                          WordId v);

struct ExtremalWord {
  WordId id;
  double mean_similarity;
};

struct DensitySummary {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

// Neighborhood-density diagnostics: per-word mean similarity to its k
// nearest neighbors, the m words at each extreme, and the pooled
// neighbor similarities of those extremal words (m*k sample points per
// end). For reference, at full corpus scale the minimal-end pooled
// similarity has been observed around 0.24 in first-order spaces versus
// 0.75 in second-order spaces; desk-scale runs assert direction only.
struct DensityReport {
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<double> mean_similarity;      // per word
  std::vector<ExtremalWord> maximal_words;  // m entries, mean descending
  std::vector<ExtremalWord> minimal_words;  // m entries, mean ascending
  std::vector<double> pooled_maximal;       // m*k stored similarities
  std::vector<double> pooled_minimal;
  DensitySummary maximal_summary{};
  DensitySummary minimal_summary{};
};

DensityReport density_report(const EmbeddingSet& e, const NeighborList& nn,
                             std::size_t m);

// Cross-sample neighborhood membership for one word: every neighbor in
// the union of the samples' lists, labeled with how many samples
// contain it, plus the all/some/one partition sizes and the mean
// pairwise Jaccard overlap of the lists.
struct OverlapRow {
  WordId word = 0;
  std::vector<std::pair<WordId, std::size_t>> neighbor_counts;  // by id
  std::size_t in_all = 0;
  std::size_t in_some = 0;
  std::size_t in_one = 0;
  double mean_pairwise_jaccard = 0.0;
};

OverlapRow neighborhood_overlap(std::span<const NeighborList> nns, WordId v);

struct OverlapReport {
  std::size_t samples = 0;
  std::vector<OverlapRow> rows;  // one per word
  double mean_jaccard = 0.0;
  double mean_fraction_all = 0.0;
  double mean_fraction_one = 0.0;
};

OverlapReport neighborhood_overlap_all(std::span<const NeighborList> nns);

// Figure-style comparison of two density reports (typically first-order
// versus second-order over the same word universe): minima and medians
// of the pooled similarities per end.
struct DensityComparison {
  double first_minimal_min = 0, first_minimal_median = 0;
  double first_maximal_min = 0, first_maximal_median = 0;
  double second_minimal_min = 0, second_minimal_median = 0;
  double second_maximal_min = 0, second_maximal_median = 0;
};

DensityComparison compare_density(const DensityReport& first,
                                  const DensityReport& second);

std::string format_density_comparison(const DensityComparison& c);

// Quantile with linear interpolation between order statistics
// (q in [0, 1]); sample must be non-empty.
double quantile(std::span<const double> sample, double q);

}  // namespace so2v
