#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "so2v/analysis.hpp"
#include "so2v/sgns.hpp"
#include "so2v/walks.hpp"

namespace so2v {

struct PipelineConfig {
  std::vector<std::string> samples;  // first-order embedding paths
  std::size_t k = 10;
  double p = 1.0;
  double q = 1.0;
  std::size_t walk_length = 80;
  std::size_t walks_per_node = 10;
  std::size_t dim = 100;
  std::size_t window = 10;  // node2vec-style default for walk corpora
  std::size_t negatives = 5;
  std::size_t epochs = 1;   // the corpus already repeats every node
  std::size_t min_count = 1;
  double lr_start = 0.025;
  double lr_end = 0.0001;
  std::size_t extremal_m = 10;
  std::uint64_t seed = 1;
  std::string out_dir;
  bool deterministic = false;
  unsigned threads = 0;

  void validate() const;
};

// Flat "key = value" config file; '#' starts a comment line; `sample`
// may repeat. Unknown keys are an error.
PipelineConfig parse_pipeline_config(const std::string& path);

// File-level stages. The CLI subcommands call exactly these functions,
// so a `pipeline` run equals chaining the subcommands.
void stage_knn(const std::string& emb_path, std::size_t k,
               const std::string& out_tsv, unsigned threads = 0);
void stage_induce(const std::vector<std::string>& nn_paths,
                  const std::string& out_tsv);
void stage_walk(const std::string& graph_path, const WalkConfig& cfg,
                const std::string& out_txt, unsigned threads = 0);
void stage_train(const std::string& corpus_path, const SgnsConfig& cfg,
                 const TrainOptions& opts, const std::string& out_emb);
// Recomputes k-NN in the given space and writes the density report
// files under out_prefix; returns the report.
DensityReport stage_analyze_density(const std::string& emb_path,
                                    std::size_t k, std::size_t m,
                                    const std::string& out_prefix,
                                    unsigned threads = 0);
// Cross-sample overlap of k-NN lists recomputed per embedding set.
OverlapReport stage_analyze_overlap(const std::vector<std::string>& emb_paths,
                                    std::size_t k,
                                    const std::string& out_prefix,
                                    unsigned threads = 0);

struct PipelineResult {
  std::string second_order_path;
  DensityReport first_order_density;
  DensityReport second_order_density;
  DensityComparison comparison;
  std::vector<std::string> artifacts;  // paths relative to out_dir
};

// Full second-order pipeline: per-sample k-NN lists, graph induction,
// biased walks, SGNS retraining, density/overlap reports, and a
// manifest.json recording the configuration and a content hash of every
// artifact. Any stage failure is rethrown with the stage name; partial
// outputs are left in place.
PipelineResult run_pipeline(const PipelineConfig& cfg);

// FNV-1a 64-bit content hash (manifest fingerprint, not cryptographic).
std::uint64_t fnv1a64_file(const std::string& path);
std::string to_hex(std::uint64_t value);

}  // namespace so2v
