#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "so2v/embedding.hpp"
#include "so2v/rng.hpp"
#include "so2v/walks.hpp"

namespace so2v {

struct SgnsConfig {
  std::size_t dim = 100;
  std::size_t window = 8;      // max context offset; shrunk per position
  std::size_t negatives = 5;   // negative samples per positive
  std::size_t epochs = 10;
  double lr_start = 0.025;
  double lr_end = 0.0001;
  std::size_t min_count = 4;   // frequency floor
  double unigram_power = 0.75;
  double subsample = 0.0;      // frequent-word threshold; 0 disables
  std::uint64_t seed = 1;

  void validate() const;
};

// Execution contract, separate from the model configuration:
// deterministic single-threaded mode produces byte-identical output;
// the asynchronous mode updates shared parameters without locks and
// tolerates lost updates.
struct TrainOptions {
  bool deterministic = true;
  unsigned threads = 0;  // 0 = auto; ignored when deterministic
};

// Noise distribution over kept words, P(w) proportional to
// count^unigram_power, restricted to words with count >= min_count.
class NegativeTable {
 public:
  NegativeTable(std::vector<WordId> ids, std::vector<double> cumulative);

  WordId draw(Rng& rng) const;
  double probability(WordId id) const;  // exact P(w), 0 for excluded words
  std::size_t size() const noexcept { return ids_.size(); }

 private:
  std::vector<WordId> ids_;
  std::vector<double> cumulative_;  // inclusive prefix sums of count^power
};

NegativeTable build_negative_table(std::span<const std::uint64_t> counts,
                                   const SgnsConfig& cfg);

// Gradient of the pair loss -log sigma(w.c) (label 1) or
// -log sigma(-w.c) (label 0): grad_w = (sigma(w.c) - label) c,
// grad_c = (sigma(w.c) - label) w.
struct PairGradient {
  std::vector<double> grad_w;
  std::vector<double> grad_c;
  double loss;
};
PairGradient sgns_pair_gradient(std::span<const double> w,
                                std::span<const double> c, int label);

struct ModelParams {
  std::vector<double> input;   // n x dim, uniform in [-0.5/dim, 0.5/dim]
  std::vector<double> output;  // n x dim, zero
};
ModelParams init_params(std::size_t vocab_size, const SgnsConfig& cfg);

struct TrainStats {
  std::vector<double> epoch_mean_loss;  // mean per SGD update
  std::uint64_t updates = 0;
  std::uint64_t tokens_processed = 0;
  std::size_t kept_vocab = 0;
};

// Skip-gram with negative sampling over tokenized sentences. The vocab
// is the corpus vocabulary after the min_count floor, ordered by count
// descending (ties by first appearance); the returned embedding is the
// input-vector matrix.
EmbeddingSet train(const std::vector<std::vector<std::string>>& corpus,
                   const SgnsConfig& cfg, const TrainOptions& opts = {},
                   TrainStats* stats = nullptr);

// Walk-corpus convenience overload; walk node ids map through vocab.
EmbeddingSet train(const WalkCorpus& corpus, const Vocabulary& vocab,
                   const SgnsConfig& cfg, const TrainOptions& opts = {},
                   TrainStats* stats = nullptr);

// One token sequence per line, space-separated.
std::vector<std::vector<std::string>> load_token_corpus(
    const std::string& path);

}  // namespace so2v
