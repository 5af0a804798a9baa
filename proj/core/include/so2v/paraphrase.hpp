#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "so2v/embedding.hpp"

namespace so2v {

enum class PairLabel : int { not_equivalent = 0, equivalent = 1 };

struct SentencePair {
  std::vector<std::string> sentence_a;
  std::vector<std::string> sentence_b;
  PairLabel label;
};

enum class FeatureMode { concat, subtract };

// Sum of the vectors of in-vocabulary tokens; out-of-vocabulary tokens
// are skipped, the empty sum is the zero vector.
std::vector<double> compose_sentence(const EmbeddingSet& e,
                                     std::span<const std::string> tokens);

// concat -> [va; vb] (2d); subtract -> va - vb (d).
std::vector<double> pair_features(std::span<const double> va,
                                  std::span<const double> vb,
                                  FeatureMode mode);

struct LogRegModel {
  std::vector<double> weights;
  double bias = 0.0;
  double cost = 0.0;

  double decision_value(std::span<const double> x) const;
  double predict_probability(std::span<const double> x) const;
};

struct LogRegOptions {
  double gradient_tolerance = 1e-6;
  std::size_t max_iterations = 10000;
};

// L2-regularized logistic regression in the LIBLINEAR convention:
// minimize 0.5 |w|^2 + C sum_i log(1 + exp(-y_i (w.x_i + b))) with
// y in {-1, +1} and an unpenalized intercept, so a published cost
// parameter transfers directly. Batch gradient descent with
// backtracking line search.
LogRegModel train_logreg(const std::vector<std::vector<double>>& features,
                         const std::vector<PairLabel>& labels, double cost,
                         const LogRegOptions& opts = {});

// Objective value; fills the gradient when out-parameters are given.
double logreg_objective(std::span<const double> weights, double bias,
                        const std::vector<std::vector<double>>& features,
                        const std::vector<PairLabel>& labels, double cost,
                        std::vector<double>* grad_w = nullptr,
                        double* grad_b = nullptr);

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  // Zero-denominator metrics are reported as 0 with the flag cleared.
  bool precision_defined = true;
  bool recall_defined = true;
  bool f1_defined = true;
};

// Positive class is "equivalent".
Metrics evaluate_prf(const std::vector<PairLabel>& predictions,
                     const std::vector<PairLabel>& gold);

// Lowercase, split on whitespace, strip leading/trailing punctuation;
// interior punctuation (hyphens, apostrophes) is kept.
std::vector<std::string> tokenize(std::string_view text);

// MSRPC-format file: a header line, then tab-separated rows
// "quality \t id1 \t id2 \t sentence1 \t sentence2"; quality 1 means
// equivalent.
std::vector<SentencePair> ingest_msrpc(const std::string& path);

}  // namespace so2v
