#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "so2v/error.hpp"

namespace so2v {

using WordId = std::uint32_t;

// Ordered token list with dense 0-based ids. Iteration order is file
// order and stable across save/load round trips.
class Vocabulary {
 public:
  static constexpr WordId npos = static_cast<WordId>(-1);

  Vocabulary() = default;

  // Appends a token, assigning the next id. Tokens must be non-empty
  // and free of whitespace (the interchange formats are
  // whitespace-delimited). Throws on duplicates.
  WordId add(std::string token);

  // Id of token, or npos when absent.
  WordId find(std::string_view token) const noexcept;

  bool contains(std::string_view token) const noexcept {
    return find(token) != npos;
  }

  const std::string& word(WordId id) const { return words_.at(id); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<std::string>& words() const noexcept { return words_; }

  bool operator==(const Vocabulary& other) const {
    return words_ == other.words_;
  }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId, StringHash, std::equal_to<>> index_;
};

// Vocabulary plus a dense row-major n x d matrix of word vectors.
// `normalized` marks that every row is unit-L2; it is a processing
// marker and does not participate in value equality.
class EmbeddingSet {
 public:
  EmbeddingSet() = default;
  EmbeddingSet(Vocabulary vocab, std::vector<double> matrix, std::size_t dim,
               bool normalized = false);

  std::span<const double> row(WordId id) const {
    return {matrix_.data() + static_cast<std::size_t>(id) * dim_, dim_};
  }
  std::span<double> row_mut(WordId id) {
    return {matrix_.data() + static_cast<std::size_t>(id) * dim_, dim_};
  }

  const Vocabulary& vocab() const noexcept { return vocab_; }
  const std::vector<double>& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return vocab_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  bool normalized() const noexcept { return normalized_; }
  void set_normalized(bool v) noexcept { normalized_ = v; }

  bool operator==(const EmbeddingSet& other) const {
    return dim_ == other.dim_ && vocab_ == other.vocab_ &&
           matrix_ == other.matrix_;
  }

 private:
  Vocabulary vocab_;
  std::vector<double> matrix_;
  std::size_t dim_ = 0;
  bool normalized_ = false;
};

// word2vec text format: header line "<n> <d>", then one line per word,
// "<token> <d floats>" separated by single spaces. Values are printed
// with shortest round-trip precision, so load(save(e)) == e exactly.
EmbeddingSet load_embeddings(const std::string& path);
void save_embeddings(const EmbeddingSet& e, const std::string& path);

// Divides every row by its L2 norm. Idempotent; zero rows are an error.
EmbeddingSet normalize_rows(EmbeddingSet e);

// Per-word concatenation over the tokens present in every input set
// (order of the first set). Used for the concatenated-features
// evaluation settings.
EmbeddingSet concat_embeddings(const std::vector<EmbeddingSet>& sets);

}  // namespace so2v
