#pragma once

#include <stdexcept>
#include <string>

namespace so2v {

enum class ErrorKind {
  // file and format errors
  io_failure,
  malformed_header,
  malformed_line,
  malformed_row,
  dimension_mismatch,
  duplicate_token,
  non_finite_value,
  line_count_mismatch,
  // argument and state errors
  invalid_argument,
  unknown_word,
  zero_vector,
  length_mismatch,
  empty_set,
  vocab_mismatch,
  k_mismatch,
  dangling_node,
  empty_vocabulary,
  empty_corpus,
  single_class,
  non_finite_feature,
  vocab_too_small,
  // numeric failures
  non_finite_loss,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit convention: 0 success, 1 usage error, 2 data error,
// 3 numeric failure.
inline int exit_code(ErrorKind kind) noexcept {
  return kind == ErrorKind::non_finite_loss ? 3 : 2;
}

}  // namespace so2v
