#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace so2v {

// splitmix64 finalizer, used to derive independent RNG streams from
// (seed, domain, i, j) tuples.
inline std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic RNG. Raw draws come from std::mt19937_64, which is
// bit-exact by the standard; derived quantities (unit doubles, bounded
// ints, shuffles) are implemented here because the std distributions
// are implementation-defined and would break byte-identical outputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1) with 53-bit resolution
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform integer in [0, bound); unbiased via masked rejection
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask =
        ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    std::uint64_t x;
    do {
      x = next_u64() & mask;
    } while (x >= bound);
    return x;
  }

 private:
  std::mt19937_64 engine_;
};

// Stream for (seed, domain, i, j). Domains keep unrelated consumers
// (walk steps, shuffles, SGNS updates) on disjoint streams.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t domain,
                      std::uint64_t i = 0, std::uint64_t j = 0) {
  return Rng(mix64(mix64(mix64(mix64(seed) ^ domain) ^ i) ^ j));
}

// Fisher-Yates; std::shuffle is implementation-defined.
template <typename T>
void shuffle_span(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace so2v
