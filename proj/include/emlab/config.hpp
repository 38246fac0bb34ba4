#pragma once

#include <cstdint>

#include "emlab/errors.hpp"

namespace emlab {

// Cap on ordinal coefficients and exponents (largeness stepping can inflate
// coefficients by element values, so this is a real safety rail).
inline constexpr std::uint64_t kDefaultOrdinalCap = 1'000'000;

// Cap on ValueTable entries.
inline constexpr std::uint64_t kDefaultValueCap = 1u << 16;

struct EndpointBudget {
  std::uint64_t max_digits = 100'000;  // decimal digits of any intermediate
  std::uint64_t max_steps = 1'000'000; // fundamental-sequence events
};

enum class OutputFormat { json, csv };

// How to read "l <= Z_0" in the density definition's partition clause.
enum class EllBound { block_min, block_size };

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t enumeration_budget = std::uint64_t{1} << 30;
  std::uint64_t digit_budget = 100'000;
  std::uint64_t samples = 10'000;
  std::uint64_t ordinal_cap = kDefaultOrdinalCap;
  std::uint32_t shard_index = 0;
  std::uint32_t shard_count = 1;
  OutputFormat format = OutputFormat::json;
  EllBound ell_bound = EllBound::block_min;
  bool stable = false;

  void validate() const {
    if (enumeration_budget == 0 || digit_budget == 0)
      throw PreconditionError("budgets must be positive");
    if (shard_count == 0 || shard_index >= shard_count)
      throw PreconditionError("shard index must be below shard count");
  }

  EndpointBudget endpoint_budget() const {
    return EndpointBudget{digit_budget, 1'000'000};
  }
};

// Deterministic seeded mixing, used for all sampled colorings so results are
// reproducible across platforms.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform-ish draw in [0, n); deterministic across platforms.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace emlab
