#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "emlab/finset.hpp"

namespace emlab {

// Total color assignment on the 2-element subsets of a ground FinSet.
// Backed either by a packed triangular array or, for large grounds, by a
// pure function of the two element values (the function must return values
// below color_count and be consistent across calls).
class PairColoring {
 public:
  using ColorFn = std::function<std::uint32_t(std::uint64_t, std::uint64_t)>;

  PairColoring(FinSet ground, std::uint32_t color_count);

  static PairColoring constant(FinSet ground, std::uint32_t color_count,
                               std::uint32_t color);
  static PairColoring from_function(FinSet ground, std::uint32_t color_count,
                                    ColorFn fn);
  static PairColoring from_dense(FinSet ground, std::uint32_t color_count,
                                 std::vector<std::uint32_t> colors);

  const FinSet& ground() const { return ground_; }
  std::uint32_t color_count() const { return color_count_; }
  std::size_t pair_count() const;
  bool is_dense() const { return !fn_; }

  // Color of {ground[i], ground[j]}, i < j.
  std::uint32_t color_by_index(std::size_t i, std::size_t j) const;
  // Color of {x, y} by element value (both must lie in the ground).
  std::uint32_t color_at(std::uint64_t x, std::uint64_t y) const;

  // Dense storage only; used by exhaustive enumerations to rewrite in place.
  void set_color_by_index(std::size_t i, std::size_t j, std::uint32_t c);

 private:
  FinSet ground_;
  std::uint32_t color_count_;
  std::vector<std::uint32_t> dense_;
  ColorFn fn_;
};

struct Triple {
  std::uint64_t x, y, z;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// First (lexicographically least) triple x<y<z of S with
// c(x,z) not in {c(x,y), c(y,z)}; empty if c is fallow on S.
std::optional<Triple> fallow_violation(const PairColoring& c, const FinSet& s);
inline bool is_fallow(const PairColoring& c, const FinSet& s) {
  return !fallow_violation(c, s).has_value();
}

// First triple with c(x,y) = c(y,z) but c(x,z) != c(x,y).
std::optional<Triple> transitive_violation(const PairColoring& c,
                                           const FinSet& s);
inline bool is_transitive(const PairColoring& c, const FinSet& s) {
  return !transitive_violation(c, s).has_value();
}

// c(x,y) = sum_i 2^i c_i(x,y): members must be 2-colorings on one ground.
PairColoring encode_family(std::span<const PairColoring> family);

// 2-coloring that is 1 exactly where c equals i.
PairColoring indicator(const PairColoring& c, std::uint32_t i);

struct StabilityRow {
  std::uint64_t x = 0;
  bool stable = false;
  std::optional<std::uint64_t> witness;     // least m with constant tail
  std::optional<std::uint32_t> limit_color;
};

// Finite-horizon stability: for each x below the horizon, the least m with
// c(x,n) constant over ground elements n in [m, horizon]. A tail that only
// becomes constant at the horizon itself does not count as stable (unless it
// is the whole tail). Ground must be an initial segment {0..G}.
std::vector<StabilityRow> stability_profile(const PairColoring& c,
                                            std::uint64_t horizon);

// 1 iff c is transitive on {x,y,z}: c(x,y) != c(y,z) or all three agree.
int triple_value(const PairColoring& c, std::uint64_t x, std::uint64_t y,
                 std::uint64_t z);

// View of the induced triple coloring c'.
class TripleColoring {
 public:
  explicit TripleColoring(const PairColoring& c) : base_(&c) {}
  int value(std::uint64_t x, std::uint64_t y, std::uint64_t z) const {
    return triple_value(*base_, x, y, z);
  }
  const PairColoring& base() const { return *base_; }

 private:
  const PairColoring* base_;
};

inline TripleColoring triple_coloring(const PairColoring& c) {
  return TripleColoring(c);
}

// Scans all 4-element subsets of the ground for one whose triples are all
// colored 0 by c'; the §5 argument says there is none.
std::optional<std::array<std::uint64_t, 4>> homogeneous_zero_4set(
    const PairColoring& c);

}  // namespace emlab
