#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "emlab/coloring.hpp"
#include "emlab/config.hpp"
#include "emlab/finset.hpp"
#include "emlab/ordinal.hpp"

namespace emlab {

// Ordered family of blocks with per-block largeness alpha and a beta-large
// max-set; inter-block color coherence is relative to a coloring and checked
// by verify_grouping rather than stored.
struct Grouping {
  std::vector<FinSet> blocks;
  Ordinal alpha;
  Ordinal beta;
};

struct GroupingViolation {
  int condition = 0;  // 1 ordering, 2 block largeness, 3 max-set, 4 coherence
  std::size_t block_i = 0;
  std::size_t block_j = 0;
  std::array<std::uint64_t, 4> elems{};  // witnesses where applicable
  std::string note;                      // e.g. the stepping residue
};

// Checks all four grouping conditions; empty list means valid.
std::vector<GroupingViolation> verify_grouping(const Grouping& g,
                                               const PairColoring& p);

// Pool exhausted (or a refinement starved) before the grouping target was
// met; carries whatever was built.
struct GroupingShortfall : Error {
  GroupingShortfall(Grouping built, std::string cause_, const std::string& what)
      : Error(what), partial(std::move(built)), cause(std::move(cause_)) {}
  Grouping partial;
  std::string cause;
};

// Greedy min-homogeneous chain of Theorem "omega^3-large is EM-omega-large":
// a_0 = min X, each X_{i+1} the largest color class of P(a_i, .) (ties to the
// least color). Strict mode enforces |X| > (a+1)^{a+1}; the returned chain is
// verified omega-large, fallow, transitive and min-homogeneous.
FinSet fallow_base_witness(const FinSet& x, const PairColoring& p,
                           bool strict,
                           std::uint64_t cap = kDefaultOrdinalCap);

enum class StabilizeDirection { anchors_below, anchors_above };

// c^2 binary refinement rounds over X minus its minimum: at round
// i = j1*c + j2 keep whichever of the color-j2 side / complement is
// omega^n * 4^(c^2-i-1)-large (equal side preferred), where
// c = max(|anchors|, colors). Output has P constant between every anchor and
// the whole result.
FinSet stabilize(const FinSet& x, const FinSet& anchors, const PairColoring& p,
                 std::uint32_t n, StabilizeDirection direction,
                 std::uint64_t cap = kDefaultOrdinalCap);

// Carves consecutive minimal omega^n-large blocks, refining the remaining
// pool after each block so that colors toward the carved block are a single
// constant, until the block maxima form an omega^k-large set. Result always
// passes verify_grouping.
Grouping build_grouping(const FinSet& x, const PairColoring& p,
                        std::uint32_t n, std::uint32_t k,
                        std::uint64_t cap = kDefaultOrdinalCap);

// Base-case strategy: maps (X, P) to an omega-large subset of X on which P
// is fallow. The default is strict fallow_base_witness; tests inject toys.
using BaseStrategy = std::function<FinSet(const FinSet&, const PairColoring&)>;

// EM witness recursion: n = 1 runs the base strategy; n >= 2 builds an
// (omega^{n-1}, omega)-grouping, uses the base strategy on the max-set to
// select a fallow subgrouping, recurses into each selected block, and
// assembles H = {max Z_0} u Z_1 u ... u Z_l. Both post-conditions (P fallow
// on H, H omega^n-large) are verified before returning.
FinSet em_witness(const FinSet& x, const PairColoring& p, std::uint32_t n,
                  const BaseStrategy& base = {},
                  std::uint64_t cap = kDefaultOrdinalCap);

}  // namespace emlab
