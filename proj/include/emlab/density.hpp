#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "emlab/coloring.hpp"
#include "emlab/config.hpp"
#include "emlab/finset.hpp"
#include "emlab/ordinal.hpp"

namespace emlab {

enum class Mode { exact, randomized };
enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);
std::string to_string(Mode m);

// Persisted, independently re-checkable verdict with evidence.
struct Certificate {
  FinSet subject;
  std::string kind;       // "em-alpha-large" | "em-m-dense"
  std::string parameter;  // ordinal grammar string, or decimal m
  Verdict verdict = Verdict::unknown;
  nlohmann::json evidence;  // counterexample coloring/partition, or null
  Mode mode = Mode::exact;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  // Resumption token for sharded exact enumeration.
  std::uint64_t rank_lo = 0;
  std::uint64_t rank_hi = 0;
  EllBound ell_bound = EllBound::block_min;
};

// Is every coloring P : [X]^2 -> min X fallow on some alpha-large subset?
// Exact mode enumerates all colorings by mixed-radix rank (sharded via cfg);
// randomized mode samples and can only answer no/unknown.
Certificate check_em_alpha_large(const FinSet& x, const Ordinal& alpha,
                                 Mode mode, const RunConfig& cfg);

// EM-m-density: m = 0 is "omega-large and min X > 3"; m+1 quantifies over
// colorings (clause 1) and over partitions into consecutive blocks
// Z_0 < ... < Z_{l-1} with l <= min Z_0 (clause 2).
Certificate check_em_dense(const FinSet& x, std::uint64_t m, Mode mode,
                           const RunConfig& cfg);

struct RefuteOutcome {
  bool found = false;
  nlohmann::json counterexample;  // re-checkable via the validator
  std::uint64_t colorings_sampled = 0;
  std::uint64_t partitions_checked = 0;
};

// Randomized narrowing for spaces beyond the exact budget: samples colorings
// for clause 1 and enumerates partitions for clause 2. "none found" is NOT a
// density verdict.
RefuteOutcome refute_density(const FinSet& x, std::uint64_t m,
                             const RunConfig& cfg);

// Re-validates a false certificate's evidence against the definitional
// clauses. Deliberately shares no code with the searchers above (own
// enumeration, own subset sweep, own stepping fold).
bool validate_evidence(const Certificate& cert);

}  // namespace emlab
