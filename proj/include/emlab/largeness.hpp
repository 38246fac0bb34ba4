#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "emlab/config.hpp"
#include "emlab/finset.hpp"
#include "emlab/ordinal.hpp"

namespace emlab {

// X is alpha-large iff folding the fundamental-sequence step over its
// elements in increasing order drives alpha to 0. Short-circuits at 0 and
// once the residue is finite.
bool is_alpha_large(const FinSet& x, const Ordinal& alpha,
                    std::uint64_t cap = kDefaultOrdinalCap);

// Same over the virtual interval {lo, ..., hi-1}; never materializes it.
bool is_interval_alpha_large(std::uint64_t lo, std::uint64_t hi,
                             const Ordinal& alpha,
                             std::uint64_t cap = kDefaultOrdinalCap);

// Residue after folding step over all of X (0 iff large).
Ordinal fold_step(const FinSet& x, const Ordinal& alpha,
                  std::uint64_t cap = kDefaultOrdinalCap);

// min X > 3 and every gap interval [x,y) between consecutive members is
// alpha-large (consecutive pairs suffice by superset-monotonicity).
bool is_alpha_sparse(const FinSet& x, const Ordinal& alpha,
                     std::uint64_t cap = kDefaultOrdinalCap);

// Least N >= a-1 such that {a, a+1, ..., N} is alpha-large, by the recurrence
// L(0,a) = a-1, L(alpha,a) = L(alpha[a], a+1), accelerated by closed forms
// for the w and w^2 layers. Fails cleanly (ResourceLimit) once any
// intermediate exceeds the digit budget or the event count exceeds the step
// budget; w^3 and above blow up this way by design.
mpz_class least_large_endpoint(const Ordinal& alpha, std::uint64_t a,
                               const EndpointBudget& budget = {});

// Splits a (sum parts)-large X into consecutive blocks, each exactly
// minimally alpha_i-large, trailing part first; leftover elements join the
// final block. Parts are given trailing-first (smallest exponents first).
std::vector<FinSet> decompose_large(const FinSet& x,
                                    std::span<const Ordinal> parts,
                                    std::uint64_t cap = kDefaultOrdinalCap);

struct UnionSplitOutcome {
  std::optional<int> side;  // 0 or 1; empty = NoneFound
  bool y0_large = false;
  bool y1_large = false;
  // The cited lemma's nominal hypotheses, recorded for audit.
  bool union_large_nominal = false;   // Y0 u Y1 is w^n*(4k)-large
  bool union_sparse_nominal = false;  // Y0 u Y1 is w^3-sparse
  // NoneFound while both hypotheses hold would falsify the lemma.
  bool falsifies_lemma = false;
};

// Checks which side of a union is w^n*k-large (side 0 wins ties).
UnionSplitOutcome union_split(const FinSet& y0, const FinSet& y1,
                              std::uint32_t n, std::uint64_t k,
                              std::uint64_t cap = kDefaultOrdinalCap);

// Greedy extraction of a w^n-large, w^m-sparse subset: keep min X, keep each
// candidate whose gap from the last kept element is w^m-large, stop as soon
// as the kept set is w^n-large. InsufficientLargeness if the goal is never
// reached.
FinSet sparsify(const FinSet& x, std::uint32_t n, std::uint32_t m,
                std::uint64_t cap = kDefaultOrdinalCap);

}  // namespace emlab
