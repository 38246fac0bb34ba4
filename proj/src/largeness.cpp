#include "emlab/largeness.hpp"

#include <cmath>
#include <sstream>

namespace emlab {

namespace {

// Residue-aware fold core shared by the set and interval variants. Returns
// true as soon as the residue hits 0; once the residue is finite only the
// number of remaining elements matters.
template <typename NextFn>
bool fold_large(Ordinal state, std::uint64_t remaining, NextFn next,
                std::uint64_t cap) {
  while (true) {
    if (state.is_zero()) return true;
    if (state.is_finite()) return remaining >= state.finite_value();
    if (remaining == 0) return false;
    state = step(state, next(), cap);
    --remaining;
  }
}

}  // namespace

bool is_alpha_large(const FinSet& x, const Ordinal& alpha, std::uint64_t cap) {
  std::size_t i = 0;
  return fold_large(
      alpha, x.size(), [&] { return x[i++]; }, cap);
}

bool is_interval_alpha_large(std::uint64_t lo, std::uint64_t hi,
                             const Ordinal& alpha, std::uint64_t cap) {
  std::uint64_t v = lo;
  std::uint64_t count = hi > lo ? hi - lo : 0;
  return fold_large(
      alpha, count, [&] { return v++; }, cap);
}

Ordinal fold_step(const FinSet& x, const Ordinal& alpha, std::uint64_t cap) {
  Ordinal state = alpha;
  for (std::uint64_t v : x) {
    if (state.is_zero()) break;
    state = step(state, v, cap);
  }
  return state;
}

bool is_alpha_sparse(const FinSet& x, const Ordinal& alpha,
                     std::uint64_t cap) {
  if (x.empty() || x.min() <= 3) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (!is_interval_alpha_large(x[i], x[i + 1], alpha, cap)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// least_large_endpoint
// ---------------------------------------------------------------------------

namespace {

struct BigTerm {
  std::uint32_t exponent;
  mpz_class coefficient;
};

constexpr double kLog10Of2 = 0.30102999566398119521;

void check_digits(const mpz_class& v, const EndpointBudget& budget) {
  if (mpz_sizeinbase(v.get_mpz_t(), 10) > budget.max_digits)
    throw ResourceLimit("endpoint exceeds digit budget");
}

// 2^e * mult - 2, with the digit budget enforced before allocation.
mpz_class two_pow_times_minus2(const mpz_class& e, const mpz_class& mult,
                               const EndpointBudget& budget) {
  if (!e.fits_ulong_p()) throw ResourceLimit("endpoint exceeds digit budget");
  unsigned long eu = e.get_ui();
  double est = static_cast<double>(eu) * kLog10Of2 +
               static_cast<double>(mpz_sizeinbase(mult.get_mpz_t(), 10));
  if (est > static_cast<double>(budget.max_digits) + 2)
    throw ResourceLimit("endpoint exceeds digit budget");
  mpz_class r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), eu);
  r *= mult;
  r -= 2;
  check_digits(r, budget);
  return r;
}

}  // namespace

mpz_class least_large_endpoint(const Ordinal& alpha, std::uint64_t a,
                               const EndpointBudget& budget) {
  if (a <= 3) throw PreconditionError("start point must exceed 3");

  std::vector<BigTerm> cnf;
  cnf.reserve(alpha.terms().size());
  for (const OrdinalTerm& t : alpha.terms())
    cnf.push_back(BigTerm{t.exponent, mpz_class(static_cast<unsigned long>(
                                          t.coefficient))});

  mpz_class start = static_cast<unsigned long>(a);
  std::uint64_t steps = 0;
  auto bump = [&] {
    if (++steps > budget.max_steps)
      throw ResourceLimit("endpoint exceeds step budget");
  };

  while (true) {
    if (cnf.empty()) return start - 1;
    BigTerm& t = cnf.back();
    switch (t.exponent) {
      case 0: {
        // L(gamma + m, s) = L(gamma, s + m); the last finite run ends at
        // s + m - 1.
        if (cnf.size() == 1) return start + t.coefficient - 1;
        start += t.coefficient;
        cnf.pop_back();
        break;
      }
      case 1: {
        // L(w*k, s) = 2^k (s+1) - 2.
        mpz_class r = two_pow_times_minus2(t.coefficient, start + 1, budget);
        cnf.pop_back();
        if (cnf.empty()) return r;
        start = r + 1;
        break;
      }
      case 2: {
        // L(w^2, s) = 2^s (s+2) - 2, iterated coefficient-many times.
        if (!t.coefficient.fits_ulong_p())
          throw ResourceLimit("endpoint exceeds step budget");
        unsigned long k = t.coefficient.get_ui();
        mpz_class r;
        for (unsigned long i = 0; i < k; ++i) {
          bump();
          r = two_pow_times_minus2(start, start + 2, budget);
          start = r + 1;
        }
        cnf.pop_back();
        if (cnf.empty()) return r;
        // start already r + 1
        break;
      }
      default: {
        // Peel one fundamental step: ... + w^n -> ... + w^{n-1} * start.
        bump();
        std::uint32_t n = t.exponent;
        if (--t.coefficient == 0) cnf.pop_back();
        cnf.push_back(BigTerm{n - 1, start});
        start += 1;
        check_digits(start, budget);
        break;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// decompose / union split / sparsify
// ---------------------------------------------------------------------------

std::vector<FinSet> decompose_large(const FinSet& x,
                                    std::span<const Ordinal> parts,
                                    std::uint64_t cap) {
  // Validate the CNF sum written leading-first (reverse of trailing-first).
  std::vector<Ordinal> leading_first(parts.rbegin(), parts.rend());
  Ordinal total = make_sum(leading_first, cap);
  if (parts.empty()) return {};
  if (!is_alpha_large(x, total, cap))
    throw InsufficientLargeness("set is not large enough for the given sum");

  std::vector<FinSet> blocks;
  blocks.reserve(parts.size());
  std::size_t idx = 0;
  for (const Ordinal& part : parts) {
    Ordinal state = part;
    std::vector<std::uint64_t> block;
    while (!state.is_zero()) {
      // Cannot run out: the pre-check folds through the same states.
      state = step(state, x[idx], cap);
      block.push_back(x[idx]);
      ++idx;
    }
    blocks.push_back(FinSet(std::move(block)));
  }
  if (idx < x.size()) {
    // Leftovers join the final block; it stays large by superset-monotonicity.
    std::vector<std::uint64_t> last = blocks.back().elements();
    last.insert(last.end(), x.elements().begin() + idx, x.elements().end());
    blocks.back() = FinSet(std::move(last));
  }
  return blocks;
}

UnionSplitOutcome union_split(const FinSet& y0, const FinSet& y1,
                              std::uint32_t n, std::uint64_t k,
                              std::uint64_t cap) {
  UnionSplitOutcome out;
  std::uint64_t ext_cap = std::max(cap, k);
  Ordinal target = Ordinal::omega_power(n, k, ext_cap);
  out.y0_large = is_alpha_large(y0, target, ext_cap);
  out.y1_large = is_alpha_large(y1, target, ext_cap);

  FinSet u = y0.set_union(y1);
  if (k <= UINT64_MAX / 4) {
    std::uint64_t cap4 = std::max(cap, 4 * k);
    Ordinal nominal = Ordinal::omega_power(n, 4 * k, cap4);
    out.union_large_nominal = is_alpha_large(u, nominal, cap4);
  }
  out.union_sparse_nominal = is_alpha_sparse(u, Ordinal::omega_power(3), cap);

  if (out.y0_large)
    out.side = 0;
  else if (out.y1_large)
    out.side = 1;
  out.falsifies_lemma = !out.side.has_value() && out.union_large_nominal &&
                        out.union_sparse_nominal;
  return out;
}

FinSet sparsify(const FinSet& x, std::uint32_t n, std::uint32_t m,
                std::uint64_t cap) {
  if (x.empty() || x.min() <= 3)
    throw PreconditionError("sparsify requires min X > 3");
  Ordinal gap_target = Ordinal::omega_power(m);
  Ordinal goal = Ordinal::omega_power(n);

  std::vector<std::uint64_t> kept;
  kept.push_back(x.min());
  Ordinal state = step(goal, x.min(), cap);
  std::uint64_t last = x.min();
  for (std::size_t i = 1; i < x.size() && !state.is_zero(); ++i) {
    std::uint64_t y = x[i];
    if (!is_interval_alpha_large(last, y, gap_target, cap)) continue;
    kept.push_back(y);
    state = step(state, y, cap);
    last = y;
  }
  if (!state.is_zero()) {
    std::ostringstream msg;
    msg << "greedy kept set of size " << kept.size() << " is not w^" << n
        << "-large";
    throw InsufficientLargeness(msg.str());
  }
  return FinSet(std::move(kept));
}

}  // namespace emlab
