#include "emlab/witness.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "emlab/largeness.hpp"

namespace emlab {

namespace {

// 4^e saturated at 2^63; demands beyond any desk-scale set short-circuit.
std::uint64_t pow4_saturated(std::uint64_t e) {
  if (e >= 31) return std::uint64_t{1} << 63;
  return std::uint64_t{1} << (2 * e);
}

// Is S omega^n * q-large? Cheap cardinality cut first (q units need at least
// q elements), then the stepping fold with a cap wide enough for q.
bool demand_large(const std::vector<std::uint64_t>& s, std::uint32_t n,
                  std::uint64_t q, std::uint64_t cap) {
  if (q > s.size()) return false;
  if (n == 0) return s.size() >= q;
  std::uint64_t wide = std::max(cap, q);
  Ordinal state = Ordinal::omega_power(n, q, wide);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (state.is_zero()) return true;
    if (state.is_finite()) return s.size() - i >= state.finite_value();
    state = step(state, s[i], wide);
  }
  return state.is_zero();
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// verify_grouping
// ---------------------------------------------------------------------------

std::vector<GroupingViolation> verify_grouping(const Grouping& g,
                                               const PairColoring& p) {
  std::vector<GroupingViolation> out;
  const std::size_t l = g.blocks.size();

  for (std::size_t i = 0; i < l; ++i) {
    if (g.blocks[i].empty()) {
      GroupingViolation v;
      v.condition = 1;
      v.block_i = i;
      v.note = "empty block";
      out.push_back(v);
      return out;  // later conditions need maxima
    }
    if (!g.blocks[i].subset_of(p.ground())) {
      GroupingViolation v;
      v.condition = 1;
      v.block_i = i;
      v.note = "block not contained in coloring ground";
      out.push_back(v);
      return out;
    }
  }

  for (std::size_t i = 0; i + 1 < l; ++i) {
    if (g.blocks[i].max() >= g.blocks[i + 1].min()) {
      GroupingViolation v;
      v.condition = 1;
      v.block_i = i;
      v.block_j = i + 1;
      v.elems = {g.blocks[i].max(), g.blocks[i + 1].min(), 0, 0};
      v.note = "blocks overlap or are out of order";
      out.push_back(v);
    }
  }

  for (std::size_t i = 0; i < l; ++i) {
    Ordinal residue = fold_step(g.blocks[i], g.alpha);
    if (!residue.is_zero()) {
      GroupingViolation v;
      v.condition = 2;
      v.block_i = i;
      v.note = "block residue " + format_ordinal(residue);
      out.push_back(v);
    }
  }

  {
    std::vector<std::uint64_t> maxima;
    maxima.reserve(l);
    for (const FinSet& b : g.blocks) maxima.push_back(b.max());
    std::sort(maxima.begin(), maxima.end());
    maxima.erase(std::unique(maxima.begin(), maxima.end()), maxima.end());
    Ordinal residue = fold_step(FinSet(std::move(maxima)), g.beta);
    if (!residue.is_zero()) {
      GroupingViolation v;
      v.condition = 3;
      v.note = "max-set residue " + format_ordinal(residue);
      out.push_back(v);
    }
  }

  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      bool have = false;
      std::uint32_t want = 0;
      std::uint64_t wx = 0, wy = 0;
      bool bad = false;
      for (std::uint64_t xv : g.blocks[i]) {
        for (std::uint64_t yv : g.blocks[j]) {
          std::uint32_t col = p.color_at(xv, yv);
          if (!have) {
            have = true;
            want = col;
            wx = xv;
            wy = yv;
          } else if (col != want) {
            GroupingViolation v;
            v.condition = 4;
            v.block_i = i;
            v.block_j = j;
            v.elems = {wx, wy, xv, yv};
            v.note = "pair colors differ between blocks";
            out.push_back(v);
            bad = true;
            break;
          }
        }
        if (bad) break;
      }
    }

  return out;
}

// ---------------------------------------------------------------------------
// fallow_base_witness
// ---------------------------------------------------------------------------

FinSet fallow_base_witness(const FinSet& x, const PairColoring& p, bool strict,
                           std::uint64_t cap) {
  if (x.empty()) throw PreconditionError("empty input set");
  if (!x.subset_of(p.ground()))
    throw NotSubset("input set not contained in coloring ground");
  const std::uint64_t a = x.min();
  if (p.color_count() > a)
    throw PreconditionError("coloring must use at most min X colors");

  if (strict) {
    std::uint64_t need = saturating_pow(a + 1, a + 1);
    if (!(static_cast<std::uint64_t>(x.size()) > need)) {
      std::ostringstream msg;
      msg << "strict mode needs |X| > (a+1)^(a+1) = " << need << ", got "
          << x.size();
      throw InsufficientInput(msg.str());
    }
  }

  std::vector<std::uint64_t> picks;
  std::vector<std::uint64_t> current = x.elements();
  for (std::uint64_t i = 0; i <= a; ++i) {
    std::uint64_t ai = current.front();
    picks.push_back(ai);
    if (i == a) break;
    // Partition the rest by the color toward a_i; keep the largest class,
    // ties to the least color.
    std::vector<std::vector<std::uint64_t>> classes(p.color_count());
    for (std::size_t t = 1; t < current.size(); ++t) {
      std::uint64_t b = current[t];
      classes[p.color_at(ai, b)].push_back(b);
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < classes.size(); ++c)
      if (classes[c].size() > classes[best].size()) best = c;
    if (classes[best].empty()) {
      if (strict)
        throw VerificationFailed(
            "pigeonhole chain stalled under the strict hypothesis");
      throw ChainStalled("chain ran out of elements at pick " +
                         std::to_string(i + 1));
    }
    current = std::move(classes[best]);
  }

  FinSet y(std::move(picks));

  // Post-checks the theorem guarantees; a failure here is loud.
  if (y.size() != a + 1 || y.min() != a)
    throw VerificationFailed("witness chain has wrong shape");
  if (!is_alpha_large(y, Ordinal::omega_power(1), cap))
    throw VerificationFailed("witness chain is not omega-large");
  for (std::size_t i = 0; i + 2 < y.size(); ++i) {
    std::uint32_t col = p.color_at(y[i], y[i + 1]);
    for (std::size_t j = i + 2; j < y.size(); ++j)
      if (p.color_at(y[i], y[j]) != col)
        throw VerificationFailed("witness chain is not min-homogeneous");
  }
  if (!is_fallow(p, y) || !is_transitive(p, y))
    throw VerificationFailed("witness chain is not fallow/transitive");
  return y;
}

// ---------------------------------------------------------------------------
// stabilize
// ---------------------------------------------------------------------------

FinSet stabilize(const FinSet& x, const FinSet& anchors, const PairColoring& p,
                 std::uint32_t n, StabilizeDirection direction,
                 std::uint64_t cap) {
  if (x.empty()) throw PreconditionError("empty input set");
  if (!x.subset_of(p.ground()) || !anchors.subset_of(p.ground()))
    throw NotSubset("set or anchors not contained in coloring ground");
  if (!anchors.empty()) {
    if (direction == StabilizeDirection::anchors_below &&
        anchors.max() >= x.min())
      throw PreconditionError("anchors must lie strictly below the set");
    if (direction == StabilizeDirection::anchors_above &&
        anchors.min() <= x.max())
      throw PreconditionError("anchors must lie strictly above the set");
  }

  std::vector<std::uint64_t> y(x.elements().begin() + 1, x.elements().end());
  const std::uint64_t c =
      std::max<std::uint64_t>(anchors.size(), p.color_count());
  const std::uint64_t rounds_total = c * c;

  for (std::size_t j1 = 0; j1 < anchors.size(); ++j1) {
    for (std::uint64_t j2 = 0; j2 < c; ++j2) {
      std::uint64_t i = j1 * c + j2;
      std::uint64_t demand = pow4_saturated(rounds_total - i - 1);
      std::vector<std::uint64_t> equal, rest;
      for (std::uint64_t v : y) {
        if (p.color_at(anchors[j1], v) == j2)
          equal.push_back(v);
        else
          rest.push_back(v);
      }
      if (demand_large(equal, n, demand, cap)) {
        y = std::move(equal);
      } else if (demand_large(rest, n, demand, cap)) {
        y = std::move(rest);
      } else {
        std::ostringstream msg;
        msg << "round " << i << " (anchor " << anchors[j1] << ", color " << j2
            << "): neither side is w^" << n << "*4^" << (rounds_total - i - 1)
            << "-large";
        throw SplitFailed(i, msg.str());
      }
    }
  }

  FinSet out(std::move(y));
  for (std::uint64_t anchor : anchors) {
    for (std::size_t t = 1; t < out.size(); ++t)
      if (p.color_at(anchor, out[t]) != p.color_at(anchor, out[0]))
        throw VerificationFailed("anchor color not constant after rounds");
  }
  return out;
}

// ---------------------------------------------------------------------------
// build_grouping
// ---------------------------------------------------------------------------

namespace {

Grouping make_partial(std::vector<FinSet> blocks, std::uint32_t n,
                      std::uint32_t k) {
  return Grouping{std::move(blocks), Ordinal::omega_power(n),
                  Ordinal::omega_power(k)};
}

}  // namespace

Grouping build_grouping(const FinSet& x, const PairColoring& p,
                        std::uint32_t n, std::uint32_t k, std::uint64_t cap) {
  if (x.empty()) throw PreconditionError("empty input set");
  if (!x.subset_of(p.ground()))
    throw NotSubset("input set not contained in coloring ground");
  if (p.color_count() >= x.min())
    throw PreconditionError("coloring must use fewer than min X colors");

  const Ordinal block_target = Ordinal::omega_power(n);
  std::vector<FinSet> blocks;
  std::vector<std::uint64_t> pool = x.elements();
  Ordinal max_state = Ordinal::omega_power(k);

  while (!max_state.is_zero()) {
    // Carve the minimal omega^n-large prefix of the pool.
    Ordinal state = block_target;
    std::vector<std::uint64_t> block;
    std::size_t idx = 0;
    while (!state.is_zero()) {
      if (idx >= pool.size()) {
        std::string what =
            "pool exhausted while carving block " + std::to_string(blocks.size());
        throw GroupingShortfall(make_partial(std::move(blocks), n, k),
                                "pool-exhausted", what);
      }
      block.push_back(pool[idx]);
      state = step(state, pool[idx], cap);
      ++idx;
    }
    pool.erase(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(idx));
    max_state = step(max_state, block.back(), cap);
    blocks.push_back(FinSet(std::move(block)));
    if (max_state.is_zero()) break;

    // Refine the pool so every element of the new block sees one constant
    // color toward everything that comes later (constancy toward earlier
    // blocks is inherited: each refinement keeps a subset). The whole block
    // must settle on the same color or grouping condition 4 cannot hold.
    const FinSet& carved = blocks.back();
    bool have_block_color = false;
    std::uint32_t block_color = 0;
    for (std::uint64_t anchor : carved) {
      bool kept = false;
      for (std::uint32_t color = 0; color < p.color_count(); ++color) {
        std::vector<std::uint64_t> cls;
        for (std::uint64_t v : pool)
          if (p.color_at(anchor, v) == color) cls.push_back(v);
        if (!demand_large(cls, n, 1, cap)) continue;
        if (have_block_color && color != block_color)
          throw GroupingShortfall(
              make_partial(std::move(blocks), n, k), "block-color-divergence",
              "no single color works for the whole carved block");
        pool = std::move(cls);
        if (!have_block_color) {
          have_block_color = true;
          block_color = color;
        }
        kept = true;
        break;
      }
      if (!kept)
        throw GroupingShortfall(
            make_partial(std::move(blocks), n, k), "stabilization",
            "no color class toward " + std::to_string(anchor) +
                " stays w^" + std::to_string(n) + "-large");
    }
  }

  Grouping g = make_partial(std::move(blocks), n, k);
  if (!verify_grouping(g, p).empty())
    throw VerificationFailed("constructed grouping failed verification");
  return g;
}

// ---------------------------------------------------------------------------
// em_witness
// ---------------------------------------------------------------------------

FinSet em_witness(const FinSet& x, const PairColoring& p, std::uint32_t n,
                  const BaseStrategy& base, std::uint64_t cap) {
  if (n == 0) throw PreconditionError("em witness needs n >= 1");
  if (x.empty()) throw PreconditionError("empty input set");
  if (p.color_count() >= x.min())
    throw PreconditionError("coloring must use fewer than min X colors");

  BaseStrategy strategy = base;
  if (!strategy)
    strategy = [cap](const FinSet& s, const PairColoring& c) {
      return fallow_base_witness(s, c, /*strict=*/true, cap);
    };

  if (n == 1) {
    FinSet h = strategy(x, p);
    if (!h.subset_of(x) || !is_fallow(p, h) ||
        !is_alpha_large(h, Ordinal::omega_power(1), cap))
      throw VerificationFailed("base strategy output failed verification");
    return h;
  }

  Grouping g = build_grouping(x, p, n - 1, 1, cap);

  std::vector<std::uint64_t> maxima;
  maxima.reserve(g.blocks.size());
  for (const FinSet& b : g.blocks) maxima.push_back(b.max());
  FinSet max_set(std::move(maxima));

  FinSet selected_maxima = strategy(max_set, p);
  if (!selected_maxima.subset_of(max_set) || !is_fallow(p, selected_maxima) ||
      !is_alpha_large(selected_maxima, Ordinal::omega_power(1), cap))
    throw VerificationFailed("max-set selection failed verification");

  std::vector<FinSet> parts;
  for (const FinSet& b : g.blocks)
    if (selected_maxima.contains(b.max()))
      parts.push_back(em_witness(b, p, n - 1, strategy, cap));

  std::vector<std::uint64_t> elems;
  elems.push_back(parts.front().max());
  for (std::size_t j = 1; j < parts.size(); ++j)
    for (std::uint64_t v : parts[j]) elems.push_back(v);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  FinSet h(std::move(elems));

  if (!is_fallow(p, h) || !is_alpha_large(h, Ordinal::omega_power(n), cap))
    throw VerificationFailed("assembled witness failed verification");
  return h;
}

}  // namespace emlab
