#include "emlab/coloring.hpp"

#include "emlab/errors.hpp"

namespace emlab {

namespace {

inline std::size_t pair_rank(std::size_t i, std::size_t j) {
  // i < j
  return j * (j - 1) / 2 + i;
}

}  // namespace

PairColoring::PairColoring(FinSet ground, std::uint32_t color_count)
    : ground_(std::move(ground)), color_count_(color_count) {
  if (color_count_ == 0)
    throw PreconditionError("color count must be positive");
  std::size_t n = ground_.size();
  dense_.assign(n * (n - 1) / 2, 0);
}

PairColoring PairColoring::constant(FinSet ground, std::uint32_t color_count,
                                    std::uint32_t color) {
  if (color >= color_count) throw ColorOutOfRange("constant color too large");
  PairColoring c(std::move(ground), color_count);
  std::fill(c.dense_.begin(), c.dense_.end(), color);
  return c;
}

PairColoring PairColoring::from_function(FinSet ground,
                                         std::uint32_t color_count,
                                         ColorFn fn) {
  PairColoring c(std::move(ground), color_count);
  c.dense_.clear();
  c.dense_.shrink_to_fit();
  c.fn_ = std::move(fn);
  return c;
}

PairColoring PairColoring::from_dense(FinSet ground, std::uint32_t color_count,
                                      std::vector<std::uint32_t> colors) {
  std::size_t n = ground.size();
  if (colors.size() != n * (n - 1) / 2)
    throw PreconditionError("dense color array has wrong length");
  for (std::uint32_t v : colors)
    if (v >= color_count) throw ColorOutOfRange("pair color out of range");
  PairColoring c(std::move(ground), color_count);
  c.dense_ = std::move(colors);
  return c;
}

std::size_t PairColoring::pair_count() const {
  std::size_t n = ground_.size();
  return n * (n - 1) / 2;
}

std::uint32_t PairColoring::color_by_index(std::size_t i, std::size_t j) const {
  if (fn_) return fn_(ground_[i], ground_[j]);
  return dense_[pair_rank(i, j)];
}

std::uint32_t PairColoring::color_at(std::uint64_t x, std::uint64_t y) const {
  if (x > y) std::swap(x, y);
  if (x == y) throw PreconditionError("pair requires two distinct elements");
  if (fn_) {
    if (!ground_.contains(x) || !ground_.contains(y))
      throw NotSubset("pair endpoint outside ground");
    return fn_(x, y);
  }
  return dense_[pair_rank(ground_.index_of(x), ground_.index_of(y))];
}

void PairColoring::set_color_by_index(std::size_t i, std::size_t j,
                                      std::uint32_t c) {
  if (fn_) throw PreconditionError("cannot mutate a function-backed coloring");
  if (c >= color_count_) throw ColorOutOfRange("pair color out of range");
  dense_[pair_rank(i, j)] = c;
}

namespace {

// Shared triple scanner; Pred decides whether (cxy, cyz, cxz) violates.
template <typename Pred>
std::optional<Triple> first_violation(const PairColoring& c, const FinSet& s,
                                      Pred bad) {
  if (!s.subset_of(c.ground()))
    throw NotSubset("subset not contained in coloring ground");
  const auto& e = s.elements();
  std::size_t n = e.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::uint32_t cxy = c.color_at(e[a], e[b]);
      for (std::size_t d = b + 1; d < n; ++d) {
        std::uint32_t cyz = c.color_at(e[b], e[d]);
        std::uint32_t cxz = c.color_at(e[a], e[d]);
        if (bad(cxy, cyz, cxz)) return Triple{e[a], e[b], e[d]};
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<Triple> fallow_violation(const PairColoring& c, const FinSet& s) {
  return first_violation(c, s, [](std::uint32_t cxy, std::uint32_t cyz,
                                  std::uint32_t cxz) {
    return cxz != cxy && cxz != cyz;
  });
}

std::optional<Triple> transitive_violation(const PairColoring& c,
                                           const FinSet& s) {
  return first_violation(c, s, [](std::uint32_t cxy, std::uint32_t cyz,
                                  std::uint32_t cxz) {
    return cxy == cyz && cxz != cxy;
  });
}

PairColoring encode_family(std::span<const PairColoring> family) {
  if (family.empty()) throw PreconditionError("empty coloring family");
  if (family.size() > 30)
    throw ResourceLimit("family too large to bit-encode");
  const FinSet& ground = family[0].ground();
  for (const PairColoring& m : family) {
    if (m.ground() != ground)
      throw GroundMismatch("family members disagree on ground");
    if (m.color_count() != 2)
      throw PreconditionError("family members must be 2-colorings");
  }
  std::uint32_t k = 1u << family.size();
  PairColoring out(ground, k);
  std::size_t n = ground.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      std::uint32_t v = 0;
      for (std::size_t bit = 0; bit < family.size(); ++bit)
        v |= family[bit].color_by_index(i, j) << bit;
      out.set_color_by_index(i, j, v);
    }
  return out;
}

PairColoring indicator(const PairColoring& c, std::uint32_t i) {
  if (i >= c.color_count()) throw ColorOutOfRange("indicator color too large");
  if (!c.is_dense()) {
    // Keep function-backed colorings lazy; copying the base is cheap.
    PairColoring base = c;
    return PairColoring::from_function(
        c.ground(), 2, [base = std::move(base), i](std::uint64_t x,
                                                   std::uint64_t y) {
          return base.color_at(x, y) == i ? 1u : 0u;
        });
  }
  PairColoring out(c.ground(), 2);
  std::size_t n = c.ground().size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t a = 0; a < j; ++a)
      out.set_color_by_index(a, j, c.color_by_index(a, j) == i ? 1u : 0u);
  return out;
}

std::vector<StabilityRow> stability_profile(const PairColoring& c,
                                            std::uint64_t horizon) {
  const FinSet& g = c.ground();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != i)
      throw PreconditionError("stability profile needs an initial segment");
  if (g.empty() || horizon > g.max())
    throw PreconditionError("horizon must be at most max ground");

  std::vector<StabilityRow> rows;
  for (std::uint64_t x = 0; x < horizon; ++x) {
    StabilityRow row;
    row.x = x;
    // Tail values c(x, n), n = x+1 .. horizon.
    std::uint32_t last = c.color_at(x, horizon);
    std::uint64_t m = horizon;
    for (std::uint64_t n = horizon; n > x; --n) {
      if (c.color_at(x, n) != last) break;
      m = n;
    }
    // Constant only from the horizon onward is not stability (unless the
    // tail is that single point, i.e. the whole tail from x+1).
    if (m < horizon || m == x + 1) {
      row.stable = true;
      row.witness = m;
      row.limit_color = last;
    }
    rows.push_back(row);
  }
  return rows;
}

int triple_value(const PairColoring& c, std::uint64_t x, std::uint64_t y,
                 std::uint64_t z) {
  if (!(x < y && y < z))
    throw PreconditionError("triple must be strictly increasing");
  std::uint32_t cxy = c.color_at(x, y);
  std::uint32_t cyz = c.color_at(y, z);
  if (cxy != cyz) return 1;
  return c.color_at(x, z) == cxy ? 1 : 0;
}

std::optional<std::array<std::uint64_t, 4>> homogeneous_zero_4set(
    const PairColoring& c) {
  const auto& e = c.ground().elements();
  std::size_t n = e.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t d = b + 1; d < n; ++d)
        for (std::size_t f = d + 1; f < n; ++f) {
          if (triple_value(c, e[a], e[b], e[d]) == 0 &&
              triple_value(c, e[a], e[b], e[f]) == 0 &&
              triple_value(c, e[a], e[d], e[f]) == 0 &&
              triple_value(c, e[b], e[d], e[f]) == 0)
            return std::array<std::uint64_t, 4>{e[a], e[b], e[d], e[f]};
        }
  return std::nullopt;
}

}  // namespace emlab
