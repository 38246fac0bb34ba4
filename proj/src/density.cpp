#include "emlab/density.hpp"

#include <map>

#include "emlab/json_io.hpp"
#include "emlab/largeness.hpp"

namespace emlab {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    default: return "unknown";
  }
}

std::string to_string(Mode m) {
  return m == Mode::exact ? "exact" : "randomized";
}

namespace {

// k^pairs without overflow; nullopt once it exceeds limit.
std::optional<std::uint64_t> space_size(std::uint64_t k, std::size_t pairs,
                                        std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (total > limit / k) return std::nullopt;
    total *= k;
  }
  return total;
}

// Writes the mixed-radix digits of rank into the coloring (pair t gets digit
// t); this fixed order is the resumption-token contract.
void decode_rank(PairColoring& c, std::uint64_t rank) {
  std::size_t n = c.ground().size();
  std::uint64_t k = c.color_count();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      c.set_color_by_index(i, j, static_cast<std::uint32_t>(rank % k));
      rank /= k;
    }
}

void sample_coloring(PairColoring& c, SplitMix& rng) {
  std::size_t n = c.ground().size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      c.set_color_by_index(i, j,
                           static_cast<std::uint32_t>(rng.below(c.color_count())));
}

// Backtracking subset search: elements joined in descending order, so each
// new element is the minimum and fallowness violations localize at it. Goal
// is an arbitrary predicate on the (ascending) chosen values.
class SubsetSearcher {
 public:
  SubsetSearcher(const PairColoring& c,
                 std::function<bool(const std::vector<std::uint64_t>&)> goal)
      : c_(c), goal_(std::move(goal)) {}

  bool search() {
    chosen_.clear();
    if (goal_(chosen_)) return true;
    return dfs(static_cast<std::ptrdiff_t>(c_.ground().size()) - 1);
  }

 private:
  bool dfs(std::ptrdiff_t idx) {
    if (idx < 0) return false;
    std::uint64_t x = c_.ground()[static_cast<std::size_t>(idx)];
    if (fallow_with(x)) {
      chosen_.insert(chosen_.begin(), x);
      if (goal_(chosen_) || dfs(idx - 1)) return true;
      chosen_.erase(chosen_.begin());
    }
    return dfs(idx - 1);
  }

  bool fallow_with(std::uint64_t x) const {
    for (std::size_t a = 0; a < chosen_.size(); ++a)
      for (std::size_t b = a + 1; b < chosen_.size(); ++b) {
        std::uint32_t cxz = c_.color_at(x, chosen_[b]);
        if (cxz != c_.color_at(x, chosen_[a]) &&
            cxz != c_.color_at(chosen_[a], chosen_[b]))
          return false;
      }
    return true;
  }

  const PairColoring& c_;
  std::function<bool(const std::vector<std::uint64_t>&)> goal_;
  std::vector<std::uint64_t> chosen_;
};

// Consecutive-block partitions of x; mask bit i cuts after element i.
// Visit returns true to stop early.
template <typename Visit>
void for_each_partition(const FinSet& x, EllBound bound, Visit visit) {
  std::size_t n = x.size();
  if (n == 0) return;
  std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<FinSet> blocks;
    std::vector<std::uint64_t> cur;
    for (std::size_t i = 0; i < n; ++i) {
      cur.push_back(x[i]);
      if (i + 1 == n || (mask >> i) & 1) {
        blocks.push_back(FinSet(std::move(cur)));
        cur.clear();
      }
    }
    std::uint64_t ell = blocks.size();
    std::uint64_t limit = bound == EllBound::block_min ? blocks[0].min()
                                                       : blocks[0].size();
    if (ell > limit) continue;
    if (visit(blocks)) return;
  }
}

struct DenseContext {
  const RunConfig& cfg;
  std::map<std::pair<std::uint64_t, std::vector<std::uint64_t>>, bool> memo;
};

bool dense_exact(DenseContext& ctx, const FinSet& x, std::uint64_t m);

// Clause 2: some block of every valid partition must be dense at level m-1.
std::optional<std::vector<FinSet>> failing_partition(DenseContext& ctx,
                                                     const FinSet& x,
                                                     std::uint64_t m) {
  if (x.size() >= 40) throw BudgetExceeded("partition space too large");
  std::optional<std::vector<FinSet>> found;
  for_each_partition(x, ctx.cfg.ell_bound,
                     [&](const std::vector<FinSet>& blocks) {
                       for (const FinSet& b : blocks)
                         if (dense_exact(ctx, b, m - 1)) return false;
                       found = blocks;
                       return true;
                     });
  return found;
}

// Clause 1: every coloring must be fallow on some dense subset. Returns the
// rank of the first coloring without one.
std::optional<std::uint64_t> failing_coloring(DenseContext& ctx,
                                              const FinSet& x, std::uint64_t m,
                                              std::uint64_t rank_lo,
                                              std::uint64_t rank_hi) {
  std::uint64_t k = x.min();
  if (k == 0) return std::nullopt;  // no colorings into an empty codomain
  PairColoring c(x, static_cast<std::uint32_t>(k));
  for (std::uint64_t rank = rank_lo; rank < rank_hi; ++rank) {
    decode_rank(c, rank);
    SubsetSearcher searcher(c, [&](const std::vector<std::uint64_t>& chosen) {
      return dense_exact(ctx, FinSet(chosen), m - 1);
    });
    if (!searcher.search()) return rank;
  }
  return std::nullopt;
}

bool dense_exact(DenseContext& ctx, const FinSet& x, std::uint64_t m) {
  if (m == 0)
    return !x.empty() && x.min() > 3 &&
           is_alpha_large(x, Ordinal::omega_power(1), ctx.cfg.ordinal_cap);
  auto key = std::make_pair(m, x.elements());
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;

  bool result = true;
  if (failing_partition(ctx, x, m).has_value()) {
    result = false;
  } else if (x.empty()) {
    result = false;
  } else if (x.min() > 0) {
    std::uint64_t k = x.min();
    std::size_t pairs = x.size() * (x.size() - 1) / 2;
    auto total = space_size(k, pairs, ctx.cfg.enumeration_budget);
    if (!total) throw BudgetExceeded("coloring space exceeds budget");
    result = !failing_coloring(ctx, x, m, 0, *total).has_value();
  }
  ctx.memo[key] = result;
  return result;
}

}  // namespace

Certificate check_em_alpha_large(const FinSet& x, const Ordinal& alpha,
                                 Mode mode, const RunConfig& cfg) {
  cfg.validate();
  if (x.empty() || x.min() <= 3)
    throw PreconditionError("EM-largeness checking requires min X > 3");

  Certificate cert;
  cert.subject = x;
  cert.kind = "em-alpha-large";
  cert.parameter = format_ordinal(alpha);
  cert.mode = mode;
  cert.seed = cfg.seed;
  cert.ell_bound = cfg.ell_bound;

  if (alpha.is_zero()) {
    // The empty subset is 0-large and vacuously fallow under any coloring.
    cert.verdict = Verdict::yes;
    return cert;
  }

  std::uint64_t k = x.min();
  PairColoring c(x, static_cast<std::uint32_t>(k));
  auto fallow_large = [&](const std::vector<std::uint64_t>& chosen) {
    return is_alpha_large(FinSet(chosen), alpha, cfg.ordinal_cap);
  };

  if (mode == Mode::exact) {
    std::size_t pairs = x.size() * (x.size() - 1) / 2;
    auto total = space_size(k, pairs, cfg.enumeration_budget);
    if (!total)
      throw BudgetExceeded("exact mode needs (min X)^C(|X|,2) within budget");
    std::uint64_t lo = *total * cfg.shard_index / cfg.shard_count;
    std::uint64_t hi = *total * (cfg.shard_index + 1) / cfg.shard_count;
    cert.rank_lo = lo;
    cert.rank_hi = hi;
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      decode_rank(c, rank);
      SubsetSearcher searcher(c, fallow_large);
      if (!searcher.search()) {
        cert.verdict = Verdict::no;
        cert.evidence = json{{"clause", 1},
                             {"rank", rank},
                             {"coloring", coloring_to_json(c)}};
        return cert;
      }
    }
    cert.verdict =
        cfg.shard_count == 1 ? Verdict::yes : Verdict::unknown;
    return cert;
  }

  SplitMix rng(mix64(cfg.seed));
  cert.samples = cfg.samples;
  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    sample_coloring(c, rng);
    SubsetSearcher searcher(c, fallow_large);
    if (!searcher.search()) {
      cert.verdict = Verdict::no;
      cert.evidence = json{{"clause", 1},
                           {"sample", s},
                           {"coloring", coloring_to_json(c)}};
      return cert;
    }
  }
  cert.verdict = Verdict::unknown;
  return cert;
}

Certificate check_em_dense(const FinSet& x, std::uint64_t m, Mode mode,
                           const RunConfig& cfg) {
  cfg.validate();
  Certificate cert;
  cert.subject = x;
  cert.kind = "em-m-dense";
  cert.parameter = std::to_string(m);
  cert.mode = mode;
  cert.seed = cfg.seed;
  cert.ell_bound = cfg.ell_bound;

  if (m == 0) {
    bool omega_large =
        is_alpha_large(x, Ordinal::omega_power(1), cfg.ordinal_cap);
    bool min_ok = !x.empty() && x.min() > 3;
    cert.verdict = omega_large && min_ok ? Verdict::yes : Verdict::no;
    if (cert.verdict == Verdict::no)
      cert.evidence = json{{"omega_large", omega_large}, {"min_ok", min_ok}};
    return cert;
  }

  if (x.empty()) {
    cert.verdict = Verdict::no;
    cert.evidence = json{{"reason", "empty set"}};
    return cert;
  }

  DenseContext ctx{cfg, {}};

  auto bad_partition = failing_partition(ctx, x, m);
  if (bad_partition) {
    json blocks = json::array();
    for (const FinSet& b : *bad_partition) blocks.push_back(finset_to_json(b));
    cert.verdict = Verdict::no;
    cert.evidence = json{{"clause", 2}, {"partition", blocks}};
    return cert;
  }

  std::uint64_t k = x.min();
  std::size_t pairs = x.size() * (x.size() - 1) / 2;
  if (k == 0) {
    cert.verdict = Verdict::yes;  // clause 2 passed; clause 1 is vacuous
    return cert;
  }

  if (mode == Mode::exact) {
    auto total = space_size(k, pairs, cfg.enumeration_budget);
    if (!total)
      throw BudgetExceeded("exact mode needs (min X)^C(|X|,2) within budget");
    std::uint64_t lo = *total * cfg.shard_index / cfg.shard_count;
    std::uint64_t hi = *total * (cfg.shard_index + 1) / cfg.shard_count;
    cert.rank_lo = lo;
    cert.rank_hi = hi;
    auto bad = failing_coloring(ctx, x, m, lo, hi);
    if (bad) {
      PairColoring c(x, static_cast<std::uint32_t>(k));
      decode_rank(c, *bad);
      cert.verdict = Verdict::no;
      cert.evidence = json{{"clause", 1},
                           {"rank", *bad},
                           {"coloring", coloring_to_json(c)}};
      return cert;
    }
    cert.verdict = cfg.shard_count == 1 ? Verdict::yes : Verdict::unknown;
    return cert;
  }

  SplitMix rng(mix64(cfg.seed));
  cert.samples = cfg.samples;
  PairColoring c(x, static_cast<std::uint32_t>(k));
  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    sample_coloring(c, rng);
    SubsetSearcher searcher(c, [&](const std::vector<std::uint64_t>& chosen) {
      return dense_exact(ctx, FinSet(chosen), m - 1);
    });
    if (!searcher.search()) {
      cert.verdict = Verdict::no;
      cert.evidence = json{{"clause", 1},
                           {"sample", s},
                           {"coloring", coloring_to_json(c)}};
      return cert;
    }
  }
  cert.verdict = Verdict::unknown;
  return cert;
}

RefuteOutcome refute_density(const FinSet& x, std::uint64_t m,
                             const RunConfig& cfg) {
  cfg.validate();
  if (m == 0) throw PreconditionError("refutation needs m >= 1");
  RefuteOutcome out;
  if (x.empty()) return out;

  DenseContext ctx{cfg, {}};

  // Clause 2 first: partitions enumerate exactly even when colorings do not.
  std::optional<std::vector<FinSet>> bad;
  for_each_partition(x, cfg.ell_bound, [&](const std::vector<FinSet>& blocks) {
    ++out.partitions_checked;
    for (const FinSet& b : blocks)
      if (dense_exact(ctx, b, m - 1)) return false;
    bad = blocks;
    return true;
  });
  if (bad) {
    json blocks = json::array();
    for (const FinSet& b : *bad) blocks.push_back(finset_to_json(b));
    out.found = true;
    out.counterexample = json{{"clause", 2}, {"partition", blocks}};
    return out;
  }

  std::uint64_t k = x.min();
  if (k == 0) return out;
  SplitMix rng(mix64(cfg.seed));
  PairColoring c(x, static_cast<std::uint32_t>(k));
  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    ++out.colorings_sampled;
    sample_coloring(c, rng);
    SubsetSearcher searcher(c, [&](const std::vector<std::uint64_t>& chosen) {
      return dense_exact(ctx, FinSet(chosen), m - 1);
    });
    if (!searcher.search()) {
      out.found = true;
      out.counterexample = json{{"clause", 1},
                                {"sample", s},
                                {"coloring", coloring_to_json(c)}};
      return out;
    }
  }
  return out;
}

}  // namespace emlab
