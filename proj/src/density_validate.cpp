// Independent re-checker for false-verdict evidence. Everything here is
// written directly from the definitional clauses with its own enumeration
// style (odometers and bitmask sweeps) so it shares no machinery with the
// searchers in density.cpp.

#include <utility>
#include <vector>

#include "emlab/density.hpp"
#include "emlab/json_io.hpp"

namespace emlab {

using nlohmann::json;

namespace {

using Terms = std::vector<std::pair<std::uint64_t, std::uint64_t>>;  // (exp, coeff)

Terms terms_of(const Ordinal& a) {
  Terms t;
  for (const OrdinalTerm& x : a.terms()) t.push_back({x.exponent, x.coefficient});
  return t;
}

void naive_step(Terms& t, std::uint64_t m) {
  if (t.empty()) return;
  auto [exp, coeff] = t.back();
  t.pop_back();
  if (coeff > 1) t.push_back({exp, coeff - 1});
  if (exp >= 1 && m > 0) t.push_back({exp - 1, m});
}

bool naive_large(const std::vector<std::uint64_t>& elems, Terms alpha) {
  for (std::uint64_t v : elems) {
    if (alpha.empty()) return true;
    naive_step(alpha, v);
  }
  return alpha.empty();
}

bool naive_omega_large(const std::vector<std::uint64_t>& elems) {
  return naive_large(elems, Terms{{1, 1}});
}

struct Cx {
  std::vector<std::uint64_t> ground;
  std::vector<std::vector<std::uint32_t>> color;  // full square matrix by index

  std::uint32_t at(std::uint64_t x, std::uint64_t y) const {
    std::size_t i = idx(x), j = idx(y);
    return color[i][j];
  }
  std::size_t idx(std::uint64_t v) const {
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (ground[i] == v) return i;
    throw NotSubset("element outside evidence coloring ground");
  }
};

Cx coloring_from_evidence(const json& j) {
  PairColoring pc = coloring_from_json(j);
  Cx c;
  c.ground = pc.ground().elements();
  std::size_t n = c.ground.size();
  c.color.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = i + 1; jj < n; ++jj) {
      c.color[i][jj] = pc.color_by_index(i, jj);
      c.color[jj][i] = c.color[i][jj];
    }
  return c;
}

bool naive_fallow(const Cx& c, const std::vector<std::uint64_t>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      for (std::size_t d = b + 1; d < s.size(); ++d) {
        std::uint32_t xz = c.at(s[a], s[d]);
        if (xz != c.at(s[a], s[b]) && xz != c.at(s[b], s[d])) return false;
      }
  return true;
}

bool naive_dense(const std::vector<std::uint64_t>& elems, std::uint64_t m,
                 EllBound ell_bound);

// All consecutive partitions by recursive first-block choice.
bool every_partition_has_dense_block(const std::vector<std::uint64_t>& elems,
                                     std::uint64_t m, EllBound ell_bound) {
  struct Walk {
    const std::vector<std::uint64_t>& e;
    std::uint64_t m;
    EllBound bound;
    bool ok = true;
    std::vector<std::vector<std::uint64_t>> blocks;

    void go(std::size_t from) {
      if (!ok) return;
      if (from == e.size()) {
        std::uint64_t limit = bound == EllBound::block_min
                                  ? blocks.front().front()
                                  : blocks.front().size();
        if (blocks.size() > limit) return;  // not a valid partition
        for (const auto& b : blocks)
          if (naive_dense(b, m, bound)) return;
        ok = false;
        return;
      }
      for (std::size_t to = from + 1; to <= e.size() && ok; ++to) {
        blocks.emplace_back(e.begin() + from, e.begin() + to);
        go(to);
        blocks.pop_back();
      }
    }
  };
  Walk w{elems, m, ell_bound};
  w.go(0);
  return w.ok;
}

bool every_coloring_has_dense_fallow_subset(
    const std::vector<std::uint64_t>& elems, std::uint64_t m,
    EllBound ell_bound) {
  std::uint64_t k = elems.front();
  if (k == 0) return true;
  std::size_t n = elems.size();
  if (n > 25) throw ResourceLimit("evidence ground too large to re-check");

  Cx c;
  c.ground = elems;
  c.color.assign(n, std::vector<std::uint32_t>(n, 0));
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.push_back({i, j});

  // Odometer over all colorings.
  std::vector<std::uint32_t> digits(slots.size(), 0);
  while (true) {
    for (std::size_t t = 0; t < slots.size(); ++t) {
      c.color[slots[t].first][slots[t].second] = digits[t];
      c.color[slots[t].second][slots[t].first] = digits[t];
    }
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !found;
         ++mask) {
      std::vector<std::uint64_t> sub;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) sub.push_back(elems[i]);
      if (naive_fallow(c, sub) && naive_dense(sub, m, ell_bound)) found = true;
    }
    if (!found) return false;

    std::size_t t = 0;
    while (t < digits.size() && ++digits[t] == k) digits[t++] = 0;
    if (t == digits.size()) break;
  }
  return true;
}

bool naive_dense(const std::vector<std::uint64_t>& elems, std::uint64_t m,
                 EllBound ell_bound) {
  if (elems.empty()) return false;
  if (m == 0) return elems.front() > 3 && naive_omega_large(elems);
  if (!every_partition_has_dense_block(elems, m - 1, ell_bound)) return false;
  return every_coloring_has_dense_fallow_subset(elems, m - 1, ell_bound);
}

bool partition_covers(const std::vector<std::vector<std::uint64_t>>& blocks,
                      const std::vector<std::uint64_t>& elems) {
  std::vector<std::uint64_t> flat;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (std::uint64_t v : b) flat.push_back(v);
  }
  if (flat != elems) return false;  // consecutive cover in order
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i].back() >= blocks[i + 1].front()) return false;
  return true;
}

}  // namespace

bool validate_evidence(const Certificate& cert) {
  if (cert.verdict != Verdict::no) return false;
  const std::vector<std::uint64_t>& elems = cert.subject.elements();
  if (elems.size() > 25)
    throw ResourceLimit("evidence subject too large to re-check");

  if (cert.kind == "em-m-dense") {
    std::uint64_t m = std::stoull(cert.parameter);
    if (m == 0) {
      // The definitional clauses at level 0, re-derived from scratch.
      return !(!elems.empty() && elems.front() > 3 &&
               naive_omega_large(elems));
    }
    if (cert.evidence.is_null()) return false;
    int clause = cert.evidence.value("clause", 0);
    if (clause == 2) {
      std::vector<std::vector<std::uint64_t>> blocks;
      for (const auto& b : cert.evidence.at("partition"))
        blocks.push_back(finset_from_json(b).elements());
      if (!partition_covers(blocks, elems)) return false;
      std::uint64_t limit = cert.ell_bound == EllBound::block_min
                                ? blocks.front().front()
                                : blocks.front().size();
      if (blocks.size() > limit) return false;
      for (const auto& b : blocks)
        if (naive_dense(b, m - 1, cert.ell_bound)) return false;
      return true;
    }
    if (clause == 1) {
      Cx c = coloring_from_evidence(cert.evidence.at("coloring"));
      if (c.ground != elems) return false;
      std::size_t n = elems.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::uint64_t> sub;
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1) sub.push_back(elems[i]);
        if (naive_fallow(c, sub) && naive_dense(sub, m - 1, cert.ell_bound))
          return false;  // the coloring has a dense fallow subset after all
      }
      return true;
    }
    return false;
  }

  if (cert.kind == "em-alpha-large") {
    if (cert.evidence.is_null()) return false;
    Cx c = coloring_from_evidence(cert.evidence.at("coloring"));
    if (c.ground != elems) return false;
    Terms alpha = terms_of(parse_ordinal(cert.parameter));
    std::size_t n = elems.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::uint64_t> sub;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) sub.push_back(elems[i]);
      if (naive_fallow(c, sub) && naive_large(sub, alpha)) return false;
    }
    return true;
  }

  return false;
}

}  // namespace emlab
