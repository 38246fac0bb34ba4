#include "emlab/limitmin.hpp"

#include "emlab/errors.hpp"

namespace emlab {

void ValueTable::validate(std::uint64_t value_cap) const {
  if (u == 0 || horizon == 0)
    throw PreconditionError("value table needs u >= 1 and horizon >= 1");
  if (rows.size() != u) throw PreconditionError("value table row count != u");
  for (const auto& row : rows) {
    if (row.size() != horizon)
      throw PreconditionError("value table row length != horizon");
    for (std::uint64_t v : row)
      if (v > value_cap) throw ResourceLimit("table value exceeds cap");
  }
}

std::vector<std::uint64_t> qmin(const ValueTable& h, std::uint32_t a,
                                std::uint32_t b) {
  if (!(a < b && b <= h.horizon))
    throw WindowOutOfRange("qmin window must satisfy a < b <= horizon");
  std::vector<std::uint64_t> q(h.u);
  for (std::uint32_t x = 0; x < h.u; ++x) {
    std::uint64_t m = h.rows[x][a];
    for (std::uint32_t z = a + 1; z < b; ++z) m = std::min(m, h.rows[x][z]);
    q[x] = m;
  }
  return q;
}

namespace {

// Largest maximizer of q_{a,b}; ties resolve upward by construction.
std::uint32_t argmax_window(const ValueTable& h, std::uint32_t a,
                            std::uint32_t b) {
  std::uint32_t best = 0;
  std::uint64_t best_q = 0;
  for (std::uint32_t x = 0; x < h.u; ++x) {
    std::uint64_t m = h.rows[x][a];
    for (std::uint32_t z = a + 1; z < b; ++z) m = std::min(m, h.rows[x][z]);
    if (x == 0 || m >= best_q) {
      best_q = m;
      best = x;
    }
  }
  return best;
}

}  // namespace

PairColoring argmax_coloring(const ValueTable& h) {
  h.validate();
  FinSet ground = FinSet::interval(0, h.horizon);
  PairColoring f(std::move(ground), h.u);
  for (std::uint32_t b = 1; b <= h.horizon; ++b)
    for (std::uint32_t a = 0; a < b; ++a)
      f.set_color_by_index(a, b, argmax_window(h, a, b));
  return f;
}

std::vector<Triple> fallow_scan(const ValueTable& h) {
  PairColoring f = argmax_coloring(h);
  std::vector<Triple> out;
  for (std::uint32_t a = 0; a + 2 <= h.horizon; ++a)
    for (std::uint32_t b = a + 1; b + 1 <= h.horizon; ++b) {
      std::uint32_t fab = f.color_by_index(a, b);
      for (std::uint32_t c = b + 1; c <= h.horizon; ++c) {
        std::uint32_t fac = f.color_by_index(a, c);
        if (fac != fab && fac != f.color_by_index(b, c))
          out.push_back(Triple{a, b, c});
      }
    }
  return out;
}

StabilityScan stability_scan(const ValueTable& h, std::uint32_t a) {
  h.validate();
  if (a + 1 >= h.horizon)
    throw PreconditionError("stability scan requires a < horizon - 1");
  PairColoring f = argmax_coloring(h);
  std::uint32_t last = f.color_by_index(a, h.horizon);
  std::uint32_t d = h.horizon;
  for (std::uint32_t b = h.horizon; b > a; --b) {
    if (f.color_by_index(a, b) != last) break;
    d = b;
  }
  StabilityScan out;
  if (d < h.horizon) {
    out.stable = true;
    out.witness = d;
  }
  return out;
}

void ThetaTable::validate() const {
  if (a_bound == 0 || b_bound == 0 || y_bound == 0 || z_bound == 0)
    throw PreconditionError("theta table bounds must be positive");
  std::size_t want = static_cast<std::size_t>(a_bound) * b_bound * y_bound *
                     z_bound;
  if (values.size() != want)
    throw PreconditionError("theta table has wrong number of entries");
}

RTrajectory r_trajectory(const ThetaTable& theta, std::uint32_t a) {
  theta.validate();
  if (a >= theta.a_bound) throw BoxTooSmall("row a outside the theta box");
  if (theta.z_bound < 2)
    throw BoxTooSmall("z range too short for any r value");
  if (theta.y_bound < theta.z_bound)
    throw BoxTooSmall("y range must cover candidates up to z");
  if (theta.b_bound + 1 < theta.z_bound)
    throw BoxTooSmall("b range must cover searches up to z");

  RTrajectory out;
  out.q.assign(theta.b_bound,
               std::vector<std::uint64_t>(theta.z_bound, 0));
  for (std::uint32_t b = 0; b < theta.b_bound; ++b)
    for (std::uint32_t z = 0; z < theta.z_bound; ++z) {
      std::uint64_t qv = z;  // fallback when no y qualifies
      for (std::uint32_t y = 0; y <= z; ++y) {
        bool ok = true;
        for (std::uint32_t b1 = 0; ok && b1 <= b; ++b1) {
          bool exists = false;
          for (std::uint32_t y1 = 0; !exists && y1 <= y; ++y1) {
            bool allfalse = true;
            for (std::uint32_t z1 = 0; allfalse && z1 <= z; ++z1)
              if (theta.at(a, b1, y1, z1)) allfalse = false;
            exists = allfalse;
          }
          ok = exists;
        }
        if (ok) {
          qv = y;
          break;
        }
      }
      out.q[b][z] = qv;
    }

  out.r.assign(theta.z_bound - 1, 0);
  for (std::uint32_t z = 0; z + 1 < theta.z_bound; ++z) {
    std::uint64_t rv = z;  // fallback when q never increases at z
    for (std::uint32_t b = 0; b <= z; ++b) {
      if (out.q[b][z] < out.q[b][z + 1]) {
        rv = b;
        break;
      }
    }
    out.r[z] = rv;
  }
  return out;
}

}  // namespace emlab
