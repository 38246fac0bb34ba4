#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "emlab/coloring.hpp"
#include "emlab/config.hpp"

namespace emlab {

// h(x, z) for x < u, z < horizon; a finite-horizon window into the §2-style
// function the argmax coloring is built from.
struct ValueTable {
  std::uint32_t u = 0;
  std::uint32_t horizon = 0;
  std::vector<std::vector<std::uint64_t>> rows;  // rows[x][z]

  void validate(std::uint64_t value_cap = kDefaultValueCap) const;
};

// Componentwise minimum of h over the window [a, b); a < b <= horizon.
std::vector<std::uint64_t> qmin(const ValueTable& h, std::uint32_t a,
                                std::uint32_t b);

// f(a,b) = largest x maximizing q_{a,b}; a coloring of pairs from the ground
// {0, ..., horizon} with u colors (the window [a,b) uses exactly the table's
// columns).
PairColoring argmax_coloring(const ValueTable& h);

// All triples a<b<c with f(a,c) not in {f(a,b), f(b,c)}; empty means the
// argmax coloring is fallow at this horizon.
std::vector<Triple> fallow_scan(const ValueTable& h);

struct StabilityScan {
  bool stable = false;
  std::optional<std::uint32_t> witness;  // least D with f(a,.) frozen on [D, horizon]
};

// Finite-horizon shadow of the stability argument for row a; requires
// a < horizon - 1 so the tail has at least two points.
StabilityScan stability_scan(const ValueTable& h, std::uint32_t a);

// Finite boolean box theta(a, b, y, z).
struct ThetaTable {
  std::uint32_t a_bound = 0;
  std::uint32_t b_bound = 0;
  std::uint32_t y_bound = 0;
  std::uint32_t z_bound = 0;
  std::vector<std::uint8_t> values;  // row-major (a, b, y, z)

  void validate() const;
  bool at(std::uint32_t a, std::uint32_t b, std::uint32_t y,
          std::uint32_t z) const {
    return values[((static_cast<std::size_t>(a) * b_bound + b) * y_bound + y) *
                      z_bound +
                  z] != 0;
  }
};

struct RTrajectory {
  // q[b][z] = least y <= z such that for all b' <= b there is y' <= y with
  // theta(a, b', y', z') false for all z' <= z; z when no such y exists.
  std::vector<std::vector<std::uint64_t>> q;
  // r[z] = least b <= z with q(b, z) < q(b, z+1), else z; z < z_bound - 1.
  std::vector<std::uint64_t> r;
};

RTrajectory r_trajectory(const ThetaTable& theta, std::uint32_t a);

}  // namespace emlab
