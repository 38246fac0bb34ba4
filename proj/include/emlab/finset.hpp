#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "emlab/errors.hpp"

namespace emlab {

// Strictly increasing finite sequence of naturals; the ground object of every
// theorem here.
class FinSet {
 public:
  FinSet() = default;

  explicit FinSet(std::vector<std::uint64_t> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 1; i < elems_.size(); ++i) {
      if (elems_[i - 1] >= elems_[i])
        throw PreconditionError("FinSet elements must be strictly increasing");
    }
  }

  // {from, from+1, ..., to} inclusive; empty when to < from.
  static FinSet interval(std::uint64_t from, std::uint64_t to) {
    FinSet s;
    if (to < from) return s;
    if (to - from >= 50'000'000)
      throw ResourceLimit("interval too wide to materialize");
    s.elems_.reserve(to - from + 1);
    for (std::uint64_t v = from; v <= to; ++v) s.elems_.push_back(v);
    return s;
  }

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }

  std::uint64_t min() const {
    if (elems_.empty()) throw PreconditionError("min of empty FinSet");
    return elems_.front();
  }
  std::uint64_t max() const {
    if (elems_.empty()) throw PreconditionError("max of empty FinSet");
    return elems_.back();
  }

  std::uint64_t operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<std::uint64_t>& elements() const { return elems_; }

  bool contains(std::uint64_t v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  // Index of v; throws if absent.
  std::size_t index_of(std::uint64_t v) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v)
      throw NotSubset("element not in set");
    return static_cast<std::size_t>(it - elems_.begin());
  }

  bool subset_of(const FinSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
  }

  FinSet set_union(const FinSet& other) const {
    std::vector<std::uint64_t> out;
    out.reserve(size() + other.size());
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                   other.elems_.end(), std::back_inserter(out));
    FinSet s;
    s.elems_ = std::move(out);
    return s;
  }

  FinSet without_min() const {
    if (elems_.empty()) throw PreconditionError("without_min of empty FinSet");
    FinSet s;
    s.elems_.assign(elems_.begin() + 1, elems_.end());
    return s;
  }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const FinSet&, const FinSet&) = default;

 private:
  std::vector<std::uint64_t> elems_;
};

}  // namespace emlab
