#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emlab/config.hpp"
#include "emlab/errors.hpp"

namespace emlab {

struct OrdinalTerm {
  std::uint32_t exponent = 0;
  std::uint64_t coefficient = 0;
  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

// Cantor normal form notation for ordinals below w^w: a finite sum of terms
// w^n * k with strictly decreasing exponents and coefficients >= 1. Zero is
// the empty term list. Values are immutable once built.
class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal finite(std::uint64_t k,
                        std::uint64_t cap = kDefaultOrdinalCap) {
    if (k == 0) return Ordinal{};
    check_coeff(k, cap);
    return Ordinal{{OrdinalTerm{0, k}}};
  }

  static Ordinal omega_power(std::uint32_t n, std::uint64_t coefficient = 1,
                             std::uint64_t cap = kDefaultOrdinalCap) {
    if (coefficient == 0) return Ordinal{};
    check_coeff(coefficient, cap);
    if (n > cap) throw ResourceLimit("ordinal exponent exceeds cap");
    return Ordinal{{OrdinalTerm{n, coefficient}}};
  }

  // Validating constructor from an explicit term list.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms,
                            std::uint64_t cap = kDefaultOrdinalCap);

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0);
  }
  // Value of a finite ordinal (0 for zero).
  std::uint64_t finite_value() const {
    if (!is_finite()) throw PreconditionError("ordinal is not finite");
    return terms_.empty() ? 0 : terms_[0].coefficient;
  }

  const std::vector<OrdinalTerm>& terms() const { return terms_; }

  friend bool operator==(const Ordinal&, const Ordinal&) = default;

 private:
  explicit Ordinal(std::vector<OrdinalTerm> t) : terms_(std::move(t)) {}
  static void check_coeff(std::uint64_t k, std::uint64_t cap) {
    if (k > cap) throw ResourceLimit("ordinal coefficient exceeds cap");
  }

  std::vector<OrdinalTerm> terms_;

  friend Ordinal step(const Ordinal&, std::uint64_t, std::uint64_t);
  friend Ordinal make_sum(std::span<const Ordinal>, std::uint64_t);
};

enum class Cmp { less, equal, greater };

// Ordinal order via lexicographic comparison of (exponent, coefficient) runs.
Cmp compare(const Ordinal& a, const Ordinal& b);

inline bool operator<(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == Cmp::less;
}
inline bool operator<=(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) != Cmp::greater;
}

// The fundamental-sequence step alpha[m]: drop a trailing +1, or replace a
// trailing w^n by w^{n-1}*m. Total; step(0, m) = 0.
Ordinal step(const Ordinal& alpha, std::uint64_t m,
             std::uint64_t cap = kDefaultOrdinalCap);

// CNF sum of parts written left-to-right with non-increasing exponents; equal
// exponent runs merge by adding coefficients. NotCnfOrder otherwise.
Ordinal make_sum(std::span<const Ordinal> parts,
                 std::uint64_t cap = kDefaultOrdinalCap);

// Grammar (ASCII, bit-exact wire format):
//   sum  := term ("+" term)*
//   term := "w" ("^" nat)? ("." nat)? | nat
// "w" is omega, "." attaches a coefficient: w^3, w.2+5, 0.
Ordinal parse_ordinal(std::string_view text,
                      std::uint64_t cap = kDefaultOrdinalCap);
std::string format_ordinal(const Ordinal& a);

}  // namespace emlab
