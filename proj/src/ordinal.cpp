#include "emlab/ordinal.hpp"

#include <cctype>

namespace emlab {

namespace {

void check_coeff(std::uint64_t k, std::uint64_t cap) {
  if (k > cap) throw ResourceLimit("ordinal coefficient exceeds cap");
}

// Validates non-increasing exponent order, merges equal-exponent runs,
// drops zero coefficients. Used by make_sum and the parser.
std::vector<OrdinalTerm> normalize_written_sum(
    const std::vector<OrdinalTerm>& written, std::uint64_t cap,
    bool from_text) {
  std::vector<OrdinalTerm> out;
  for (const OrdinalTerm& t : written) {
    if (t.coefficient == 0) continue;
    check_coeff(t.coefficient, cap);
    if (t.exponent > cap) throw ResourceLimit("ordinal exponent exceeds cap");
    if (!out.empty()) {
      if (out.back().exponent < t.exponent) {
        if (from_text)
          throw CanonicalityError(
              "exponents increase along the written sum; no normalization "
              "yields CNF");
        throw NotCnfOrder("parts not in non-increasing exponent order");
      }
      if (out.back().exponent == t.exponent) {
        std::uint64_t merged = out.back().coefficient + t.coefficient;
        if (merged < out.back().coefficient)
          throw ResourceLimit("ordinal coefficient overflow");
        check_coeff(merged, cap);
        out.back().coefficient = merged;
        continue;
      }
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms, std::uint64_t cap) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0)
      throw PreconditionError("zero coefficient in ordinal term");
    check_coeff(terms[i].coefficient, cap);
    if (terms[i].exponent > cap)
      throw ResourceLimit("ordinal exponent exceeds cap");
    if (i > 0 && terms[i - 1].exponent <= terms[i].exponent)
      throw PreconditionError("ordinal exponents must strictly decrease");
  }
  return Ordinal{std::move(terms)};
}

Cmp compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ta[i].exponent != tb[i].exponent)
      return ta[i].exponent < tb[i].exponent ? Cmp::less : Cmp::greater;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient < tb[i].coefficient ? Cmp::less : Cmp::greater;
  }
  if (ta.size() == tb.size()) return Cmp::equal;
  return ta.size() < tb.size() ? Cmp::less : Cmp::greater;
}

Ordinal step(const Ordinal& alpha, std::uint64_t m, std::uint64_t cap) {
  if (alpha.is_zero()) return alpha;
  std::vector<OrdinalTerm> terms = alpha.terms_;
  OrdinalTerm trailing = terms.back();
  if (--terms.back().coefficient == 0) terms.pop_back();
  if (trailing.exponent >= 1 && m > 0) {
    check_coeff(m, cap);
    terms.push_back(OrdinalTerm{trailing.exponent - 1, m});
  }
  return Ordinal{std::move(terms)};
}

Ordinal make_sum(std::span<const Ordinal> parts, std::uint64_t cap) {
  std::vector<OrdinalTerm> written;
  for (const Ordinal& p : parts)
    written.insert(written.end(), p.terms().begin(), p.terms().end());
  return Ordinal{normalize_written_sum(written, cap, /*from_text=*/false)};
}

namespace {

// nat := 0 | [1-9][0-9]*
std::uint64_t parse_nat(std::string_view s, std::size_t& i) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError("expected a natural number in ordinal expression");
  if (s[i] == '0') {
    ++i;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("leading zeros are not allowed");
    return 0;
  }
  std::uint64_t v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    std::uint64_t d = static_cast<std::uint64_t>(s[i] - '0');
    if (v > (UINT64_MAX - d) / 10) throw ResourceLimit("number too large");
    v = v * 10 + d;
    ++i;
  }
  return v;
}

OrdinalTerm parse_term(std::string_view s, std::size_t& i) {
  if (i < s.size() && s[i] == 'w') {
    ++i;
    std::uint64_t exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      exp = parse_nat(s, i);
    }
    std::uint64_t coeff = 1;
    if (i < s.size() && s[i] == '.') {
      ++i;
      coeff = parse_nat(s, i);
      if (coeff == 0) throw ParseError("coefficient must be at least 1");
    }
    if (exp > UINT32_MAX) throw ResourceLimit("ordinal exponent too large");
    return OrdinalTerm{static_cast<std::uint32_t>(exp), coeff};
  }
  std::uint64_t v = parse_nat(s, i);
  if (v == 0) throw ParseError("zero term inside a sum");
  return OrdinalTerm{0, v};
}

}  // namespace

Ordinal parse_ordinal(std::string_view text, std::uint64_t cap) {
  if (text == "0") return Ordinal{};
  if (text.empty()) throw ParseError("empty ordinal expression");
  std::vector<OrdinalTerm> written;
  std::size_t i = 0;
  while (true) {
    written.push_back(parse_term(text, i));
    if (i == text.size()) break;
    if (text[i] != '+') throw ParseError("unexpected character in ordinal");
    ++i;
    if (i == text.size()) throw ParseError("trailing '+' in ordinal");
  }
  return Ordinal::from_terms(normalize_written_sum(written, cap, true), cap);
}

std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const OrdinalTerm& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent >= 2) {
      out += '^';
      out += std::to_string(t.exponent);
    }
    if (t.coefficient >= 2) {
      out += '.';
      out += std::to_string(t.coefficient);
    }
  }
  return out;
}

}  // namespace emlab
