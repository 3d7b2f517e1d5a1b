#include "cqca/symplectic.hpp"

#include <algorithm>

#include "cqca/error.hpp"

namespace cqca {

LaurentPoly::Exponent PhaseVector::min_deg() const {
  if (is_zero()) throw DomainError("zero phase-space vector");
  if (plus.is_zero()) return minus.min_deg();
  if (minus.is_zero()) return plus.min_deg();
  return std::min(plus.min_deg(), minus.min_deg());
}

LaurentPoly::Exponent PhaseVector::max_deg() const {
  if (is_zero()) throw DomainError("zero phase-space vector");
  if (plus.is_zero()) return minus.max_deg();
  if (minus.is_zero()) return plus.max_deg();
  return std::max(plus.max_deg(), minus.max_deg());
}

LaurentPoly::Exponent PhaseVector::degree_span() const {
  return is_zero() ? 0 : max_deg() - min_deg();
}

std::string PhaseVector::to_string() const {
  return "(" + plus.to_string() + " | " + minus.to_string() + ")";
}

PhaseVector PhaseVector::parse(std::string_view text) {
  const auto open = text.find('(');
  const auto bar_pos = text.find('|');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos) throw ParseError("expected '('", 0);
  if (bar_pos == std::string_view::npos || bar_pos < open) throw ParseError("expected '|'", open);
  if (close == std::string_view::npos || close < bar_pos) throw ParseError("expected ')'", text.size());
  for (std::size_t i = 0; i < open; ++i)
    if (text[i] != ' ') throw ParseError("unexpected character", i);
  for (std::size_t i = close + 1; i < text.size(); ++i)
    if (text[i] != ' ') throw ParseError("trailing characters", i);
  auto sub = [&](std::size_t from, std::size_t to) {
    try {
      return LaurentPoly::parse(text.substr(from, to - from));
    } catch (const ParseError& e) {
      throw ParseError("bad component", from + e.position());
    }
  };
  return {sub(open + 1, bar_pos), sub(bar_pos + 1, close)};
}

LaurentPoly wedge(const PhaseVector& xi, const PhaseVector& eta) {
  return xi.plus * eta.minus + eta.plus * xi.minus;
}

PhaseVector bar(const PhaseVector& xi) { return {xi.plus.involution(), xi.minus.involution()}; }

PhaseVector translate(const PhaseVector& xi, LaurentPoly::Exponent k) {
  return {xi.plus.shifted(k), xi.minus.shifted(k)};
}

bool is_minimal(const PhaseVector& xi) {
  if (xi.is_zero()) throw DomainError("is_minimal: zero phase-space vector");
  return gcd(xi.plus, xi.minus).is_monomial();
}

PhaseVector unit_normalized(const PhaseVector& xi) {
  if (xi.is_zero()) return xi;
  return translate(xi, -xi.min_deg());
}

bool symplectic_form(const PhaseVector& xi, const PhaseVector& eta) noexcept {
  return dot(xi.plus, eta.minus) != dot(xi.minus, eta.plus);
}

}  // namespace cqca
