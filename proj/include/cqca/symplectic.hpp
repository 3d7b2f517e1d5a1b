#pragma once

// Phase-space vectors: a translation class of Pauli products encoded as the
// pair (plus, minus) = (X-part, Z-part) of Laurent polynomials.

#include <string>
#include <string_view>

#include "cqca/gf2poly.hpp"

namespace cqca {

struct PhaseVector {
  LaurentPoly plus;
  LaurentPoly minus;

  bool is_zero() const noexcept { return plus.is_zero() && minus.is_zero(); }

  /// Extent of the combined support. Throw DomainError on the zero vector.
  LaurentPoly::Exponent min_deg() const;
  LaurentPoly::Exponent max_deg() const;
  /// max_deg - min_deg of the combined support (0 for the zero vector).
  LaurentPoly::Exponent degree_span() const;

  /// "(p | m)" using the polynomial text form.
  std::string to_string() const;
  static PhaseVector parse(std::string_view text);

  friend PhaseVector operator+(const PhaseVector& a, const PhaseVector& b) {
    return {a.plus + b.plus, a.minus + b.minus};
  }
  friend PhaseVector operator*(const LaurentPoly& s, const PhaseVector& v) {
    return {s * v.plus, s * v.minus};
  }
  friend bool operator==(const PhaseVector&, const PhaseVector&) = default;
};

/// xi+ eta- + eta+ xi-.
LaurentPoly wedge(const PhaseVector& xi, const PhaseVector& eta);

/// Componentwise involution u -> u^-1 (spatial reflection).
PhaseVector bar(const PhaseVector& xi);

/// Multiplication of both components by u^k.
PhaseVector translate(const PhaseVector& xi, LaurentPoly::Exponent k);

/// True iff gcd(plus, minus) is a monomial. Throws DomainError on (0,0).
bool is_minimal(const PhaseVector& xi);

/// Translate so the combined support starts at exponent 0.
PhaseVector unit_normalized(const PhaseVector& xi);

/// Symplectic form at shift zero: sum over sites of xi+ eta- + xi- eta+ (mod 2).
/// True means the Weyl operators anticommute.
bool symplectic_form(const PhaseVector& xi, const PhaseVector& eta) noexcept;

}  // namespace cqca
