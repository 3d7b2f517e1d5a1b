#pragma once

// Laurent polynomials over GF(2).
//
// A LaurentPoly stores its coefficients as a packed bit array starting at the
// lowest nonzero exponent. Values are always normalized: either the canonical
// zero (no bits) or the first and last stored bits are set.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cqca {

class LaurentPoly {
 public:
  using Exponent = std::int64_t;

  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(0); }
  static LaurentPoly monomial(Exponent k);
  /// Sum of u^k over the given exponents; repeated exponents cancel.
  static LaurentPoly from_exponents(std::span<const Exponent> exponents);
  static LaurentPoly from_exponents(std::initializer_list<Exponent> exponents);
  /// Parses the "u^-1+1+u" text form. Throws ParseError.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const noexcept { return nbits_ == 0; }
  bool is_one() const noexcept { return nbits_ == 1 && min_deg_ == 0; }
  bool is_monomial() const noexcept { return nbits_ == 1; }
  bool is_centered_palindrome() const;

  /// Lowest / highest exponent. Throw DomainError("zero polynomial") on zero.
  Exponent min_deg() const;
  Exponent max_deg() const;
  /// max_deg - min_deg; the zero polynomial has span 0.
  Exponent degree_span() const noexcept { return nbits_ == 0 ? 0 : Exponent(nbits_) - 1; }
  /// max(|min_deg|, |max_deg|); zero for the zero polynomial.
  Exponent max_abs_exponent() const noexcept;

  bool coeff(Exponent k) const noexcept;
  std::size_t weight() const noexcept;
  std::vector<Exponent> exponents() const;

  /// Substitution u -> u^-1.
  LaurentPoly involution() const;
  /// Multiplication by u^k.
  LaurentPoly shifted(Exponent k) const;

  std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
    return a.nbits_ == b.nbits_ && (a.nbits_ == 0 || a.min_deg_ == b.min_deg_) &&
           a.words_ == b.words_;
  }

  /// Number of exponents k with coeff(k) set in both.
  friend std::size_t overlap_count(const LaurentPoly& a, const LaurentPoly& b) noexcept;

 private:
  void normalize();

  std::vector<std::uint64_t> words_;
  std::size_t nbits_ = 0;
  Exponent min_deg_ = 0;
};

/// Parity of the coefficientwise product sum, i.e. sum_k a_k b_k mod 2.
inline bool dot(const LaurentPoly& a, const LaurentPoly& b) noexcept {
  return (overlap_count(a, b) & 1U) != 0;
}

/// Canonical GCD with min_deg 0. gcd(a, 0) is a shifted to min_deg 0.
/// Throws DomainError("gcd undefined") when both are zero.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient q with q*b == a, or nullopt when b does not divide a.
/// Throws DomainError on b == 0.
std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient q with q*b == a. Throws DomainError("not divisible").
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// a^e for e >= 0 by repeated squaring.
LaurentPoly pow(const LaurentPoly& a, unsigned e);

/// The shared representative of a modulo units: shifted so min_deg == 0.
LaurentPoly unit_normalized(const LaurentPoly& a);

}  // namespace cqca
