#pragma once

// Centered symplectic cellular automata: 2x2 matrices over GF(2) Laurent
// polynomials with unit determinant and centered-palindrome entries.
//
// Pure lattice translations are not CscaMatrix values; they act on
// PhaseVectors through translate().

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cqca/gf2poly.hpp"
#include "cqca/symplectic.hpp"

namespace cqca {

struct CscaMatrix {
  LaurentPoly a11, a12, a21, a22;

  static CscaMatrix identity();

  /// Columns are the images of X = (1,0) and Z = (0,1).
  PhaseVector column_x() const { return {a11, a21}; }
  PhaseVector column_z() const { return {a12, a22}; }

  /// "[[p11; p12]; [p21; p22]]".
  std::string to_string() const;
  static CscaMatrix parse(std::string_view text);

  friend bool operator==(const CscaMatrix&, const CscaMatrix&) = default;
};

CscaMatrix mul(const CscaMatrix& a, const CscaMatrix& b);
inline CscaMatrix operator*(const CscaMatrix& a, const CscaMatrix& b) { return mul(a, b); }
CscaMatrix pow(const CscaMatrix& a, std::uint64_t t);
PhaseVector apply(const CscaMatrix& a, const PhaseVector& xi);
LaurentPoly trace(const CscaMatrix& a);
LaurentPoly det(const CscaMatrix& a);
/// Inverse of a determinant-one matrix (adjugate over GF(2)).
CscaMatrix inverse(const CscaMatrix& a);
/// Largest |exponent| over all entries: the per-step light-cone radius.
LaurentPoly::Exponent neighborhood_radius(const CscaMatrix& a);

/// Human-readable list of violated invariants; empty means valid.
std::vector<std::string> validate(const CscaMatrix& m);

struct Classification {
  enum class Kind { Periodic, Glider, Fractal };
  Kind kind;
  /// Period for Periodic (2 or 3), speed for Glider, unused for Fractal.
  int value = 0;

  static Classification periodic(int period) { return {Kind::Periodic, period}; }
  static Classification glider(int speed) { return {Kind::Glider, speed}; }
  static Classification fractal() { return {Kind::Fractal, 0}; }

  std::string to_string() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Trace-based classification: constant c -> period c+2, u^-n+u^n -> speed n,
/// anything else -> fractal.
Classification classify(const CscaMatrix& a);

struct Glider {
  PhaseVector xi;
  int speed;
};

/// The minimal right-moving glider (a xi = u^n xi), translated so its support
/// starts at exponent 0. Throws DomainError("no gliders") for non-glider input.
Glider minimal_glider(const CscaMatrix& a);

/// The unique CSCA with a xi = u^n xi. Requires xi minimal and
/// wedge(xi, bar xi) dividing u^n + u^-n.
CscaMatrix csca_from_glider(const PhaseVector& xi, int n);

/// Solves b from = to for a CSCA b (b is palindromic, so b bar(from) = bar(to)).
/// Throws DomainError when the linear system has no CSCA solution.
CscaMatrix conjugator(const PhaseVector& from, const PhaseVector& to);

/// b with b xi = (1, u); only speed-one gliders (wedge(xi, bar xi) = u^-1+u) qualify.
CscaMatrix conjugator_to_standard(const PhaseVector& xi);

/// The period-two automata fixing the stabilizer generator xi:
/// [[1 + a xi+ xi-, a xi+^2], [a xi-^2, 1 + a xi+ xi-]].
CscaMatrix invariance_family(const PhaseVector& xi, const LaurentPoly& a);

// Named generators.
CscaMatrix hadamard_h();  // [[1,0],[1,1]]
CscaMatrix swap_p();      // [[0,1],[1,0]]
/// [[1,0],[a,1]]; a must be a centered palindrome.
CscaMatrix shear(const LaurentPoly& a);
/// shear(u^n + u^-n).
CscaMatrix shear_gn(int n);
/// [[0,1],[1,u^-1+u]]
CscaMatrix standard_glider();
/// [[1,u^-1+u],[1,u^-1+1+u]]
CscaMatrix nearest_neighbor_glider();
/// [[u^-1+1+u,1],[1,0]]
CscaMatrix fractal_example();

/// Resolves "Gs", "G", "F", "H", "P", "Gn:<n>", or a matrix literal.
/// Throws ParseError for unknown keys or malformed literals.
CscaMatrix named_automaton(std::string_view key);

}  // namespace cqca
