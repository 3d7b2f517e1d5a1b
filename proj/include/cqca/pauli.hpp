#pragma once

// Finitely supported Pauli products with exact phases, the CQCA action on
// them, and expectation values in translation-invariant product states.

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cqca/csca.hpp"
#include "cqca/symplectic.hpp"

namespace cqca {

/// i^weyl_phase * w(xi), where w(xi) is the ordered product over ascending
/// sites of X^{xi+(x)} Z^{xi-(x)}. In letter form a site with both bits set is
/// Y = i X Z.
class PauliWord {
 public:
  using Site = LaurentPoly::Exponent;

  PauliWord() = default;
  PauliWord(int weyl_phase, PhaseVector xi);

  /// Builds i^phase * (product of the given letters). Letters are 'X', 'Y',
  /// 'Z' or 'I'; a site may appear at most once.
  static PauliWord from_letters(int phase, const std::vector<std::pair<Site, char>>& letters);
  static PauliWord single(Site x, char letter) { return from_letters(0, {{x, letter}}); }

  /// "+1 -1:Z 0:Y 1:X"; the phase token is one of +1, -1, +i, -i.
  static PauliWord parse(std::string_view text);
  std::string to_string() const;

  const PhaseVector& xi() const noexcept { return xi_; }
  int weyl_phase() const noexcept { return weyl_phase_; }
  /// Exponent k of i^k in front of the letter form.
  int phase_exponent() const;
  /// Non-identity letters in ascending site order.
  std::vector<std::pair<Site, char>> letters() const;
  bool is_identity() const noexcept { return xi_.is_zero(); }

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  int weyl_phase_ = 0;
  PhaseVector xi_;
};

/// Letter at one site from the two phase-space bits.
char letter_of(bool x_bit, bool z_bit) noexcept;

PauliWord weyl_mul(const PauliWord& a, const PauliWord& b);
bool commutes(const PauliWord& a, const PauliWord& b);

/// The Clifford automorphism represented by a with the convention that the
/// images of every single-site X and Z are Hermitian letter products with
/// phase +1.
PauliWord apply_cqca(const CscaMatrix& a, const PauliWord& w);

struct ProductState {
  double x = 0, y = 0, z = 1;

  /// Throws DomainError outside the Bloch ball.
  static ProductState from_bloch(double x, double y, double z);
};

std::complex<double> expectation(const ProductState& s, const PauliWord& w);

/// expectation(s, a^t w) for t = 0..steps.
std::vector<std::complex<double>> expectation_timeseries(const CscaMatrix& a, const ProductState& s,
                                                         const PauliWord& w, int steps);

}  // namespace cqca
