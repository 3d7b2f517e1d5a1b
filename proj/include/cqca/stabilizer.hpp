#pragma once

// Translation-invariant pure stabilizer states generated by the translates of
// a single Pauli product xi, and their entanglement under CQCA evolution.
// Entanglement is counted in maximally entangled qubit pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cqca/csca.hpp"
#include "cqca/symplectic.hpp"

namespace cqca {

/// Violations of the stabilizer-generator conditions; empty means valid.
/// Throws DomainError on the zero vector.
std::vector<std::string> validate_stabilizer(const PhaseVector& xi);

/// xi translated so its support is symmetric about site 0 (odd length only).
PhaseVector centered(const PhaseVector& xi);

/// Letters-only word such as "YXY" or "2 1 2", placed on sites 0, 1, ...
PhaseVector parse_stabilizer_word(std::string_view text);

/// n = (length - 1) / 2. Throws DomainError for invalid generators.
std::int64_t entanglement_bipartite(const PhaseVector& xi);
/// min(2n, L) for a block of L consecutive sites.
std::int64_t entanglement_finite_region(const PhaseVector& xi, std::int64_t L);

/// E(t) for the generator a^t xi, t = 0..steps; bipartite when L is empty.
std::vector<std::int64_t> evolve_entanglement(const CscaMatrix& a, const PhaseVector& xi, int steps,
                                              std::optional<std::int64_t> L = std::nullopt);

/// Independent pair count: Gaussian elimination of the cut translates
/// restricted to one half chain followed by symplectic pairing.
std::int64_t pairing_oracle(const PhaseVector& xi);

struct Rational {
  std::int64_t num = 0, den = 1;
  double value() const { return double(num) / double(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Exact least-squares slope of the bipartite E(t) over t in [steps/2, steps].
Rational asymptotic_rate(const CscaMatrix& a, const PhaseVector& xi, int steps);

/// Total width 2 * neighborhood_radius(a) of the one-step neighborhood.
std::int64_t neighborhood_width(const CscaMatrix& a);

}  // namespace cqca
