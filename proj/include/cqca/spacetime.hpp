#pragma once

// Space-time diagrams of single-seed evolutions. Phases are dropped; each
// row records the letters of a^t seed over a fixed window. Time runs
// downward in every rendering.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cqca/csca.hpp"
#include "cqca/pauli.hpp"

namespace cqca {

struct SpacetimeGrid {
  using Site = LaurentPoly::Exponent;

  CscaMatrix automaton;
  PauliWord seed;
  Site xmin = 0, xmax = 0;
  /// rows[t][x - xmin] is one of 'I', 'X', 'Y', 'Z'.
  std::vector<std::string> rows;

  std::size_t width() const noexcept { return std::size_t(xmax - xmin + 1); }
  char at(std::size_t t, Site x) const;
};

/// Rows t = 0..steps. The window is the seed support widened on each side by
/// steps * neighborhood_radius(a).
SpacetimeGrid evolve_grid(const CscaMatrix& a, const PauliWord& seed, int steps);

/// Smallest t in [1, max_t] with a^t = identity.
std::optional<int> detect_period(const CscaMatrix& a, int max_t);

struct RowStats {
  std::size_t support_count = 0;
  std::optional<SpacetimeGrid::Site> leftmost, rightmost;
};

std::vector<RowStats> support_stats(const SpacetimeGrid& grid);

/// Number of non-empty rows whose letters are all X, all Y, all Z.
std::array<int, 3> pure_letter_rows(const SpacetimeGrid& grid);

/// I -> ' ', X -> '1', Y -> '2', Z -> '3'; one line per time step.
void write_ascii(const SpacetimeGrid& grid, std::ostream& out);
/// Binary P5 image, gray levels I = 255, X = 80, Y = 160, Z = 0.
void write_pgm(const SpacetimeGrid& grid, std::ostream& out);
/// Columns t,support_count,leftmost,rightmost (extent fields empty for blank rows).
void write_stats_csv(const SpacetimeGrid& grid, std::ostream& out);

}  // namespace cqca
