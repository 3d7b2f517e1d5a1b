#include "cqca/spacetime.hpp"

#include "cqca/error.hpp"

namespace cqca {
namespace {

int letter_index(char c) { return c == 'X' ? 1 : c == 'Y' ? 2 : c == 'Z' ? 3 : 0; }

}  // namespace

char SpacetimeGrid::at(std::size_t t, Site x) const {
  if (x < xmin || x > xmax) return 'I';
  return rows.at(t)[std::size_t(x - xmin)];
}

SpacetimeGrid evolve_grid(const CscaMatrix& a, const PauliWord& seed, int steps) {
  if (steps < 0) throw DomainError("negative horizon");
  SpacetimeGrid grid;
  grid.automaton = a;
  grid.seed = seed;
  PhaseVector xi = seed.xi();
  const auto reach = SpacetimeGrid::Site(steps) * neighborhood_radius(a);
  if (!xi.is_zero()) {
    grid.xmin = xi.min_deg() - reach;
    grid.xmax = xi.max_deg() + reach;
  }
  grid.rows.reserve(std::size_t(steps) + 1);
  for (int t = 0; t <= steps; ++t) {
    if (t > 0) xi = apply(a, xi);
    std::string row(grid.width(), 'I');
    if (!xi.is_zero()) {
      if (xi.min_deg() < grid.xmin || xi.max_deg() > grid.xmax)
        throw InvariantError("evolution left the light cone");
      for (auto x = xi.min_deg(); x <= xi.max_deg(); ++x)
        row[std::size_t(x - grid.xmin)] = letter_of(xi.plus.coeff(x), xi.minus.coeff(x));
    }
    grid.rows.push_back(std::move(row));
  }
  return grid;
}

std::optional<int> detect_period(const CscaMatrix& a, int max_t) {
  const CscaMatrix id = CscaMatrix::identity();
  CscaMatrix p = a;
  for (int t = 1; t <= max_t; ++t) {
    if (p == id) return t;
    p = p * a;
  }
  return std::nullopt;
}

std::vector<RowStats> support_stats(const SpacetimeGrid& grid) {
  std::vector<RowStats> out;
  out.reserve(grid.rows.size());
  for (const auto& row : grid.rows) {
    RowStats s;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 'I') continue;
      const auto x = grid.xmin + SpacetimeGrid::Site(i);
      ++s.support_count;
      if (!s.leftmost) s.leftmost = x;
      s.rightmost = x;
    }
    out.push_back(s);
  }
  return out;
}

std::array<int, 3> pure_letter_rows(const SpacetimeGrid& grid) {
  std::array<int, 3> counts{};
  for (const auto& row : grid.rows) {
    char kind = 0;
    bool pure = true;
    for (char c : row) {
      if (c == 'I') continue;
      if (kind == 0)
        kind = c;
      else if (c != kind)
        pure = false;
    }
    if (kind != 0 && pure) ++counts[std::size_t(letter_index(kind) - 1)];
  }
  return counts;
}

void write_ascii(const SpacetimeGrid& grid, std::ostream& out) {
  static constexpr char glyph[4] = {' ', '1', '2', '3'};
  for (const auto& row : grid.rows) {
    std::string line(row.size(), ' ');
    for (std::size_t i = 0; i < row.size(); ++i) line[i] = glyph[letter_index(row[i])];
    out << line << '\n';
  }
}

void write_pgm(const SpacetimeGrid& grid, std::ostream& out) {
  static constexpr unsigned char level[4] = {255, 80, 160, 0};
  out << "P5\n" << grid.width() << ' ' << grid.rows.size() << "\n255\n";
  for (const auto& row : grid.rows)
    for (char c : row) out.put(char(level[letter_index(c)]));
}

void write_stats_csv(const SpacetimeGrid& grid, std::ostream& out) {
  out << "t,support_count,leftmost,rightmost\n";
  const auto stats = support_stats(grid);
  for (std::size_t t = 0; t < stats.size(); ++t) {
    out << t << ',' << stats[t].support_count << ',';
    if (stats[t].leftmost) out << *stats[t].leftmost;
    out << ',';
    if (stats[t].rightmost) out << *stats[t].rightmost;
    out << '\n';
  }
}

}  // namespace cqca
