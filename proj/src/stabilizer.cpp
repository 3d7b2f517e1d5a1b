#include "cqca/stabilizer.hpp"

#include <numeric>

#include "cqca/error.hpp"

namespace cqca {
namespace {

using Row = std::vector<std::uint8_t>;

void require_valid(const PhaseVector& xi) {
  const auto v = validate_stabilizer(xi);
  if (!v.empty()) throw DomainError("invalid stabilizer generator: " + v.front());
}

bool reflection_invariant(const LaurentPoly& p, LaurentPoly::Exponent twice_center) {
  return p.is_zero() || p.involution().shifted(twice_center) == p;
}

// Symplectic product of two rows laid out as [x bits | z bits].
bool row_form(const Row& a, const Row& b) {
  const std::size_t half = a.size() / 2;
  unsigned s = 0;
  for (std::size_t k = 0; k < half; ++k) s ^= (a[k] & b[half + k]) ^ (a[half + k] & b[k]);
  return s != 0;
}

void add_row(Row& into, const Row& from) {
  for (std::size_t k = 0; k < into.size(); ++k) into[k] ^= from[k];
}

}  // namespace

std::vector<std::string> validate_stabilizer(const PhaseVector& xi) {
  if (xi.is_zero()) throw DomainError("zero stabilizer generator");
  std::vector<std::string> out;
  const auto lo = xi.min_deg(), hi = xi.max_deg();
  if (!reflection_invariant(xi.plus, lo + hi) || !reflection_invariant(xi.minus, lo + hi))
    out.push_back("components are not reflection invariant about a common center");
  if ((hi - lo) % 2 != 0) {
    out.push_back("even length " + std::to_string(hi - lo + 1));
  } else {
    const auto mid = (lo + hi) / 2;
    if (!xi.plus.coeff(mid) && !xi.minus.coeff(mid)) out.push_back("central cell is the identity");
  }
  const LaurentPoly g = gcd(xi.plus, xi.minus);
  if (!g.is_monomial()) out.push_back("components share the factor " + g.to_string());
  return out;
}

PhaseVector centered(const PhaseVector& xi) {
  if (xi.is_zero()) return xi;
  const auto lo = xi.min_deg(), hi = xi.max_deg();
  if ((hi - lo) % 2 != 0) throw DomainError("even-length word has no central site");
  return translate(xi, -(lo + hi) / 2);
}

PhaseVector parse_stabilizer_word(std::string_view text) {
  std::vector<LaurentPoly::Exponent> xs, zs;
  LaurentPoly::Exponent site = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ') continue;
    switch (c) {
      case 'I': case '0': break;
      case 'X': case '1': xs.push_back(site); break;
      case 'Z': case '3': zs.push_back(site); break;
      case 'Y': case '2': xs.push_back(site); zs.push_back(site); break;
      default: throw ParseError(std::string("bad letter '") + c + "'", i);
    }
    ++site;
  }
  PhaseVector xi{LaurentPoly::from_exponents(xs), LaurentPoly::from_exponents(zs)};
  if (xi.is_zero()) throw ParseError("word has no non-identity letter", 0);
  return xi;
}

std::int64_t entanglement_bipartite(const PhaseVector& xi) {
  require_valid(xi);
  return xi.degree_span() / 2;
}

std::int64_t entanglement_finite_region(const PhaseVector& xi, std::int64_t L) {
  if (L < 1) throw DomainError("region length must be positive");
  return std::min(2 * entanglement_bipartite(xi), L);
}

std::vector<std::int64_t> evolve_entanglement(const CscaMatrix& a, const PhaseVector& xi, int steps,
                                              std::optional<std::int64_t> L) {
  if (steps < 0) throw DomainError("negative horizon");
  if (L && *L < 1) throw DomainError("region length must be positive");
  require_valid(xi);
  std::vector<std::int64_t> out;
  out.reserve(std::size_t(steps) + 1);
  PhaseVector cur = centered(xi);
  for (int t = 0; t <= steps; ++t) {
    if (t > 0) cur = apply(a, cur);
    const std::int64_t n = cur.degree_span() / 2;
    out.push_back(L ? std::min(2 * n, *L) : n);
  }
  return out;
}

std::int64_t pairing_oracle(const PhaseVector& xi) {
  require_valid(xi);
  const PhaseVector c = centered(xi);
  const std::int64_t n = c.degree_span() / 2;
  if (n == 0) return 0;
  const std::size_t width = std::size_t(2 * n);

  // Cut between sites 0 and 1; translates by x in [1-n, n] straddle it.
  std::vector<Row> rows;
  for (std::int64_t x = 1 - n; x <= n; ++x) {
    Row r(2 * width, 0);
    for (std::int64_t s = 1; s <= 2 * n; ++s) {
      r[std::size_t(s - 1)] = c.plus.coeff(s - x);
      r[width + std::size_t(s - 1)] = c.minus.coeff(s - x);
    }
    rows.push_back(std::move(r));
  }

  // Row echelon form over GF(2); zero rows are dropped.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * width && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv][col]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][col]) add_row(rows[r], rows[rank]);
    ++rank;
  }
  rows.resize(rank);

  // Symplectic pairing: take the lowest unpaired row, pair it with the lowest
  // anticommuting partner, and clear both from every remaining row.
  std::vector<bool> used(rows.size(), false);
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (used[i]) continue;
    std::size_t j = i + 1;
    while (j < rows.size() && (used[j] || !row_form(rows[i], rows[j]))) ++j;
    if (j == rows.size()) continue;
    used[i] = used[j] = true;
    ++pairs;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (used[k]) continue;
      const bool with_i = row_form(rows[k], rows[i]);
      const bool with_j = row_form(rows[k], rows[j]);
      if (with_i) add_row(rows[k], rows[j]);
      if (with_j) add_row(rows[k], rows[i]);
    }
  }
  return pairs;
}

Rational asymptotic_rate(const CscaMatrix& a, const PhaseVector& xi, int steps) {
  if (steps < 8) throw DomainError("horizon must be at least 8");
  const auto e = evolve_entanglement(a, xi, steps);
  std::int64_t N = 0, st = 0, se = 0, stt = 0, ste = 0;
  for (int t = steps / 2; t <= steps; ++t) {
    ++N;
    st += t;
    se += e[std::size_t(t)];
    stt += std::int64_t(t) * t;
    ste += std::int64_t(t) * e[std::size_t(t)];
  }
  std::int64_t num = N * ste - st * se;
  std::int64_t den = N * stt - st * st;
  const std::int64_t g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

std::int64_t neighborhood_width(const CscaMatrix& a) { return 2 * neighborhood_radius(a); }

}  // namespace cqca
