#include "cqca/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "cqca/error.hpp"

namespace cqca {
namespace {

int mod4(long long k) { return int(((k % 4) + 4) % 4); }

// i^k as an exact complex number.
std::complex<double> i_pow(int k) {
  static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[mod4(k)];
}

const char* phase_token(int k) {
  static const char* names[4] = {"+1", "+i", "-1", "-i"};
  return names[mod4(k)];
}

}  // namespace

char letter_of(bool x_bit, bool z_bit) noexcept {
  if (x_bit) return z_bit ? 'Y' : 'X';
  return z_bit ? 'Z' : 'I';
}

PauliWord::PauliWord(int weyl_phase, PhaseVector xi) : weyl_phase_(mod4(weyl_phase)), xi_(std::move(xi)) {}

PauliWord PauliWord::from_letters(int phase, const std::vector<std::pair<Site, char>>& letters) {
  std::vector<Site> xs, zs;
  std::set<Site> seen;
  int ys = 0;
  for (const auto& [site, letter] : letters) {
    if (!seen.insert(site).second) throw DomainError("site " + std::to_string(site) + " appears twice");
    switch (letter) {
      case 'I':
        break;
      case 'X':
        xs.push_back(site);
        break;
      case 'Z':
        zs.push_back(site);
        break;
      case 'Y':
        xs.push_back(site);
        zs.push_back(site);
        ++ys;
        break;
      default:
        throw DomainError(std::string("unknown Pauli letter '") + letter + "'");
    }
  }
  return {phase + ys, {LaurentPoly::from_exponents(xs), LaurentPoly::from_exponents(zs)}};
}

PauliWord PauliWord::parse(std::string_view text) {
  std::vector<std::pair<Site, char>> letters;
  int phase = 0;
  bool first = true;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ') ++pos;
    const std::string_view tok = text.substr(start, pos - start);
    const auto colon = tok.find(':');
    if (colon == std::string_view::npos) {
      if (!first) throw ParseError("phase must come first", start);
      if (tok == "+1" || tok == "1")
        phase = 0;
      else if (tok == "+i" || tok == "i")
        phase = 1;
      else if (tok == "-1")
        phase = 2;
      else if (tok == "-i")
        phase = 3;
      else
        throw ParseError("bad phase '" + std::string(tok) + "'", start);
    } else {
      Site site = 0;
      const char* b = tok.data();
      const char* e = tok.data() + colon;
      if (b != e && *b == '+') ++b;
      auto [ptr, ec] = std::from_chars(b, e, site);
      if (ec != std::errc{} || ptr != e) throw ParseError("bad site index", start);
      if (colon + 2 != tok.size()) throw ParseError("expected a single letter", start + colon + 1);
      char letter = tok[colon + 1];
      if (letter >= '0' && letter <= '3') letter = "IXYZ"[letter - '0'];
      if (letter != 'I' && letter != 'X' && letter != 'Y' && letter != 'Z')
        throw ParseError("bad letter", start + colon + 1);
      if (std::any_of(letters.begin(), letters.end(), [&](const auto& l) { return l.first == site; }))
        throw ParseError("duplicate site", start);
      letters.emplace_back(site, letter);
    }
    first = false;
  }
  return from_letters(phase, letters);
}

std::string PauliWord::to_string() const {
  std::string out = phase_token(phase_exponent());
  for (const auto& [site, letter] : letters()) out += " " + std::to_string(site) + ":" + letter;
  return out;
}

int PauliWord::phase_exponent() const {
  return mod4(weyl_phase_ - long(overlap_count(xi_.plus, xi_.minus)));
}

std::vector<std::pair<PauliWord::Site, char>> PauliWord::letters() const {
  std::vector<std::pair<Site, char>> out;
  if (xi_.is_zero()) return out;
  for (Site x = xi_.min_deg(); x <= xi_.max_deg(); ++x) {
    const char c = letter_of(xi_.plus.coeff(x), xi_.minus.coeff(x));
    if (c != 'I') out.emplace_back(x, c);
  }
  return out;
}

PauliWord weyl_mul(const PauliWord& a, const PauliWord& b) {
  const int sign = dot(b.xi().plus, a.xi().minus) ? 2 : 0;
  return {a.weyl_phase() + b.weyl_phase() + sign, a.xi() + b.xi()};
}

bool commutes(const PauliWord& a, const PauliWord& b) { return !symplectic_form(a.xi(), b.xi()); }

PauliWord apply_cqca(const CscaMatrix& a, const PauliWord& w) {
  const PhaseVector cx = a.column_x(), cz = a.column_z();
  const long kx = long(overlap_count(cx.plus, cx.minus));
  const long kz = long(overlap_count(cz.plus, cz.minus));
  long phase = w.weyl_phase();
  PhaseVector acc;
  auto absorb = [&](const PhaseVector& image, long k) {
    phase += k + (dot(image.plus, acc.minus) ? 2 : 0);
    acc = acc + image;
  };
  const PhaseVector& xi = w.xi();
  if (xi.is_zero()) return w;
  for (PauliWord::Site x = xi.min_deg(); x <= xi.max_deg(); ++x) {
    if (xi.plus.coeff(x)) absorb(translate(cx, x), kx);
    if (xi.minus.coeff(x)) absorb(translate(cz, x), kz);
  }
  return {int(mod4(phase)), acc};
}

ProductState ProductState::from_bloch(double x, double y, double z) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z) || x * x + y * y + z * z > 1 + 1e-12)
    throw DomainError("Bloch vector outside the unit ball");
  return {x, y, z};
}

std::complex<double> expectation(const ProductState& s, const PauliWord& w) {
  double product = 1;
  for (const auto& [site, letter] : w.letters()) {
    product *= letter == 'X' ? s.x : letter == 'Y' ? s.y : s.z;
    if (product == 0) break;
  }
  return i_pow(w.phase_exponent()) * product;
}

std::vector<std::complex<double>> expectation_timeseries(const CscaMatrix& a, const ProductState& s,
                                                         const PauliWord& w, int steps) {
  if (steps < 0) throw DomainError("negative horizon");
  std::vector<std::complex<double>> out;
  out.reserve(std::size_t(steps) + 1);
  PauliWord cur = w;
  for (int t = 0; t <= steps; ++t) {
    if (t > 0) cur = apply_cqca(a, cur);
    out.push_back(expectation(s, cur));
  }
  return out;
}

}  // namespace cqca
