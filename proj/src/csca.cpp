#include "cqca/csca.hpp"

#include <charconv>

#include "cqca/error.hpp"

namespace cqca {
namespace {

LaurentPoly u_pow(LaurentPoly::Exponent k) { return LaurentPoly::monomial(k); }

LaurentPoly sym_pair(int n) { return u_pow(n) + u_pow(-n); }

struct MatrixParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  LaurentPoly poly() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ';' && text[pos] != ']') ++pos;
    try {
      return LaurentPoly::parse(text.substr(start, pos - start));
    } catch (const ParseError& e) {
      throw ParseError("bad matrix entry", start + e.position());
    }
  }
  CscaMatrix matrix() {
    CscaMatrix m;
    expect('[');
    expect('[');
    m.a11 = poly();
    expect(';');
    m.a12 = poly();
    expect(']');
    expect(';');
    expect('[');
    m.a21 = poly();
    expect(';');
    m.a22 = poly();
    expect(']');
    expect(']');
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    return m;
  }
};

}  // namespace

CscaMatrix CscaMatrix::identity() { return {LaurentPoly::one(), {}, {}, LaurentPoly::one()}; }

std::string CscaMatrix::to_string() const {
  return "[[" + a11.to_string() + "; " + a12.to_string() + "]; [" + a21.to_string() + "; " +
         a22.to_string() + "]]";
}

CscaMatrix CscaMatrix::parse(std::string_view text) { return MatrixParser{text}.matrix(); }

CscaMatrix mul(const CscaMatrix& a, const CscaMatrix& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

CscaMatrix pow(const CscaMatrix& a, std::uint64_t t) {
  CscaMatrix result = CscaMatrix::identity();
  CscaMatrix base = a;
  while (t != 0) {
    if (t & 1U) result = result * base;
    t >>= 1;
    if (t != 0) base = base * base;
  }
  return result;
}

PhaseVector apply(const CscaMatrix& a, const PhaseVector& xi) {
  return {a.a11 * xi.plus + a.a12 * xi.minus, a.a21 * xi.plus + a.a22 * xi.minus};
}

LaurentPoly trace(const CscaMatrix& a) { return a.a11 + a.a22; }

LaurentPoly det(const CscaMatrix& a) { return a.a11 * a.a22 + a.a12 * a.a21; }

CscaMatrix inverse(const CscaMatrix& a) {
  if (!det(a).is_one()) throw DomainError("inverse: determinant is not 1");
  return {a.a22, a.a12, a.a21, a.a11};
}

LaurentPoly::Exponent neighborhood_radius(const CscaMatrix& a) {
  return std::max({a.a11.max_abs_exponent(), a.a12.max_abs_exponent(), a.a21.max_abs_exponent(),
                   a.a22.max_abs_exponent()});
}

std::vector<std::string> validate(const CscaMatrix& m) {
  std::vector<std::string> out;
  const LaurentPoly d = det(m);
  if (!d.is_one()) out.push_back("determinant is " + d.to_string() + ", expected 1");
  const std::pair<const char*, const LaurentPoly*> entries[] = {
      {"a11", &m.a11}, {"a12", &m.a12}, {"a21", &m.a21}, {"a22", &m.a22}};
  for (const auto& [name, p] : entries)
    if (!p->is_centered_palindrome())
      out.push_back(std::string("entry ") + name + " = " + p->to_string() + " is not a centered palindrome");
  auto check_column = [&](const char* name, const LaurentPoly& top, const LaurentPoly& bottom) {
    if (top.is_zero() && bottom.is_zero()) {
      out.push_back(std::string(name) + " is zero");
    } else if (!gcd(top, bottom).is_monomial()) {
      out.push_back(std::string(name) + " entries share the factor " + gcd(top, bottom).to_string());
    }
  };
  check_column("column 1", m.a11, m.a21);
  check_column("column 2", m.a12, m.a22);
  return out;
}

std::string Classification::to_string() const {
  switch (kind) {
    case Kind::Periodic:
      return "periodic period=" + std::to_string(value);
    case Kind::Glider:
      return "glider n=" + std::to_string(value);
    case Kind::Fractal:
      return "fractal";
  }
  return {};
}

Classification classify(const CscaMatrix& a) {
  const LaurentPoly tr = trace(a);
  if (tr.is_zero()) return Classification::periodic(2);
  if (tr.is_one()) return Classification::periodic(3);
  if (tr.weight() == 2) {
    const auto hi = tr.max_deg();
    if (hi >= 1 && tr.min_deg() == -hi) return Classification::glider(int(hi));
  }
  return Classification::fractal();
}

Glider minimal_glider(const CscaMatrix& a) {
  const Classification c = classify(a);
  if (c.kind != Classification::Kind::Glider) throw DomainError("no gliders");
  const int n = c.value;
  PhaseVector xi;
  if (!a.a12.is_zero()) {
    const LaurentPoly lower = u_pow(n) + a.a11;
    const LaurentPoly g = gcd(lower, a.a12);
    xi = {div_exact(a.a12, g), div_exact(lower, g)};
  } else {
    // Second row of (a - u^n) xi = 0: a21 xi+ = (u^n + a22) xi-.
    const LaurentPoly upper = u_pow(n) + a.a22;
    const LaurentPoly g = gcd(upper, a.a21);
    xi = {div_exact(upper, g), div_exact(a.a21, g)};
  }
  if (apply(a, xi) != translate(xi, n)) throw InvariantError("minimal_glider: eigen-equation failed");
  return {unit_normalized(xi), n};
}

CscaMatrix csca_from_glider(const PhaseVector& xi, int n) {
  if (n < 1) throw DomainError("glider speed must be positive");
  if (!is_minimal(xi)) throw DomainError("glider vector is not minimal");
  const PhaseVector xb = bar(xi);
  const LaurentPoly w = wedge(xi, xb);
  if (w.is_zero() || !try_divide(sym_pair(n), w))
    throw DomainError("not a valid glider for speed " + std::to_string(n));
  const LaurentPoly up = u_pow(n), down = u_pow(-n);
  CscaMatrix m{div_exact(up * xi.plus * xb.minus + down * xb.plus * xi.minus, w),
               div_exact(sym_pair(n) * xi.plus * xb.plus, w),
               div_exact(sym_pair(n) * xi.minus * xb.minus, w),
               div_exact(down * xi.plus * xb.minus + up * xb.plus * xi.minus, w)};
  if (!validate(m).empty()) throw InvariantError("csca_from_glider produced an invalid matrix");
  return m;
}

CscaMatrix conjugator(const PhaseVector& from, const PhaseVector& to) {
  const PhaseVector fb = bar(from), tb = bar(to);
  const LaurentPoly w = wedge(from, fb);
  if (w.is_zero()) throw DomainError("conjugator: source has vanishing wedge with its reflection");
  if (w != wedge(to, tb)) throw DomainError("conjugator: wedge products differ");
  auto solve = [&](const LaurentPoly& numerator, const char* name) {
    auto q = try_divide(numerator, w);
    if (!q) throw DomainError(std::string("conjugator: no solution for ") + name + " in R");
    return *q;
  };
  CscaMatrix b{solve(to.plus * fb.minus + tb.plus * from.minus, "b11"),
               solve(from.plus * tb.plus + fb.plus * to.plus, "b12"),
               solve(to.minus * fb.minus + tb.minus * from.minus, "b21"),
               solve(from.plus * tb.minus + fb.plus * to.minus, "b22")};
  if (!det(b).is_one()) throw DomainError("conjugator: solution has determinant " + det(b).to_string());
  if (!validate(b).empty()) throw DomainError("conjugator: solution is not a CSCA");
  return b;
}

CscaMatrix conjugator_to_standard(const PhaseVector& xi) {
  if (!is_minimal(xi)) throw DomainError("conjugator_to_standard: vector is not minimal");
  if (wedge(xi, bar(xi)) != sym_pair(1)) throw DomainError("not a speed-1 glider");
  return conjugator(xi, {LaurentPoly::one(), u_pow(1)});
}

CscaMatrix invariance_family(const PhaseVector& xi, const LaurentPoly& a) {
  if (!a.is_centered_palindrome()) throw DomainError("invariance_family: parameter is not a centered palindrome");
  if (!xi.plus.is_centered_palindrome() || !xi.minus.is_centered_palindrome())
    throw DomainError("invariance_family: generator is not centered reflection invariant");
  if (!is_minimal(xi)) throw DomainError("invariance_family: generator components share a factor");
  const LaurentPoly diag = LaurentPoly::one() + a * xi.plus * xi.minus;
  return {diag, a * xi.plus * xi.plus, a * xi.minus * xi.minus, diag};
}

CscaMatrix hadamard_h() { return {LaurentPoly::one(), {}, LaurentPoly::one(), LaurentPoly::one()}; }

CscaMatrix swap_p() { return {{}, LaurentPoly::one(), LaurentPoly::one(), {}}; }

CscaMatrix shear(const LaurentPoly& a) {
  if (!a.is_centered_palindrome()) throw DomainError("shear: parameter is not a centered palindrome");
  return {LaurentPoly::one(), {}, a, LaurentPoly::one()};
}

CscaMatrix shear_gn(int n) { return shear(sym_pair(n)); }

CscaMatrix standard_glider() { return {{}, LaurentPoly::one(), LaurentPoly::one(), sym_pair(1)}; }

CscaMatrix nearest_neighbor_glider() {
  return {LaurentPoly::one(), sym_pair(1), LaurentPoly::one(), sym_pair(1) + LaurentPoly::one()};
}

CscaMatrix fractal_example() {
  return {sym_pair(1) + LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::one(), {}};
}

CscaMatrix named_automaton(std::string_view key) {
  if (key == "Gs") return standard_glider();
  if (key == "G") return nearest_neighbor_glider();
  if (key == "F") return fractal_example();
  if (key == "H") return hadamard_h();
  if (key == "P") return swap_p();
  if (key.starts_with("Gn:")) {
    int n = 0;
    const char* first = key.data() + 3;
    const char* last = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last || n < 0) throw ParseError("bad shear index", 3);
    return shear_gn(n);
  }
  if (!key.empty() && key.front() == '[') return CscaMatrix::parse(key);
  throw ParseError("unknown automaton '" + std::string(key) + "'", 0);
}

}  // namespace cqca
