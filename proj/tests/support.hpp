#pragma once

#include <random>
#include <set>
#include <vector>

#include "cqca/csca.hpp"
#include "cqca/pauli.hpp"

namespace testgen {

using cqca::CscaMatrix;
using cqca::LaurentPoly;
using cqca::PhaseVector;
using Exp = LaurentPoly::Exponent;
using Rng = std::mt19937_64;

inline LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

/// Reference model: a polynomial as the set of its exponents.
using ExpSet = std::set<Exp>;

inline ExpSet to_set(const LaurentPoly& p) {
  const auto e = p.exponents();
  return {e.begin(), e.end()};
}

inline LaurentPoly from_set(const ExpSet& s) {
  std::vector<Exp> v(s.begin(), s.end());
  return LaurentPoly::from_exponents(v);
}

inline ExpSet naive_mul(const ExpSet& a, const ExpSet& b) {
  ExpSet out;
  for (Exp x : a)
    for (Exp y : b) {
      auto [it, inserted] = out.insert(x + y);
      if (!inserted) out.erase(it);
    }
  return out;
}

inline Exp uniform(Rng& rng, Exp lo, Exp hi) { return std::uniform_int_distribution<Exp>(lo, hi)(rng); }

/// Random polynomial with exponents in [lo, hi], each present with probability 1/2.
inline LaurentPoly random_poly(Rng& rng, Exp lo, Exp hi) {
  std::vector<Exp> e;
  for (Exp k = lo; k <= hi; ++k)
    if (rng() & 1U) e.push_back(k);
  return LaurentPoly::from_exponents(e);
}

inline LaurentPoly random_nonzero_poly(Rng& rng, Exp lo, Exp hi) {
  for (;;) {
    LaurentPoly p = random_poly(rng, lo, hi);
    if (!p.is_zero()) return p;
  }
}

/// Random centered palindrome with exponents in [-r, r].
inline LaurentPoly random_palindrome(Rng& rng, Exp r) {
  std::vector<Exp> e;
  if (rng() & 1U) e.push_back(0);
  for (Exp k = 1; k <= r; ++k)
    if (rng() & 1U) {
      e.push_back(k);
      e.push_back(-k);
    }
  return LaurentPoly::from_exponents(e);
}

inline CscaMatrix random_generator(Rng& rng) {
  switch (rng() % 6) {
    case 0: return cqca::hadamard_h();
    case 1: return cqca::swap_p();
    case 2: return cqca::shear(random_palindrome(rng, 2));
    case 3: return cqca::standard_glider();
    case 4: return cqca::nearest_neighbor_glider();
    default: return cqca::fractal_example();
  }
}

/// Product of 1..max_factors random generators; always a valid CSCA.
inline CscaMatrix random_csca(Rng& rng, int max_factors = 4) {
  CscaMatrix m = random_generator(rng);
  const int k = int(rng() % unsigned(max_factors));
  for (int i = 0; i < k; ++i) m = m * random_generator(rng);
  return m;
}

inline PhaseVector random_vector(Rng& rng, Exp lo, Exp hi) {
  return {random_poly(rng, lo, hi), random_poly(rng, lo, hi)};
}

inline cqca::PauliWord random_word(Rng& rng, Exp lo, Exp hi) {
  return {int(rng() % 4), random_vector(rng, lo, hi)};
}

/// Every polynomial whose exponents lie in [0, span] and which has min_deg 0
/// (plus zero when include_zero is set).
inline std::vector<LaurentPoly> all_polys_from_zero(Exp span, bool include_zero) {
  std::vector<LaurentPoly> out;
  if (include_zero) out.emplace_back();
  for (unsigned mask = 1; mask < (1U << (span + 1)); mask += 2) {
    std::vector<Exp> e;
    for (Exp k = 0; k <= span; ++k)
      if (mask >> k & 1U) e.push_back(k);
    out.push_back(LaurentPoly::from_exponents(e));
  }
  return out;
}

}  // namespace testgen

#include "cqca/stabilizer.hpp"

namespace testgen {

/// All centered palindromes with exponents in [-r, r] (including zero).
inline std::vector<LaurentPoly> all_palindromes(Exp r) {
  std::vector<LaurentPoly> out;
  for (unsigned mask = 0; mask < (1U << (r + 1)); ++mask) {
    std::vector<Exp> e;
    if (mask & 1U) e.push_back(0);
    for (Exp k = 1; k <= r; ++k)
      if (mask >> k & 1U) {
        e.push_back(k);
        e.push_back(-k);
      }
    out.push_back(LaurentPoly::from_exponents(e));
  }
  return out;
}

/// Every valid centered stabilizer generator with half-length at most max_n.
inline std::vector<PhaseVector> all_valid_generators(Exp max_n) {
  std::vector<PhaseVector> out;
  const auto pals = all_palindromes(max_n);
  for (const auto& x : pals)
    for (const auto& z : pals) {
      const PhaseVector xi{x, z};
      if (xi.is_zero() || !cqca::validate_stabilizer(xi).empty()) continue;
      out.push_back(xi);
    }
  return out;
}

inline PhaseVector random_valid_generator(Rng& rng, Exp max_n) {
  for (;;) {
    const Exp r = uniform(rng, 0, max_n);
    const PhaseVector xi{random_palindrome(rng, r), random_palindrome(rng, r)};
    if (!xi.is_zero() && cqca::validate_stabilizer(xi).empty()) return xi;
  }
}

}  // namespace testgen
