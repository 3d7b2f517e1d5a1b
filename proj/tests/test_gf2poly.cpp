#include <doctest.h>

#include "cqca/error.hpp"
#include "cqca/gf2poly.hpp"
#include "support.hpp"

using namespace cqca;
using namespace testgen;

TEST_CASE("addition") {
  CHECK((P("u^-1+u") + P("u^-1+u")).is_zero());
  CHECK(P("1") + P("u") == P("1+u"));
  CHECK(P("u^-1+1+u") + P("u^-1+u") == LaurentPoly::one());
}

TEST_CASE("multiplication") {
  CHECK(P("u^-1+u") * P("u") == P("1+u^2"));
  CHECK(P("1+u") * P("1+u") == P("1+u^2"));
  CHECK(P("u^-1+1+u") * P("u^-1+1+u") == P("u^-2+1+u^2"));
  CHECK((P("1+u") * LaurentPoly::zero()).is_zero());
}

TEST_CASE("gcd") {
  CHECK(gcd(P("u^-1+u"), P("1")) == LaurentPoly::one());
  CHECK(gcd(P("1+u^2"), P("1+u")) == P("1+u"));
  CHECK(gcd(P("u^-2+u^-1+u+u^2"), P("u^-3+u^3")) == P("1+u+u^3+u^4"));
  CHECK(gcd(P("u^5+u^7"), LaurentPoly::zero()) == P("1+u^2"));
  CHECK_THROWS_WITH_AS(gcd(LaurentPoly::zero(), LaurentPoly::zero()), "gcd undefined", DomainError);
}

TEST_CASE("exact division") {
  CHECK(div_exact(P("1+u^2"), P("1+u")) == P("1+u"));
  CHECK(div_exact(LaurentPoly::zero(), P("1+u")).is_zero());
  CHECK(div_exact(P("u^-3+u^3"), P("u^-2+u^-1+u+u^2")) == P("u^-1+1+u"));
  CHECK_THROWS_WITH_AS(div_exact(P("1+u+u^2"), P("1+u")), "not divisible", DomainError);
  CHECK_THROWS_AS(div_exact(P("1"), LaurentPoly::zero()), DomainError);
}

TEST_CASE("involution and predicates") {
  CHECK(P("u").involution() == P("u^-1"));
  CHECK(P("u^-1+1+u").involution() == P("u^-1+1+u"));
  CHECK(P("1+u^2").involution() == P("u^-2+1"));
  CHECK(P("u^-1+u").is_centered_palindrome());
  CHECK_FALSE(P("1+u").is_centered_palindrome());
  CHECK_FALSE(P("u^-1+u^3").is_centered_palindrome());
  CHECK(LaurentPoly::zero().is_centered_palindrome());
  CHECK(P("u^3").is_monomial());
  CHECK_FALSE(P("1+u").is_monomial());
  CHECK(P("u^-2+u^2").degree_span() == 4);
  CHECK(P("u^-2+u^2").max_deg() == 2);
  CHECK(LaurentPoly::zero().degree_span() == 0);
  CHECK_THROWS_WITH_AS(LaurentPoly::zero().max_deg(), "zero polynomial", DomainError);
  CHECK_THROWS_WITH_AS(LaurentPoly::zero().min_deg(), "zero polynomial", DomainError);
}

TEST_CASE("text form") {
  CHECK(P("u^-1+1+u").to_string() == "u^-1+1+u");
  CHECK(P("u + u^{-1} + 1").to_string() == "u^-1+1+u");
  CHECK(P("u+u").to_string() == "0");
  CHECK(P("0").is_zero());
  CHECK(P("u^+3") == LaurentPoly::monomial(3));
  for (const char* bad : {"", "+", "1+", "u^", "u^x", "v", "1 u", "u^{2"}) {
    INFO(bad);
    CHECK_THROWS_AS(P(bad), ParseError);
  }
  try {
    P("1+q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly p = random_poly(rng, -70, 70);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("multiplication agrees with an exponent-set model across word boundaries") {
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(rng, uniform(rng, -200, 0), uniform(rng, 0, 200));
    const LaurentPoly b = random_poly(rng, uniform(rng, -90, 10), uniform(rng, 10, 150));
    CHECK(a * b == from_set(naive_mul(to_set(a), to_set(b))));
  }
}

TEST_CASE("ring laws") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const LaurentPoly a = random_poly(rng, -8, 8), b = random_poly(rng, -5, 9), c = random_poly(rng, -9, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + a).is_zero());
    CHECK((a * b).involution() == a.involution() * b.involution());
    CHECK(a.involution().involution() == a);
    CHECK(pow(a, 3) == a * a * a);
  }
}

TEST_CASE("division inverts multiplication") {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const LaurentPoly a = random_poly(rng, -12, 12);
    const LaurentPoly b = random_nonzero_poly(rng, -6, 6);
    CHECK(div_exact(a * b, b) == a);
  }
}

TEST_CASE("gcd is a greatest common divisor") {
  Rng rng(5);
  for (int i = 0; i < 400; ++i) {
    const LaurentPoly c = random_nonzero_poly(rng, -3, 3);
    const LaurentPoly a = random_poly(rng, -5, 5) * c;
    const LaurentPoly b = random_poly(rng, -4, 6) * c;
    if (a.is_zero() && b.is_zero()) continue;
    const LaurentPoly g = gcd(a, b);
    CHECK(g.min_deg() == 0);
    CHECK(try_divide(a, g).has_value());
    CHECK(try_divide(b, g).has_value());
    CHECK(try_divide(g, c).has_value());
    CHECK(gcd(b, a) == g);
  }
}

TEST_CASE("units are exactly the monomials (exhaustive, span <= 4)") {
  for (const auto& base : all_polys_from_zero(4, false))
    for (Exp shift : {-3, 0, 2}) {
      const LaurentPoly a = base.shifted(shift);
      const auto inv = try_divide(LaurentPoly::one(), a);
      CHECK(inv.has_value() == a.is_monomial());
      if (inv) CHECK((*inv * a).is_one());
    }
}
