#include <doctest.h>

#include "cqca/error.hpp"
#include "cqca/symplectic.hpp"
#include "support.hpp"

using namespace cqca;
using namespace testgen;

TEST_CASE("wedge examples") {
  CHECK(wedge({P("1"), P("u")}, {P("1"), P("u^-1")}) == P("u^-1+u"));
  const PhaseVector xi{P("1"), P("u+u^2")};
  CHECK(wedge(xi, xi).is_zero());
  CHECK(wedge(xi, bar(xi)) == P("u^-2+u^-1+u+u^2"));
  const PhaseVector eta{P("1+u"), P("u^2")};
  CHECK(wedge(eta, bar(eta)) == P("u^-2+u^-1+u+u^2"));
}

TEST_CASE("minimality and translation") {
  CHECK(is_minimal({P("1"), P("u")}));
  CHECK_FALSE(is_minimal({P("1+u"), P("u+u^2")}));
  CHECK(is_minimal({P("0"), P("u^3")}));
  CHECK_FALSE(is_minimal({P("0"), P("1+u")}));
  CHECK_THROWS_AS(is_minimal(PhaseVector{}), DomainError);
  CHECK(translate({P("1"), P("u")}, 2) == PhaseVector{P("u^2"), P("u^3")});
  CHECK(unit_normalized(PhaseVector{P("u^-1"), P("1")}) == PhaseVector{P("1"), P("u")});
}

TEST_CASE("text form") {
  const PhaseVector xi = PhaseVector::parse("(1+u | u^2)");
  CHECK(xi == PhaseVector{P("1+u"), P("u^2")});
  CHECK(xi.to_string() == "(1+u | u^2)");
  CHECK(PhaseVector::parse(" (0|1) ") == PhaseVector{P("0"), P("1")});
  for (const char* bad : {"1 | u", "(1 u)", "(1 | u", "(1 | w)", "x(1|u)", "(1|u)x"}) {
    INFO(bad);
    CHECK_THROWS_AS(PhaseVector::parse(bad), ParseError);
  }
}

TEST_CASE("wedge algebra") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const PhaseVector a = random_vector(rng, -5, 5), b = random_vector(rng, -4, 6), c = random_vector(rng, -6, 3);
    const Exp k = uniform(rng, -7, 7);
    CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
    CHECK(wedge(a, b) == wedge(b, a));
    CHECK(wedge(translate(a, k), translate(b, k)) == LaurentPoly::monomial(2 * k) * wedge(a, b));
    CHECK(bar(bar(a)) == a);
    CHECK(wedge(bar(a), bar(b)) == wedge(a, b).involution());
  }
}

TEST_CASE("symplectic form is the constant term of the wedge with the reflection") {
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const PhaseVector a = random_vector(rng, -5, 5), b = random_vector(rng, -5, 5);
    CHECK(symplectic_form(a, b) == wedge(a, bar(b)).coeff(0));
    CHECK(symplectic_form(a, b) == symplectic_form(b, a));
    CHECK_FALSE(symplectic_form(a, a));
  }
}
