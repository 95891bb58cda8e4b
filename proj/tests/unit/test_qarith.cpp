#include <doctest.h>

#include <cmath>

#include "fockq/errors.hpp"
#include "fockq/qarith.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace fockq;

namespace {

LaurentPoly from_map(const std::map<int, long>& coeffs) {
  std::vector<LaurentPoly::Term> terms;
  for (auto [e, c] : coeffs) terms.push_back({e, Rational(c)});
  return LaurentPoly::from_terms(std::move(terms));
}

const LaurentPoly q = LaurentPoly::monomial(1);
const LaurentPoly qbar = LaurentPoly::monomial(-1);

}  // namespace

TEST_CASE("qint small values") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == LaurentPoly(1L));
  CHECK(qint(3) == LaurentPoly::monomial(2) + LaurentPoly(1L) + LaurentPoly::monomial(-2));
  CHECK(qint(-2) == -(q + qbar));
}

TEST_CASE("qint agrees with the geometric-sum expansion") {
  for (int x = -7; x <= 7; ++x) {
    CAPTURE(x);
    CHECK(qint(x) == from_map(oracle::qint_coefficients(x)));
  }
}

TEST_CASE("qint is antisymmetric") {
  for (int x = 0; x <= 9; ++x) CHECK(qint(-x) == -qint(x));
}

TEST_CASE("qfactorial") {
  CHECK(qfactorial(0) == LaurentPoly(1L));
  CHECK(qfactorial(2) == q + qbar);
  CHECK(qfactorial(3) == (q + qbar) * (LaurentPoly::monomial(2) + LaurentPoly(1L) + LaurentPoly::monomial(-2)));
  CHECK_THROWS_AS(qfactorial(-1), ArgumentError);
}

TEST_CASE("divide_exact") {
  const LaurentPoly q_minus_qbar = q - qbar;
  CHECK(divide_exact(LaurentPoly::monomial(2) - LaurentPoly::monomial(-2), q_minus_qbar) == qint(2));
  CHECK(divide_exact(LaurentPoly(), q_minus_qbar).is_zero());
  CHECK_THROWS_AS(divide_exact(q_minus_qbar, LaurentPoly::monomial(2) - LaurentPoly::monomial(-2)), InexactDivision);
  CHECK_THROWS_AS(divide_exact(q, LaurentPoly()), ArgumentError);
}

TEST_CASE("divide_exact recovers q-integers from their quotient form") {
  for (int x = -6; x <= 6; ++x) {
    const LaurentPoly num = LaurentPoly::monomial(x) - LaurentPoly::monomial(-x);
    CHECK(divide_exact(num, q - qbar) == qint(x));
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate(qint(3), Rational(1)) == 3);
  CHECK(evaluate(qint(2), Rational(2)) == Rational(5, 2));
  CHECK(evaluate(LaurentPoly(), Rational(7)) == 0);
  CHECK_THROWS_AS(evaluate(q, Rational(0)), ArgumentError);
}

TEST_CASE("evaluate matches the quotient definition at generic q") {
  for (const oracle::cplx z : {oracle::cplx(0.7, 0), oracle::cplx(1.3, 0), oracle::cplx(0.5, 0.75)}) {
    for (int x = -5; x <= 5; ++x) {
      CAPTURE(x);
      CHECK(std::abs(evaluate(qint(x), Complex(z)) - oracle::qnum(x, z)) < 1e-12);
    }
  }
  // Frozen from the oracle.
  CHECK(std::abs(evaluate(qint(3), 0.7) - 3.5308163265306129) < 1e-14);
  CHECK(std::abs(evaluate(qint(3), Complex(0.5, 0.75)) - Complex(0.21412721893491121, -0.38609467455621299)) < 1e-14);
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  gen::Source src(20261019);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = src.laurent(), b = src.laurent(), c = src.laurent();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * LaurentPoly(1L) == a);
  }
}

TEST_CASE("exact division inverts multiplication") {
  gen::Source src(7);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = src.laurent();
    const LaurentPoly b = src.nonzero_laurent();
    CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  gen::Source src(11);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = src.laurent(), b = src.laurent();
    const Rational at = src.rational();
    if (sgn(at) == 0) continue;
    CHECK(evaluate(a * b, at) == evaluate(a, at) * evaluate(b, at));
    CHECK(evaluate(a + b, at) == evaluate(a, at) + evaluate(b, at));
  }
}

TEST_CASE("canonical form: no zero coefficients, ascending exponents") {
  gen::Source src(3);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = src.laurent() * src.laurent() - src.laurent();
    int last = INT32_MIN;
    for (const auto& t : a.terms()) {
      CHECK(sgn(t.coeff) != 0);
      CHECK(t.exponent > last);
      last = t.exponent;
    }
  }
}

TEST_CASE("json round trip") {
  gen::Source src(5);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = src.laurent();
    CHECK(laurent_from_json(nlohmann::json::parse(to_json(a).dump())) == a);
  }
  CHECK(to_json(qint(3)).dump() == R"({"2":"1/1","0":"1/1","-2":"1/1"})");
}

TEST_CASE("to_string") {
  CHECK(to_string(qint(3)) == "q^2 + 1 + q^-2");
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(-(q + qbar)) == "-q - q^-1");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("7/10") == Rational(7, 10));
  CHECK(parse_rational("0.7") == Rational(7, 10));
  CHECK(parse_rational("-1.25e-1") == Rational(-1, 8));
  CHECK(parse_rational("3") == 3);
  // Leading zeros are decimal, never octal.
  CHECK(parse_rational("0.75") == Rational(3, 4));
  CHECK(parse_rational("+0.0625") == Rational(1, 16));
  CHECK(parse_rational("010/08") == Rational(5, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("abc"), ArgumentError);
  CHECK_THROWS_AS(parse_rational(""), ArgumentError);
  CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_double(Rational(1, 10)) == 0.1);
  CHECK(to_double(Rational(-7, 10)) == -0.7);
  CHECK(to_double(Rational(13, 10)) == 1.3);
}
