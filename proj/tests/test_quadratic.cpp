#include <mpfr.h>

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "iet/errors.hpp"

using iet::QuadraticNumber;
using iet::Rational;

namespace {

// Enclosure of rat + coef*sqrt(d) in 128-bit interval arithmetic.
struct Enclosure {
  double lo, hi;
};

Enclosure enclose(const QuadraticNumber& x) {
  mpfr_t r_lo, r_hi, s_lo, s_hi;
  mpfr_inits2(128, r_lo, r_hi, s_lo, s_hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(r_lo, x.rat().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r_hi, x.rat().get_mpq_t(), MPFR_RNDU);
  mpfr_set_si(s_lo, x.field(), MPFR_RNDD);
  mpfr_sqrt(s_lo, s_lo, MPFR_RNDD);
  mpfr_set_si(s_hi, x.field(), MPFR_RNDU);
  mpfr_sqrt(s_hi, s_hi, MPFR_RNDU);
  if (sgn(x.coef()) >= 0) {
    mpfr_mul_q(s_lo, s_lo, x.coef().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(s_hi, s_hi, x.coef().get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_swap(s_lo, s_hi);
    mpfr_mul_q(s_lo, s_lo, x.coef().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(s_hi, s_hi, x.coef().get_mpq_t(), MPFR_RNDU);
  }
  mpfr_add(r_lo, r_lo, s_lo, MPFR_RNDD);
  mpfr_add(r_hi, r_hi, s_hi, MPFR_RNDU);
  Enclosure e{mpfr_get_d(r_lo, MPFR_RNDD), mpfr_get_d(r_hi, MPFR_RNDU)};
  mpfr_clears(r_lo, r_hi, s_lo, s_hi, static_cast<mpfr_ptr>(nullptr));
  return e;
}

QuadraticNumber random_qn(std::mt19937& rng) {
  std::uniform_int_distribution<long> n(-50, 50);
  std::uniform_int_distribution<unsigned long> d(1, 12);
  return QuadraticNumber(Rational(n(rng), d(rng)), Rational(n(rng), d(rng)), 5);
}

}  // namespace

TEST_CASE("addition and multiplication in Q(sqrt 5)") {
  const QuadraticNumber a = fixtures::alpha();
  CHECK(a + (1 - a) == QuadraticNumber(1));
  CHECK(a * 2 == QuadraticNumber::parse("3-sqrt(5)"));
  const QuadraticNumber x = 3 * a - 1;
  CHECK(x.str() == "7/2-3/2*sqrt(5)");
  const Enclosure e = enclose(x);
  CHECK(e.lo > 0.1458);
  CHECK(e.hi < 0.1460);
}

TEST_CASE("exact comparison") {
  const QuadraticNumber a = fixtures::alpha();
  CHECK((a <=> 1 - a) == std::strong_ordering::less);
  CHECK((a <=> a) == std::strong_ordering::equal);
  CHECK((3 * a - 1).sign() > 0);
  CHECK(enclose(a).hi < enclose(1 - a).lo);
  // 49 > 45 decides sign of 7/2 - 3/2 sqrt 5
  CHECK(Rational(49, 4) > Rational(9, 4) * 5);
}

TEST_CASE("mixed fields are rejected") {
  const QuadraticNumber s2 = QuadraticNumber::sqrt_of(2);
  const QuadraticNumber s5 = QuadraticNumber::sqrt_of(5);
  CHECK_THROWS_AS(s2 + s5, iet::MixedFieldError);
  CHECK_THROWS_AS(s2 * s5, iet::MixedFieldError);
  CHECK_THROWS_AS((void)(s2 < s5), iet::MixedFieldError);
  CHECK_NOTHROW(s2 + QuadraticNumber(3));
  CHECK(s2 != s5);
}

TEST_CASE("canonical form") {
  CHECK(QuadraticNumber::sqrt_of(20) == 2 * QuadraticNumber::sqrt_of(5));
  CHECK(QuadraticNumber::sqrt_of(4) == QuadraticNumber(2));
  CHECK(QuadraticNumber::sqrt_of(9).is_rational());
  CHECK(QuadraticNumber(Rational(2, 4), Rational(0), 7).field() == 0);
  CHECK(QuadraticNumber::sqrt_of(5) * QuadraticNumber::sqrt_of(5) == QuadraticNumber(5));
}

TEST_CASE("text form round trip") {
  for (const char* text : {"0", "1", "-3/7", "7/2-3/2*sqrt(5)", "0+1/2*sqrt(5)", "-1/2+1/2*sqrt(5)"}) {
    const QuadraticNumber x = QuadraticNumber::parse(text);
    CHECK(QuadraticNumber::parse(x.str()) == x);
  }
  CHECK(QuadraticNumber::parse("sqrt(5)") == QuadraticNumber::sqrt_of(5));
  CHECK(QuadraticNumber::parse("-sqrt(5)") == -QuadraticNumber::sqrt_of(5));
  CHECK(QuadraticNumber::parse("1/2*sqrt(5)").str() == "0+1/2*sqrt(5)");
  CHECK(QuadraticNumber::parse("2+sqrt(20)").str() == "2+2*sqrt(5)");
  for (const char* bad : {"", "1/0", "abc", "1+", "sqrt(-5)", "1 + sqrt(5)", "1/2*sqrt(5"})
    CHECK_THROWS_AS(QuadraticNumber::parse(bad), iet::ParseError);
}

TEST_CASE("conversion to double") {
  CHECK(fixtures::alpha().to_double() == 0.38196601125010515);
  CHECK(QuadraticNumber(0).to_double() == 0.0);
  CHECK(QuadraticNumber(1).to_double() == 1.0);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const QuadraticNumber x = random_qn(rng), y = random_qn(rng), z = random_qn(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + (-x) == QuadraticNumber(0));
    CHECK(x - y == -(y - x));
    CHECK(QuadraticNumber::parse(x.str()) == x);
  }
}

TEST_CASE("order agrees with interval enclosures") {
  std::mt19937 rng(23);
  for (int i = 0; i < 500; ++i) {
    const QuadraticNumber x = random_qn(rng), y = random_qn(rng);
    const Enclosure ex = enclose(x), ey = enclose(y);
    if (ex.hi < ey.lo) CHECK(x < y);
    if (ey.hi < ex.lo) CHECK(y < x);
    if (std::abs(x.to_double() - y.to_double()) > 1e-9) CHECK((x < y) == (x.to_double() < y.to_double()));
    CHECK((x <=> y) == (0 <=> (y <=> x)));
  }
}
