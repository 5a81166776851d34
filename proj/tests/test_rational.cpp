#include "doctest.h"

#include "blackwell/errors.hpp"
#include "blackwell/linalg.hpp"
#include "blackwell/rational.hpp"

using namespace blackwell;

TEST_SUITE_BEGIN("core");

TEST_CASE("rational parsing accepts fractions, integers and decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("15") == Rational(15));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1e-2") == Rational(1, 100));
  CHECK(parse_rational("2.5e3") == Rational(2500));
  CHECK(parse_rational("-0.04") == Rational(-1, 25));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("rational round trips through strings") {
  for (const char* s : {"0", "1", "-1", "3/4", "-22/7", "1000000000000000001/3"}) {
    CHECK(rational_to_string(parse_rational(s)) == s);
  }
}

TEST_CASE("rational_from_double is exact") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-0.75) == Rational(-3, 4));
  // 0.1 is not representable; the conversion must capture the actual bits.
  Rational r = rational_from_double(0.1);
  CHECK(r == Rational(BigInt("3602879701896397"), BigInt("36028797018963968")));
  CHECK(to_double(r) == 0.1);
  CHECK(rational_from_double(3.0) == Rational(3));
  CHECK(rational_from_double(0.0) == Rational(0));
}

TEST_CASE("linear solver classifies systems") {
  // Unique: x + y = 3, x - y = 1.
  RationalMatrix a = {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
  RationalVector b = {Rational(3), Rational(1)};
  auto res = solve_linear(a, b);
  REQUIRE(res.consistent);
  CHECK(res.unique());
  CHECK(res.particular[0] == Rational(2));
  CHECK(res.particular[1] == Rational(1));

  // Inconsistent.
  RationalMatrix a2 = {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
  RationalVector b2 = {Rational(1), Rational(3)};
  CHECK_FALSE(solve_linear(a2, b2).consistent);

  // Underdetermined: one equation, two unknowns.
  RationalMatrix a3 = {{Rational(1), Rational(2)}};
  RationalVector b3 = {Rational(4)};
  auto res3 = solve_linear(a3, b3);
  REQUIRE(res3.consistent);
  CHECK(res3.kernel.size() == 1);
  // Kernel direction satisfies A d = 0.
  CHECK(res3.kernel[0][0] + Rational(2) * res3.kernel[0][1] == Rational(0));
}

TEST_CASE("rational rank matches hand counts") {
  RationalMatrix m = {{Rational(1), Rational(2), Rational(3)},
                      {Rational(2), Rational(4), Rational(6)},
                      {Rational(0), Rational(1), Rational(1)}};
  CHECK(rational_rank(m) == 2);
}

TEST_SUITE_END();
