#include "annulus/laurent.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace annulus;

TEST_SUITE("laurent") {

TEST_CASE("arithmetic_and_printing") {
  const Laurent x = Laurent::variable("x"), y = Laurent::variable("y");
  const Laurent a = Laurent::variable("a"), b = Laurent::variable("b");
  CHECK((y * Laurent::constant(2)).to_string() == "2*y");
  CHECK(Laurent::divide(y * Laurent::constant(2), x).to_string() == "2*y/x");
  CHECK(Laurent::divide(a + b, x).to_string() == "(a+b)/x");
  CHECK(Laurent::divide((a + b).pow(2), y).to_string() == "(a*a+2*a*b+b*b)/y");
  CHECK(Laurent::divide(x * (a + b), y).to_string() == "(a*x+b*x)/y");
  CHECK(Laurent::divide(Laurent::constant(1), x * y).to_string() == "1/(x*y)");
  CHECK((x - x).to_string() == "0");
  CHECK((a - b).to_string() == "a-b");
}

TEST_CASE("exact_division_by_polynomials") {
  const Laurent a = Laurent::variable("a"), b = Laurent::variable("b"), x = Laurent::variable("x");
  const Laurent num = (a + b).pow(3) * x.pow(-2);
  CHECK(Laurent::divide(num, (a + b) * x.pow(-1)) == (a + b).pow(2) * x.pow(-1));
  CHECK(error_code([&] { Laurent::divide(a, a + b); }) == "NotLaurent");
  CHECK(error_code([&] { Laurent::divide(a, Laurent()); }) == "NotLaurent");
  CHECK(error_code([&] { Laurent::divide(a, Laurent::constant(2)); }) == "NotLaurent");
}

TEST_CASE("parse_roundtrip") {
  for (const std::string s : {"2*y/x", "(a+b)/x", "(a*a+2*a*b+b*b)/y", "(a*x+b*x)/y", "x", "1/(x*y)", "a-b", "0"})
    CHECK(Laurent::parse(s).to_string() == s);
  CHECK(Laurent::parse("(a+b)^2/y") == Laurent::parse("(a*a+2*a*b+b*b)/y"));
  CHECK(Laurent::parse(" x * ( a + b ) / y ") == Laurent::parse("(a*x+b*x)/y"));
  CHECK(Laurent::parse("-x+2*x") == Laurent::parse("x"));
}

TEST_CASE("parse_errors") {
  for (const std::string s : {"", "(a+b", "a+", "a/(a+b)", "a $ b", "a^", "2x"})
    CHECK(error_code([&] { Laurent::parse(s); }) == "MalformedLaurent");
}

TEST_CASE("positivity_and_denominator") {
  const Laurent l = Laurent::parse("(a*a+2*a*b+b*b)/(x*y)");
  CHECK(l.positive());
  CHECK(l.denominator() == Monomial{{"x", 1}, {"y", 1}});
  CHECK_FALSE(Laurent::parse("a-b").positive());
}

}
