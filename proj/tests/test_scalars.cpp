#include <doctest.h>

#include "cocycle_lab/scalar_parse.hpp"
#include "cocycle_lab/scalars.hpp"
#include "oracles.hpp"

using namespace cocycle_lab;

namespace {

CycScalar random_scalar(std::mt19937& rng, int conductor) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), k(0, conductor - 1);
  CycScalar x;
  for (int t = 0; t < 3; ++t) x += CycScalar(Rational(num(rng), den(rng))) * root_of_unity(conductor, k(rng));
  return x;
}

}  // namespace

TEST_SUITE("scalars") {
  TEST_CASE("roots of unity") {
    CHECK(root_of_unity(4, 2) == CycScalar(-1));
    CHECK(root_of_unity(4, 1).pow(4) == CycScalar(1));
    CHECK(root_of_unity(3, 1) + root_of_unity(3, 2) == CycScalar(-1));
    CHECK(root_of_unity(2, 1) == CycScalar(-1));
    CHECK(root_of_unity(4, -1) == -CycScalar::i());
    for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15}) {
      for (int k = 0; k < n; ++k) {
        const CycScalar z = root_of_unity(n, k);
        CHECK(oracle::near(oracle::eval(z), oracle::root(n, k)));
        // Multiplicative order n / gcd(n, k).
        int ord = 1;
        while (!z.pow(ord).is_one()) ++ord;
        CHECK(ord == n / std::gcd(n, k));
      }
    }
  }

  TEST_CASE("field operations") {
    const CycScalar i = CycScalar::i();
    CHECK((CycScalar(1) + i) * (CycScalar(1) - i) == CycScalar(2));
    CHECK(CycScalar(-1).inverse() == CycScalar(-1));
    CHECK(root_of_unity(3, 1).pow(3) == CycScalar(1));
    CHECK(i.pow(-1) == -i);
    CHECK_THROWS(CycScalar().inverse());
    CHECK(CycScalar().is_zero());
    CHECK(CycScalar(1).is_one());
    CHECK(CycScalar(Rational(3, 4)).as_rational() == Rational(3, 4));
    CHECK_FALSE(i.as_rational().has_value());
  }

  TEST_CASE("mixed conductors lift to the lcm") {
    const CycScalar x = CycScalar::i() * root_of_unity(3, 1);
    CHECK(x == root_of_unity(12, 3 + 4));
    CHECK(oracle::near(oracle::eval(x), oracle::root(12, 7)));
    CHECK(CycScalar::i().lifted(8) == root_of_unity(8, 2));
    CHECK(CycScalar::i().lifted(8) == CycScalar::i());
    CHECK_THROWS_AS(CycScalar::i().lifted(6), PreconditionError);
  }

  TEST_CASE("canonical form: different routes give equal values") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> k(-20, 20);
    for (int t = 0; t < 1000; ++t) {
      const int n = 3 + t % 10;
      const int a = k(rng), b = k(rng);
      CHECK(root_of_unity(n, a) * root_of_unity(n, b) == root_of_unity(n, a + b));
      CHECK(root_of_unity(n, a).pow(b) == root_of_unity(n, static_cast<long long>(a) * b));
    }
  }

  TEST_CASE("field axioms on random triples agree with complex evaluation") {
    std::mt19937 rng(9);
    for (int t = 0; t < 200; ++t) {
      const int n = std::array{3, 4, 5, 8, 12}[t % 5];
      const CycScalar x = random_scalar(rng, n), y = random_scalar(rng, n), z = random_scalar(rng, 4);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(oracle::near(oracle::eval(x * y + z), oracle::eval(x) * oracle::eval(y) + oracle::eval(z)));
      if (!x.is_zero()) {
        CHECK((x * x.inverse()).is_one());
        CHECK(oracle::near(oracle::eval(x.inverse()), 1.0L / oracle::eval(x)));
      }
      // Lifting commutes with arithmetic.
      CHECK((x * y).lifted(60 * 4) == x.lifted(60 * 4) * y.lifted(60 * 4));
    }
  }

  TEST_CASE("root exponents") {
    CHECK(as_root_exponent(CycScalar(-1), 4) == 2);
    CHECK_FALSE(as_root_exponent(CycScalar(2), 4).has_value());
    const CycScalar i = CycScalar::i();
    CHECK(as_root_exponent(i * i * i, 4) == 3);
    CHECK(as_root_exponent(root_of_unity(3, 2), 6) == 4);
    CHECK_FALSE(as_root_exponent(i, 6).has_value());
  }

  TEST_CASE("squares in mu_n") {
    CHECK(is_square_in_mu(CycScalar(-1), 4));
    CHECK(is_square_in_mu(root_of_unity(3, 1), 3));
    // Exhaust y in mu_4: no y^2 equals i.
    bool found = false;
    for (int k = 0; k < 4; ++k) found = found || root_of_unity(4, k).pow(2) == CycScalar::i();
    CHECK_FALSE(found);
    CHECK_FALSE(is_square_in_mu(CycScalar::i(), 4));
    CHECK_THROWS_AS(is_square_in_mu(CycScalar(2), 4), UndecidableError);
  }

  TEST_CASE("square classes of rationals and roots") {
    CHECK(square_class(CycScalar(4), 4) == SquareClass::trivial);
    CHECK(square_class(CycScalar(Rational(9, 4)), 4) == SquareClass::trivial);
    CHECK(square_class(CycScalar(2), 4) == SquareClass::nontrivial);
    CHECK(square_class(CycScalar(2), 8) == SquareClass::trivial);   // (zeta8 + zeta8^-1)^2 = 2
    CHECK(square_class(CycScalar(-1), 4) == SquareClass::trivial);
    CHECK(square_class(CycScalar(-1), 1) == SquareClass::nontrivial);
    CHECK(square_class(CycScalar(-3), 3) == SquareClass::trivial);  // (zeta3 - zeta3^2)^2 = -3
    CHECK(square_class(CycScalar::i(), 4) == SquareClass::nontrivial);
    CHECK(square_class(CycScalar(1) + CycScalar::i(), 4) == SquareClass::undecided);
    const CycScalar s2 = root_of_unity(8, 1) + root_of_unity(8, -1);
    CHECK(s2 * s2 == CycScalar(2));
  }

  TEST_CASE("scalar parser") {
    CHECK(parse_scalar("-1") == CycScalar(-1));
    CHECK(parse_scalar("1/2") == CycScalar(Rational(1, 2)));
    CHECK(parse_scalar("i") == CycScalar::i());
    CHECK(parse_scalar("-i") == -CycScalar::i());
    CHECK(parse_scalar("zeta3^2") == root_of_unity(3, 2));
    CHECK(parse_scalar("zeta5^-1") == root_of_unity(5, 4));
    CHECK(parse_scalar("2*i") == CycScalar(2) * CycScalar::i());
    CHECK(parse_scalar("(1+i)^2") == CycScalar(2) * CycScalar::i());
    CHECK(parse_scalar(" 5 / 3 ") == CycScalar(Rational(5, 3)));
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("zeta"), ParseError);
    CHECK_THROWS_AS(parse_scalar("2 +"), ParseError);
    CHECK_THROWS_AS(parse_scalar("j"), ParseError);
  }
}
