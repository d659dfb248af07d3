#include <doctest.h>

#include <random>

#include "dwarith/cyclotomic.hpp"

using namespace dwarith;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("N=4 fixtures: ζ² = −1 and the vanishing power sum") {
  auto zeta = [](long long e) { return Cyclotomic::root_power(4, e); };
  Cyclotomic one = Cyclotomic::integer(4, 1);

  // (1+ζ)(1−ζ) = 1 − ζ² = 2.
  CHECK((one + zeta(1)) * (one - zeta(1)) == Cyclotomic::integer(4, 2));

  // 1 + ζ + ζ² + ζ³ = 0.
  Cyclotomic total = Cyclotomic::zero(4);
  for (int e = 0; e < 4; ++e) total = total + zeta(e);
  CHECK(total.is_zero());

  // ζ^N = 1.
  CHECK(zeta(4) == one);
  CHECK(zeta(-1) == zeta(3));
}

TEST_CASE("canonical form distinguishes values exactly") {
  for (int n : {2, 3, 4, 6, 8, 12}) {
    // Distinct root powers below phi(n) have distinct canonical forms.
    for (int a = 0; a < euler_phi(n); ++a)
      for (int b = a + 1; b < euler_phi(n); ++b)
        CHECK(Cyclotomic::root_power(n, a) != Cyclotomic::root_power(n, b));
    // Powers wrap around.
    CHECK(Cyclotomic::root_power(n, n) == Cyclotomic::integer(n, 1));
  }
  // Denominators reduce against the content.
  CHECK(Cyclotomic::rational(4, 2, 2) == Cyclotomic::integer(4, 1));
  CHECK(Cyclotomic::rational(4, 10, 6) == Cyclotomic::rational(4, 5, 3));
  CHECK(Cyclotomic::rational(4, -1, -2) == Cyclotomic::rational(4, 1, 2));
  CHECK(Cyclotomic::rational(4, 0, 17) == Cyclotomic::zero(4));
}

TEST_CASE("ring axioms on random values") {
  std::mt19937_64 rng(43);
  for (int n : {2, 3, 4, 6}) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> den(1, 5);
    auto random_value = [&]() {
      Cyclotomic v = Cyclotomic::zero(n);
      for (int e = 0; e < n; ++e)
        v = v + Cyclotomic::root_power(n, e).scaled(coeff(rng), den(rng));
      return v;
    };
    for (int trial = 0; trial < 40; ++trial) {
      Cyclotomic a = random_value(), b = random_value(), c = random_value();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Cyclotomic::zero(n));
      CHECK(a * Cyclotomic::integer(n, 1) == a);
      // Conjugation is a ring involution fixing rationals.
      CHECK(a.conjugated().conjugated() == a);
      CHECK((a * b).conjugated() == a.conjugated() * b.conjugated());
      CHECK((a + b).conjugated() == a.conjugated() + b.conjugated());
    }
    CHECK(Cyclotomic::rational(n, 3, 7).conjugated() ==
          Cyclotomic::rational(n, 3, 7));
    // conj(ζ) = ζ^{-1}.
    CHECK(Cyclotomic::root_power(n, 1).conjugated() ==
          Cyclotomic::root_power(n, n - 1));
  }
}

TEST_CASE("norm-like positivity: z·conj(z) of a root power is 1") {
  for (int n : {2, 3, 4, 6, 8}) {
    for (int e = 0; e < n; ++e) {
      Cyclotomic z = Cyclotomic::root_power(n, e);
      CHECK(z * z.conjugated() == Cyclotomic::integer(n, 1));
    }
  }
}

TEST_CASE("mismatched orders are rejected") {
  Cyclotomic a = Cyclotomic::integer(4, 1);
  Cyclotomic b = Cyclotomic::integer(6, 1);
  CHECK_THROWS_AS(a + b, Error);
  try {
    a* b;
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModulusMismatch);
  }
}

TEST_CASE("is_rational extracts reduced fractions") {
  Cyclotomic v = Cyclotomic::rational(4, 6, 4);
  long long num = 0, den = 0;
  REQUIRE(v.is_rational(&num, &den));
  CHECK(num == 3);
  CHECK(den == 2);
  CHECK_FALSE(Cyclotomic::root_power(4, 1).is_rational());
}
