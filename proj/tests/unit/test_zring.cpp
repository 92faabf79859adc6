#include <doctest.h>

#include "rbcm/error.hpp"
#include "rbcm/zring.hpp"

using namespace rbcm;

TEST_CASE("modular inverse agrees with exhaustive search") {
  for (Int N : {2, 4, 9, 25, 27, 65, 81}) {
    const Modulus mod = Modulus::of(N);
    for (Int a = 0; a < N; ++a) {
      Int expected = -1;
      for (Int b = 0; b < N && expected < 0; ++b) {
        if (a * b % N == 1 % N) expected = b;
      }
      if (expected < 0) {
        CHECK_THROWS_AS(mod.inverse(a), Error);
      } else {
        CHECK(mod.inverse(a) == expected);
      }
    }
  }
  CHECK(Modulus::of(9).inverse(2) == 5);
  CHECK(Modulus::of(7).inverse(1) == 1);
  try {
    Modulus::of(9).inverse(3);
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
}

TEST_CASE("p-adic valuation") {
  CHECK(p_valuation(18, 3) == 2);
  CHECK_FALSE(p_valuation(0, 5).has_value());
  CHECK(p_valuation(7, 2) == 0);
}

TEST_CASE("multiplicative order of p modulo d") {
  CHECK(multiplicative_order(3, 8) == 2);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(5, 1) == 1);
  for (Int p : {2, 3, 5, 7}) {
    for (Int d = 1; d <= 40; ++d) {
      if (gcd(p, d) != 1) continue;
      Int e = 1;
      while (pow_mod(p, e, d) != 1 % d) ++e;
      CHECK(multiplicative_order(p, d) == e);
    }
  }
}

TEST_CASE("gcdex, factorize and friends") {
  for (Int a = -20; a <= 20; ++a) {
    for (Int b = -20; b <= 20; ++b) {
      const Gcdex r = gcdex(a, b);
      CHECK(r.g == gcd(a, b));
      CHECK(r.s * a + r.t * b == r.g);
    }
  }
  CHECK(factorize(360) == std::vector<std::pair<Int, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(divisors(12) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(euler_phi(16) == 8);
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(65));
  CHECK_THROWS_AS(ipow(10, 30), Error);
}

TEST_CASE("residue integers reject mixed moduli") {
  const ResidueInt a(7, Modulus::of(9)), b(5, Modulus::of(9));
  CHECK((a * b).value() == 8);
  CHECK((a + b).value() == 3);
  CHECK(unit_inverse(a).value() == 4);
  CHECK_THROWS_AS(a + ResidueInt(1, Modulus::of(5)), Error);
}
