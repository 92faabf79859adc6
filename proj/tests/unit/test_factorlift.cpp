#include <doctest.h>

#include <algorithm>

#include "rbcm/error.hpp"
#include "rbcm/factorlift.hpp"

using namespace rbcm;

namespace {

// Every monic g over Z_{p^k} reducing to q mod p that divides target.
std::vector<Poly> brute_force_lifts(const Poly& q, int k, const Poly& target) {
  const Modulus mod = target.modulus();
  const Int p = q.modulus().N();
  const int d = q.degree();
  std::vector<Poly> out;
  const Int step = p;
  const Int per = mod.N() / p;
  Int total = 1;
  for (int i = 0; i < d; ++i) total *= per;
  for (Int code = 0; code < total; ++code) {
    std::vector<Int> c(static_cast<size_t>(d + 1));
    Int rest = code;
    for (int i = 0; i < d; ++i) {
      c[static_cast<size_t>(i)] = q.coeff(i) + step * (rest % per);
      rest /= per;
    }
    c[static_cast<size_t>(d)] = 1;
    const Poly g(mod, c);
    if (divides(g, target)) out.push_back(g);
  }
  (void)k;
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1).coeffs == std::vector<Int>{-1, 1});
  CHECK(cyclotomic(2).coeffs == std::vector<Int>{1, 1});
  CHECK(cyclotomic(8).coeffs == std::vector<Int>{1, 0, 0, 0, 1});
  CHECK(cyclotomic(12).coeffs == std::vector<Int>{1, 0, -1, 0, 1});
}

TEST_CASE("coset representatives and the label set") {
  CHECK(coset_reps(3, 8) == std::vector<Int>{1, 5});
  CHECK(coset_reps(5, 4) == std::vector<Int>{1, 3});
  CHECK(coset_reps(7, 1) == std::vector<Int>{1});
  auto pairs = [](const std::vector<FactorLabel>& v) {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& l : v) out.push_back({l.d, l.ell});
    return out;
  };
  CHECK(pairs(lambda_index(3, 4)) == std::vector<std::pair<Int, Int>>{{8, 1}, {8, 5}});
  CHECK(pairs(lambda_index(3, 1)) == std::vector<std::pair<Int, Int>>{{2, 1}});
  CHECK(pairs(lambda_index(2, 1)) == std::vector<std::pair<Int, Int>>{{1, 1}});
}

TEST_CASE("base factors") {
  const Modulus m3 = Modulus::of(3);
  CHECK(base_factor(3, 8, 1) == Poly(m3, {2, 1, 1}));
  CHECK(base_factor(5, 2, 1) == Poly(Modulus::of(5), {1, 1}));
  CHECK(base_factor(5, 1, 1) == Poly(Modulus::of(5), {-1, 1}));
}

TEST_CASE("factorisation of x^n - 1 modulo p") {
  const auto f4 = factor_mod_p(4, 3);
  REQUIRE(f4.size() == 3);
  CHECK(expand(f4, Modulus::of(3)) == Poly::binomial(Modulus::of(3), 4, -1));
  CHECK(factor_mod_p(2, 3).size() == 2);
  const auto f8 = factor_mod_p(8, 3);
  auto has = [&](const Poly& q) {
    return std::any_of(f8.begin(), f8.end(), [&](const LabeledFactor& f) { return f.poly == q; });
  };
  CHECK(has(Poly(Modulus::of(3), {2, 1, 1})));
  CHECK(has(Poly(Modulus::of(3), {2, 2, 1})));
}

TEST_CASE("Hensel lift is the unique divisor among all lifts") {
  const Modulus m9 = Modulus::of(9);
  const Poly q(Modulus::of(3), {2, 1, 1});
  const Poly t = Poly::binomial(m9, 8, -1);
  const Poly lifted = hensel_lift_factor(q, 3, 2, t);
  CHECK(lifted == Poly(m9, {8, 4, 1}));
  const auto all = brute_force_lifts(q, 2, t);
  REQUIRE(all.size() == 1);
  CHECK(all.front() == lifted);

  const Modulus m25 = Modulus::of(25);
  CHECK(hensel_lift_factor(Poly::x_minus(Modulus::of(5), 2), 5, 2, Poly::binomial(m25, 4, -1)) ==
        Poly::x_minus(m25, 7));
  CHECK(hensel_lift_factor(q, 3, 1, Poly::binomial(Modulus::of(3), 8, -1)) == q);

  for (Int p : {3, 5, 7}) {
    for (Int n : {2, 4, 6}) {
      if (n % p == 0) continue;
      const Modulus mk = Modulus::prime_power(p, 2);
      const Poly target = Poly::binomial(mk, static_cast<int>(n), -1);
      for (const auto& f : factor_mod_p(n, p)) {
        const auto found = brute_force_lifts(f.poly, 2, target);
        REQUIRE(found.size() == 1);
        CHECK(found.front() == hensel_lift_factor(f.poly, p, 2, target));
      }
    }
  }
}

TEST_CASE("Hensel lift rejects repeated or foreign factors") {
  const Modulus m9 = Modulus::of(9);
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalMismatch;
  };
  const Poly xp1(Modulus::of(3), {1, 1});
  CHECK(kind_of([&] { hensel_lift_factor(xp1, 3, 2, Poly::binomial(m9, 3, 1)); }) == ErrorKind::NotSimpleFactor);
  CHECK(kind_of([&] { hensel_lift_factor(Poly(Modulus::of(3), {1, 0, 1}), 3, 2, Poly::binomial(m9, 3, -1)); }) ==
        ErrorKind::NotSimpleFactor);
}

TEST_CASE("radical factors") {
  CHECK(lift_radical_factor(1, 1, 1, 3, 2).poly == Poly(Modulus::of(9), {1, 1, 1}));
  CHECK(lift_radical_factor(1, 1, 1, 2, 2).poly == Poly(Modulus::of(4), {1, 1}));
  CHECK(lift_radical_factor(1, 1, 2, 2, 2).poly == Poly(Modulus::of(4), {1, 0, 1}));
}

TEST_CASE("factorisation of x^n + 1") {
  const auto a = factor_xn_plus1(2, 2, 2);
  REQUIRE(a.size() == 1);
  CHECK(a[0].poly == Poly(Modulus::of(4), {1, 0, 1}));
  CHECK(a[0].label.d == 1);
  CHECK(a[0].label.ell == 1);
  CHECK(a[0].label.level == 2);
  const auto b = factor_xn_plus1(3, 1, 2);
  REQUIRE(b.size() == 1);
  CHECK(b[0].poly == Poly(Modulus::of(3), {1, 0, 1}));
  CHECK(b[0].label.d == 4);
  const auto c = factor_xn_plus1(5, 1, 2);
  REQUIRE(c.size() == 2);
  CHECK(c[0].poly == Poly::x_minus(Modulus::of(5), 2));
  CHECK(c[1].poly == Poly::x_minus(Modulus::of(5), 3));
  CHECK(c[0].label.ell == 1);
  CHECK(c[1].label.ell == 3);
}

TEST_CASE("the three product identities on a small grid") {
  for (Int p : {2, 3, 5}) {
    for (int k = 1; k <= 2; ++k) {
      const Modulus mod = Modulus::prime_power(p, k);
      for (int n = 2; n <= 9; ++n) {
        CHECK(expand(factor_xn_minus1(p, k, n), mod) == Poly::binomial(mod, n, -1));
        CHECK(expand(factor_xn_plus1(p, k, n), mod) == Poly::binomial(mod, n, 1));
        const PrimeSplit sp = split_prime_part(n, p);
        if (sp.r > 0) CHECK(expand(factor_radical_sum(p, k, n), mod) == radical_sum(mod, sp.n_prime, sp.r));
      }
    }
  }
}

TEST_CASE("Bezout certificates") {
  const Modulus m9 = Modulus::of(9);
  const Poly a = Poly::x_minus(m9, 7), b = Poly::x_minus(m9, 2);
  const Bezout z = bezout(a, b);
  CHECK(z.u * a + z.v * b == Poly::constant(m9, 1));
  CHECK_THROWS_AS(bezout(Poly::x_minus(m9, 1), Poly::x_minus(m9, 4)), Error);
}
