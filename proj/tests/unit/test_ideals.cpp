#include <doctest.h>

#include <set>

#include "rbcm/crt.hpp"
#include "rbcm/error.hpp"
#include "rbcm/ideals.hpp"

using namespace rbcm;

namespace {

// Z_N-span closed under x, by saturation of explicit residue sets.
std::set<std::vector<Int>> span_of(const std::vector<Poly>& gens, const Poly& context) {
  const Modulus& mod = context.modulus();
  std::set<std::vector<Int>> S{to_row(Poly(mod), context)};
  std::vector<std::vector<Int>> frontier;
  for (const auto& g : gens) frontier.push_back(to_row(g, context));
  while (!frontier.empty()) {
    const auto v = frontier.back();
    frontier.pop_back();
    std::vector<std::vector<Int>> fresh;
    for (const auto& s : S) {
      const Poly sum = from_row(s, mod) + from_row(v, mod);
      fresh.push_back(to_row(sum, context));
    }
    fresh.push_back(to_row(from_row(v, mod).shifted(1), context));
    for (auto& f : fresh) {
      if (S.insert(f).second) frontier.push_back(f);
    }
  }
  return S;
}

}  // namespace

TEST_CASE("canonical forms") {
  const Modulus m5 = Modulus::of(5), m4 = Modulus::of(4);
  const IdealPresentation a = canonical_form({Poly::x_minus(m5, 2)}, Poly::binomial(m5, 2, 1));
  REQUIRE(a.rows().size() == 1);
  CHECK(from_row(a.rows()[0], m5) == Poly(m5, {3, 1}));
  const IdealPresentation b = canonical_form({Poly::constant(m4, 2), Poly(m4, {1, 1})}, Poly::binomial(m4, 2, 1));
  CHECK(b.quotient_order() == 2);
  CHECK(contains(b, Poly::constant(m4, 2)));
  CHECK_FALSE(contains(b, Poly::constant(m4, 1)));
  CHECK(canonical_form({Poly::constant(m4, 2), Poly::monomial(m4, 1)}, Poly::binomial(m4, 2, 1)).is_unit_ideal());
  CHECK(canonical_form({}, Poly::binomial(m5, 2, 1)).is_zero_ideal());
}

TEST_CASE("canonical form is independent of the generating set") {
  const Modulus m = Modulus::of(8);
  const Poly ctx = Poly::binomial(m, 4, 1);
  const Poly f(m, {1, 1}), g(m, {2});
  const IdealPresentation a = canonical_form({f * Poly(m, {3, 5, 1}), g}, ctx);
  const IdealPresentation b = canonical_form({g * Poly(m, {1, 1, 1}), f * Poly(m, {3, 5, 1}) + g.shifted(2)}, ctx);
  CHECK(a == b);
  CHECK(a.quotient_order() == ipow(8, 4) / static_cast<Int>(span_of(a.row_polys(), ctx).size()));
}

TEST_CASE("membership agrees with the explicit span") {
  const Modulus m = Modulus::of(9);
  const Poly ctx = Poly::binomial(m, 3, 1);
  const IdealPresentation q = canonical_form({Poly(m, {3, 3}), Poly(m, {1, 2, 1})}, ctx);
  const auto S = span_of(q.row_polys(), ctx);
  for (Int code = 0; code < 729; ++code) {
    const Poly f(m, {code % 9, code / 9 % 9, code / 81});
    CHECK(contains(q, f) == (S.count(to_row(f, ctx)) > 0));
  }
  const IdealPresentation r = canonical_form({Poly::x_minus(m, 2), Poly::constant(m, 3)}, ctx);
  CHECK(contains(r, Poly(m, {1, 1})));
  CHECK(contains(r, Poly(m)));
  const Modulus m5 = Modulus::of(5);
  CHECK_FALSE(contains(canonical_form({Poly::x_minus(m5, 2)}, Poly::binomial(m5, 2, 1)), Poly(m5, {1, 1})));
}

TEST_CASE("admissibility clauses") {
  const Modulus m5 = Modulus::of(5), m9 = Modulus::of(9);
  CHECK(is_admissible(canonical_form({Poly::x_minus(m5, 2)}, Poly::binomial(m5, 2, 1)), 2).admissible);
  const Admissibility b = is_admissible(canonical_form({Poly::x_minus(m9, 2), Poly::constant(m9, 3)}, Poly::binomial(m9, 2, 1)), 2);
  CHECK_FALSE(b.admissible);
  CHECK(b.failed == AdmissibilityClause::NoConstants);
  CHECK(clause_name(b.failed) == "(iii)");
  const Modulus m2 = Modulus::of(2);
  const Admissibility c = is_admissible(canonical_form({Poly(m2, {1, 1})}, Poly::binomial(m2, 2, 1)), 2);
  CHECK(c.failed == AdmissibilityClause::NoSmallerXmPlus1);
  CHECK(c.witness_m == 1);
  CHECK(clause_name(c.failed) == "(ii)");
  const Admissibility d = is_admissible(canonical_form({Poly::x_minus(m5, 2)}, Poly::x_minus(m5, 2)), 4);
  CHECK(d.failed == AdmissibilityClause::ContainsXnPlus1);
}

TEST_CASE("closed-form ideal lists equal the exhaustive search") {
  // p = 3, k = 2, lifted quadratic factor of x^8 + 1 (level 0): (q, p^u), three ideals
  for (const auto& f : factor_xn_plus1(3, 2, 4)) {
    const IdealLattice lat = enumerate_ideals_containing(f);
    CHECK(lat.closed_form_used);
    CHECK(lat.cross_checked);
    CHECK(lat.ideals.size() == 3);
  }
  for (int n : {2, 4}) {
    for (const auto& f : factor_xn_plus1(2, 2, n)) {
      const IdealLattice lat = enumerate_ideals_containing(f);
      CHECK(lat.closed_form_used);
      CHECK(lat.cross_checked);
      CHECK(lat.ideals == enumerate_ideals_containing(f.poly));
    }
  }
  const Modulus m5 = Modulus::of(5);
  CHECK(enumerate_ideals_containing(Poly::x_minus(m5, 1)).size() == 2);
}

TEST_CASE("enumeration above the budget without a closed form is refused") {
  int tried = 0;
  for (const auto& f : factor_xn_plus1(3, 2, 6)) {
    if (f.label.level == 0) continue;
    ++tried;
    try {
      enumerate_ideals_containing(f, 4096);
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooLarge);
    }
  }
  CHECK(tried > 0);
}

TEST_CASE("composition across primes") {
  const Modulus m5 = Modulus::of(5), m13 = Modulus::of(13);
  const PrimeComponent a{m5, canonical_form({Poly::x_minus(m5, 2)}, Poly::binomial(m5, 2, 1)), 2};
  const PrimeComponent b{m13, canonical_form({Poly::x_minus(m13, 5)}, Poly::binomial(m13, 2, 1)), 2};
  const Composition c = compose_across_primes({a, b});
  const Modulus m65 = Modulus::of(65);
  CHECK(c.N == 65);
  CHECK(c.ideal == canonical_form({Poly::x_minus(m65, 57)}, Poly::binomial(m65, 2, 1)));
  CHECK(contains(c.ideal, Poly::binomial(m65, 2, 1)));
  CHECK(project(c.ideal, m5) == a.ideal);
  CHECK(project(c.ideal, m13) == b.ideal);
  CHECK(compose_across_primes({a}).ideal == a.ideal);
  CHECK_THROWS_AS(compose_across_primes({a, a}), Error);
}

TEST_CASE("CRT split round trip and homomorphism") {
  struct Case {
    Int p;
    int k, n;
  };
  for (const Case c : {Case{5, 1, 2}, Case{3, 2, 4}, Case{2, 2, 3}, Case{5, 1, 4}}) {
    const CrtSplit s = crt_split(c.p, c.k, c.n);
    const int n = c.n;
    const Modulus& mod = s.mod;
    const Int N = mod.N();
    Int total = 1;
    for (int i = 0; i < n; ++i) total *= N;
    for (Int code = 0; code < total; code += std::max<Int>(1, total / 400)) {
      std::vector<Int> c;
      for (Int r = code, i = 0; i < n; ++i, r /= N) c.push_back(r % N);
      const Poly f(mod, c);
      CHECK(s.backward(s.forward(f)) == f);
      const Poly g = f.shifted(1) + Poly::constant(mod, 1);
      const auto fg = s.forward(rem(f * g, s.ambient));
      const auto ff = s.forward(f), gg = s.forward(g);
      for (size_t i = 0; i < fg.size(); ++i) CHECK(fg[i] == rem(ff[i] * gg[i], s.components[i].context));
    }
  }
  const CrtSplit s = crt_split(5, 1, 2);
  const auto parts = s.forward(Poly::monomial(s.mod, 1));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == Poly::constant(s.mod, 2));
  CHECK(parts[1] == Poly::constant(s.mod, 3));
  CHECK(crt_split(3, 1, 2).components.size() == 1);
}
