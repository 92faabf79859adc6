#include <doctest.h>

#include "rbcm/classify.hpp"
#include "support.hpp"

using namespace rbcm;

namespace {

AbelianType grp(std::vector<Int> moduli) { return AbelianType::of_cyclic_factors(moduli); }

// Roots of x^n + 1 by direct search.
std::vector<Int> roots_by_search(Int p, int k, Int n) {
  const Modulus m = Modulus::prime_power(p, k);
  std::vector<Int> out;
  for (Int x = 0; x < m.N(); ++x) {
    if (m.add(pow_mod(x, n, m.N()), 1) == 0) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("unit roots and theta") {
  CHECK(solve_unit_roots(5, 1, 2) == std::vector<Int>{2, 3});
  CHECK(solve_unit_roots(5, 2, 2) == std::vector<Int>{7, 18});
  CHECK(theta_set(3, 2) == std::vector<Int>{4});
  for (Int p : {3, 5, 7}) {
    for (int k = 1; k <= 2; ++k) {
      for (Int n = 1; n <= 8; ++n) CHECK(solve_unit_roots(p, k, n) == roots_by_search(p, k, n));
    }
  }
  for (Int p : {3, 5, 7, 11}) {
    for (Int n = 1; n <= 8; ++n) {
      for (Int d : theta_set(p, n)) {
        CHECK((2 * n) % d == 0);
        CHECK(n % d != 0);
        CHECK((p + 1) % d == 0);
      }
    }
  }
}

TEST_CASE("family examples") {
  const auto cyc = classify_cyclic(5, 1, 2);
  REQUIRE(cyc.size() == 2);
  for (const auto& f : cyc) {
    CHECK(f.group == grp({5}));
    CHECK(f.stats.genus == 1);
  }
  CHECK(classify_cyclic(3, 2, 3).size() == brute_force_rbcms(grp({9}), 6).size());
  CHECK(classify_elementary(3, 2, 2, MapType::I).size() == 1);
  CHECK(classify_elementary(2, 2, 3, MapType::II).size() == 1);
  for (const auto& f : classify_2group(2, 2)) CHECK(f.group.exponent() == 4);
  const auto only = classify_2group(2, 2, grp({4, 2}));
  CHECK(only.size() == 1);
  CHECK(classify_coprime(3, 1, 4, grp({3, 3})).size() == brute_force_rbcms(grp({3, 3}), 8).size());
  for (const auto& f : classify_rank2(3, 2, 1, 3)) CHECK(f.group == grp({9, 3}));
  CHECK(classify_standard(grp({4, 2}), 2, MapType::I).size() == 1);
}

TEST_CASE("every family member is a balanced regular Cayley map on its group") {
  std::vector<FamilyMember> all;
  for (auto v : {classify_cyclic(5, 2, 2), classify_elementary(5, 2, 2, MapType::I), classify_2group(2, 4),
                 classify_coprime(3, 2, 4), classify_rank2(3, 2, 1, 6)}) {
    all.insert(all.end(), v.begin(), v.end());
  }
  CHECK(!all.empty());
  for (const auto& f : all) {
    CAPTURE(f.params.describe());
    CHECK(f.map.group.type() == f.group);
    CHECK(is_rbcm(f.map).ok);
    const MapStats full = trace_faces(f.map);
    CHECK(f.stats.faces == full.faces);
    CHECK(f.stats.genus == full.genus);
    CHECK(f.stats.face_lengths == full.face_lengths);
    if (f.generators_match) CHECK(*f.generators_match);
  }
}

TEST_CASE("cross checks") {
  struct Case {
    std::vector<Int> moduli;
    int valence, expected;
  };
  for (const auto& [moduli, valence, expected] : std::vector<Case>{
           {{5}, 4, 2}, {{8}, 4, 0}, {{3, 3}, 4, 1}, {{4, 2}, 4, 1}, {{9, 3}, 6, -1}, {{2, 2, 2}, 7, -1}}) {
    const CrossCheckReport r = cross_check(grp(moduli), valence);
    CAPTURE(r.group.to_string());
    CHECK(r.ok());
    CHECK_FALSE(r.oracle_only);
    if (expected >= 0) CHECK(r.oracle_count == expected);
    for (const auto& fc : r.families) {
      CHECK(fc.perfect);
      CHECK(fc.family_count == r.oracle_count);
    }
  }
  CHECK(rbcm::test::thrown_kind([] { cross_check(grp({5}), 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("discrepancy ledger agrees with the oracle") {
  const auto ledger = discrepancy_ledger();
  CHECK(!ledger.empty());
  bool codomain = false, lcm_clause = false, nu = false;
  for (const auto& e : ledger) {
    CAPTURE(e.topic + " " + e.instance);
    CHECK(e.implemented_agrees);
    codomain |= e.topic.find("codomain") != std::string::npos;
    lcm_clause |= e.topic.find("lcm") != std::string::npos;
    nu |= e.topic.find("nu range") != std::string::npos;
  }
  CHECK(codomain);
  CHECK(lcm_clause);
  CHECK(nu);
}
