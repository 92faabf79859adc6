// One line per acceptance criterion: PASS/FAIL, elapsed time, and a summary.
// Exit status is nonzero when any criterion fails or exceeds its time limit.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "rbcm/classify.hpp"
#include "rbcm/crt.hpp"

using namespace rbcm;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream summary;
  void fail(const std::string& why) {
    if (ok) summary.str("");
    if (ok) summary << why;
    ok = false;
  }
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

Poly poly_from_code(Int code, Int N, int len, const Modulus& mod) {
  std::vector<Int> c;
  for (int i = 0; i < len; ++i, code /= N) c.push_back(code % N);
  return Poly(mod, c);
}

// Every factorization multiplies back to its target.
void factor_identities(Outcome& o) {
  int checked = 0;
  for (Int p : {2, 3, 5}) {
    for (int k = 1; k <= 3; ++k) {
      const Modulus mod = Modulus::prime_power(p, k);
      for (Int n = 2; n <= 12; ++n) {
        const PrimeSplit sp = split_prime_part(n, p);
        std::vector<std::pair<std::vector<LabeledFactor>, Poly>> cases = {
            {factor_xn_plus1(p, k, n), Poly::binomial(mod, static_cast<int>(n), 1)},
            {factor_xn_minus1(p, k, n), Poly::binomial(mod, static_cast<int>(n), -1)}};
        if (sp.r > 0) cases.emplace_back(factor_radical_sum(p, k, n), radical_sum(mod, sp.n_prime, sp.r));
        for (const auto& [fs, target] : cases) {
          ++checked;
          bool monic = std::all_of(fs.begin(), fs.end(), [](const LabeledFactor& f) { return f.poly.is_monic(); });
          if (!monic || !(expand(fs, mod) == target)) {
            o.fail("product mismatch for " + target.to_string() + " over Z_" + std::to_string(mod.N()));
          }
        }
      }
    }
  }
  if (o.ok) o.summary << checked << " factorizations multiply back to their targets";
}

// Among all monic quadratics over Z_9, exactly one reduces to x^2+x+2 and divides x^8-1.
void lift_uniqueness(Outcome& o) {
  const Modulus m3 = Modulus::of(3), m9 = Modulus::of(9);
  const Poly q(m3, {2, 1, 1});
  const Poly target = Poly::binomial(m9, 8, -1);
  std::vector<Poly> found;
  int candidates = 0;
  for (Int c0 = 0; c0 < 9; ++c0) {
    for (Int c1 = 0; c1 < 9; ++c1) {
      const Poly f(m9, {c0, c1, 1});
      ++candidates;
      if (f.reduce_to(m3) == q && divides(f, target)) found.push_back(f);
    }
  }
  const Poly expected(m9, {8, 4, 1});
  if (candidates != 81) o.fail("expected 81 candidates");
  if (found.size() != 1) o.fail(std::to_string(found.size()) + " lifts divide x^8-1");
  else if (!(found[0] == expected)) o.fail("unique lift is " + found[0].to_string());
  else if (!(hensel_lift_factor(q, 3, 2, target) == expected)) o.fail("Hensel lift disagrees with the search");
  if (o.ok) o.summary << "unique divisor " << expected.to_string() << " among 81 monic quadratics over Z_9";
}

// Closed-form ideal lists against breadth-first enumeration.
void closed_form_lists(Outcome& o) {
  constexpr Int kCap = Int{1} << 12;
  int compared = 0, without = 0;
  for (Int p : {2, 3, 5}) {
    for (int k = 1; k <= 2; ++k) {
      for (Int n = 1; n <= 12; ++n) {
        for (bool plus : {true, false}) {
          for (const auto& f : plus ? factor_xn_plus1(p, k, n) : factor_xn_minus1(p, k, n)) {
            const Poly context = f.poly.pow(f.multiplicity);
            if (canonical_form({}, context).quotient_order() > kCap) continue;
            const auto closed = closed_form_ideals(f);
            if (!closed) {
              ++without;
              continue;
            }
            ++compared;
            if (*closed != enumerate_ideals_containing(context, kCap)) {
              o.fail("closed form differs for " + f.poly.to_string() + " over Z_" +
                     std::to_string(f.poly.modulus().N()));
            }
          }
        }
      }
    }
  }
  if (compared == 0) o.fail("nothing compared");
  if (o.ok) o.summary << compared << " lifted factors agree (" << without << " without a closed form)";
}

// Forward/backward round trip and ring homomorphism of the CRT split.
void crt_checks(Outcome& o) {
  constexpr Int kExhaustive = 625, kSampled = 6561, kPairs = 10000;
  std::mt19937_64 rng(20240611);
  int rings = 0;
  Int pairs = 0;
  for (Int p : {2, 3, 5}) {
    for (int k = 1; k <= 3; ++k) {
      const Int N = ipow(p, k);
      for (int n = 1; n <= 12; ++n) {
        const Int size = ipow(N, n);
        if (size > kSampled) break;
        const CrtSplit s = crt_split(p, k, n);
        ++rings;
        auto hom = [&](const Poly& f, const Poly& g, const std::vector<Poly>& ff, const std::vector<Poly>& gg) {
          const auto prod = s.forward(rem(f * g, s.ambient));
          const auto sum = s.forward(f + g);
          for (size_t i = 0; i < prod.size(); ++i) {
            const Poly& ctx = s.components[i].context;
            if (!(prod[i] == rem(ff[i] * gg[i], ctx)) || !(sum[i] == rem(ff[i] + gg[i], ctx))) return false;
          }
          return true;
        };
        if (size <= kExhaustive) {
          std::vector<Poly> elems;
          std::vector<std::vector<Poly>> images;
          for (Int c = 0; c < size; ++c) {
            elems.push_back(poly_from_code(c, N, n, s.mod));
            images.push_back(s.forward(elems.back()));
            if (!(s.backward(images.back()) == elems.back())) o.fail("round trip fails on Z_" + std::to_string(N));
          }
          for (Int a = 0; a < size; ++a) {
            for (Int b = a; b < size; ++b, ++pairs) {
              if (!hom(elems[a], elems[b], images[a], images[b])) {
                o.fail("homomorphism fails on Z_" + std::to_string(N) + "[x]/(x^" + std::to_string(n) + "+1)");
              }
            }
          }
        } else {
          std::uniform_int_distribution<Int> pick(0, size - 1);
          for (Int t = 0; t < kPairs; ++t, ++pairs) {
            const Poly f = poly_from_code(pick(rng), N, n, s.mod), g = poly_from_code(pick(rng), N, n, s.mod);
            const auto ff = s.forward(f), gg = s.forward(g);
            if (!(s.backward(ff) == f) || !hom(f, g, ff, gg)) {
              o.fail("sampled check fails on Z_" + std::to_string(N) + "[x]/(x^" + std::to_string(n) + "+1)");
            }
          }
        }
        if (!o.ok) return;
      }
    }
  }
  o.summary << rings << " rings, " << pairs << " pairs";
}

std::vector<CrossCheckReport> g_reports;

// Families against the oracle on every abelian p-group of order <= 81.
void family_counts(Outcome& o) {
  OracleOptions opts;
  opts.jobs = jobs();
  int instances = 0, maps = 0;
  for (Int p : {2, 3, 5}) {
    for (int e = 1; ipow(p, e) <= 81; ++e) {
      for (const auto& g : abelian_p_groups(p, e)) {
        const bool type2 = p == 2 && g.exponent() == 2;
        for (int n = 2; n <= 8; ++n) {
          CrossCheckReport r = cross_check(g, type2 ? n : 2 * n, opts);
          ++instances;
          maps += r.oracle_count;
          if (!r.ok() || r.oracle_only) {
            o.fail(g.to_string() + " valence " + std::to_string(r.valence) + ": oracle " +
                   std::to_string(r.oracle_count) + (r.oracle_only ? ", no family applies" : ", families disagree"));
          }
          g_reports.push_back(std::move(r));
        }
      }
    }
  }
  const std::vector<std::tuple<std::vector<Int>, int, int>> spots = {
      {{5}, 4, 2}, {{8}, 4, 0}, {{3, 3}, 4, 1}, {{4, 2}, 4, 1}};
  for (const auto& [moduli, valence, expected] : spots) {
    const AbelianType g = AbelianType::of_cyclic_factors(moduli);
    const auto it = std::find_if(g_reports.begin(), g_reports.end(),
                                 [&](const CrossCheckReport& r) { return r.group == g && r.valence == valence; });
    if (it == g_reports.end() || it->oracle_count != expected) {
      o.fail(g.to_string() + " valence " + std::to_string(valence) + " expected " + std::to_string(expected));
    }
  }
  if (o.ok) o.summary << instances << " instances, " << maps << " maps, every family matched";
}

// Every map from the sweep is balanced regular, arc-regular when small, and Euler-consistent.
void map_validity(Outcome& o) {
  int checked = 0, arc = 0;
  auto check = [&](const CayleyMapRecord& m, const std::string& tag) {
    ++checked;
    const Int V = m.group.order(), E = V * m.valence() / 2;
    const MapStats s = trace_faces(m);
    Int darts = 0;
    for (const auto& [len, count] : s.face_lengths) darts += len * count;
    const bool euler = s.vertices == V && s.edges == E && darts == 2 * E && V - E + s.faces == 2 - 2 * s.genus;
    if (!is_rbcm(m).ok) o.fail(tag + ": not balanced regular");
    if (!euler) o.fail(tag + ": Euler characteristic inconsistent");
    if (V <= 32) {
      ++arc;
      if (!is_arc_regular(m)) o.fail(tag + ": not arc-regular");
    }
  };
  for (const auto& r : g_reports) {
    const std::string tag = r.group.to_string() + " valence " + std::to_string(r.valence);
    for (const auto& m : r.oracle_maps) check(m, tag + " oracle");
    for (const auto& f : r.members) check(f.map, tag + " " + f.params.describe());
  }
  const Modulus m5 = Modulus::of(5);
  const auto z5 = build_map(canonical_form({Poly::x_minus(m5, 2)}, Poly::binomial(m5, 2, 1)), 2, MapType::I);
  const MapStats s = trace_faces(z5);
  if (s.genus != 1 || s.faces != 5 || s.face_lengths != std::vector<std::pair<Int, Int>>{{4, 5}}) {
    o.fail("Z5 mu = 2 map: genus " + std::to_string(s.genus) + ", " + std::to_string(s.faces) + " faces");
  }
  if (checked == 0) o.fail("no maps to check");
  if (o.ok) o.summary << checked << " maps (" << arc << " arc-regularity checks); Z5 mu = 2: genus 1, 5 quadrilaterals";
}

// (5, (x-2), 2) and (13, (x-5), 2) compose to (x-57) over Z_65.
void composition(Outcome& o) {
  const Modulus m5 = Modulus::of(5), m13 = Modulus::of(13), m65 = Modulus::of(65);
  const PrimeComponent a{m5, canonical_form({Poly::x_minus(m5, 2)}, Poly::binomial(m5, 2, 1)), 2};
  const PrimeComponent b{m13, canonical_form({Poly::x_minus(m13, 5)}, Poly::binomial(m13, 2, 1)), 2};
  const Composition c = compose_across_primes({a, b});
  if (c.N != 65 || c.n != 2) o.fail("wrong modulus or n");
  if (!(c.ideal == canonical_form({Poly::x_minus(m65, 57)}, Poly::binomial(m65, 2, 1)))) {
    o.fail("composite ideal is " + c.ideal.to_string());
  }
  if (!contains(c.ideal, Poly::binomial(m65, 2, 1))) o.fail("x^2+1 not in the composite");
  if (!(project(c.ideal, m5) == a.ideal) || !(project(c.ideal, m13) == b.ideal)) o.fail("projections differ");
  if (o.ok) o.summary << "(x-57) over Z_65 contains x^2+1 and projects to both components";
}

// Printed-versus-implemented readings, each arbitrated by the oracle.
void ledger(Outcome& o) {
  OracleOptions opts;
  opts.jobs = jobs();
  const auto entries = discrepancy_ledger(opts);
  bool codomain = false, lcm_clause = false, nu = false;
  int disagreeing_printed = 0;
  for (const auto& e : entries) {
    if (!e.implemented_agrees) o.fail(e.topic + " on " + e.instance + ": implemented reading disagrees with oracle");
    if (!e.printed_agrees) ++disagreeing_printed;
    codomain |= e.topic.find("codomain") != std::string::npos;
    lcm_clause |= e.topic.find("lcm") != std::string::npos;
    nu |= e.topic.find("nu range") != std::string::npos;
  }
  if (!codomain || !lcm_clause || !nu) o.fail("ledger is missing a required topic");
  if (o.ok) {
    o.summary << entries.size() << " entries, implemented readings all agree with the oracle; " << disagreeing_printed
              << " printed readings do not";
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "factor identities", 10, factor_identities},
      {2, "lift uniqueness", 1, lift_uniqueness},
      {3, "closed-form ideal lists", 60, closed_form_lists},
      {4, "CRT round trip and homomorphism", 30, crt_checks},
      {5, "family counts against the oracle", 300, family_counts},
      {6, "map validity", 10, map_validity},
      {7, "composition across primes", 1, composition},
      {8, "reading ledger", 300, ledger},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.limit_s) o.fail("took longer than the limit");
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << dt << " s, limit "
              << c.limit_s << " s): " << o.summary.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
