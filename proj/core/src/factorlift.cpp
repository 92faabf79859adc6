#include "rbcm/factorlift.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "rbcm/error.hpp"

namespace rbcm {

namespace {

Modulus prime_field(Int p) { return Modulus::prime_power(p, 1); }

void require_coprime(Int p, Int d) {
  if (gcd(p, d) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(p) + ", " + std::to_string(d) + ") > 1");
  }
}

// Order-preserving sort by label.
void sort_by_label(std::vector<LabeledFactor>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const LabeledFactor& a, const LabeledFactor& b) { return a.label < b.label; });
}

}  // namespace

IntPoly cyclotomic(Int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be >= 1");
  // Start from x^d - 1 and divide by Psi_e for every proper divisor e.
  std::vector<Int> num(static_cast<size_t>(d) + 1, 0);
  num[0] = -1;
  num[static_cast<size_t>(d)] = 1;
  for (Int e : divisors(d)) {
    if (e == d) continue;
    const auto den = cyclotomic(e).coeffs;  // monic
    const int dd = static_cast<int>(den.size()) - 1;
    const int dn = static_cast<int>(num.size()) - 1;
    std::vector<Int> q(static_cast<size_t>(dn - dd) + 1, 0);
    for (int i = dn; i >= dd; --i) {
      Int c = num[static_cast<size_t>(i)];
      q[static_cast<size_t>(i - dd)] = c;
      for (int j = 0; j <= dd; ++j) num[static_cast<size_t>(i - dd + j)] -= c * den[static_cast<size_t>(j)];
    }
    for (int i = 0; i < dd; ++i) {
      if (num[static_cast<size_t>(i)] != 0) {
        throw Error(ErrorKind::InternalMismatch, "cyclotomic division not exact");
      }
    }
    num = std::move(q);
  }
  return IntPoly{num};
}

std::vector<Int> coset_reps(Int p, Int d) {
  require_coprime(p, d);
  if (d <= 2) return {1};
  std::vector<bool> seen(static_cast<size_t>(d), false);
  std::vector<Int> reps;
  for (Int ell = 1; ell < d; ++ell) {
    if (gcd(ell, d) != 1 || seen[static_cast<size_t>(ell)]) continue;
    reps.push_back(ell);
    Int x = ell;
    do {
      seen[static_cast<size_t>(x)] = true;
      x = x * p % d;
    } while (x != ell);
  }
  return reps;
}

std::vector<FactorLabel> lambda_index(Int p, Int n_prime) {
  require_coprime(p, n_prime);
  std::vector<FactorLabel> out;
  if (p == 2) {
    for (Int d : divisors(n_prime)) {
      for (Int ell : coset_reps(p, d)) out.push_back({d, ell, 0});
    }
  } else {
    for (Int d : divisors(2 * n_prime)) {
      if (n_prime % d == 0) continue;
      for (Int ell : coset_reps(p, d)) out.push_back({d, ell, 0});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimeSplit split_prime_part(Int n, Int p) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  int r = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  return {r, n};
}

Poly base_factor(Int p, Int d, Int ell) {
  require_coprime(p, d);
  static std::mutex mu;
  static std::map<std::pair<Int, Int>, SplittingField> fields;
  static std::map<std::tuple<Int, Int, Int>, Poly> factors;
  std::lock_guard lock(mu);
  auto key = std::tuple{p, d, ell};
  if (auto it = factors.find(key); it != factors.end()) return it->second;
  auto fit = fields.find({p, d});
  if (fit == fields.end()) fit = fields.emplace(std::pair{p, d}, build_splitting_field(p, d)).first;
  Poly q = minimal_polynomial(fit->second.eta.pow(ell), p, d, ell);
  factors.emplace(key, q);
  return q;
}

std::vector<LabeledFactor> factor_mod_p(Int n, Int p) {
  require_coprime(p, n);
  std::vector<LabeledFactor> out;
  for (Int d : divisors(n)) {
    for (Int ell : coset_reps(p, d)) {
      Poly q = base_factor(p, d, ell);
      out.push_back({{d, ell, 0}, q, 1, q, q});
    }
  }
  sort_by_label(out);
  return out;
}

Poly hensel_lift_coprime(const Poly& g0, const Poly& target) {
  const Modulus& mod = target.modulus();
  const Int p = mod.p();
  const int k = mod.k();
  const Modulus fp = prime_field(p);
  if (!target.is_monic()) throw Error(ErrorKind::NonUnitLeading, "lift target must be monic");
  Poly g = g0.reduce_to(fp).monic();
  const Poly fbar = target.reduce_to(fp);
  auto [cof, r0] = divmod_monic(fbar, g);
  if (!r0.is_zero()) {
    throw Error(ErrorKind::NotSimpleFactor, g.to_string() + " does not divide " + fbar.to_string() + " mod p");
  }
  auto [one, s, t] = xgcd(cof, g);
  if (one.degree() != 0) {
    throw Error(ErrorKind::NotSimpleFactor, g.to_string() + " is not coprime to its cofactor mod p");
  }
  if (k == 1) return g;

  // Quadratic lifting with cofactor tracking. Invariants at precision p^m:
  // target = cof * g, s*cof + t*g = 1, g monic, deg s < deg g, deg t < deg cof.
  {
    auto [qs, rs] = divmod_monic(s, g);
    s = rs;
    t = t + qs * cof;
  }
  int m = 1;
  while (m < k) {
    const int m2 = std::min(2 * m, k);
    const Modulus M = Modulus::prime_power(p, m2);
    Poly f = target.reduce_to(M);
    cof = cof.lift_to(M);
    g = g.lift_to(M);
    s = s.lift_to(M);
    t = t.lift_to(M);

    Poly e = f - cof * g;
    auto [q, r] = divmod_monic(s * e, g);
    Poly cof2 = cof + t * e + q * cof;
    Poly g2 = g + r;

    Poly b = s * cof2 + t * g2 - Poly::constant(M, 1);
    auto [c, dd] = divmod_monic(s * b, g2);
    s = s - dd;
    t = t - t * b - c * cof2;
    cof = cof2;
    g = g2;
    m = m2;
  }
  if (!g.is_monic() || !divides(g, target)) {
    throw Error(ErrorKind::InternalMismatch, "Hensel lift failed exact-division check");
  }
  return g;
}

Poly hensel_lift_factor(const Poly& q, Int p, int k, const Poly& target) {
  const Modulus fp = prime_field(p);
  const Modulus mod = Modulus::prime_power(p, k);
  if (!(target.modulus() == mod)) throw Error(ErrorKind::ModulusMismatch, "target not over Z_{p^k}");
  Poly qq = q.reduce_to(fp);
  if (!qq.is_monic() || !is_irreducible(qq)) {
    throw Error(ErrorKind::InvalidArgument, qq.to_string() + " is not monic irreducible mod p");
  }
  const Poly fbar = target.reduce_to(fp);
  auto [cof, r] = divmod_monic(fbar, qq);
  if (!r.is_zero()) throw Error(ErrorKind::NotSimpleFactor, qq.to_string() + " does not divide the target mod p");
  if (divides(qq, cof)) throw Error(ErrorKind::NotSimpleFactor, qq.to_string() + " is a repeated factor mod p");
  return hensel_lift_coprime(qq, target);
}

Poly radical_sum(const Modulus& mod, Int n_prime, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "radical sum needs r >= 1");
  const Int p = mod.p();
  const Int step = n_prime * ipow(p, r - 1);
  std::vector<Int> c(static_cast<size_t>(step * (p - 1)) + 1, 0);
  for (Int i = 0; i < p; ++i) c[static_cast<size_t>(i * step)] = 1;
  return Poly(mod, std::move(c));
}

namespace {

// Level-0 lift q^{(k)}_{d,l}: the divisor of x^d - 1 reducing to q_{d,l}.
Poly level0_lift(Int p, int k, Int d, Int ell) {
  static std::mutex mu;
  static std::map<std::tuple<Int, int, Int, Int>, Poly> cache;
  const auto key = std::tuple{p, k, d, ell};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Modulus mod = Modulus::prime_power(p, k);
  Poly q = base_factor(p, d, ell);
  Poly lifted = k == 1 ? q : hensel_lift_coprime(q, Poly::binomial(mod, static_cast<int>(d), -1));
  std::lock_guard lock(mu);
  cache.emplace(key, lifted);
  return lifted;
}

LabeledFactor level0_factor(Int p, int k, Int d, Int ell) {
  Poly q = base_factor(p, d, ell);
  Poly lifted = level0_lift(p, k, d, ell);
  return {{d, ell, 0}, lifted, 1, q, lifted};
}

}  // namespace

LabeledFactor lift_radical_factor(Int d, Int ell, int r, Int p, int k) {
  require_coprime(p, d);
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "level must be >= 1");
  const auto reps = coset_reps(p, d);
  if (std::find(reps.begin(), reps.end(), ell) == reps.end()) {
    throw Error(ErrorKind::InvalidArgument, "label " + std::to_string(ell) + " is not a coset representative");
  }
  const Modulus mod = Modulus::prime_power(p, k);
  Poly q = base_factor(p, d, ell);
  Poly power = q.pow(ipow(p, r - 1) * (p - 1));
  // The factor of the radical sum for n' = d also divides it for every
  // multiple n' of d, so lifting against the smallest target is enough.
  Poly lifted = k == 1 ? power : hensel_lift_coprime(power, radical_sum(mod, d, r));
  return {{d, ell, r}, lifted, 1, q, level0_lift(p, k, d, ell)};
}

std::vector<LabeledFactor> factor_xn_minus1(Int p, int k, Int n) {
  auto [r, np] = split_prime_part(n, p);
  std::vector<LabeledFactor> out;
  for (Int d : divisors(np)) {
    for (Int ell : coset_reps(p, d)) {
      if (k == 1) {
        auto f = level0_factor(p, k, d, ell);
        f.multiplicity = static_cast<int>(ipow(p, r));
        out.push_back(f);
        continue;
      }
      out.push_back(level0_factor(p, k, d, ell));
      for (int b = 1; b <= r; ++b) out.push_back(lift_radical_factor(d, ell, b, p, k));
    }
  }
  sort_by_label(out);
  return out;
}

std::vector<LabeledFactor> factor_radical_sum(Int p, int k, Int n) {
  auto [r, np] = split_prime_part(n, p);
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "radical sum requires p | n");
  std::vector<LabeledFactor> out;
  for (Int d : divisors(np)) {
    for (Int ell : coset_reps(p, d)) {
      if (k == 1) {
        auto f = level0_factor(p, k, d, ell);
        f.label.level = r;
        f.multiplicity = static_cast<int>(ipow(p, r - 1) * (p - 1));
        out.push_back(f);
      } else {
        out.push_back(lift_radical_factor(d, ell, r, p, k));
      }
    }
  }
  sort_by_label(out);
  return out;
}

std::vector<LabeledFactor> factor_xn_plus1(Int p, int k, Int n) {
  auto [r, np] = split_prime_part(n, p);
  const Modulus mod = Modulus::prime_power(p, k);
  std::vector<LabeledFactor> out;
  for (const auto& lam : lambda_index(p, np)) {
    if (k == 1) {
      auto f = level0_factor(p, k, lam.d, lam.ell);
      f.multiplicity = static_cast<int>(ipow(p, r));
      out.push_back(f);
      continue;
    }
    if (p == 2) {
      Poly q = base_factor(p, lam.d, lam.ell);
      Poly power = q.pow(ipow(2, r));
      Poly target = Poly::binomial(mod, static_cast<int>(lam.d * ipow(2, r)), 1);
      Poly lifted = hensel_lift_coprime(power, target);
      out.push_back({{lam.d, lam.ell, r + 1}, lifted, 1, q, level0_lift(p, k, lam.d, lam.ell)});
      continue;
    }
    out.push_back(level0_factor(p, k, lam.d, lam.ell));
    for (int b = 1; b <= r; ++b) out.push_back(lift_radical_factor(lam.d, lam.ell, b, p, k));
  }
  sort_by_label(out);
  return out;
}

Poly expand(const std::vector<LabeledFactor>& factors, const Modulus& mod) {
  Poly acc = Poly::constant(mod, 1);
  for (const auto& f : factors) acc = acc * f.poly.pow(f.multiplicity);
  return acc;
}

Bezout bezout(const Poly& f1, const Poly& f2) {
  const Modulus& mod = f1.modulus();
  const Int p = mod.p();
  const int k = mod.k();
  const Modulus fp = prime_field(p);
  auto [g, s, t] = xgcd(f1.reduce_to(fp), f2.reduce_to(fp));
  if (g.degree() != 0) throw Error(ErrorKind::NotCoprime, "polynomials share a factor mod p");
  Poly u = s.lift_to(mod);
  Poly v = t.lift_to(mod);
  // u f1 + v f2 = 1 - pg; multiply by h = sum_{i<k} (pg)^i to clear the error.
  Poly pg = Poly::constant(mod, 1) - (u * f1 + v * f2);
  Poly h = Poly::constant(mod, 1);
  Poly term = Poly::constant(mod, 1);
  for (int i = 1; i < k; ++i) {
    term = term * pg;
    h = h + term;
  }
  Poly u2 = rem(h * u, f2);
  Poly v2 = exact_div(Poly::constant(mod, 1) - u2 * f1, f2);
  if (!(u2 * f1 + v2 * f2 == Poly::constant(mod, 1))) {
    throw Error(ErrorKind::InternalMismatch, "Bezout certificate failed");
  }
  return {u2, v2};
}

}  // namespace rbcm
