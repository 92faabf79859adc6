#include "rbcm/classify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rbcm/crt.hpp"
#include "rbcm/error.hpp"

namespace rbcm {

std::string family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::ElementaryI: return "elementaryI";
    case Family::ElementaryII: return "elementaryII";
    case Family::TwoGroup: return "twoGroup";
    case Family::Coprime: return "coprime";
    case Family::Rank2: return "rank2";
    case Family::Standard: return "standard";
  }
  return "?";
}

namespace {

std::string labels_to_string(const std::vector<std::pair<FactorLabel, int>>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << "(" << v[i].first.d << "," << v[i].first.ell << "):" << v[i].second;
  }
  os << "}";
  return os.str();
}

}  // namespace

std::string FamilyParams::describe() const {
  std::ostringstream os;
  os << family_name(variant);
  if (case_tag) os << " case " << case_tag;
  if (!K.empty()) os << " K=" << labels_to_string(K);
  if (!J.empty()) os << " J=" << labels_to_string(J);
  if (label) os << " lambda=(" << label->d << "," << label->ell << ")";
  if (mu) os << " mu=" << *mu;
  if (mu1) os << " mu1=" << *mu1;
  if (mu2) os << " mu2=" << *mu2;
  if (alpha) os << " alpha=" << *alpha;
  if (nu) os << " nu=" << *nu;
  if (!nu_residue.empty()) {
    os << " nu=(";
    for (size_t i = 0; i < nu_residue.size(); ++i) os << (i ? "," : "") << nu_residue[i];
    os << ")";
  }
  return os.str();
}

namespace {

// Calls f on every vector v with 0 <= v[i] <= hi[i], in lexicographic order.
template <class F>
void odometer(const std::vector<int>& hi, F&& f) {
  std::vector<int> v(hi.size(), 0);
  while (true) {
    f(v);
    size_t i = hi.size();
    bool advanced = false;
    while (i > 0 && !advanced) {
      --i;
      if (++v[i] <= hi[i]) {
        advanced = true;
      } else {
        v[i] = 0;
      }
    }
    if (!advanced) return;
  }
}

// The admissible standard form of q (whose context lies in q) with its map, or
// nullopt when q fails admissibility, the omega entries collide, or the group
// differs from `expected`.
std::optional<FamilyMember> member_from(const FamilyParams& params, const IdealPresentation& q, int n,
                                        MapType type, const std::optional<AbelianType>& expected) {
  if (expected && q.quotient_order() != expected->order()) return std::nullopt;
  const Admissibility adm = type == MapType::I ? is_admissible(q, n) : is_admissible_type2(q, n);
  if (!adm) return std::nullopt;
  const Poly ambient = Poly::binomial(q.modulus(), n, 1);
  const IdealPresentation standard = q.context() == ambient ? q : recontext(q, ambient);
  CayleyMapRecord map;
  try {
    map = build_map(standard, n, type);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateOmega) return std::nullopt;
    throw;
  }
  const AbelianType group = map.group.type();
  if (expected && !(group == *expected)) return std::nullopt;
  FamilyMember m{params, standard, map, group, regular_map_stats(map), std::nullopt, ""};
  return m;
}

bool push_unique(std::vector<FamilyMember>& out, FamilyMember m) {
  for (const auto& x : out) {
    if (x.ideal == m.ideal) return false;
  }
  out.push_back(std::move(m));
  return true;
}

AbelianType elementary_type(Int p, int m) { return AbelianType{std::vector<Int>(static_cast<size_t>(m), p)}; }

Poly lin(const Modulus& mod, Int mu) { return Poly::x_minus(mod, mu); }

}  // namespace

std::vector<Int> solve_unit_roots(Int p, int k, Int n) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  std::vector<Int> roots;
  for (Int a = 0; a < p; ++a) {
    if (pow_mod(a, n, p) == mod_floor(-1, p)) roots.push_back(a);
  }
  Int pj = p;
  for (int j = 1; j < k; ++j) {
    const Int next = pj * p;
    std::vector<Int> lifted;
    for (Int r : roots) {
      for (Int t = 0; t < p; ++t) {
        const Int c = r + t * pj;
        if (pow_mod(c, n, next) == next - 1) lifted.push_back(c);
      }
    }
    roots = std::move(lifted);
    pj = next;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Int> theta_set(Int p, Int n) {
  std::vector<Int> out;
  for (Int d : divisors(2 * n)) {
    if (n % d != 0 && (p + 1) % d == 0) out.push_back(d);
  }
  return out;
}

std::vector<FamilyMember> classify_cyclic(Int p, int k, int n) {
  const Modulus mod = Modulus::prime_power(p, k);
  std::vector<FamilyMember> out;
  for (Int mu : solve_unit_roots(p, k, n)) {
    FamilyParams params;
    params.variant = Family::Cyclic;
    params.mu = mu;
    const Poly f = lin(mod, mu);
    if (auto m = member_from(params, canonical_form({f}, f), n, MapType::I, AbelianType{{mod.N()}})) {
      push_unique(out, std::move(*m));
    }
  }
  return out;
}

namespace {

struct ElementaryScan {
  std::vector<FactorLabel> labels;
  std::vector<Poly> bases;
  int r = 0;
  Int n_prime = 1;
};

ElementaryScan elementary_scan(Int p, int n) {
  ElementaryScan s;
  const PrimeSplit sp = split_prime_part(n, p);
  s.r = sp.r;
  s.n_prime = sp.n_prime;
  s.labels = lambda_index(p, sp.n_prime);
  for (const auto& l : s.labels) s.bases.push_back(base_factor(p, l.d, l.ell));
  return s;
}

}  // namespace

std::vector<ClauseReading> elementary_clause_readings(Int p, int m, int n, MapType type) {
  if (type == MapType::II && p != 2) throw Error(ErrorKind::InvalidArgument, "type II needs p = 2");
  const ElementaryScan s = elementary_scan(p, n);
  const Modulus mod = Modulus::prime_power(p, 1);
  const int top = static_cast<int>(ipow(p, s.r));
  std::vector<ClauseReading> out;
  odometer(std::vector<int>(s.labels.size(), top), [&](const std::vector<int>& K) {
    ClauseReading cr;
    int degree = 0;
    bool has_r = false;
    Int l = 1;
    Poly f = Poly::constant(mod, 1);
    cr.in_printed_range = true;
    for (size_t i = 0; i < K.size(); ++i) {
      cr.K.push_back({s.labels[i], K[i]});
      degree += K[i] * s.bases[i].degree();
      has_r = has_r || K[i] == s.r;
      if (K[i] != 0) l = lcm(l, s.labels[i].d);
      cr.in_printed_range = cr.in_printed_range && K[i] <= s.r;
      f = f * s.bases[i].pow(K[i]);
    }
    cr.printed_i = has_r;
    cr.printed_ii = l == s.n_prime;
    cr.printed_iii = degree == m;
    if (degree == m && degree > 0) {
      FamilyParams params;
      params.variant = type == MapType::I ? Family::ElementaryI : Family::ElementaryII;
      cr.admissible = member_from(params, canonical_form({f}, f), n, type, elementary_type(p, m)).has_value();
    }
    if (cr.printed_iii || cr.printed()) out.push_back(std::move(cr));
  });
  return out;
}

std::vector<FamilyMember> classify_elementary(Int p, int m, int n, MapType type) {
  if (type == MapType::II && p != 2) throw Error(ErrorKind::InvalidArgument, "type II needs p = 2");
  std::vector<FamilyMember> out;
  if (type == MapType::I && p == 2) return out;  // +w and -w coincide
  const ElementaryScan s = elementary_scan(p, n);
  const Modulus mod = Modulus::prime_power(p, 1);
  const int top = static_cast<int>(ipow(p, s.r));
  odometer(std::vector<int>(s.labels.size(), top), [&](const std::vector<int>& K) {
    int degree = 0;
    for (size_t i = 0; i < K.size(); ++i) degree += K[i] * s.bases[i].degree();
    if (degree != m || degree == 0) return;
    FamilyParams params;
    params.variant = type == MapType::I ? Family::ElementaryI : Family::ElementaryII;
    Poly f = Poly::constant(mod, 1);
    for (size_t i = 0; i < K.size(); ++i) {
      params.K.push_back({s.labels[i], K[i]});
      f = f * s.bases[i].pow(K[i]);
    }
    if (auto mem = member_from(params, canonical_form({f}, f), n, type, elementary_type(p, m))) {
      push_unique(out, std::move(*mem));
    }
  });
  return out;
}

std::vector<FamilyMember> classify_2group(int k, int n, const std::optional<AbelianType>& only) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  const CrtSplit split = crt_split(2, k, n);
  const Modulus& mod = split.mod;
  const int r = split_prime_part(n, 2).r;
  const int top = static_cast<int>(ipow(2, r));
  const size_t L = split.components.size();
  std::vector<FamilyMember> out;
  const MapType type = k == 1 ? MapType::II : MapType::I;
  // Positions 0..L-1 hold J, L..2L-1 hold K.
  std::vector<int> hi(2 * L, top);
  for (size_t i = 0; i < L; ++i) hi[i] = k - 1;
  odometer(hi, [&](const std::vector<int>& v) {
    bool anchor = false;
    for (size_t i = 0; i < L; ++i) anchor = anchor || (v[i] == k - 1 && v[L + i] != 0);
    if (!anchor) return;
    FamilyParams params;
    params.variant = Family::TwoGroup;
    std::vector<IdealPresentation> parts;
    for (size_t i = 0; i < L; ++i) {
      const auto& c = split.components[i];
      params.J.push_back({c.label, v[i]});
      params.K.push_back({c.label, v[L + i]});
      const Poly& qt = k == 1 ? c.factors.front().residue_base : c.factors.front().lifted_base;
      const Int pj = ipow(2, v[i]);
      parts.push_back(canonical_form({qt.pow(v[L + i]).scaled(pj), Poly::constant(mod, 2 * pj)}, c.context));
    }
    if (auto mem = member_from(params, split.assemble(parts), n, type, only)) {
      push_unique(out, std::move(*mem));
    }
  });
  return out;
}

std::vector<FamilyMember> classify_coprime(Int p, int k, int n, const std::optional<AbelianType>& only) {
  if (p == 2) throw Error(ErrorKind::InvalidArgument, "the coprime family needs p odd");
  if (n % p == 0) throw Error(ErrorKind::NotCoprime, "n must be coprime to p");
  const CrtSplit split = crt_split(p, k, n);
  const Modulus& mod = split.mod;
  const size_t L = split.components.size();
  std::vector<FamilyMember> out;
  odometer(std::vector<int>(L, k), [&](const std::vector<int>& J) {
    if (std::find(J.begin(), J.end(), k) == J.end()) return;
    FamilyParams params;
    params.variant = Family::Coprime;
    std::vector<IdealPresentation> parts;
    for (size_t i = 0; i < L; ++i) {
      const auto& c = split.components[i];
      params.J.push_back({c.label, J[i]});
      parts.push_back(canonical_form({Poly::constant(mod, ipow(p, J[i]))}, c.context));
    }
    if (auto mem = member_from(params, split.assemble(parts), n, MapType::I, only)) {
      push_unique(out, std::move(*mem));
    }
  });
  return out;
}

namespace {

Int pow_or_one(Int mu, Int e, Int N) { return e < 0 ? 1 : pow_mod(mu, e, N); }

Int binom2(Int a) { return a * (a - 1) / 2; }

// Explicit generator sequences for rank-2 members, compared with M_Q.
std::optional<bool> check_generators(const FamilyMember& m, Int p, int k, int kp, int n) {
  const Int P = ipow(p, k);
  const Int P2 = ipow(p, kp);
  const FamilyParams& f = m.params;
  AbelianGroup g({P, P2});
  std::vector<std::pair<Int, Int>> z;
  if (f.case_tag == 'a') {
    for (int i = 0; i < n; ++i) z.push_back({pow_mod(*f.mu1, i, P), pow_mod(*f.mu2, i, P2)});
  } else if (f.case_tag == 'c' && k == 1) {
    for (int i = 1; i <= n; ++i) {
      z.push_back({pow_or_one(*f.mu, i - 1, p), mod_floor((i - 1) * pow_or_one(*f.mu, i - 2, p), p)});
    }
  } else if (f.case_tag == 'd') {
    const Int mu = *f.mu, al = *f.alpha, nu = *f.nu;
    const Int shift = mod_floor(mu + p * nu, P);
    const Int corr = mod_floor(p * al - (p * p % P) * (nu * nu % P), P);
    for (int i = 1; i <= n; ++i) {
      const Int a = mod_floor(pow_mod(shift, i - 1, P) + mod_floor(binom2(i - 1), P) * corr % P * pow_or_one(mu, i - 3, P), P);
      const Int b = mod_floor((i - 1) * pow_or_one(mu, i - 2, P), P2);
      z.push_back({a, b});
    }
  } else {
    return std::nullopt;
  }
  CayleyMapRecord zm;
  zm.group = g;
  zm.type = MapType::I;
  for (auto [a, b] : z) zm.omega.push_back(g.index({a, b}));
  for (auto [a, b] : z) zm.omega.push_back(g.neg(g.index({a, b})));
  try {
    validate_map(zm);
  } catch (const Error&) {
    return false;
  }
  return is_rbcm(zm).ok && maps_isomorphic(zm, m.map);
}

struct Rank2Candidate {
  FamilyParams params;
  IdealPresentation ideal;
};

enum class NuKind { Zero, Constant, Polynomial };

NuKind nu_kind(const std::vector<Int>& nu) {
  if (std::all_of(nu.begin(), nu.end(), [](Int c) { return c == 0; })) return NuKind::Zero;
  if (std::all_of(nu.begin() + 1, nu.end(), [](Int c) { return c == 0; })) return NuKind::Constant;
  return NuKind::Polynomial;
}

// Which labels feed case b: q_lambda quadratic over Z_p, or the narrower
// d(lambda) | p + 1.
enum class LabelRule { Quadratic, DividesPPlusOne };

// q_lambda - p nu for every admitted lambda and every residue nu mod q_lambda
// of the requested kind with p^{r+1} nu = 0.
std::vector<Rank2Candidate> rank2_case_b(const Modulus& mod, Int p, int k, int n, NuKind kind,
                                         LabelRule rule = LabelRule::Quadratic) {
  const PrimeSplit sp = split_prime_part(n, p);
  const Int P = mod.N();
  // Coefficients c with p^{r+1} c = 0 are the multiples of `step`.
  const Int step = P / gcd(P, ipow(p, std::min<int>(sp.r + 1, k)));
  std::vector<Rank2Candidate> out;
  for (const auto& lam : lambda_index(p, sp.n_prime)) {
    const Poly base = base_factor(p, lam.d, lam.ell);
    if (base.degree() != 2) continue;
    if (rule == LabelRule::DividesPPlusOne && (p + 1) % lam.d != 0) continue;
    const Poly qt = hensel_lift_factor(base, p, k, Poly::binomial(mod, static_cast<int>(lam.d), -1));
    const int D = qt.degree();
    odometer(std::vector<int>(static_cast<size_t>(D), static_cast<int>(P / step - 1)), [&](const std::vector<int>& v) {
      std::vector<Int> nu;
      for (int c : v) nu.push_back(c * step);
      if (nu_kind(nu) != kind) return;
      FamilyParams params;
      params.variant = Family::Rank2;
      params.case_tag = 'b';
      params.label = lam;
      params.nu_residue = nu;
      const Poly f = qt - Poly(mod, nu).scaled(p);
      out.push_back({params, canonical_form({f}, f)});
    });
  }
  return out;
}

std::vector<FamilyMember> rank2_members(Int p, int k, int kp, int n, LabelRule rule) {
  if (p == 2) throw Error(ErrorKind::InvalidArgument, "the rank-2 family needs p odd");
  if (k < kp || kp < 1) throw Error(ErrorKind::InvalidArgument, "need k >= k' >= 1");
  const Modulus mod = Modulus::prime_power(p, k);
  const Int P = mod.N();
  const Int P2 = ipow(p, kp);
  const PrimeSplit sp = split_prime_part(n, p);
  const AbelianType expected{{P2, P}};
  std::vector<Rank2Candidate> cands;

  for (Int mu1 : solve_unit_roots(p, k, n)) {
    for (Int mu2 : solve_unit_roots(p, kp, n)) {
      if ((mu1 - mu2) % p == 0) continue;
      FamilyParams params;
      params.variant = Family::Rank2;
      params.case_tag = 'a';
      params.mu1 = mu1;
      params.mu2 = mu2;
      const Poly f = lin(mod, mu1) * lin(mod, mu2);
      cands.push_back({params, canonical_form({f, lin(mod, mu1).scaled(P2)}, f)});
    }
  }
  if (k == kp) {
    for (NuKind kind : {NuKind::Zero, NuKind::Constant, NuKind::Polynomial}) {
      for (auto& c : rank2_case_b(mod, p, k, n, kind, rule)) cands.push_back(std::move(c));
    }
  }
  // Case c: Q = (f) with f monic quadratic, f = (x - mu)^2 mod p. For k > 1
  // the lifts (x - mu)^2 + p(a x + b) are filtered by membership.
  if (sp.r > 0 && k == kp && (k == 1 || rule == LabelRule::Quadratic)) {
    const Int lifts = P / p;
    for (Int mu = 0; mu < p; ++mu) {
      if (pow_mod(mu, sp.n_prime, p) != p - 1) continue;
      for (Int a = 0; a < lifts; ++a) {
        for (Int b = 0; b < lifts; ++b) {
          FamilyParams params;
          params.variant = Family::Rank2;
          params.case_tag = 'c';
          params.mu = mu;
          if (k > 1) params.nu_residue = {b, a};
          const Poly f = lin(mod, mu).pow(2) + Poly(mod, {b, a}).scaled(p);
          cands.push_back({params, canonical_form({f}, f)});
        }
      }
    }
  }
  if (sp.r > 0 && k > 1 && kp == 1) {
    const Int pr1 = ipow(p, std::min<int>(sp.r + 1, k));
    for (Int mu = 0; mu < P; ++mu) {
      if (pow_mod(mu, sp.n_prime, P) != P - 1 && pow_mod(mu, n, P) != P - 1) continue;
      for (Int alpha = 0; alpha < P; ++alpha) {
        for (Int nu = 0; nu < P; ++nu) {
          if (mod.reduce(pr1 * nu) != 0) continue;
          if (mod.reduce(p * p * alpha - mod.reduce(p * p * p) * mod.reduce(nu * nu)) != 0) continue;
          FamilyParams params;
          params.variant = Family::Rank2;
          params.case_tag = 'd';
          params.mu = mu;
          params.alpha = alpha;
          params.nu = nu;
          const Poly f = lin(mod, mu).pow(2) - Poly::constant(mod, p * alpha);
          const Poly g = lin(mod, mu).scaled(p) - Poly::constant(mod, p * p * nu);
          cands.push_back({params, canonical_form({f, g}, f)});
        }
      }
    }
  }

  std::vector<FamilyMember> out;
  for (const auto& c : cands) {
    auto mem = member_from(c.params, c.ideal, n, MapType::I, expected);
    if (!mem) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const FamilyMember& x) { return x.ideal == mem->ideal; });
    if (it != out.end()) {
      if (it->params.case_tag != c.params.case_tag &&
          it->overlapping_cases.find(c.params.case_tag) == std::string::npos) {
        it->overlapping_cases += c.params.case_tag;
      }
      continue;
    }
    mem->generators_match = check_generators(*mem, p, k, kp, n);
    out.push_back(std::move(*mem));
  }
  return out;
}

}  // namespace

std::vector<FamilyMember> classify_rank2(Int p, int k, int kp, int n) {
  return rank2_members(p, k, kp, n, LabelRule::Quadratic);
}

NuRangeOutcome rank2_nu_range(Int p, int k, int n) {
  const Modulus mod = Modulus::prime_power(p, k);
  const AbelianType expected{{mod.N(), mod.N()}};
  NuRangeOutcome o;
  std::vector<IdealPresentation> seen;
  for (NuKind kind : {NuKind::Zero, NuKind::Constant, NuKind::Polynomial}) {
    int fresh = 0;
    for (const auto& c : rank2_case_b(mod, p, k, n, kind)) {
      auto m = member_from(c.params, c.ideal, n, MapType::I, expected);
      if (!m || std::find(seen.begin(), seen.end(), m->ideal) != seen.end()) continue;
      seen.push_back(m->ideal);
      ++fresh;
    }
    if (kind == NuKind::Zero) o.zero_nu_ideals = fresh;
    if (kind == NuKind::Constant) o.constant_nu_new_ideals = fresh;
    if (kind == NuKind::Polynomial) o.polynomial_nu_new_ideals = fresh;
  }
  return o;
}

namespace {

// Z_N[x]/Q tensored with Z_p is Z_p[x]/(h) for a divisor h of x^n + 1, so the
// rank of the group must be the degree of some divisor of x^n + 1 over Z_p.
bool rank_is_divisor_degree(Int p, int n, int rank) {
  std::vector<char> reach(static_cast<size_t>(n + 1), 0);
  reach[0] = 1;
  for (const auto& f : factor_xn_plus1(p, 1, n)) {
    const int d = f.residue_base.degree();
    const int copies = f.poly.degree() / d * f.multiplicity;
    for (int c = 0; c < copies; ++c) {
      for (int s = n; s >= d; --s) reach[static_cast<size_t>(s)] |= reach[static_cast<size_t>(s - d)];
    }
  }
  return rank <= n && reach[static_cast<size_t>(rank)];
}

}  // namespace

std::vector<FamilyMember> classify_standard(const AbelianType& g, int n, MapType type, Int budget) {
  if (g.invariants.empty()) throw Error(ErrorKind::InvalidArgument, "trivial group");
  const Modulus mod = Modulus::of(g.exponent());
  if (!mod.is_prime_power()) throw Error(ErrorKind::InvalidArgument, "group is not a p-group");
  if (type == MapType::II && g.exponent() != 2) throw Error(ErrorKind::InvalidArgument, "type II needs exponent 2");
  std::vector<FamilyMember> out;
  if (!rank_is_divisor_degree(mod.p(), n, g.rank())) return out;
  const Poly ambient = Poly::binomial(mod, n, 1);
  for (const auto& q : enumerate_ideals_above(canonical_form({}, ambient), g.order(), budget)) {
    if (q.quotient_order() != g.order()) continue;
    FamilyParams params;
    params.variant = Family::Standard;
    if (auto m = member_from(params, q, n, type, g)) push_unique(out, std::move(*m));
  }
  return out;
}

bool CrossCheckReport::ok() const {
  return std::all_of(families.begin(), families.end(), [](const FamilyCheck& f) { return f.perfect; });
}

namespace {

FamilyCheck match_family(Family fam, const std::vector<FamilyMember>& members,
                         const std::vector<CayleyMapRecord>& oracle) {
  FamilyCheck fc;
  fc.family = fam;
  fc.family_count = static_cast<int>(members.size());
  std::vector<int> hits(oracle.size(), 0);
  for (const auto& m : members) {
    int idx = -1;
    for (size_t j = 0; j < oracle.size() && idx < 0; ++j) {
      if (maps_isomorphic(m.map, oracle[j])) idx = static_cast<int>(j);
    }
    fc.matching.push_back(idx);
    if (idx >= 0) ++hits[static_cast<size_t>(idx)];
  }
  int unmatched = 0, missed = 0, doubled = 0;
  for (int idx : fc.matching) unmatched += idx < 0;
  for (int h : hits) {
    missed += h == 0;
    doubled += h > 1;
  }
  fc.perfect = unmatched == 0 && missed == 0 && doubled == 0;
  std::ostringstream os;
  os << fc.family_count << " family maps, " << oracle.size() << " oracle maps";
  if (unmatched) os << ", " << unmatched << " not in the oracle";
  if (missed) os << ", " << missed << " oracle maps missed";
  if (doubled) os << ", " << doubled << " oracle maps hit twice";
  fc.detail = os.str();
  return fc;
}

std::vector<FamilyMember> of_group(std::vector<FamilyMember> v, const AbelianType& g) {
  std::erase_if(v, [&](const FamilyMember& m) { return !(m.group == g); });
  return v;
}

}  // namespace

CrossCheckReport cross_check(const AbelianType& group, int valence, const OracleOptions& opts) {
  if (group.invariants.empty()) throw Error(ErrorKind::InvalidArgument, "trivial group");
  const auto pf = factorize(group.exponent());
  if (pf.size() != 1) throw Error(ErrorKind::InvalidArgument, "group is not a p-group");
  const Int p = pf.front().first;
  const int k = pf.front().second;
  const int m = group.rank();
  const bool type2 = p == 2 && k == 1;
  if ((type2 ? valence : valence / 2) < 2) throw Error(ErrorKind::InvalidArgument, "need n > 1");
  CrossCheckReport rep;
  rep.group = group;
  rep.valence = valence;
  rep.type = type2 ? MapType::II : MapType::I;
  rep.oracle_maps = brute_force_rbcms(group, valence, opts);
  rep.oracle_count = static_cast<int>(rep.oracle_maps.size());
  if (!type2 && valence % 2 != 0) {
    rep.notes.push_back("odd valence: no type I maps");
    rep.oracle_only = true;
    return rep;
  }
  const int n = type2 ? valence : valence / 2;
  const bool elementary = std::all_of(group.invariants.begin(), group.invariants.end(), [&](Int d) { return d == p; });

  std::vector<std::pair<Family, std::function<std::vector<FamilyMember>()>>> runs;
  if (p != 2 && m == 1) runs.push_back({Family::Cyclic, [&] { return classify_cyclic(p, k, n); }});
  if (p != 2 && elementary) runs.push_back({Family::ElementaryI, [&] { return classify_elementary(p, m, n, MapType::I); }});
  if (type2) runs.push_back({Family::ElementaryII, [&] { return classify_elementary(2, m, n, MapType::II); }});
  if (p == 2) runs.push_back({Family::TwoGroup, [&] { return classify_2group(k, n, group); }});
  if (p != 2 && n % p != 0) runs.push_back({Family::Coprime, [&] { return classify_coprime(p, k, n, group); }});
  if (p != 2 && m == 2) {
    const int kp = p_valuation(group.invariants.front(), p).value_or(0);
    runs.push_back({Family::Rank2, [&, kp] { return classify_rank2(p, k, kp, n); }});
  }
  runs.push_back({Family::Standard, [&] { return classify_standard(group, n, rep.type, kCrossCheckStandardBudget); }});

  for (auto& [fam, run] : runs) {
    std::vector<FamilyMember> members;
    try {
      members = of_group(run(), group);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      rep.notes.push_back(family_name(fam) + " skipped: " + e.what());
      continue;
    }
    rep.families.push_back(match_family(fam, members, rep.oracle_maps));
    if (rep.members.empty() && rep.families.size() == 1) rep.members = std::move(members);
  }
  rep.oracle_only = rep.families.empty();
  if (rep.oracle_only) rep.notes.push_back("no family applies within budget; oracle only");
  return rep;
}

namespace {

struct ElementaryInstance {
  Int p;
  int m, n;
  MapType type;
};

std::string instance_name(const ElementaryInstance& e) {
  std::ostringstream os;
  os << "Z" << e.p << "^" << e.m << " valence " << (e.type == MapType::I ? 2 * e.n : e.n) << " type "
     << map_type_name(e.type);
  return os.str();
}

}  // namespace

std::vector<DiscrepancyEntry> discrepancy_ledger(const OracleOptions& opts) {
  const std::vector<ElementaryInstance> grid{
      {3, 1, 3, MapType::I}, {3, 2, 3, MapType::I}, {3, 3, 3, MapType::I}, {3, 2, 6, MapType::I},
      {5, 1, 5, MapType::I}, {5, 2, 5, MapType::I}, {3, 2, 2, MapType::I}, {5, 2, 2, MapType::I},
      {2, 2, 2, MapType::II}, {2, 3, 4, MapType::II}, {2, 4, 4, MapType::II}, {2, 3, 3, MapType::II},
  };
  std::vector<DiscrepancyEntry> out;
  for (const auto& e : grid) {
    const AbelianType g = elementary_type(e.p, e.m);
    const int valence = e.type == MapType::I ? 2 * e.n : e.n;
    const int oracle = static_cast<int>(brute_force_rbcms(g, valence, opts).size());
    const auto readings = elementary_clause_readings(e.p, e.m, e.n, e.type);
    int implemented = 0, narrow = 0, printed = 0;
    for (const auto& cr : readings) {
      implemented += cr.admissible;
      narrow += cr.admissible && cr.in_printed_range;
      printed += cr.printed();
    }
    const int family = static_cast<int>(classify_elementary(e.p, e.m, e.n, e.type).size());
    if (family != implemented) throw Error(ErrorKind::InternalMismatch, "clause readings disagree with the family");

    DiscrepancyEntry codomain;
    codomain.topic = "elementary exponent codomain";
    codomain.instance = instance_name(e);
    codomain.printed = "K(l) in 0..r: " + std::to_string(narrow);
    codomain.implemented = "K(l) in 0..p^r, admissible: " + std::to_string(implemented);
    codomain.oracle = oracle;
    codomain.implemented_agrees = implemented == oracle;
    codomain.printed_agrees = narrow == oracle;
    out.push_back(std::move(codomain));

    DiscrepancyEntry clause;
    clause.topic = "elementary lcm clause";
    clause.instance = instance_name(e);
    clause.printed = "printed clauses: " + std::to_string(printed);
    clause.implemented = "admissibility filter: " + std::to_string(implemented);
    clause.oracle = oracle;
    clause.implemented_agrees = implemented == oracle;
    clause.printed_agrees = printed == oracle;
    out.push_back(std::move(clause));
  }

  struct Rank2Instance {
    Int p;
    int k, n;
  };
  for (const auto& e : std::vector<Rank2Instance>{{3, 1, 4}, {5, 1, 6}, {3, 2, 4}, {3, 1, 2}}) {
    const Int P = ipow(e.p, e.k);
    const AbelianType g{{P, P}};
    const int oracle = static_cast<int>(brute_force_rbcms(g, 2 * e.n, opts).size());
    const int quadratic = static_cast<int>(classify_rank2(e.p, e.k, e.k, e.n).size());
    const int narrow = static_cast<int>(rank2_members(e.p, e.k, e.k, e.n, LabelRule::DividesPPlusOne).size());
    DiscrepancyEntry label;
    label.topic = "rank-2 quadratic label condition";
    label.instance = g.to_string() + " valence " + std::to_string(2 * e.n);
    label.printed = "d(l) | p+1: " + std::to_string(narrow);
    label.implemented = "q_l quadratic: " + std::to_string(quadratic);
    label.oracle = oracle;
    label.implemented_agrees = quadratic == oracle;
    label.printed_agrees = narrow == oracle;
    out.push_back(std::move(label));
  }

  {
    const AbelianType g{{9, 9}};
    const int oracle = static_cast<int>(brute_force_rbcms(g, 6, opts).size());
    const int lifted = static_cast<int>(classify_rank2(3, 2, 2, 3).size());
    const int narrow = static_cast<int>(rank2_members(3, 2, 2, 3, LabelRule::DividesPPlusOne).size());
    DiscrepancyEntry rep;
    rep.topic = "rank-2 repeated root for k = k' > 1";
    rep.instance = "Z9xZ9 valence 6";
    rep.printed = "repeated-root case only for k = k' = 1: " + std::to_string(narrow);
    rep.implemented = "monic quadratic lifts of (x-mu)^2: " + std::to_string(lifted);
    rep.oracle = oracle;
    rep.implemented_agrees = lifted == oracle;
    rep.printed_agrees = narrow == oracle;
    out.push_back(std::move(rep));
  }

  const Int p = 3;
  const int k = 2, n = 6;
  const AbelianType g{{9, 9}};
  const int oracle = static_cast<int>(brute_force_rbcms(g, 2 * n, opts).size());
  const auto members = classify_rank2(p, k, k, n);
  const NuRangeOutcome nu = rank2_nu_range(p, k, n);
  const int total = static_cast<int>(members.size());
  const int scalar = total - nu.polynomial_nu_new_ideals;
  DiscrepancyEntry range;
  range.topic = "rank-2 nu range";
  range.instance = "Z9xZ9 valence 12";
  range.printed = "scalar nu with p^(r+1) nu = 0: " + std::to_string(scalar) + " (nu = 0 alone gives " +
                  std::to_string(nu.zero_nu_ideals) + " ideals, nonzero constants " +
                  std::to_string(nu.constant_nu_new_ideals) + " more)";
  range.implemented = "nu a residue mod q with p^(r+1) nu = 0: " + std::to_string(total) + " (" +
                      std::to_string(nu.polynomial_nu_new_ideals) + " from non-constant nu)";
  range.oracle = oracle;
  range.implemented_agrees = total == oracle;
  range.printed_agrees = scalar == oracle;
  out.push_back(std::move(range));
  return out;
}

}  // namespace rbcm
