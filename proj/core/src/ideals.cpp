#include "rbcm/ideals.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

#include "rbcm/error.hpp"

namespace rbcm {

namespace {

constexpr Int kSaturated = Int{1} << 62;

Int sat_mul(Int a, Int b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return std::min(a * b, kSaturated);
}

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
}

int pivot_col(const Row& r) {
  for (size_t j = 0; j < r.size(); ++j) {
    if (r[j] != 0) return static_cast<int>(j);
  }
  return -1;
}

// Unit u with u*a = gcd(a, N) (mod N).
Int unit_normalizer(Int a, Int N) {
  const Int g = gcd(a, N);
  const Int ap = a / g;
  const Int np = N / g;
  Int u0 = 1;
  if (np > 1) {
    auto [gg, s, t] = gcdex(mod_floor(ap, np), np);
    u0 = mod_floor(s, np);
  }
  for (Int u = u0;; u += np) {
    if (gcd(u, N) == 1) return mod_floor(u, N);
  }
}

void axpy(Row& dst, Int c, const Row& src, Int N) {
  if (c == 0) return;
  for (size_t j = 0; j < dst.size(); ++j) dst[j] = mod_floor(dst[j] + c * src[j], N);
}

// Multiply the row polynomial by x modulo the monic context (descending rows).
Row shift_row(const Row& r, const Poly& context) {
  const size_t D = r.size();
  Row out(D, 0);
  const Int N = context.modulus().N();
  const Int top = r[0];
  for (size_t j = 0; j + 1 < D; ++j) out[j] = r[j + 1];
  out[D - 1] = 0;
  if (top != 0) {
    for (size_t j = 0; j < D; ++j) {
      // index j <-> degree D-1-j
      const Int c = context.coeff(static_cast<int>(D - 1 - j));
      out[j] = mod_floor(out[j] - top * c, N);
    }
  }
  return out;
}

std::vector<Row> saturate(std::vector<Row> rows, const Poly& context) {
  const Int N = context.modulus().N();
  std::vector<Row> h = howell_form(std::move(rows), N);
  while (true) {
    std::vector<Row> ext = h;
    for (const auto& r : h) ext.push_back(shift_row(r, context));
    std::vector<Row> next = howell_form(std::move(ext), N);
    if (next == h) return h;
    h = std::move(next);
  }
}

}  // namespace

std::vector<Row> howell_form(std::vector<Row> a, Int N) {
  for (auto& r : a) {
    for (auto& v : r) v = mod_floor(v, N);
  }
  a.erase(std::remove_if(a.begin(), a.end(), is_zero_row), a.end());
  if (a.empty()) return {};
  const size_t D = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < D && r < a.size(); ++c) {
    size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    for (size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Int x = a[r][c], y = a[i][c];
      auto [g, s, t] = gcdex(x, y);
      const Int u = -y / g, v = x / g;
      Row top(D), bot(D);
      for (size_t j = 0; j < D; ++j) {
        top[j] = mod_floor(mod_floor(s, N) * a[r][j] + mod_floor(t, N) * a[i][j], N);
        bot[j] = mod_floor(mod_floor(u, N) * a[r][j] + mod_floor(v, N) * a[i][j], N);
      }
      a[r] = std::move(top);
      a[i] = std::move(bot);
    }
    const Int unit = unit_normalizer(a[r][c], N);
    for (auto& v : a[r]) v = mod_floor(v * unit, N);
    const Int g = a[r][c];
    for (size_t i = 0; i < r; ++i) axpy(a[i], -(a[i][c] / g), a[r], N);
    if (g != 1) {
      Row extra(D);
      for (size_t j = 0; j < D; ++j) extra[j] = mod_floor((N / g) * a[r][j], N);
      if (!is_zero_row(extra)) a.push_back(std::move(extra));
    }
    ++r;
  }
  a.resize(r);
  return a;
}

Row to_row(const Poly& f, const Poly& context) {
  const int D = context.degree();
  auto asc = rem(f, context).padded(D);
  return Row(asc.rbegin(), asc.rend());
}

Poly from_row(const Row& row, const Modulus& mod) { return Poly(mod, std::vector<Int>(row.rbegin(), row.rend())); }

IdealPresentation::IdealPresentation(Modulus mod, Poly context, std::vector<Row> rows,
                                     std::vector<Poly> provenance)
    : mod_(mod), context_(std::move(context)), rows_(std::move(rows)), provenance_(std::move(provenance)) {}

std::vector<Poly> IdealPresentation::row_polys() const {
  std::vector<Poly> out;
  for (const auto& r : rows_) out.push_back(from_row(r, mod_));
  return out;
}

Int IdealPresentation::quotient_order() const {
  const int D = dim();
  Int order = 1;
  size_t ri = 0;
  for (int c = 0; c < D; ++c) {
    if (ri < rows_.size() && pivot_col(rows_[ri]) == c) {
      order = sat_mul(order, rows_[ri][static_cast<size_t>(c)]);
      ++ri;
    } else {
      order = sat_mul(order, mod_.N());
    }
  }
  return order;
}

std::vector<Int> IdealPresentation::normal_form(const Poly& f) const {
  Row v = to_row(f.modulus() == mod_ ? f : f.lift_to(mod_), context_);
  for (const auto& r : rows_) {
    const int c = pivot_col(r);
    const Int g = r[static_cast<size_t>(c)];
    axpy(v, -(v[static_cast<size_t>(c)] / g), r, mod_.N());
  }
  return std::vector<Int>(v.rbegin(), v.rend());
}

bool IdealPresentation::is_unit_ideal() const {
  return static_cast<int>(rows_.size()) == dim() &&
         std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r[static_cast<size_t>(pivot_col(r))] == 1; });
}

std::string IdealPresentation::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& p : row_polys()) {
    if (!first) os << ", ";
    first = false;
    os << p.to_string();
  }
  os << ") in Z_" << mod_.N() << "[x]/(" << context_.to_string() << ")";
  return os.str();
}

IdealPresentation canonical_form(const std::vector<Poly>& generators, const Poly& context) {
  const Modulus& mod = context.modulus();
  if (context.degree() < 1 || !context.is_monic()) {
    throw Error(ErrorKind::InvalidArgument, "context must be monic of degree >= 1");
  }
  std::vector<Row> rows;
  for (const auto& g : generators) {
    if (!(g.modulus() == mod)) throw Error(ErrorKind::ModulusMismatch, "generator modulus differs from context");
    rows.push_back(to_row(g, context));
  }
  return IdealPresentation(mod, context, saturate(std::move(rows), context), generators);
}

IdealPresentation extend(const IdealPresentation& q, const std::vector<Poly>& extra) {
  std::vector<Row> rows = q.rows();
  for (const auto& g : extra) rows.push_back(to_row(g, q.context()));
  std::vector<Poly> prov = q.provenance();
  prov.insert(prov.end(), extra.begin(), extra.end());
  return IdealPresentation(q.modulus(), q.context(), saturate(std::move(rows), q.context()), std::move(prov));
}

bool contains(const IdealPresentation& q, const Poly& f) {
  const auto nf = q.normal_form(f);
  return std::all_of(nf.begin(), nf.end(), [](Int v) { return v == 0; });
}

IdealPresentation recontext(const IdealPresentation& q, const Poly& new_context) {
  std::vector<Poly> gens = q.row_polys();
  gens.push_back(q.context());
  std::vector<Poly> lifted;
  for (auto& g : gens) lifted.push_back(g.modulus() == new_context.modulus() ? g : g.lift_to(new_context.modulus()));
  return canonical_form(lifted, new_context);
}

std::string clause_name(AdmissibilityClause c) {
  switch (c) {
    case AdmissibilityClause::None: return "none";
    case AdmissibilityClause::ContainsXnPlus1: return "(i)";
    case AdmissibilityClause::NoSmallerXmPlus1: return "(ii)";
    case AdmissibilityClause::NoConstants: return "(iii)";
  }
  return "?";
}

Admissibility is_admissible(const IdealPresentation& q, int n) {
  const Modulus& mod = q.modulus();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "admissibility needs n > 1");
  // Constants first: a constant in Q is the most basic defect and is reported
  // even when the other clauses fail too.
  for (auto [ell, e] : factorize(mod.N())) {
    if (contains(q, Poly::constant(mod, mod.N() / ell))) return {false, AdmissibilityClause::NoConstants, 0};
  }
  if (!contains(q, Poly::binomial(mod, n, 1))) return {false, AdmissibilityClause::ContainsXnPlus1, n};
  for (int m = 1; m < n; ++m) {
    if (contains(q, Poly::binomial(mod, m, 1))) return {false, AdmissibilityClause::NoSmallerXmPlus1, m};
  }
  return {true, AdmissibilityClause::None, 0};
}

Admissibility is_admissible_type2(const IdealPresentation& q, int n) {
  const Modulus& mod = q.modulus();
  if (mod.N() != 2) throw Error(ErrorKind::InvalidArgument, "type II standard forms live over Z_2");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "admissibility needs n > 1");
  if (contains(q, Poly::constant(mod, 1))) return {false, AdmissibilityClause::NoConstants, 0};
  if (!contains(q, Poly::binomial(mod, n, 1))) return {false, AdmissibilityClause::ContainsXnPlus1, n};
  for (Int m : divisors(n)) {
    if (m == n) continue;
    if (contains(q, Poly::binomial(mod, static_cast<int>(m), 1))) {
      return {false, AdmissibilityClause::NoSmallerXmPlus1, static_cast<int>(m)};
    }
  }
  return {true, AdmissibilityClause::None, 0};
}

std::vector<Poly> residue_representatives(const IdealPresentation& q) {
  const int D = q.dim();
  const Int N = q.modulus().N();
  // Range per descending column.
  std::vector<Int> range(static_cast<size_t>(D), N);
  for (const auto& r : q.rows()) {
    const int c = pivot_col(r);
    range[static_cast<size_t>(c)] = r[static_cast<size_t>(c)];
  }
  std::vector<Poly> out;
  Row digits(static_cast<size_t>(D), 0);
  while (true) {
    out.push_back(from_row(digits, q.modulus()));
    int j = D - 1;
    while (j >= 0) {
      if (++digits[static_cast<size_t>(j)] < range[static_cast<size_t>(j)]) break;
      digits[static_cast<size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

std::vector<IdealPresentation> enumerate_ideals_above(const IdealPresentation& floor, Int min_quotient,
                                                      Int budget) {
  if (floor.quotient_order() > budget) {
    throw Error(ErrorKind::TooLarge, "quotient of size " + std::to_string(floor.quotient_order()) +
                                         " exceeds the enumeration budget " + std::to_string(budget));
  }
  std::set<std::vector<Row>> seen{floor.rows()};
  std::deque<IdealPresentation> queue{floor};
  std::vector<IdealPresentation> out;
  while (!queue.empty()) {
    IdealPresentation cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : residue_representatives(cur)) {
      if (a.is_zero()) continue;
      IdealPresentation next = extend(cur, {a});
      if (next.quotient_order() < min_quotient) continue;
      if (seen.insert(next.rows()).second) queue.push_back(std::move(next));
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IdealPresentation> enumerate_ideals_containing(const Poly& f, Int budget) {
  return enumerate_ideals_above(canonical_form({}, f), 1, budget);
}

namespace {

std::vector<IdealPresentation> sorted_unique(std::vector<IdealPresentation> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::optional<std::vector<IdealPresentation>> closed_form_ideals(const LabeledFactor& f) {
  const Modulus& mod = f.poly.modulus();
  const Int p = mod.p();
  const int k = mod.k();
  std::vector<IdealPresentation> out;
  if (k == 1) {
    const Poly context = f.poly.pow(f.multiplicity);
    const Poly q = f.residue_base;
    if (!(q.pow(f.poly.degree() / q.degree()) == f.poly)) return std::nullopt;
    const int top = f.multiplicity * (f.poly.degree() / q.degree());
    for (int a = 0; a <= top; ++a) out.push_back(canonical_form({q.pow(a)}, context));
    return sorted_unique(std::move(out));
  }
  if (p != 2 && f.label.level == 0) {
    for (int u = 0; u <= k; ++u) out.push_back(canonical_form({f.poly, Poly::constant(mod, ipow(p, u))}, f.poly));
    return sorted_unique(std::move(out));
  }
  if (p == 2 && f.label.level >= 1) {
    const int r = f.label.level - 1;
    for (int u = 0; u < k; ++u) {
      for (Int v = 0; v <= ipow(2, r); ++v) {
        out.push_back(canonical_form({f.poly, f.lifted_base.pow(v).scaled(ipow(2, u)), Poly::constant(mod, ipow(2, u + 1))},
                                     f.poly));
      }
    }
    return sorted_unique(std::move(out));
  }
  return std::nullopt;
}

IdealLattice enumerate_ideals_containing(const LabeledFactor& f, Int budget) {
  const Poly context = f.poly.pow(f.multiplicity);
  const auto closed = closed_form_ideals(f);
  const auto ring = canonical_form({}, context);
  const bool feasible = ring.quotient_order() <= budget;
  if (!closed) {
    if (!feasible) throw Error(ErrorKind::TooLarge, "no closed form and quotient exceeds budget");
    return {enumerate_ideals_containing(context, budget), false, false};
  }
  if (!feasible) return {*closed, true, false};
  auto exhaustive = enumerate_ideals_containing(context, budget);
  if (exhaustive != *closed) {
    throw Error(ErrorKind::InternalMismatch,
                "closed-form ideal list disagrees with exhaustive enumeration for " + f.poly.to_string());
  }
  return {*closed, true, true};
}

IdealPresentation project(const IdealPresentation& q, const Modulus& smaller) {
  std::vector<Poly> gens;
  for (const auto& g : q.row_polys()) gens.push_back(g.reduce_to(smaller));
  return canonical_form(gens, q.context().reduce_to(smaller));
}

Composition compose_across_primes(const std::vector<PrimeComponent>& components) {
  if (components.empty()) throw Error(ErrorKind::InvalidArgument, "no components");
  std::set<Int> primes;
  Int N = 1;
  Int n = 1;
  for (const auto& c : components) {
    if (!c.mod.is_prime_power()) throw Error(ErrorKind::InvalidArgument, "component modulus must be a prime power");
    if (!primes.insert(c.mod.p()).second) {
      throw Error(ErrorKind::DuplicatePrime, "prime " + std::to_string(c.mod.p()) + " appears twice");
    }
    auto adm = is_admissible(c.ideal, c.n);
    if (!adm) {
      throw Error(ErrorKind::ComponentNotAdmissible,
                  "component over Z_" + std::to_string(c.mod.N()) + " fails clause " + clause_name(adm.failed));
    }
    N *= c.mod.N();
    if (N >= kMaxModulus) throw Error(ErrorKind::TooLarge, "composite modulus exceeds 2^31");
    n = lcm(n, c.n);
  }
  const Modulus big = Modulus::of(N);
  const Poly ctx = Poly::binomial(big, static_cast<int>(n), 1);
  std::vector<Poly> gens;
  for (const auto& c : components) {
    const Int P = c.mod.N();
    const Int rest = N / P;
    const Int e = big.reduce(rest * c.mod.inverse(rest % P));
    for (const auto& g : c.ideal.row_polys()) gens.push_back(g.lift_to(big).scaled(e));
    gens.push_back(c.ideal.context().lift_to(big).scaled(e));
  }
  IdealPresentation q = canonical_form(gens, ctx);
  if (!contains(q, Poly::binomial(big, static_cast<int>(n), 1))) {
    throw Error(ErrorKind::NotComposable, "x^n+1 is not in the composed ideal");
  }
  for (const auto& c : components) {
    const Poly local_ctx = ctx.reduce_to(c.mod);
    if (!contains(c.ideal, local_ctx)) {
      throw Error(ErrorKind::NotComposable, "x^" + std::to_string(n) + "+1 is not in the component over Z_" +
                                                std::to_string(c.mod.N()));
    }
    if (!(project(q, c.mod) == recontext(c.ideal, local_ctx))) {
      throw Error(ErrorKind::InternalMismatch, "projection of the composed ideal differs from its component");
    }
  }
  return {N, static_cast<int>(n), q};
}

}  // namespace rbcm
