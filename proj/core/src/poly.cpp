#include "rbcm/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rbcm/error.hpp"

namespace rbcm {

Poly::Poly(Modulus mod, std::vector<Int> coeffs) : mod_(mod), c_(std::move(coeffs)) {
  for (auto& c : c_) c = mod_.reduce(c);
  trim();
}

Poly Poly::monomial(Modulus mod, int degree, Int c) {
  std::vector<Int> v(static_cast<size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(mod, std::move(v));
}

Poly Poly::binomial(Modulus mod, int n, Int sign) {
  std::vector<Int> v(static_cast<size_t>(n) + 1, 0);
  v[0] = sign;
  v[static_cast<size_t>(n)] += 1;
  return Poly(mod, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::require_same(const Poly& o) const {
  if (!(mod_ == o.mod_)) {
    throw Error(ErrorKind::ModulusMismatch,
                "Z_" + std::to_string(mod_.N()) + " vs Z_" + std::to_string(o.mod_.N()));
  }
}

std::vector<Int> Poly::padded(int len) const {
  std::vector<Int> v(static_cast<size_t>(len), 0);
  for (int i = 0; i < len && i < static_cast<int>(c_.size()); ++i) v[i] = c_[i];
  return v;
}

Poly Poly::operator+(const Poly& o) const {
  require_same(o);
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = mod_.add(coeff(int(i)), o.coeff(int(i)));
  return Poly(mod_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  require_same(o);
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = mod_.sub(coeff(int(i)), o.coeff(int(i)));
  return Poly(mod_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  require_same(o);
  if (is_zero() || o.is_zero()) return Poly(mod_);
  std::vector<Int> v(c_.size() + o.c_.size() - 1, 0);
  const Int n = mod_.N();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = (v[i + j] + c_[i] * o.c_[j]) % n;
  }
  return Poly(mod_, std::move(v));
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(Int c) const {
  std::vector<Int> v(c_);
  Int r = mod_.reduce(c);
  for (auto& x : v) x = mod_.mul(x, r);
  return Poly(mod_, std::move(v));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Int> v(static_cast<size_t>(k), 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(mod_, std::move(v));
}

Poly Poly::pow(Int e) const {
  Poly result = constant(mod_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Int Poly::eval(Int x) const {
  Int acc = 0;
  Int xr = mod_.reduce(x);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_.add(mod_.mul(acc, xr), *it);
  return acc;
}

Poly Poly::reduce_to(const Modulus& smaller) const {
  if (mod_.N() % smaller.N() != 0) {
    throw Error(ErrorKind::ModulusMismatch, "cannot reduce Z_" + std::to_string(mod_.N()) +
                                                " to Z_" + std::to_string(smaller.N()));
  }
  return Poly(smaller, c_);
}

Poly Poly::lift_to(const Modulus& larger) const { return Poly(larger, c_); }

Poly Poly::monic() const {
  if (is_zero() || !mod_.is_unit(lead())) {
    throw Error(ErrorKind::NonUnitLeading, "leading coefficient of " + to_string() + " is not a unit");
  }
  return scaled(mod_.inverse(lead()));
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Int c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

DivMod divmod_monic(const Poly& f, const Poly& g) {
  const Modulus& mod = f.modulus();
  if (!(mod == g.modulus())) throw Error(ErrorKind::ModulusMismatch, "divmod operands differ");
  if (g.is_zero() || !mod.is_unit(g.lead())) {
    throw Error(ErrorKind::NonUnitLeading, "divisor " + g.to_string() + " has non-unit leading coefficient");
  }
  const int dg = g.degree();
  if (f.degree() < dg) return {Poly(mod), f};
  const Int inv = mod.inverse(g.lead());
  std::vector<Int> r = f.coeffs();
  std::vector<Int> q(static_cast<size_t>(f.degree() - dg) + 1, 0);
  const auto& gc = g.coeffs();
  for (int i = f.degree(); i >= dg; --i) {
    Int c = mod.mul(r[static_cast<size_t>(i)], inv);
    if (c == 0) continue;
    q[static_cast<size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = r[static_cast<size_t>(i - dg + j)];
      slot = mod.sub(slot, mod.mul(c, gc[static_cast<size_t>(j)]));
    }
  }
  r.resize(static_cast<size_t>(dg));
  return {Poly(mod, std::move(q)), Poly(mod, std::move(r))};
}

Poly rem(const Poly& f, const Poly& g) { return divmod_monic(f, g).remainder; }

Poly exact_div(const Poly& f, const Poly& g) {
  auto [q, r] = divmod_monic(f, g);
  if (!r.is_zero()) {
    throw Error(ErrorKind::InternalMismatch, g.to_string() + " does not divide " + f.to_string());
  }
  return q;
}

bool divides(const Poly& g, const Poly& f) { return divmod_monic(f, g).remainder.is_zero(); }

Poly pow_mod(const Poly& base, Int e, const Poly& m) {
  Poly result = rem(Poly::constant(base.modulus(), 1), m);
  Poly b = rem(base, m);
  while (e > 0) {
    if (e & 1) result = rem(result * b, m);
    e >>= 1;
    if (e > 0) b = rem(b * b, m);
  }
  return result;
}

Poly product(const std::vector<Poly>& factors, const Modulus& mod) {
  Poly acc = Poly::constant(mod, 1);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

PolyXgcd xgcd(const Poly& a, const Poly& b) {
  const Modulus& mod = a.modulus();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(mod, 1), s1(mod);
  Poly t0(mod), t1 = Poly::constant(mod, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod_monic(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Int inv = mod.inverse(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

bool is_irreducible(const Poly& f) {
  // Ben-Or: f of degree m is irreducible iff gcd(f, y^{p^i} - y) = 1 for i <= m/2.
  const Modulus& mod = f.modulus();
  const int m = f.degree();
  if (m < 1) return false;
  if (m == 1) return true;
  const Poly g = f.monic();
  const Poly y = Poly::monomial(mod, 1);
  Poly power = y;
  for (int i = 1; i <= m / 2; ++i) {
    power = pow_mod(power, mod.N(), g);
    if (gcd(g, power - y).degree() > 0) return false;
  }
  return true;
}

FieldElement::FieldElement(Poly rep, Poly field_modulus)
    : rep_(rem(rep, field_modulus)), fmod_(std::move(field_modulus)) {}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return FieldElement(rep_ * o.rep_, fmod_);
}
FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(rep_ + o.rep_, fmod_);
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return FieldElement(rep_ - o.rep_, fmod_);
}
FieldElement FieldElement::operator-() const { return FieldElement(-rep_, fmod_); }
FieldElement FieldElement::pow(Int e) const { return FieldElement(pow_mod(rep_, e, fmod_), fmod_); }

bool lex_less(const FieldElement& a, const FieldElement& b) { return a.digits() < b.digits(); }

namespace {

// Field order p^m, guarded against overflow.
Int field_order(Int p, int m) { return ipow(p, m); }

// Element with digit vector given by the base-p expansion of idx, constant
// coefficient most significant (so increasing idx walks lexicographic order).
Poly digits_poly(const Modulus& mod, Int idx, int m) {
  std::vector<Int> c(static_cast<size_t>(m), 0);
  for (int i = m - 1; i >= 0; --i) {
    c[static_cast<size_t>(i)] = idx % mod.N();
    idx /= mod.N();
  }
  return Poly(mod, std::move(c));
}

}  // namespace

Poly least_irreducible(Int p, int degree) {
  const Modulus mod = Modulus::prime_power(p, 1);
  const Int count = field_order(p, degree);
  for (Int idx = 0; idx < count; ++idx) {
    Poly cand = digits_poly(mod, idx, degree) + Poly::monomial(mod, degree);
    if (degree > 1 && cand.coeff(0) == 0) {
      // Divisible by y: skip the whole block sharing a zero constant term.
      idx = count / p - 1;
      continue;
    }
    if (is_irreducible(cand)) return cand;
  }
  throw Error(ErrorKind::InternalMismatch, "no irreducible polynomial found");
}

Int element_order(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero has no multiplicative order");
  const Int p = a.rep().modulus().N();
  const Int group = field_order(p, a.field_degree()) - 1;
  Int order = group;
  for (auto [q, e] : factorize(group)) {
    for (int i = 0; i < e; ++i) {
      if (a.pow(order / q).is_one()) {
        order /= q;
      } else {
        break;
      }
    }
  }
  return order;
}

SplittingField build_splitting_field(Int p, Int d) {
  const Int m = multiplicative_order(p, d);
  const Modulus mod = Modulus::prime_power(p, 1);
  Poly fmod = least_irreducible(p, static_cast<int>(m));
  const Int q = field_order(p, static_cast<int>(m));
  if (d == 1) return {fmod, FieldElement(Poly::constant(mod, 1), fmod)};

  // Find any element of order exactly d, then take the least of its primitive powers;
  // the elements of order d are exactly those powers.
  const Int cofactor = (q - 1) / d;
  const auto prime_divs = factorize(d);
  for (Int idx = 1; idx < q; ++idx) {
    FieldElement a(digits_poly(mod, idx, static_cast<int>(m)), fmod);
    if (a.is_zero()) continue;
    FieldElement b = a.pow(cofactor);
    bool exact = true;
    for (auto [r, e] : prime_divs) {
      if (b.pow(d / r).is_one()) {
        exact = false;
        break;
      }
    }
    if (!exact) continue;
    FieldElement best = b;
    FieldElement cur = b;
    for (Int j = 2; j < d; ++j) {
      cur = cur * b;
      if (gcd(j, d) == 1 && lex_less(cur, best)) best = cur;
    }
    return {fmod, best};
  }
  throw Error(ErrorKind::InternalMismatch, "no element of order " + std::to_string(d));
}

Poly minimal_polynomial(const FieldElement& eta_power, Int p, Int d, Int ell) {
  if (gcd(ell, d) != 1) throw Error(ErrorKind::NotCoprime, "label must be coprime to d");
  const Int degree = multiplicative_order(p, d);
  const Poly& fmod = eta_power.field_modulus();
  const Modulus mod = fmod.modulus();
  // Polynomial in x with coefficients in the field, ascending.
  std::vector<FieldElement> acc{FieldElement(Poly::constant(mod, 1), fmod)};
  FieldElement root = eta_power;
  for (Int j = 0; j < degree; ++j) {
    std::vector<FieldElement> next(acc.size() + 1, FieldElement(Poly(mod), fmod));
    for (size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = next[i + 1] + acc[i];
      next[i] = next[i] - acc[i] * root;
    }
    acc = std::move(next);
    root = root.pow(p);
  }
  std::vector<Int> coeffs;
  for (const auto& c : acc) {
    if (c.rep().degree() > 0) {
      throw Error(ErrorKind::NotInBaseField, "coefficient " + c.rep().to_string('y') + " outside Z_p");
    }
    coeffs.push_back(c.rep().coeff(0));
  }
  return Poly(mod, std::move(coeffs));
}

}  // namespace rbcm
