#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rbcm/zring.hpp"

namespace rbcm {

/// Dense polynomial over Z_N, coefficients ascending by degree with trailing
/// zeros trimmed. Equality is coefficient-sequence equality.
class Poly {
 public:
  explicit Poly(Modulus mod) : mod_(mod) {}
  Poly(Modulus mod, std::vector<Int> coeffs);

  static Poly constant(Modulus mod, Int c) { return Poly(mod, {c}); }
  static Poly monomial(Modulus mod, int degree, Int c = 1);
  static Poly x_minus(Modulus mod, Int root) { return Poly(mod, {-root, 1}); }
  /// x^n + sign (sign = +1 or -1).
  static Poly binomial(Modulus mod, int n, Int sign);

  const Modulus& modulus() const { return mod_; }
  const std::vector<Int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Int lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Coefficients padded (or truncated) to `len` entries.
  std::vector<Int> padded(int len) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(Int c) const;
  Poly shifted(int k) const;  // multiply by x^k
  Poly pow(Int e) const;
  Int eval(Int x) const;

  /// Coefficientwise reduction to a modulus dividing N.
  Poly reduce_to(const Modulus& smaller) const;
  /// Reinterpret least representatives over a larger modulus.
  Poly lift_to(const Modulus& larger) const;
  /// Make monic by a unit multiple (throws NonUnitLeading).
  Poly monic() const;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.mod_ == b.mod_ && a.c_ == b.c_; }

 private:
  void trim();
  void require_same(const Poly& o) const;
  Modulus mod_;
  std::vector<Int> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Division by g whose leading coefficient is a unit (throws NonUnitLeading).
DivMod divmod_monic(const Poly& f, const Poly& g);
Poly rem(const Poly& f, const Poly& g);
/// f / g, throwing InternalMismatch when the division leaves a remainder.
Poly exact_div(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);
Poly pow_mod(const Poly& base, Int e, const Poly& m);
Poly product(const std::vector<Poly>& factors, const Modulus& mod);

// Over a prime field Z_p only.
Poly gcd(const Poly& a, const Poly& b);
struct PolyXgcd {
  Poly g, s, t;  // s*a + t*b = g, g monic (or zero)
};
PolyXgcd xgcd(const Poly& a, const Poly& b);
bool is_irreducible(const Poly& f);

/// Polynomial over the integers, ascending coefficients.
struct IntPoly {
  std::vector<Int> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Poly reduce(const Modulus& mod) const { return Poly(mod, coeffs); }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

/// Element of F_{p^m} = Z_p[y]/(field_modulus).
class FieldElement {
 public:
  FieldElement(Poly rep, Poly field_modulus);

  const Poly& rep() const { return rep_; }
  const Poly& field_modulus() const { return fmod_; }
  int field_degree() const { return fmod_.degree(); }
  bool is_one() const { return rep_.degree() == 0 && rep_.coeff(0) == 1; }
  bool is_zero() const { return rep_.is_zero(); }
  /// Coefficient vector padded to the field degree.
  std::vector<Int> digits() const { return rep_.padded(field_degree()); }

  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(Int e) const;

  /// Lexicographic order comparing the constant coefficient first.
  friend bool lex_less(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.rep_ == b.rep_ && a.fmod_ == b.fmod_;
  }

 private:
  Poly rep_;
  Poly fmod_;
};

struct SplittingField {
  Poly field_modulus;  // lexicographically least monic irreducible of degree o(p,d)
  FieldElement eta;    // least element of multiplicative order exactly d
};

/// Lexicographically least monic irreducible of the given degree over Z_p
/// (coefficients compared from the constant term up).
Poly least_irreducible(Int p, int degree);

SplittingField build_splitting_field(Int p, Int d);

/// Multiplicative order of a nonzero field element (brute force over divisors of p^m-1).
Int element_order(const FieldElement& a);

/// q_{d,l} = prod_j (x - eta^{l p^j}) as a polynomial over Z_p.
Poly minimal_polynomial(const FieldElement& eta_power, Int p, Int d, Int ell);

}  // namespace rbcm
