#pragma once

// Labeled factorizations of x^n - 1, x^n + 1 and the radical sums
// 1 + y + ... + y^{p-1} (y = x^{n' p^{r-1}}) over Z_{p^k}.
//
// Factor labels are (d, l, level): d a divisor label, l the least member of a
// coset of <p> in (Z_d)^x, and level b where level 0 is the lift of the
// irreducible q_{d,l} and level b >= 1 is the radical-sum factor whose
// reduction is q_{d,l}^{p^{b-1}(p-1)}. For p = 2 the factors of x^n + 1 sit at
// level r + 1.

#include <compare>
#include <vector>

#include "rbcm/poly.hpp"

namespace rbcm {

struct FactorLabel {
  Int d = 1;
  Int ell = 1;
  int level = 0;

  friend auto operator<=>(const FactorLabel&, const FactorLabel&) = default;
  friend bool operator==(const FactorLabel&, const FactorLabel&) = default;
};

struct LabeledFactor {
  FactorLabel label;
  Poly poly;             // monic over Z_{p^k}
  int multiplicity = 1;  // > 1 only in the k = 1 form prod q^{p^r}
  Poly residue_base;     // q_{d,l} over Z_p
  Poly lifted_base;      // q^{(k)}_{d,l} over Z_{p^k} (level-0 lift)
  int degree() const { return poly.degree(); }
};

/// Integral cyclotomic polynomial Psi_d by exact division of x^d - 1.
IntPoly cyclotomic(Int d);

/// Least coset representatives of <p> in (Z_d)^x, ascending; {1} for d = 1.
std::vector<Int> coset_reps(Int p, Int d);

/// Labels (d, l) indexing the factors of x^n + 1; n' coprime to p.
std::vector<FactorLabel> lambda_index(Int p, Int n_prime);

/// n = p^r * n' with gcd(n', p) = 1.
struct PrimeSplit {
  int r;
  Int n_prime;
};
PrimeSplit split_prime_part(Int n, Int p);

/// The irreducible q_{d,l} over Z_p (memoized; deterministic labeling).
Poly base_factor(Int p, Int d, Int ell);

/// Labeled factorization of x^n - 1 over Z_p for gcd(n,p) = 1.
std::vector<LabeledFactor> factor_mod_p(Int n, Int p);

/// Unique monic divisor of `target` (over Z_{p^k}) reducing to q mod p.
Poly hensel_lift_factor(const Poly& q, Int p, int k, const Poly& target);

/// Lift a coprime factorization Red(target) = g0 * h0 (g0 monic) to Z_{p^k}.
/// Returns the monic factor lifting g0, verified by exact division.
Poly hensel_lift_coprime(const Poly& g0, const Poly& target);

/// q^{(k)}_{d,l,r}: the radical-sum factor with reduction q_{d,l}^{p^{r-1}(p-1)}.
LabeledFactor lift_radical_factor(Int d, Int ell, int r, Int p, int k);

/// The radical sum 1 + y + ... + y^{p-1} with y = x^{n' p^{r-1}} (needs r >= 1).
Poly radical_sum(const Modulus& mod, Int n_prime, int r);

std::vector<LabeledFactor> factor_xn_minus1(Int p, int k, Int n);
std::vector<LabeledFactor> factor_radical_sum(Int p, int k, Int n);
std::vector<LabeledFactor> factor_xn_plus1(Int p, int k, Int n);

/// Product of factors with multiplicities.
Poly expand(const std::vector<LabeledFactor>& factors, const Modulus& mod);

/// Bezout certificate u*f1 + v*f2 = 1 over Z_{p^k} for f1, f2 coprime mod p
/// (f2 monic). Throws NotCoprime when the reductions share a factor.
struct Bezout {
  Poly u, v;
};
Bezout bezout(const Poly& f1, const Poly& f2);

}  // namespace rbcm
