#pragma once

// Ideals of Z_N[x] containing a monic polynomial, represented inside the
// finite quotient Z_N[x]/(context). An ideal there is a Z_N-submodule of
// Z_N^D (D = deg context) closed under multiplication by x; it is stored as
// the Howell form of its row space, with columns ordered from degree D-1 down
// to the constant term. Two presentations over the same context are equal iff
// their rows are identical.

#include <optional>
#include <string>
#include <vector>

#include "rbcm/factorlift.hpp"
#include "rbcm/poly.hpp"

namespace rbcm {

/// Row vectors of length D over Z_N, entry j holding the coefficient of x^{D-1-j}.
using Row = std::vector<Int>;

/// Howell normal form of the row space of `rows` over Z_N (rows of length D).
std::vector<Row> howell_form(std::vector<Row> rows, Int N);

class IdealPresentation {
 public:
  IdealPresentation(Modulus mod, Poly context, std::vector<Row> rows, std::vector<Poly> provenance);

  const Modulus& modulus() const { return mod_; }
  const Poly& context() const { return context_; }
  int dim() const { return context_.degree(); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<Poly>& provenance() const { return provenance_; }

  /// Rows as polynomials (ascending coefficients).
  std::vector<Poly> row_polys() const;
  /// Order of the additive quotient Z_N[x]/Q.
  Int quotient_order() const;
  /// Normal form of f modulo Q as a length-D ascending coefficient vector.
  std::vector<Int> normal_form(const Poly& f) const;
  bool is_zero_ideal() const { return rows_.empty(); }
  bool is_unit_ideal() const;

  std::string to_string() const;

  friend bool operator==(const IdealPresentation& a, const IdealPresentation& b) {
    return a.mod_ == b.mod_ && a.context_ == b.context_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const IdealPresentation& a, const IdealPresentation& b) {
    return a.rows_ < b.rows_;
  }

 private:
  Modulus mod_;
  Poly context_;
  std::vector<Row> rows_;
  std::vector<Poly> provenance_;
};

/// Coefficient row of f mod context.
Row to_row(const Poly& f, const Poly& context);
Poly from_row(const Row& row, const Modulus& mod);

IdealPresentation canonical_form(const std::vector<Poly>& generators, const Poly& context);
/// Q + (extra generators).
IdealPresentation extend(const IdealPresentation& q, const std::vector<Poly>& extra);
bool contains(const IdealPresentation& q, const Poly& f);
/// Same ideal of Z_N[x] viewed in a new context (which must lie in q).
IdealPresentation recontext(const IdealPresentation& q, const Poly& new_context);

enum class AdmissibilityClause { None, ContainsXnPlus1, NoSmallerXmPlus1, NoConstants };
std::string clause_name(AdmissibilityClause c);

struct Admissibility {
  bool admissible = false;
  AdmissibilityClause failed = AdmissibilityClause::None;
  int witness_m = 0;  // the offending m for the second clause
  explicit operator bool() const { return admissible; }
};

/// Membership in I(N, n): x^n + 1 in Q, x^m + 1 not in Q for 1 <= m < n, and no
/// nonzero constant in Q.
Admissibility is_admissible(const IdealPresentation& q, int n);

/// The type II clauses over Z_2: x^n + 1 in Q, x^m + 1 not in Q for proper
/// divisors m of n, and 1 not in Q.
Admissibility is_admissible_type2(const IdealPresentation& q, int n);

/// Every normal form of Z_N[x]/Q once, in increasing digit order.
std::vector<Poly> residue_representatives(const IdealPresentation& q);

/// Default budget for exhaustive ideal enumeration (quotient ring size).
inline constexpr Int kIdealEnumerationBudget = Int{1} << 16;

/// All ideals of Z_{p^k}[x] containing the monic f, by exhaustive search over
/// shift-closed submodules of Z_{p^k}[x]/(f). Sorted, deduplicated.
std::vector<IdealPresentation> enumerate_ideals_containing(const Poly& f,
                                                           Int budget = kIdealEnumerationBudget);

/// All ideals containing `floor` whose quotient order is at least `min_quotient`.
/// Searches upward from floor; the budget bounds |Z_N[x]/floor|.
std::vector<IdealPresentation> enumerate_ideals_above(const IdealPresentation& floor,
                                                      Int min_quotient = 1,
                                                      Int budget = kIdealEnumerationBudget);

/// Closed-form ideal lists for a labeled factor, when one applies:
/// k = 1: (q^a), 0 <= a <= multiplicity; p odd, level 0: (q, p^u), 0 <= u <= k;
/// p = 2, level r+1: (f, 2^u qt^v, 2^{u+1}), 0 <= u < k, 0 <= v <= 2^r.
std::optional<std::vector<IdealPresentation>> closed_form_ideals(const LabeledFactor& f);

struct IdealLattice {
  std::vector<IdealPresentation> ideals;
  bool closed_form_used = false;
  bool cross_checked = false;
};

/// Closed form when available, verified against exhaustive enumeration when the
/// quotient fits the budget (throws InternalMismatch on disagreement).
IdealLattice enumerate_ideals_containing(const LabeledFactor& f, Int budget = kIdealEnumerationBudget);

struct PrimeComponent {
  Modulus mod;  // p^{k_p}
  IdealPresentation ideal;
  int n;
};

struct Composition {
  Int N;
  int n;
  IdealPresentation ideal;
};

/// Q = intersection of Pr_p^{-1}(Q_p) over Z_N, N = prod p^{k_p}, n = lcm n_p.
Composition compose_across_primes(const std::vector<PrimeComponent>& components);

/// Image of Q under coefficient reduction to `smaller`, in the reduced context.
IdealPresentation project(const IdealPresentation& q, const Modulus& smaller);

}  // namespace rbcm
