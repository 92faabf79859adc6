#pragma once

// Explicit families of balanced regular Cayley maps on abelian p-groups, each
// produced as standard-form ideals Q with their maps M_Q, and reconciliation of
// the families against the brute-force oracle.

#include <optional>
#include <string>
#include <vector>

#include "rbcm/cayley.hpp"
#include "rbcm/factorlift.hpp"
#include "rbcm/ideals.hpp"
#include "rbcm/oracle.hpp"
#include "rbcm/structure.hpp"

namespace rbcm {

enum class Family { Cyclic, ElementaryI, ElementaryII, TwoGroup, Coprime, Rank2, Standard };
std::string family_name(Family f);

struct FamilyParams {
  Family variant = Family::Standard;
  std::vector<std::pair<FactorLabel, int>> K;  // exponent per label
  std::vector<std::pair<FactorLabel, int>> J;  // p-power level per label
  std::optional<Int> mu, mu1, mu2, alpha, nu;
  std::optional<FactorLabel> label;  // rank 2, case b
  std::vector<Int> nu_residue;       // rank 2: case b nu mod q; case c lift (b, a) of p(ax + b)
  char case_tag = 0;                 // rank 2: 'a'..'d'

  std::string describe() const;
};

struct FamilyMember {
  FamilyParams params;
  IdealPresentation ideal;
  CayleyMapRecord map;
  AbelianType group;
  MapStats stats;
  /// Explicit generator sequence check (rank 2 cases a, c, d): nullopt when not
  /// applicable, otherwise whether the sequence map is isomorphic to M_Q.
  std::optional<bool> generators_match;
  /// Other rank-2 cases whose parameters produce the same ideal.
  std::string overlapping_cases;
};

/// Roots of x^n + 1 in Z_{p^k}, ascending.
std::vector<Int> solve_unit_roots(Int p, int k, Int n);
/// Divisors d of 2n with d not dividing n and p = -1 (mod d), ascending.
std::vector<Int> theta_set(Int p, Int n);

std::vector<FamilyMember> classify_cyclic(Int p, int k, int n);
/// Type I on Z_p^m (valence 2n) or type II on Z_2^m (valence n).
std::vector<FamilyMember> classify_elementary(Int p, int m, int n, MapType type);
/// Abelian 2-groups of exponent 2^k; k = 1 yields the type II maps of valence n.
/// `only` restricts the output to one group and skips building other maps.
std::vector<FamilyMember> classify_2group(int k, int n, const std::optional<AbelianType>& only = std::nullopt);
/// p odd, gcd(n, p) = 1, exponent p^k.
std::vector<FamilyMember> classify_coprime(Int p, int k, int n, const std::optional<AbelianType>& only = std::nullopt);
/// p odd, Z_{p^k} x Z_{p^k'} with k >= k' >= 1.
std::vector<FamilyMember> classify_rank2(Int p, int k, int kp, int n);
/// Every admissible Q over Z_N (N = exponent of g) with Z_N[x]/Q isomorphic to g,
/// by ideal search; TooLarge when Z_N[x]/(x^n+1) exceeds the budget.
std::vector<FamilyMember> classify_standard(const AbelianType& g, int n, MapType type,
                                            Int budget = kIdealEnumerationBudget);

/// Printed versus implemented reading of the elementary-group clauses for one K.
struct ClauseReading {
  std::vector<std::pair<FactorLabel, int>> K;
  bool in_printed_range = false;  // every K(l) <= r
  bool printed_i = false;         // r in Im K
  bool printed_ii = false;        // lcm of d(l) over K(l) != 0 equals n'
  bool printed_iii = false;       // sum K(l) o(p, l) = m
  bool admissible = false;        // the computational filter (with the group check)
  bool printed() const { return in_printed_range && printed_i && printed_ii && printed_iii; }
};
std::vector<ClauseReading> elementary_clause_readings(Int p, int m, int n, MapType type);

/// Outcome of the rank-2 case b parameter sweep. nu runs over residues mod q
/// with p^{r+1} nu = 0: zero, nonzero constants, then non-constant residues.
struct NuRangeOutcome {
  int zero_nu_ideals = 0;
  int constant_nu_new_ideals = 0;     // admissible, right group, not from nu = 0
  int polynomial_nu_new_ideals = 0;   // not from any constant nu
};
NuRangeOutcome rank2_nu_range(Int p, int k, int n);

struct FamilyCheck {
  Family family;
  int family_count = 0;
  bool perfect = false;
  std::vector<int> matching;  // family member -> oracle index, -1 when unmatched
  std::string detail;
};

struct CrossCheckReport {
  AbelianType group;
  int valence = 0;
  MapType type = MapType::I;
  int oracle_count = 0;
  std::vector<CayleyMapRecord> oracle_maps;
  std::vector<FamilyCheck> families;
  std::vector<FamilyMember> members;  // from the first family that applies
  bool oracle_only = false;
  bool ok() const;
  std::vector<std::string> notes;
};

/// Ring-size cap for the exhaustive standard family inside cross_check.
inline constexpr Int kCrossCheckStandardBudget = Int{1} << 14;

CrossCheckReport cross_check(const AbelianType& group, int valence, const OracleOptions& opts = {});

struct DiscrepancyEntry {
  std::string topic;
  std::string instance;
  std::string printed;
  std::string implemented;
  int oracle = 0;
  bool implemented_agrees = false;
  bool printed_agrees = false;
};

/// Printed-versus-implemented readings on the given elementary and rank-2
/// instances, each arbitrated by the oracle.
std::vector<DiscrepancyEntry> discrepancy_ledger(const OracleOptions& opts = {});

}  // namespace rbcm
