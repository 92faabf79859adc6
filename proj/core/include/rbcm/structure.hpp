#pragma once

// Finite abelian groups: invariant-factor types, a concrete presentation as a
// product of cyclic groups with elements encoded as mixed-radix indices, and
// the additive structure of Z_N[x]/Q.

#include <string>
#include <vector>

#include "rbcm/ideals.hpp"

namespace rbcm {

struct AbelianType {
  std::vector<Int> invariants;  // d_1 | d_2 | ... | d_s, each > 1

  Int order() const;
  Int exponent() const { return invariants.empty() ? 1 : invariants.back(); }
  int rank() const { return static_cast<int>(invariants.size()); }
  std::string to_string() const;

  /// Invariant factors of Z_{m_1} x ... x Z_{m_t} for arbitrary m_i >= 1.
  static AbelianType of_cyclic_factors(const std::vector<Int>& moduli);

  friend bool operator==(const AbelianType&, const AbelianType&) = default;
  friend auto operator<=>(const AbelianType&, const AbelianType&) = default;
};

/// Z_{m_1} x ... x Z_{m_t}; element a has coordinates (a / stride_i) mod m_i.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<Int> moduli);

  const std::vector<Int>& moduli() const { return moduli_; }
  const AbelianType& type() const { return type_; }
  Int order() const { return order_; }

  std::vector<Int> coords(Int a) const;
  Int index(const std::vector<Int>& coords) const;  // coordinates reduced mod m_i
  Int add(Int a, Int b) const;
  Int neg(Int a) const;
  Int sub(Int a, Int b) const { return add(a, neg(b)); }
  Int scale(Int a, Int c) const;
  Int element_order(Int a) const;
  /// Generator e_i of the i-th cyclic factor.
  Int basis(int i) const { return stride_[static_cast<size_t>(i)] % order_; }

  /// Dense addition table (order^2 entries); only for small groups.
  std::vector<Int> addition_table() const;

 private:
  std::vector<Int> moduli_;
  std::vector<Int> stride_;
  Int order_ = 1;
  AbelianType type_;
};

/// Additive structure of Z_N[x]/Q: a presentation plus the coordinate map.
struct QuotientStructure {
  AbelianGroup group;
  Int N = 1;
  int dim = 0;
  std::vector<std::vector<Int>> transform;  // dim x dim over Z_N (column ops)
  std::vector<int> kept;                    // transform columns feeding the group factors

  /// Group element of a coefficient row (or any integer vector of length dim).
  Int element_of_row(const std::vector<Int>& row) const;
  /// Group element of f + Q.
  Int element_of(const Poly& f, const Poly& context) const { return element_of_row(to_row(f, context)); }
};

/// Z^D / (rows + M Z^D) for a square matrix of rows; needs M Z^D inside the lattice
/// for the quotient to be the intended one.
QuotientStructure lattice_quotient(const std::vector<std::vector<Int>>& rows, Int M);
QuotientStructure quotient_structure(const IdealPresentation& q);
AbelianType quotient_group_type(const IdealPresentation& q);

struct ResidueSet {
  std::vector<Poly> residues;  // normal forms
  std::vector<Int> element;    // group index of each residue
  QuotientStructure structure;
};

/// All residues of Z_N[x]/Q; TooLarge beyond 2^16.
ResidueSet enumerate_residues(const IdealPresentation& q, Int budget = kIdealEnumerationBudget);

/// All abelian p-groups of order p^e (invariant forms), by partitions of e.
std::vector<AbelianType> abelian_p_groups(Int p, int e);

}  // namespace rbcm
