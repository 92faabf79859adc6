#pragma once

// Z_{p^k}[x]/(x^n+1) split into one component per factor label (d, l): the
// component context is the product of every factor of x^n+1 carrying that
// label, so distinct components are coprime mod p.

#include <vector>

#include "rbcm/factorlift.hpp"
#include "rbcm/ideals.hpp"

namespace rbcm {

struct CrtComponent {
  FactorLabel label;  // level of the first factor in the group
  Poly context;
  Poly idempotent;  // 1 on this component, 0 on the others (mod x^n+1)
  std::vector<LabeledFactor> factors;
};

struct CrtSplit {
  Modulus mod;
  Int n;
  Poly ambient;  // x^n + 1
  std::vector<CrtComponent> components;

  /// Reduction into every component.
  std::vector<Poly> forward(const Poly& f) const;
  /// Unique preimage mod x^n+1 of a tuple of component residues.
  Poly backward(const std::vector<Poly>& parts) const;
  /// The ideal sum of e_l * I_l in the ambient context.
  IdealPresentation assemble(const std::vector<IdealPresentation>& parts) const;
};

CrtSplit crt_split(Int p, int k, Int n);

}  // namespace rbcm
