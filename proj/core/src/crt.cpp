#include "rbcm/crt.hpp"

#include "rbcm/error.hpp"

namespace rbcm {

CrtSplit crt_split(Int p, int k, Int n) {
  const Modulus mod = Modulus::prime_power(p, k);
  CrtSplit out{mod, n, Poly::binomial(mod, static_cast<int>(n), 1), {}};
  for (const auto& f : factor_xn_plus1(p, k, n)) {
    const Poly part = f.poly.pow(f.multiplicity);
    if (!out.components.empty() && out.components.back().label.d == f.label.d &&
        out.components.back().label.ell == f.label.ell) {
      auto& c = out.components.back();
      c.context = c.context * part;
      c.factors.push_back(f);
    } else {
      out.components.push_back({f.label, part, Poly::constant(mod, 0), {f}});
    }
  }
  for (auto& c : out.components) {
    if (out.components.size() == 1) {
      c.idempotent = Poly::constant(mod, 1);
      continue;
    }
    const Poly cof = exact_div(out.ambient, c.context);
    const Bezout b = bezout(cof, c.context);
    c.idempotent = rem(b.u * cof, out.ambient);
  }
  return out;
}

std::vector<Poly> CrtSplit::forward(const Poly& f) const {
  std::vector<Poly> parts;
  for (const auto& c : components) parts.push_back(rem(f, c.context));
  return parts;
}

Poly CrtSplit::backward(const std::vector<Poly>& parts) const {
  if (parts.size() != components.size()) throw Error(ErrorKind::InvalidArgument, "component count mismatch");
  Poly acc = Poly::constant(mod, 0);
  for (size_t i = 0; i < parts.size(); ++i) acc = acc + components[i].idempotent * parts[i];
  return rem(acc, ambient);
}

IdealPresentation CrtSplit::assemble(const std::vector<IdealPresentation>& parts) const {
  if (parts.size() != components.size()) throw Error(ErrorKind::InvalidArgument, "component count mismatch");
  std::vector<Poly> gens;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].context() == components[i].context)) {
      throw Error(ErrorKind::InvalidArgument, "component ideal has the wrong context");
    }
    for (const auto& g : parts[i].row_polys()) gens.push_back(rem(components[i].idempotent * g, ambient));
  }
  return canonical_form(gens, ambient);
}

}  // namespace rbcm
