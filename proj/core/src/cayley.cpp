#include "rbcm/cayley.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "rbcm/error.hpp"

namespace rbcm {

std::string map_type_name(MapType t) { return t == MapType::I ? "I" : "II"; }

std::vector<int> CayleyMapRecord::positions() const {
  std::vector<int> pos(static_cast<size_t>(group.order()), -1);
  for (size_t i = 0; i < omega.size(); ++i) pos[static_cast<size_t>(omega[i])] = static_cast<int>(i);
  return pos;
}

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::InvalidMap, why); }

// Order of the subgroup generated by gens: each Z_{m_i} embeds in Z_M
// (M the exponent) by c -> c M/m_i, and a Howell basis of the image has
// span size prod M/lead.
Int span_size(const AbelianGroup& g, const std::vector<Int>& gens) {
  const Int M = g.type().exponent();
  std::vector<Row> rows;
  for (Int w : gens) {
    Row r = g.coords(w);
    for (size_t i = 0; i < r.size(); ++i) r[i] *= M / g.moduli()[i];
    rows.push_back(std::move(r));
  }
  Int size = 1;
  for (const Row& r : howell_form(std::move(rows), M)) {
    const auto lead = std::find_if(r.begin(), r.end(), [](Int c) { return c != 0; });
    if (lead != r.end()) size *= M / gcd(*lead, M);
  }
  return size;
}

}  // namespace

void validate_map(const CayleyMapRecord& m) {
  const auto& g = m.group;
  const int L = m.valence();
  if (L == 0) invalid("empty generating set");
  for (Int w : m.omega) {
    if (w < 0 || w >= g.order()) invalid("omega entry outside the group");
    if (w == 0) invalid("identity in omega");
  }
  std::vector<Int> sorted = m.omega;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) invalid("repeated omega entry");
  for (Int w : m.omega) {
    if (!std::binary_search(sorted.begin(), sorted.end(), g.neg(w))) invalid("omega not closed under negation");
  }
  if (m.type == MapType::I) {
    if (L % 2 != 0) invalid("type I valence must be even");
    const int n = L / 2;
    for (int i = 0; i < n; ++i) {
      if (m.omega[static_cast<size_t>(i + n)] != g.neg(m.omega[static_cast<size_t>(i)])) {
        invalid("type I sign pairing broken");
      }
    }
  } else {
    for (Int w : m.omega) {
      if (g.element_order(w) != 2) invalid("type II entry without order 2");
    }
  }
  if (span_size(g, m.omega) != g.order()) invalid("omega does not generate the group");
}

CayleyMapRecord build_map(const IdealPresentation& q, int n, MapType type) {
  const Admissibility adm = type == MapType::I ? is_admissible(q, n) : is_admissible_type2(q, n);
  if (!adm) {
    std::string why = "clause " + clause_name(adm.failed);
    if (adm.failed == AdmissibilityClause::NoSmallerXmPlus1) why += " (m=" + std::to_string(adm.witness_m) + ")";
    throw Error(ErrorKind::NotAdmissible, why);
  }
  const QuotientStructure st = quotient_structure(q);
  CayleyMapRecord m;
  m.group = st.group;
  m.type = type;
  m.ideal = q;
  const Modulus& mod = q.modulus();
  for (int i = 0; i < n; ++i) {
    const Poly xi = Poly::monomial(mod, i);
    m.omega.push_back(st.element_of(xi, q.context()));
    m.omega_repr.push_back(Poly(mod, q.normal_form(xi)).to_string());
  }
  if (type == MapType::I) {
    for (int i = 0; i < n; ++i) {
      const Poly xi = Poly::monomial(mod, i, -1);
      m.omega.push_back(st.element_of(xi, q.context()));
      m.omega_repr.push_back(Poly(mod, q.normal_form(xi)).to_string());
    }
  }
  std::vector<Int> sorted = m.omega;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DegenerateOmega, "the entries +-x^i are not pairwise distinct");
  }
  validate_map(m);
  return m;
}

std::optional<std::vector<Int>> extend_homomorphism(const AbelianGroup& src, const std::vector<Int>& gens,
                                                    const AbelianGroup& dst, const std::vector<Int>& images) {
  std::vector<Int> phi(static_cast<size_t>(src.order()), -1);
  phi[0] = 0;
  std::vector<Int> stack{0};
  while (!stack.empty()) {
    const Int a = stack.back();
    stack.pop_back();
    const Int fa = phi[static_cast<size_t>(a)];
    for (size_t j = 0; j < gens.size(); ++j) {
      const Int b = src.add(a, gens[j]);
      const Int fb = dst.add(fa, images[j]);
      Int& slot = phi[static_cast<size_t>(b)];
      if (slot < 0) {
        slot = fb;
        stack.push_back(b);
      } else if (slot != fb) {
        return std::nullopt;
      }
    }
  }
  if (std::find(phi.begin(), phi.end(), Int{-1}) != phi.end()) return std::nullopt;
  return phi;
}

namespace {

bool is_bijection(const std::vector<Int>& phi) {
  std::vector<char> hit(phi.size(), 0);
  for (Int v : phi) {
    if (v < 0 || static_cast<size_t>(v) >= phi.size() || hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  return true;
}

std::vector<Int> rotated(const std::vector<Int>& v, size_t shift) {
  std::vector<Int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[(i + shift) % v.size()];
  return out;
}

}  // namespace

RbcmWitness is_rbcm(const CayleyMapRecord& m) {
  const auto phi = extend_homomorphism(m.group, m.omega, m.group, rotated(m.omega, 1));
  if (!phi || !is_bijection(*phi)) return {};
  RbcmWitness w{true, {}};
  for (size_t i = 0; i < m.group.moduli().size(); ++i) {
    w.basis_images.push_back((*phi)[static_cast<size_t>(m.group.basis(static_cast<int>(i)))]);
  }
  return w;
}

bool maps_isomorphic(const CayleyMapRecord& a, const CayleyMapRecord& b) {
  if (a.type != b.type) throw Error(ErrorKind::TypeMismatch, "maps of different type");
  if (a.valence() != b.valence() || !(a.group.type() == b.group.type())) return false;
  for (size_t j = 0; j < b.omega.size(); ++j) {
    const auto phi = extend_homomorphism(a.group, a.omega, b.group, rotated(b.omega, j));
    if (phi && is_bijection(*phi)) return true;
  }
  return false;
}

MapStats trace_faces(const CayleyMapRecord& m) {
  const auto& g = m.group;
  const Int L = m.valence();
  const auto pos = m.positions();
  const Int darts = g.order() * L;
  std::vector<char> seen(static_cast<size_t>(darts), 0);
  std::map<Int, Int> lengths;
  Int faces = 0;
  for (Int start = 0; start < darts; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    ++faces;
    Int len = 0;
    Int d = start;
    while (!seen[static_cast<size_t>(d)]) {
      seen[static_cast<size_t>(d)] = 1;
      ++len;
      const Int v = d / L;
      const Int w = m.omega[static_cast<size_t>(d % L)];
      const Int back = pos[static_cast<size_t>(g.neg(w))];
      d = g.add(v, w) * L + (back + 1) % L;
    }
    if (d != start) throw Error(ErrorKind::InternalMismatch, "face successor is not a permutation");
    ++lengths[len];
  }
  MapStats s;
  s.vertices = g.order();
  s.edges = darts / 2;
  s.faces = faces;
  const Int chi = s.vertices - s.edges + s.faces;
  if (chi > 2 || (2 - chi) % 2 != 0) throw Error(ErrorKind::InternalMismatch, "Euler characteristic is not even");
  s.genus = (2 - chi) / 2;
  s.face_lengths.assign(lengths.begin(), lengths.end());
  return s;
}

MapStats regular_map_stats(const CayleyMapRecord& m) {
  const auto& g = m.group;
  const Int L = m.valence();
  auto position = [&](Int w) {
    const auto it = std::find(m.omega.begin(), m.omega.end(), w);
    if (it == m.omega.end()) throw Error(ErrorKind::InvalidMap, "omega is not closed under inverses");
    return static_cast<Int>(it - m.omega.begin());
  };
  Int v = 0, i = 0, len = 0;
  do {
    const Int w = m.omega[static_cast<size_t>(i)];
    v = g.add(v, w);
    i = (position(g.neg(w)) + 1) % L;
    ++len;
  } while (v != 0 || i != 0);
  MapStats s;
  s.vertices = g.order();
  s.edges = g.order() * L / 2;
  if ((g.order() * L) % len != 0) throw Error(ErrorKind::InternalMismatch, "face length does not divide the darts");
  s.faces = g.order() * L / len;
  const Int chi = s.vertices - s.edges + s.faces;
  if (chi > 2 || (2 - chi) % 2 != 0) throw Error(ErrorKind::InternalMismatch, "Euler characteristic is not even");
  s.genus = (2 - chi) / 2;
  s.face_lengths = {{len, s.faces}};
  return s;
}

bool is_arc_regular(const CayleyMapRecord& m) {
  const auto& g = m.group;
  const Int L = m.valence();
  const auto pos = m.positions();
  const Int darts = g.order() * L;
  auto rot = [&](Int d) { return (d / L) * L + (d % L + 1) % L; };
  auto rev = [&](Int d) {
    const Int w = m.omega[static_cast<size_t>(d % L)];
    return g.add(d / L, w) * L + pos[static_cast<size_t>(g.neg(w))];
  };
  std::vector<Int> phi(static_cast<size_t>(darts));
  for (Int target = 0; target < darts; ++target) {
    std::fill(phi.begin(), phi.end(), Int{-1});
    phi[0] = target;
    std::vector<Int> stack{0};
    while (!stack.empty()) {
      const Int d = stack.back();
      stack.pop_back();
      const Int fd = phi[static_cast<size_t>(d)];
      for (int op = 0; op < 2; ++op) {
        const Int e = op == 0 ? rot(d) : rev(d);
        const Int fe = op == 0 ? rot(fd) : rev(fd);
        Int& slot = phi[static_cast<size_t>(e)];
        if (slot < 0) {
          slot = fe;
          stack.push_back(e);
        } else if (slot != fe) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string rotation_system(const CayleyMapRecord& m) {
  const MapStats s = trace_faces(m);
  std::ostringstream os;
  os << s.vertices << ' ' << s.edges << ' ' << s.faces << ' ' << s.genus << '\n';
  for (Int v = 0; v < m.group.order(); ++v) {
    os << v << ':';
    for (Int w : m.omega) os << ' ' << m.group.add(v, w);
    os << '\n';
  }
  return os.str();
}

}  // namespace rbcm
