#include "rbcm/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "rbcm/error.hpp"

namespace rbcm {

Int AbelianType::order() const {
  Int o = 1;
  for (Int d : invariants) o *= d;
  return o;
}

std::string AbelianType::to_string() const {
  if (invariants.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < invariants.size(); ++i) os << (i ? "x" : "") << "Z" << invariants[i];
  return os.str();
}

AbelianType AbelianType::of_cyclic_factors(const std::vector<Int>& moduli) {
  std::map<Int, std::vector<Int>> by_prime;
  for (Int m : moduli) {
    for (auto [p, e] : factorize(m)) by_prime[p].push_back(ipow(p, e));
  }
  size_t s = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    s = std::max(s, v.size());
  }
  std::vector<Int> inv(s, 1);
  for (auto& [p, v] : by_prime) {
    for (size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
  }
  std::reverse(inv.begin(), inv.end());
  return AbelianType{inv};
}

AbelianGroup::AbelianGroup(std::vector<Int> moduli) {
  for (Int m : moduli) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "cyclic factor must be positive");
    if (m > 1) moduli_.push_back(m);
  }
  for (Int m : moduli_) {
    stride_.push_back(order_);
    if (order_ > kMaxModulus / m) throw Error(ErrorKind::TooLarge, "group order too large");
    order_ *= m;
  }
  type_ = AbelianType::of_cyclic_factors(moduli_);
}

std::vector<Int> AbelianGroup::coords(Int a) const {
  std::vector<Int> c(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) {
    c[i] = a % moduli_[i];
    a /= moduli_[i];
  }
  return c;
}

Int AbelianGroup::index(const std::vector<Int>& c) const {
  Int a = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) a += mod_floor(c[i], moduli_[i]) * stride_[i];
  return a;
}

Int AbelianGroup::add(Int a, Int b) const {
  Int out = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    const Int m = moduli_[i];
    Int s = a % m + b % m;
    if (s >= m) s -= m;
    out += s * stride_[i];
    a /= m;
    b /= m;
  }
  return out;
}

Int AbelianGroup::neg(Int a) const {
  Int out = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    const Int m = moduli_[i];
    const Int c = a % m;
    out += (c == 0 ? 0 : m - c) * stride_[i];
    a /= m;
  }
  return out;
}

Int AbelianGroup::scale(Int a, Int c) const {
  Int out = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    const Int m = moduli_[i];
    out += mod_floor((a % m) * mod_floor(c, m), m) * stride_[i];
    a /= m;
  }
  return out;
}

Int AbelianGroup::element_order(Int a) const {
  Int o = 1;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    const Int m = moduli_[i];
    o = lcm(o, m / gcd(a % m, m));
    a /= m;
  }
  return o;
}

std::vector<Int> AbelianGroup::addition_table() const {
  std::vector<Int> t(static_cast<size_t>(order_ * order_));
  for (Int a = 0; a < order_; ++a) {
    for (Int b = 0; b < order_; ++b) t[static_cast<size_t>(a * order_ + b)] = add(a, b);
  }
  return t;
}

namespace {

using Mat = std::vector<std::vector<Int>>;

// gcdex that leaves the pivot alone when it already divides b.
Gcdex pivot_gcdex(Int a, Int b) {
  if (a != 0 && b % a == 0) return {a, 1, 0};
  return gcdex(a, b);
}

// Diagonalize A over Z_N by unimodular row and column operations; the column
// operations are accumulated into V. Returns the diagonal.
std::vector<Int> smith_mod(Mat a, Int N, Mat& v) {
  const size_t D = a.size();
  v.assign(D, std::vector<Int>(D, 0));
  for (size_t i = 0; i < D; ++i) v[i][i] = 1;
  auto col_combine = [&](Mat& m, size_t c1, size_t c2, Int s, Int t, Int u, Int w) {
    for (auto& row : m) {
      const Int x = row[c1], y = row[c2];
      row[c1] = mod_floor(s * x + t * y, N);
      row[c2] = mod_floor(u * x + w * y, N);
    }
  };
  std::vector<Int> diag(D, 0);
  for (size_t t = 0; t < D; ++t) {
    // Move some nonzero entry of the trailing block to (t, t).
    size_t pr = D, pc = D;
    for (size_t i = t; i < D && pr == D; ++i) {
      for (size_t j = t; j < D; ++j) {
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == D) break;
    std::swap(a[t], a[pr]);
    if (pc != t) {
      for (auto& row : a) std::swap(row[t], row[pc]);
      for (auto& row : v) std::swap(row[t], row[pc]);
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < D; ++i) {
        if (a[i][t] == 0) continue;
        auto [g, s, u] = pivot_gcdex(a[t][t], a[i][t]);
        const Int x = -a[i][t] / g, y = a[t][t] / g;
        for (size_t j = 0; j < D; ++j) {
          const Int r0 = a[t][j], r1 = a[i][j];
          a[t][j] = mod_floor(mod_floor(s, N) * r0 + mod_floor(u, N) * r1, N);
          a[i][j] = mod_floor(mod_floor(x, N) * r0 + mod_floor(y, N) * r1, N);
        }
      }
      for (size_t j = t + 1; j < D; ++j) {
        if (a[t][j] == 0) continue;
        auto [g, s, u] = pivot_gcdex(a[t][t], a[t][j]);
        const Int x = mod_floor(-a[t][j] / g, N), y = mod_floor(a[t][t] / g, N);
        s = mod_floor(s, N);
        u = mod_floor(u, N);
        col_combine(a, t, j, s, u, x, y);
        col_combine(v, t, j, s, u, x, y);
        dirty = true;
      }
      if (dirty) {
        dirty = false;
        for (size_t i = t + 1; i < D; ++i) dirty = dirty || a[i][t] != 0;
      }
    }
    diag[t] = a[t][t];
  }
  return diag;
}

}  // namespace

Int QuotientStructure::element_of_row(const std::vector<Int>& x) const {
  std::vector<Int> c;
  for (int col : kept) {
    Int y = 0;
    for (int i = 0; i < dim; ++i) {
      y = mod_floor(y + x[static_cast<size_t>(i)] * transform[static_cast<size_t>(i)][static_cast<size_t>(col)], N);
    }
    c.push_back(y);
  }
  return group.index(c);
}

QuotientStructure quotient_structure(const IdealPresentation& q) {
  const int D = q.dim();
  const Int N = q.modulus().N();
  Mat a(static_cast<size_t>(D), std::vector<Int>(static_cast<size_t>(D), 0));
  size_t ri = 0;
  for (int c = 0; c < D; ++c) {
    const auto& rows = q.rows();
    if (ri < rows.size() && rows[ri][static_cast<size_t>(c)] != 0 &&
        std::all_of(rows[ri].begin(), rows[ri].begin() + c, [](Int v) { return v == 0; })) {
      a[static_cast<size_t>(c)] = rows[ri];
      ++ri;
    }
  }
  return lattice_quotient(a, N);
}

QuotientStructure lattice_quotient(const std::vector<std::vector<Int>>& a, Int N) {
  const int D = static_cast<int>(a.size());
  QuotientStructure out;
  out.N = N;
  out.dim = D;
  const std::vector<Int> diag = smith_mod(a, N, out.transform);
  std::vector<std::pair<Int, int>> factors;
  for (int i = 0; i < D; ++i) {
    const Int m = gcd(diag[static_cast<size_t>(i)], N);
    if (m > 1) factors.push_back({m, i});
  }
  std::stable_sort(factors.begin(), factors.end());
  std::vector<Int> moduli;
  for (auto [m, i] : factors) {
    moduli.push_back(m);
    out.kept.push_back(i);
  }
  out.group = AbelianGroup(moduli);
  return out;
}

AbelianType quotient_group_type(const IdealPresentation& q) { return quotient_structure(q).group.type(); }

ResidueSet enumerate_residues(const IdealPresentation& q, Int budget) {
  if (q.quotient_order() > budget) {
    throw Error(ErrorKind::TooLarge, "quotient of order " + std::to_string(q.quotient_order()) + " exceeds budget");
  }
  ResidueSet out{residue_representatives(q), {}, quotient_structure(q)};
  for (const auto& r : out.residues) out.element.push_back(out.structure.element_of(r, q.context()));
  return out;
}

std::vector<AbelianType> abelian_p_groups(Int p, int e) {
  std::vector<AbelianType> out;
  std::vector<int> part;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      AbelianType t;
      for (auto it = part.rbegin(); it != part.rend(); ++it) t.invariants.push_back(ipow(p, *it));
      out.push_back(t);
      return;
    }
    for (int x = std::min(left, maxpart); x >= 1; --x) {
      part.push_back(x);
      rec(left - x, x);
      part.pop_back();
    }
  };
  rec(e, e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rbcm
