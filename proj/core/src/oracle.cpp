#include "rbcm/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>

#include "rbcm/error.hpp"

namespace rbcm {

Int oracle_budget() {
  if (const char* env = std::getenv("RBCM_ORACLE_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<Int>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultOracleBudget;
}

namespace {

// Z^t / L for a lower-triangular Hermite basis: row i is
// (b_i0, ..., b_i(i-1), d_i, 0, ...), meaning sum_j b_ij e_j + d_i e_i = 0.
// Elements are digit vectors 0 <= c_i < d_i encoded as sum c_i * P_i.
struct HermiteLattice {
  std::vector<Int> d;
  std::vector<std::vector<Int>> b;

  int t() const { return static_cast<int>(d.size()); }
};

class DigitGroup {
 public:
  explicit DigitGroup(const HermiteLattice& lat) : lat_(lat) {
    const int t = lat.t();
    place_.resize(static_cast<size_t>(t));
    order_ = 1;
    for (int i = 0; i < t; ++i) {
      place_[static_cast<size_t>(i)] = order_;
      order_ *= lat.d[static_cast<size_t>(i)];
    }
    add_.resize(static_cast<size_t>(order_ * order_));
    std::vector<Int> ca, cb;
    for (Int a = 0; a < order_; ++a) {
      ca = digits(a);
      for (Int b = 0; b < order_; ++b) {
        cb = digits(b);
        for (int i = 0; i < t; ++i) cb[static_cast<size_t>(i)] += ca[static_cast<size_t>(i)];
        add_[static_cast<size_t>(a * order_ + b)] = normalize(cb);
      }
    }
    neg_.resize(static_cast<size_t>(order_));
    for (Int a = 0; a < order_; ++a) {
      for (Int b = 0; b < order_; ++b) {
        if (add(a, b) == 0) {
          neg_[static_cast<size_t>(a)] = b;
          break;
        }
      }
    }
  }

  Int order() const { return order_; }
  Int add(Int a, Int b) const { return add_[static_cast<size_t>(a * order_ + b)]; }
  Int neg(Int a) const { return neg_[static_cast<size_t>(a)]; }
  Int basis(int i) const { return place_[static_cast<size_t>(i)]; }
  Int scale(Int a, Int c) const {
    Int out = 0;
    for (Int j = 0; j < c; ++j) out = add(out, a);
    return out;
  }
  std::vector<Int> digits(Int a) const {
    std::vector<Int> c(static_cast<size_t>(lat_.t()));
    for (int i = 0; i < lat_.t(); ++i) {
      c[static_cast<size_t>(i)] = a % lat_.d[static_cast<size_t>(i)];
      a /= lat_.d[static_cast<size_t>(i)];
    }
    return c;
  }
  Int normalize(std::vector<Int>& c) const {
    for (int i = lat_.t() - 1; i >= 0; --i) {
      const Int di = lat_.d[static_cast<size_t>(i)];
      const Int q = (c[static_cast<size_t>(i)] - mod_floor(c[static_cast<size_t>(i)], di)) / di;
      if (q == 0) continue;
      c[static_cast<size_t>(i)] -= q * di;
      for (int j = 0; j < i; ++j) c[static_cast<size_t>(j)] -= q * lat_.b[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    Int a = 0;
    for (int i = 0; i < lat_.t(); ++i) a += c[static_cast<size_t>(i)] * place_[static_cast<size_t>(i)];
    return a;
  }

 private:
  const HermiteLattice& lat_;
  std::vector<Int> place_;
  Int order_ = 1;
  std::vector<Int> add_;
  std::vector<Int> neg_;
};

std::vector<std::vector<Int>> lattice_rows(const HermiteLattice& lat) {
  const int t = lat.t();
  std::vector<std::vector<Int>> rows(static_cast<size_t>(t), std::vector<Int>(static_cast<size_t>(t), 0));
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < i; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = lat.b[static_cast<size_t>(i)][static_cast<size_t>(j)];
    rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = lat.d[static_cast<size_t>(i)];
  }
  return rows;
}

bool in_lattice(const HermiteLattice& lat, std::vector<Int> v) {
  for (int i = lat.t() - 1; i >= 0; --i) {
    const Int di = lat.d[static_cast<size_t>(i)];
    if (v[static_cast<size_t>(i)] % di != 0) return false;
    const Int q = v[static_cast<size_t>(i)] / di;
    for (int j = 0; j < i; ++j) v[static_cast<size_t>(j)] -= q * lat.b[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return true;
}

// sigma(e_i) = e_{i+1} must carry relation i (i < t-1) into the lattice.
bool shift_closed(const HermiteLattice& lat) {
  const int t = lat.t();
  std::vector<Int> v(static_cast<size_t>(t));
  for (int i = 0; i + 1 < t; ++i) {
    std::fill(v.begin(), v.end(), Int{0});
    for (int j = 0; j < i; ++j) v[static_cast<size_t>(j + 1)] = lat.b[static_cast<size_t>(i)][static_cast<size_t>(j)];
    v[static_cast<size_t>(i + 1)] = lat.d[static_cast<size_t>(i)];
    if (!in_lattice(lat, v)) return false;
  }
  return true;
}

// Hermite lattices whose quotient is isomorphic to G, with 1 <= t <= max_t,
// that are compatible with sigma(e_i) = e_{i+1}: the diagonal is non-increasing
// and shifted relations stay in the lattice.
std::vector<HermiteLattice> hermite_lattices(const AbelianType& g, Int p, int max_t) {
  int e = 0;
  for (Int o = g.order(); o > 1; o /= p) ++e;
  int emax = 0;
  for (Int o = g.exponent(); o > 1; o /= p) ++emax;
  std::vector<HermiteLattice> out;
  std::vector<int> parts;
  std::function<void(int)> compose = [&](int left) {
    if (left == 0) {
      HermiteLattice lat;
      for (int x : parts) lat.d.push_back(ipow(p, x));
      const int t = lat.t();
      lat.b.assign(static_cast<size_t>(t), std::vector<Int>(static_cast<size_t>(t), 0));
      // Odometer over the off-diagonal entries.
      std::vector<std::pair<int, int>> cells;
      for (int i = 0; i < t; ++i) {
        for (int j = 0; j < i; ++j) cells.push_back({i, j});
      }
      while (true) {
        if (shift_closed(lat) && lattice_quotient(lattice_rows(lat), g.order()).group.type() == g) out.push_back(lat);
        size_t c = 0;
        for (; c < cells.size(); ++c) {
          auto [i, j] = cells[c];
          Int& v = lat.b[static_cast<size_t>(i)][static_cast<size_t>(j)];
          if (++v < lat.d[static_cast<size_t>(j)]) break;
          v = 0;
        }
        if (c == cells.size()) break;
      }
      return;
    }
    if (static_cast<int>(parts.size()) == max_t) return;
    const int cap = parts.empty() ? emax : parts.back();
    for (int x = 1; x <= std::min(left, cap); ++x) {
      parts.push_back(x);
      compose(left - x);
      parts.pop_back();
    }
  };
  if (e > 0) compose(e);
  return out;
}

// Encoding of the sequence omega[s], omega[s+1], ... : (t, d, Hermite rows,
// digits of the (t+1)-th entry).
std::vector<Int> anchor_key(const DigitGroup& g, const std::vector<Int>& omega, size_t s) {
  const Int order = g.order();
  const size_t L = omega.size();
  std::vector<Int> d;
  std::vector<std::vector<Int>> rows;
  std::vector<std::vector<Int>> coord(static_cast<size_t>(order));
  std::vector<Int> members{0};
  coord[0] = {};
  std::vector<char> in(static_cast<size_t>(order), 0);
  in[0] = 1;
  size_t i = 0;
  while (static_cast<Int>(members.size()) < order) {
    if (i >= L) return {};  // cannot happen for a generating cycle
    const Int u = omega[(s + i) % L];
    Int m = u;
    Int di = 1;
    while (!in[static_cast<size_t>(m)]) {
      m = g.add(m, u);
      ++di;
    }
    if (di == 1) return {};  // the chain must grow until it is everything
    const Int negm = g.neg(m);
    rows.push_back(coord[static_cast<size_t>(negm)]);
    d.push_back(di);
    const size_t base = members.size();
    Int shift = 0;
    for (Int c = 1; c < di; ++c) {
      shift = g.add(shift, u);
      for (size_t k = 0; k < base; ++k) {
        const Int w = g.add(members[k], shift);
        coord[static_cast<size_t>(w)] = coord[static_cast<size_t>(members[k])];
        in[static_cast<size_t>(w)] = 1;
        members.push_back(w);
      }
    }
    for (size_t k = 0; k < members.size(); ++k) {
      auto& cv = coord[static_cast<size_t>(members[k])];
      if (k < base) cv.push_back(0);
    }
    for (size_t k = base; k < members.size(); ++k) {
      coord[static_cast<size_t>(members[k])].push_back((static_cast<Int>(k - base) / static_cast<Int>(base)) + 1);
    }
    ++i;
  }
  std::vector<Int> key{static_cast<Int>(d.size())};
  key.insert(key.end(), d.begin(), d.end());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t j = 0; j < r; ++j) key.push_back(rows[r][j]);
  }
  const auto& last = coord[static_cast<size_t>(omega[(s + i) % L])];
  key.insert(key.end(), last.begin(), last.end());
  return key;
}

struct Candidate {
  std::vector<Int> omega;  // digit-group indices, rho-cycle order
};

std::vector<Candidate> scan_lattice(const HermiteLattice& lat, int n, bool type2) {
  const DigitGroup g(lat);
  const int t = lat.t();
  const Int order = g.order();
  std::vector<Candidate> out;
  std::vector<Int> img(static_cast<size_t>(t));
  for (int i = 0; i + 1 < t; ++i) img[static_cast<size_t>(i)] = g.basis(i + 1);
  auto sigma = [&](Int a) {
    const auto c = g.digits(a);
    Int r = 0;
    for (int i = 0; i < t; ++i) r = g.add(r, g.scale(img[static_cast<size_t>(i)], c[static_cast<size_t>(i)]));
    return r;
  };
  for (Int w = 0; w < order; ++w) {
    img[static_cast<size_t>(t - 1)] = w;
    // sigma must map every relation into L.
    bool ok = true;
    for (int i = 0; i < t && ok; ++i) {
      Int r = g.scale(img[static_cast<size_t>(i)], lat.d[static_cast<size_t>(i)]);
      for (int j = 0; j < i; ++j) {
        r = g.add(r, g.scale(img[static_cast<size_t>(j)], lat.b[static_cast<size_t>(i)][static_cast<size_t>(j)]));
      }
      ok = r == 0;
    }
    if (!ok) continue;
    std::vector<Int> orbit{g.basis(0)};
    for (int k = 0; k < n; ++k) orbit.push_back(sigma(orbit.back()));
    const Int first = orbit.front();
    if (type2) {
      if (orbit[static_cast<size_t>(n)] != first) continue;
      orbit.pop_back();
    } else {
      if (orbit[static_cast<size_t>(n)] != g.neg(first)) continue;
      orbit.pop_back();
      for (int k = 0; k < n; ++k) orbit.push_back(g.neg(orbit[static_cast<size_t>(k)]));
    }
    std::vector<Int> sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == 0 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    // Keep the least encoding over all anchors.
    const auto key0 = anchor_key(g, orbit, 0);
    bool least = !key0.empty();
    for (size_t s = 1; s < orbit.size() && least; ++s) {
      const auto ks = anchor_key(g, orbit, s);
      least = !(ks < key0);
    }
    if (least) out.push_back({orbit});
  }
  return out;
}

}  // namespace

std::vector<CayleyMapRecord> brute_force_rbcms(const AbelianType& group, int valence, const OracleOptions& opts) {
  const Int budget = opts.budget > 0 ? opts.budget : oracle_budget();
  const Int order = group.order();
  if (order > budget) {
    throw Error(ErrorKind::TooLarge, "group order " + std::to_string(order) + " exceeds the oracle budget " +
                                         std::to_string(budget));
  }
  const auto primes = factorize(order);
  if (order == 1) return {};
  if (primes.size() != 1) throw Error(ErrorKind::InvalidArgument, "the oracle handles p-groups only");
  const Int p = primes[0].first;
  const bool type2 = p == 2 && group.exponent() == 2;
  if (!type2 && valence % 2 != 0) return {};
  const int n = type2 ? valence : valence / 2;
  if (n < 2 || valence > 2 * order) return {};

  const auto lattices = hermite_lattices(group, p, n);
  std::vector<std::vector<Candidate>> found(lattices.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < lattices.size(); i = next++) found[i] = scan_lattice(lattices[i], n, type2);
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<CayleyMapRecord> out;
  for (size_t i = 0; i < lattices.size(); ++i) {
    if (found[i].empty()) continue;
    const DigitGroup dg(lattices[i]);
    const QuotientStructure st = lattice_quotient(lattice_rows(lattices[i]), order);
    for (const auto& c : found[i]) {
      CayleyMapRecord m;
      m.group = st.group;
      m.type = type2 ? MapType::II : MapType::I;
      for (Int a : c.omega) {
        const Int e = st.element_of_row(dg.digits(a));
        m.omega.push_back(e);
        std::string repr = "(";
        const auto co = m.group.coords(e);
        for (size_t k = 0; k < co.size(); ++k) repr += (k ? "," : "") + std::to_string(co[k]);
        m.omega_repr.push_back(repr + ")");
      }
      validate_map(m);
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace rbcm
