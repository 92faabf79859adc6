#include "rbcm/zring.hpp"

#include <limits>
#include <tuple>
#include <numeric>

#include "rbcm/error.hpp"

namespace rbcm {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) { return a == 0 || b == 0 ? 0 : std::lcm(a, b); }

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<Int>::max() / (base < 0 ? -base : base)) {
      throw Error(ErrorKind::TooLarge, "integer power overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

Int pow_mod(Int base, Int exp, Int m) {
  if (m == 1) return 0;
  using Wide = __int128;
  Wide result = 1;
  Wide b = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<Int>(result);
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  std::vector<std::pair<Int, int>> out;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int euler_phi(Int n) {
  Int phi = n;
  for (auto [q, e] : factorize(n)) phi = phi / q * (q - 1);
  return phi;
}

Gcdex gcdex(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Modulus Modulus::prime_power(Int p, int k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "exponent k must be >= 1");
  Int n = ipow(p, k);
  if (n >= kMaxModulus) throw Error(ErrorKind::TooLarge, "modulus exceeds 2^31");
  return Modulus(n, p, k);
}

Modulus Modulus::of(Int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2");
  if (n >= kMaxModulus) throw Error(ErrorKind::TooLarge, "modulus exceeds 2^31");
  auto f = factorize(n);
  if (f.size() == 1) return Modulus(n, f[0].first, f[0].second);
  return Modulus(n, 0, 0);
}

Int Modulus::inverse(Int a) const {
  Int r = reduce(a);
  auto [g, s, t] = gcdex(r, n_);
  if (g != 1) {
    throw Error(ErrorKind::NotAUnit, std::to_string(r) + " is not a unit mod " + std::to_string(n_));
  }
  return reduce(s);
}

std::string Modulus::to_string() const {
  if (is_prime_power() && k_ > 1) return std::to_string(p_) + "^" + std::to_string(k_);
  return std::to_string(n_);
}

void ResidueInt::require_same(const ResidueInt& o) const {
  if (!(mod_ == o.mod_)) {
    throw Error(ErrorKind::ModulusMismatch,
                "Z_" + std::to_string(mod_.N()) + " vs Z_" + std::to_string(o.mod_.N()));
  }
}

ResidueInt ResidueInt::operator+(const ResidueInt& o) const {
  require_same(o);
  return ResidueInt(value_ + o.value_, mod_);
}

ResidueInt ResidueInt::operator-(const ResidueInt& o) const {
  require_same(o);
  return ResidueInt(value_ - o.value_, mod_);
}

ResidueInt ResidueInt::operator*(const ResidueInt& o) const {
  require_same(o);
  return ResidueInt(mod_.mul(value_, o.value_), mod_);
}

ResidueInt unit_inverse(const ResidueInt& a) {
  return ResidueInt(a.modulus().inverse(a.value()), a.modulus());
}

std::optional<int> p_valuation(Int a, Int p) {
  if (a == 0) return std::nullopt;
  if (a < 0) a = -a;
  int e = 0;
  while (a % p == 0) {
    a /= p;
    ++e;
  }
  return e;
}

Int multiplicative_order(Int p, Int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "order modulus must be positive");
  if (gcd(p, d) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(p) + ", " + std::to_string(d) + ") > 1");
  }
  if (d == 1) return 1;
  Int x = mod_floor(p, d);
  Int t = 1;
  while (x != 1) {
    x = static_cast<Int>(static_cast<__int128>(x) * p % d);
    ++t;
  }
  return t;
}

}  // namespace rbcm
