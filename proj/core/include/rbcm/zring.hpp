#pragma once

// Exact arithmetic in Z_N. Moduli are desk-scale (N < 2^31), so products of
// two reduced residues always fit in a signed 64-bit integer.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rbcm {

using Int = std::int64_t;

inline constexpr Int kMaxModulus = Int{1} << 31;

/// Least non-negative representative of a modulo m (m > 0).
constexpr Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
bool is_prime(Int n);
Int ipow(Int base, int exp);  // throws TooLarge on overflow
Int pow_mod(Int base, Int exp, Int m);
std::vector<Int> divisors(Int n);  // ascending
std::vector<std::pair<Int, int>> factorize(Int n);
Int euler_phi(Int n);

/// Extended gcd over the integers: returns g = gcd(a,b) and s,t with s*a + t*b = g.
struct Gcdex {
  Int g, s, t;
};
Gcdex gcdex(Int a, Int b);

/// Z_N with its prime factorization. Prime-power moduli are the core path;
/// composite moduli only appear in cross-prime composition.
class Modulus {
 public:
  static Modulus prime_power(Int p, int k);
  static Modulus of(Int N);  // any N >= 2, factored by trial division

  Int N() const { return n_; }
  /// Prime of a prime-power modulus (0 when composite).
  Int p() const { return p_; }
  int k() const { return k_; }
  bool is_prime_power() const { return p_ != 0; }

  Int reduce(Int a) const { return mod_floor(a, n_); }
  Int add(Int a, Int b) const { return reduce(a + b); }
  Int sub(Int a, Int b) const { return reduce(a - b); }
  Int mul(Int a, Int b) const { return reduce(a * b); }
  bool is_unit(Int a) const { return gcd(reduce(a), n_) == 1; }
  Int inverse(Int a) const;  // throws NotAUnit

  std::string to_string() const;

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.n_ == b.n_; }

 private:
  Modulus(Int n, Int p, int k) : n_(n), p_(p), k_(k) {}
  Int n_;
  Int p_;
  int k_;
};

class ResidueInt {
 public:
  ResidueInt(Int value, Modulus mod) : value_(mod.reduce(value)), mod_(mod) {}

  Int value() const { return value_; }
  const Modulus& modulus() const { return mod_; }

  ResidueInt operator+(const ResidueInt& o) const;
  ResidueInt operator-(const ResidueInt& o) const;
  ResidueInt operator*(const ResidueInt& o) const;
  ResidueInt operator-() const { return ResidueInt(-value_, mod_); }
  ResidueInt pow(Int e) const { return ResidueInt(pow_mod(value_, e, mod_.N()), mod_); }

  friend bool operator==(const ResidueInt& a, const ResidueInt& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  void require_same(const ResidueInt& o) const;
  Int value_;
  Modulus mod_;
};

ResidueInt unit_inverse(const ResidueInt& a);

/// Largest e with p^e | a; std::nullopt stands for +infinity (a = 0).
std::optional<int> p_valuation(Int a, Int p);

/// Least t >= 1 with p^t = 1 (mod d); o(p, 1) = 1.
Int multiplicative_order(Int p, Int d);

}  // namespace rbcm
