#ifndef K7P_FP_POLY_HPP
#define K7P_FP_POLY_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace k7p {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(u64 n);

/// An odd prime p with 2 < p < 2^61. Arithmetic helpers operate on
/// residues in [0, p).
class PrimeModulus {
 public:
  explicit PrimeModulus(u64 p);

  u64 value() const { return p_; }

  u64 reduce(i64 a) const;
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
  u64 pow(u64 base, u64 exponent) const;
  u64 inv(u64 a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  u64 p_;
};

/// Legendre symbol (a/p) as -1, 0 or +1.
int legendre(i64 a, const PrimeModulus& p);
int legendre_residue(u64 a, const PrimeModulus& p);

/// Square root of a quadratic residue via Tonelli-Shanks, using the
/// smallest non-residue as auxiliary. Returns min(r, p - r).
u64 sqrt_mod(u64 a, const PrimeModulus& p);

/// Dense univariate polynomial over F_p, ascending coefficients, no
/// trailing zeros. The zero polynomial has an empty coefficient vector.
class FpPoly {
 public:
  explicit FpPoly(PrimeModulus modulus) : mod_(modulus) {}
  FpPoly(PrimeModulus modulus, std::vector<u64> coeffs);
  FpPoly(PrimeModulus modulus, std::initializer_list<i64> coeffs);

  static FpPoly constant(PrimeModulus modulus, u64 c);
  static FpPoly x(PrimeModulus modulus);
  static FpPoly monomial(PrimeModulus modulus, u64 c, std::size_t degree);

  const PrimeModulus& modulus() const { return mod_; }
  std::span<const u64> coeffs() const { return c_; }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  u64 lead() const { return c_.empty() ? 0 : c_.back(); }

  FpPoly monic() const;
  FpPoly derivative() const;
  u64 eval(u64 at) const;
  FpPoly scaled(u64 s) const;

  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  FpPoly& operator*=(const FpPoly& o);

  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a);

  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.mod_ == b.mod_ && a.c_ == b.c_;
  }
  /// Canonical order: degree first, then ascending coefficient sequence.
  friend std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  void require_same(const FpPoly& o) const;

  PrimeModulus mod_;
  std::vector<u64> c_;
};

std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b);
FpPoly rem(const FpPoly& a, const FpPoly& b);
FpPoly gcd_monic(const FpPoly& a, const FpPoly& b);
FpPoly pow(const FpPoly& f, u64 e);

/// Precomputed reduction modulo a fixed polynomial m (deg m >= 1) using a
/// power-series inverse of reverse(m); each reduction costs two products.
class PolyModulus {
 public:
  explicit PolyModulus(FpPoly m);

  const FpPoly& poly() const { return m_; }
  int degree() const { return m_.degree(); }

  FpPoly reduce(const FpPoly& a) const;
  FpPoly mulmod(const FpPoly& a, const FpPoly& b) const { return reduce(a * b); }
  FpPoly sqrmod(const FpPoly& a) const { return reduce(a * a); }
  FpPoly powmod(const FpPoly& base, u64 e) const;
  /// x^(p^k) mod m.
  FpPoly frobenius_x(unsigned k = 1) const;

 private:
  FpPoly m_;
  FpPoly inv_rev_;  // reverse(m)^-1 mod x^deg(m)
};

/// x^p mod m by square-and-multiply.
FpPoly powmod_xp(const FpPoly& m);

struct FactorEntry {
  FpPoly factor;
  unsigned exponent;

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

/// Multiset of distinct monic irreducibles with exponents, kept in canonical
/// factor order so comparison is structural.
class FactorMap {
 public:
  FactorMap() = default;

  /// Adds factor^exponent. The factor must be monic; repeated factors merge.
  void insert(const FpPoly& factor, unsigned exponent);
  /// Like insert, but throws if the factor is already present.
  void insert_new(const FpPoly& factor, unsigned exponent);

  const std::vector<FactorEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool contains(const FpPoly& factor) const;
  unsigned exponent_of(const FpPoly& factor) const;
  int degree() const;

  /// Product of all factor^exponent (monic).
  FpPoly expand(const PrimeModulus& modulus) const;

  /// Rendered as e.g. "(x+13)^4(x^2+56x+23)^2".
  std::string to_string() const;

  friend bool operator==(const FactorMap&, const FactorMap&) = default;

 private:
  std::vector<FactorEntry> entries_;
};

/// Squarefree decomposition: pairs (g_i, i) with f = lc * prod g_i^i.
std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<FpPoly, unsigned>> distinct_degree_factor(const FpPoly& f);

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree d into its factors; seeded for reproducibility.
std::vector<FpPoly> equal_degree_factor(const FpPoly& f, unsigned d, u64 seed);

/// Complete factorization into monic irreducibles.
FactorMap factor(const FpPoly& f, u64 seed = 0);

/// Rabin irreducibility test.
bool is_irreducible(const FpPoly& f);

}  // namespace k7p

#endif  // K7P_FP_POLY_HPP
