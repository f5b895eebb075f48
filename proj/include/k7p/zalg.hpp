#ifndef K7P_ZALG_HPP
#define K7P_ZALG_HPP

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "k7p/fp_poly.hpp"
#include "k7p/poly.hpp"
#include "k7p/quad.hpp"

namespace k7p {

using ZPoly = Poly<mpz_class>;

/// Polynomial in two variables with integer coefficients, stored densely as
/// a polynomial in the first variable whose coefficients are polynomials in
/// the second.
class BivariateZ {
 public:
  using Nested = Poly<ZPoly>;

  struct Monomial {
    unsigned i;  // exponent of the first variable
    unsigned j;  // exponent of the second variable
    mpz_class c;

    friend bool operator==(const Monomial&, const Monomial&) = default;
  };

  BivariateZ() = default;
  explicit BivariateZ(Nested n) : n_(std::move(n)) {}

  /// Duplicate (i, j) pairs are summed.
  static BivariateZ from_monomials(std::span<const Monomial> monomials);
  /// Embeds a polynomial in the first (or second) variable alone.
  static BivariateZ in_first(const ZPoly& f);
  static BivariateZ in_second(const ZPoly& f);

  /// Nonzero monomials sorted by (i, j).
  std::vector<Monomial> monomials() const;
  mpz_class coeff(unsigned i, unsigned j) const;
  const Nested& nested() const { return n_; }
  bool zero() const { return n_.zero(); }

  int degree_first() const { return n_.degree(); }
  int degree_second() const;

  BivariateZ swapped() const;
  BivariateZ partial_first() const;
  BivariateZ partial_second() const;

  /// Value at (a, b) in any ring S constructible from mpz_class.
  template <class S>
  S eval(const S& a, const S& b) const {
    S acc{};
    const auto& outer = n_.coeffs();
    for (auto it = outer.rbegin(); it != outer.rend(); ++it) acc = acc * a + it->template eval<S>(b);
    return acc;
  }

  BivariateZ& operator+=(const BivariateZ& o) {
    n_ += o.n_;
    return *this;
  }
  friend BivariateZ operator+(BivariateZ a, const BivariateZ& b) { return a += b; }
  friend BivariateZ operator-(const BivariateZ& a, const BivariateZ& b) { return BivariateZ(a.n_ - b.n_); }
  friend BivariateZ operator*(const BivariateZ& a, const BivariateZ& b) { return BivariateZ(a.n_ * b.n_); }
  friend bool operator==(const BivariateZ& a, const BivariateZ& b) { return a.n_ == b.n_; }

 private:
  Nested n_;
};

/// Res_z(f, g) for f, g in Z[w][z] given as BivariateZ(z, w): returns a
/// polynomial in w.
ZPoly resultant_z(const BivariateZ& f_zw, const BivariateZ& g_zw);

/// Res_z(f(z, x), g(z, y)) as a polynomial in (x, y).
BivariateZ eliminate_z(const BivariateZ& f_zx, const BivariateZ& g_zy);

/// Discriminant in the second variable, disc(a y^2 + b y + c) = b^2 - 4ac.
ZPoly disc_y(const BivariateZ& f);

/// Q(-(x+y), x y) for a bivariate Q(u, v).
BivariateZ desymmetrized_to_symmetric(const BivariateZ& q_uv);

/// Splits a monic quartic H = f * conj(f) into conjugate irreducible quadratic
/// factors over Q(sqrt(delta)). Throws std::domain_error if no such split
/// exists for this delta.
std::pair<QuadPoly, QuadPoly> quartic_split(const ZPoly& h, long delta);

struct TrialFactorResult {
  std::map<u64, unsigned> primes;
  mpz_class cofactor;  // remaining part, sign included

  friend bool operator==(const TrialFactorResult&, const TrialFactorResult&) = default;
};

/// All prime divisors <= bound with multiplicity, and the cofactor.
TrialFactorResult trial_factor(const mpz_class& n, u64 bound);

/// Primes <= n by sieve.
std::vector<u64> primes_up_to(u64 n);

/// Reduction of an integer polynomial mod p.
FpPoly reduce_mod(const ZPoly& f, const PrimeModulus& p);
u64 reduce_mod(const mpz_class& a, const PrimeModulus& p);
/// Image of an element of Z[(1+sqrt(delta))/2] under sqrt(delta) -> s.
u64 reduce_mod(const QuadElt& a, u64 sqrt_delta, const PrimeModulus& p);
FpPoly reduce_mod(const QuadPoly& f, u64 sqrt_delta, const PrimeModulus& p);

/// Integer polynomial from decimal coefficient strings, ascending.
ZPoly zpoly_from_strings(std::span<const std::string> coeffs);
std::string to_string(const ZPoly& f, char var = 'x');

/// Integer roots of a cubic W^3 + a W^2 + b W + c, ascending.
std::vector<mpz_class> integer_roots_monic_cubic(const mpz_class& a, const mpz_class& b, const mpz_class& c);

}  // namespace k7p

#endif  // K7P_ZALG_HPP
