#ifndef K7P_TESTS_SUPPORT_HPP
#define K7P_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <string_view>

#include "k7p/fp_poly.hpp"
#include "k7p/zalg.hpp"

namespace k7p::testing {

/// Reference factorizations at sample primes.
/// A braced group {...}^k raises every member to the k-th power.
extern const char* const kGolden211;
extern const char* const kGolden241;
extern const char* const kGolden311;
extern const char* const kGolden113;
extern const char* const kGolden1217;
extern const char* const kJ311;
extern const char* const kGcd311;
extern const char* const kJ113;
extern const char* const kGcd241;

/// Parses a product such as "(x+13)^4 x^4 (x^2+56x+23)^2" into a FactorMap.
/// Every factor must be monic with nonnegative coefficients.
FactorMap parse_golden(std::string_view text, const PrimeModulus& p);

/// #E(F_p) for the curve with j-invariant j (brute force).
u64 count_points_fp(u64 j, const PrimeModulus& p);

/// Element a + b t of F_{p^2} = F_p[t] / (t^2 - n).
struct Fp2 {
  u64 a = 0;
  u64 b = 0;
  friend bool operator==(const Fp2&, const Fp2&) = default;
};

class Fp2Field {
 public:
  explicit Fp2Field(const PrimeModulus& p);
  const PrimeModulus& base() const { return p_; }
  u64 nonresidue() const { return n_; }
  Fp2 add(Fp2 x, Fp2 y) const;
  Fp2 mul(Fp2 x, Fp2 y) const;
  u64 norm(Fp2 x) const;
  /// Quadratic character of F_{p^2}, computed as the Legendre symbol of the norm.
  int chi(Fp2 x) const;
  Fp2 eval(const FpPoly& f, Fp2 at) const;

 private:
  PrimeModulus p_;
  u64 n_;
  std::vector<int> legendre_;
};

/// #E(F_{p^2}) for the curve with j-invariant j (brute force).
u64 count_points_fp2(const Fp2Field& f, Fp2 j);

/// Checks ss_p against point counting and the mass formula; returns an empty
/// string on success, else a description of the first failure.
std::string supersingular_oracle(u64 p);

/// Determinant of the Sylvester matrix, by fraction-free elimination.
mpz_class sylvester_resultant(const ZPoly& a, const ZPoly& b);

FpPoly random_poly(const PrimeModulus& p, int degree, std::mt19937_64& rng, bool monic = false);
ZPoly random_zpoly(int degree, int bits, std::mt19937_64& rng);

}  // namespace k7p::testing

#endif  // K7P_TESTS_SUPPORT_HPP
