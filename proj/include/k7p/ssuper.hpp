#ifndef K7P_SSUPER_HPP
#define K7P_SSUPER_HPP

#include "k7p/fp_poly.hpp"

namespace k7p {

/// Supersingular data for a prime p > 3: ss = x^r (x - 1728)^s jp.
struct SsData {
  PrimeModulus p;
  u64 n_p;   // floor(p / 12)
  int eps;   // 1 iff p = 3 mod 4
  int r;     // 1 iff p = 2 mod 3 (j = 0 supersingular)
  int s;     // 1 iff p = 3 mod 4 (j = 1728 supersingular)
  FpPoly jp;
  FpPoly ss;
};

/// J_p(x) from the binomial sum in powers of (x - 1728).
FpPoly jp_poly(const PrimeModulus& p);
SsData ss_poly(const PrimeModulus& p);

}  // namespace k7p

#endif  // K7P_SSUPER_HPP
