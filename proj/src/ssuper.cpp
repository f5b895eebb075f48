#include "k7p/ssuper.hpp"

#include <stdexcept>
#include <vector>

namespace k7p {

namespace {

void require_p_gt_3(const PrimeModulus& p) {
  if (p.value() <= 3) throw std::invalid_argument("supersingular polynomial needs p > 3");
}

}  // namespace

FpPoly jp_poly(const PrimeModulus& p) {
  require_p_gt_3(p);
  const u64 n = p.value() / 12;
  const u64 eps = p.value() % 4 == 3 ? 1 : 0;
  const u64 top = 2 * n + eps;  // < p, so factorials mod p are invertible

  std::vector<u64> fact(top + 1, 1);
  for (u64 i = 1; i <= top; ++i) fact[i] = p.mul(fact[i - 1], i);
  std::vector<u64> inv_fact(top + 1);
  inv_fact[top] = p.inv(fact[top]);
  for (u64 i = top; i > 0; --i) inv_fact[i - 1] = p.mul(inv_fact[i], i);
  auto binom = [&](u64 a, u64 b) { return p.mul(fact[a], p.mul(inv_fact[b], inv_fact[a - b])); };

  // c_k = C(2n+eps, 2k+eps) C(2n-2k, n-k) (-432)^(n-k)
  const u64 m432 = p.reduce(-432);
  std::vector<u64> c(n + 1);
  u64 power = 1;
  for (u64 k = n + 1; k-- > 0;) {
    c[k] = p.mul(p.mul(binom(top, 2 * k + eps), binom(2 * n - 2 * k, n - k)), power);
    power = p.mul(power, m432);
  }

  // Horner in t = x - 1728.
  const FpPoly t = FpPoly::x(p) - FpPoly::constant(p, p.reduce(1728));
  FpPoly acc(p);
  for (u64 k = n + 1; k-- > 0;) acc = acc * t + FpPoly::constant(p, c[k]);
  return acc;
}

SsData ss_poly(const PrimeModulus& p) {
  require_p_gt_3(p);
  SsData d{p, p.value() / 12, p.value() % 4 == 3 ? 1 : 0, p.value() % 3 == 2 ? 1 : 0, p.value() % 4 == 3 ? 1 : 0,
           jp_poly(p), FpPoly(p)};
  d.ss = d.jp;
  if (d.r) d.ss = d.ss * FpPoly::x(p);
  if (d.s) d.ss = d.ss * (FpPoly::x(p) - FpPoly::constant(p, p.reduce(1728)));
  return d;
}

}  // namespace k7p
