#include <doctest.h>

#include <random>

#include "k7p/fp_poly.hpp"
#include "k7p/zalg.hpp"
#include "support.hpp"

using namespace k7p;
using k7p::testing::random_poly;

TEST_CASE("primality agrees with a sieve and known large primes") {
  const auto primes = primes_up_to(100000);
  std::vector<bool> is_p(100001, false);
  for (u64 p : primes) is_p[p] = true;
  for (u64 n = 0; n <= 100000; ++n) CHECK(is_prime_u64(n) == is_p[n]);
  CHECK(is_prime_u64((u64{1} << 61) - 1));
  CHECK(is_prime_u64(18446744073709551557ULL));
  for (u64 c : {561ULL, 1105ULL, 1729ULL, 3215031751ULL, 3825123056546413051ULL}) CHECK_FALSE(is_prime_u64(c));
}

TEST_CASE("Legendre symbol and square roots, exhaustively for p < 500") {
  for (u64 pv : primes_up_to(499)) {
    if (pv == 2) continue;
    const PrimeModulus p(pv);
    std::vector<int> squares(pv, -1);
    for (u64 a = 1; a < pv; ++a) squares[p.mul(a, a)] = 1;
    squares[0] = 0;
    for (u64 a = 0; a < pv; ++a) {
      const int l = legendre_residue(a, p);
      REQUIRE(l == squares[a]);
      const u64 euler = p.pow(a, (pv - 1) / 2);
      CHECK(l == (a == 0 ? 0 : euler == 1 ? 1 : -1));
      if (l == 1) {
        const u64 r = sqrt_mod(a, p);
        CHECK(p.mul(r, r) == a);
        CHECK(r <= pv - r);
      }
    }
    CHECK(legendre(-1, p) == (pv % 4 == 1 ? 1 : -1));
    CHECK(legendre(-3, p) == (pv == 3 ? 0 : pv % 3 == 1 ? 1 : -1));
  }
}

TEST_CASE("modular inverse and power") {
  const PrimeModulus p(1000003);
  for (u64 a = 1; a < 2000; ++a) CHECK(p.mul(a, p.inv(a)) == 1);
  CHECK(p.pow(2, 1000002) == 1);
  CHECK(p.reduce(-1) == 1000002);
}

TEST_CASE("ring laws for random polynomials") {
  std::mt19937_64 rng(7);
  for (u64 pv : {5ULL, 211ULL, 1217ULL, 2305843009213693951ULL}) {
    const PrimeModulus p(pv);
    for (int t = 0; t < 40; ++t) {
      const FpPoly a = random_poly(p, static_cast<int>(rng() % 12), rng);
      const FpPoly b = random_poly(p, static_cast<int>(rng() % 12), rng);
      const FpPoly c = random_poly(p, static_cast<int>(rng() % 12), rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      const auto [q, r] = divrem(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      const FpPoly g = gcd_monic(a, b);
      CHECK(rem(a, g).is_zero());
      CHECK(rem(b, g).is_zero());
      CHECK(g.lead() == 1);
    }
  }
}

TEST_CASE("Barrett reduction and Frobenius agree with plain arithmetic") {
  std::mt19937_64 rng(11);
  const PrimeModulus p(113);
  for (int t = 0; t < 20; ++t) {
    const FpPoly m = random_poly(p, 1 + static_cast<int>(rng() % 15), rng, true);
    const PolyModulus pm(m);
    const FpPoly a = random_poly(p, 2 * m.degree(), rng);
    CHECK(pm.reduce(a) == rem(a, m));
    const FpPoly xp = rem(pow(FpPoly::x(p), 113), m);
    CHECK(powmod_xp(m) == xp);
    CHECK(pm.frobenius_x(1) == xp);
    CHECK(pm.frobenius_x(2) == rem(pow(FpPoly::x(p), 113 * 113), m));
    CHECK(pm.powmod(a, 5) == rem(pow(a, 5), m));
  }
}

TEST_CASE("factorization round-trips") {
  std::mt19937_64 rng(3);
  for (u64 pv : {3ULL, 5ULL, 31ULL, 211ULL, 1000003ULL}) {
    const PrimeModulus p(pv);
    for (int t = 0; t < 30; ++t) {
      const FpPoly f = random_poly(p, 1 + static_cast<int>(rng() % 24), rng, true);
      const FactorMap fm = factor(f);
      CHECK(fm.expand(p) == f);
      for (const auto& e : fm.entries()) {
        CHECK(is_irreducible(e.factor));
        CHECK(e.factor.lead() == 1);
      }
      CHECK(factor(f, 99) == fm);
    }
  }
}

TEST_CASE("factorization recovers planted multiplicities") {
  std::mt19937_64 rng(5);
  const PrimeModulus p(1217);
  for (int t = 0; t < 15; ++t) {
    FactorMap planted;
    for (int k = 0; k < 4; ++k) {
      FpPoly g(p);
      do {
        g = random_poly(p, 1 + static_cast<int>(rng() % 4), rng, true);
      } while (!is_irreducible(g) || planted.contains(g));
      planted.insert(g, 1 + static_cast<unsigned>(rng() % 6));
    }
    CHECK(factor(planted.expand(p)) == planted);
  }
}

TEST_CASE("squarefree and distinct-degree pieces multiply back") {
  const PrimeModulus p(7);
  // x^7 - x has derivative -1, and (x^7 - x)^7 needs the p-th root step.
  FpPoly f = pow(FpPoly(p, {0, 6, 0, 0, 0, 0, 0, 1}), 7) * FpPoly(p, {1, 1, 1});
  FpPoly prod = FpPoly::constant(p, 1);
  for (const auto& [g, e] : squarefree_decomposition(f)) prod = prod * pow(g, e);
  CHECK(prod == f);
  const FpPoly sqf(p, {0, 6, 0, 0, 0, 0, 0, 1});
  // x^2 + 1 is irreducible mod 7 and coprime to x^7 - x.
  for (const auto& [g, d] : distinct_degree_factor(sqf * FpPoly(p, {1, 0, 1}))) {
    for (const auto& h : equal_degree_factor(g, d, 1)) {
      CHECK(h.degree() == static_cast<int>(d));
      CHECK(is_irreducible(h));
    }
  }
}

TEST_CASE("FactorMap ordering, rendering and overlap detection") {
  const PrimeModulus p(211);
  FactorMap m;
  m.insert(FpPoly(p, {23, 56, 1}), 2);
  m.insert(FpPoly(p, {13, 1}), 4);
  CHECK(m.to_string() == "(x+13)^4(x^2+56x+23)^2");
  CHECK(m.degree() == 8);
  CHECK_THROWS(m.insert_new(FpPoly(p, {13, 1}), 2));
  m.insert(FpPoly(p, {13, 1}), 2);
  CHECK(m.exponent_of(FpPoly(p, {13, 1})) == 6);
  FactorMap x;
  x.insert(FpPoly::x(p), 4);
  CHECK(x.to_string() == "x^4");
}
