#include "k7p/zalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace k7p {

// ---------------------------------------------------------------------------
// BivariateZ

BivariateZ BivariateZ::from_monomials(std::span<const Monomial> monomials) {
  unsigned di = 0;
  unsigned dj = 0;
  for (const auto& m : monomials) {
    di = std::max(di, m.i);
    dj = std::max(dj, m.j);
  }
  std::vector<std::vector<mpz_class>> grid(di + 1, std::vector<mpz_class>(dj + 1));
  for (const auto& m : monomials) grid[m.i][m.j] += m.c;
  std::vector<ZPoly> outer;
  outer.reserve(grid.size());
  for (auto& row : grid) outer.emplace_back(std::move(row));
  return BivariateZ(Nested(std::move(outer)));
}

BivariateZ BivariateZ::in_first(const ZPoly& f) {
  std::vector<ZPoly> outer;
  for (const auto& c : f.coeffs()) outer.emplace_back(c);
  return BivariateZ(Nested(std::move(outer)));
}

BivariateZ BivariateZ::in_second(const ZPoly& f) { return BivariateZ(Nested(f)); }

std::vector<BivariateZ::Monomial> BivariateZ::monomials() const {
  std::vector<Monomial> out;
  const auto& outer = n_.coeffs();
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const auto& inner = outer[i].coeffs();
    for (std::size_t j = 0; j < inner.size(); ++j) {
      if (inner[j] != 0) out.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), inner[j]});
    }
  }
  return out;
}

mpz_class BivariateZ::coeff(unsigned i, unsigned j) const { return n_.coeff(i).coeff(j); }

int BivariateZ::degree_second() const {
  int d = -1;
  for (const auto& c : n_.coeffs()) d = std::max(d, c.degree());
  return d;
}

BivariateZ BivariateZ::swapped() const {
  std::vector<Monomial> m = monomials();
  for (auto& t : m) std::swap(t.i, t.j);
  return from_monomials(m);
}

BivariateZ BivariateZ::partial_first() const { return BivariateZ(n_.derivative()); }

BivariateZ BivariateZ::partial_second() const {
  return BivariateZ(n_.map([](const ZPoly& c) { return c.derivative(); }));
}

// ---------------------------------------------------------------------------
// Resultants and discriminants

ZPoly resultant_z(const BivariateZ& f_zw, const BivariateZ& g_zw) {
  if (f_zw.zero() || g_zw.zero()) throw std::domain_error("resultant of a zero polynomial");
  return resultant(f_zw.nested(), g_zw.nested());
}

BivariateZ eliminate_z(const BivariateZ& f_zx, const BivariateZ& g_zy) {
  using XY = Poly<ZPoly>;  // outer x, inner y
  std::vector<XY> f;
  for (const auto& c : f_zx.nested().coeffs()) {
    std::vector<ZPoly> outer;
    for (const auto& k : c.coeffs()) outer.emplace_back(k);
    f.emplace_back(std::move(outer));
  }
  std::vector<XY> g;
  for (const auto& c : g_zy.nested().coeffs()) g.emplace_back(c);
  return BivariateZ(resultant(Poly<XY>(std::move(f)), Poly<XY>(std::move(g))));
}

ZPoly disc_y(const BivariateZ& f) {
  if (f.degree_second() < 1) throw std::domain_error("disc_y of a polynomial constant in y");
  return discriminant(f.swapped().nested());
}

BivariateZ desymmetrized_to_symmetric(const BivariateZ& q_uv) {
  using XY = BivariateZ::Nested;
  const XY u(std::vector<ZPoly>{ZPoly(std::vector<mpz_class>{0, -1}), ZPoly(-1)});
  const XY v(std::vector<ZPoly>{ZPoly(), ZPoly(std::vector<mpz_class>{0, 1})});
  XY acc;
  const auto& outer = q_uv.nested().coeffs();
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
    XY inner;
    const auto& cs = it->coeffs();
    for (auto jt = cs.rbegin(); jt != cs.rend(); ++jt) inner = inner * v + XY(ZPoly(*jt));
    acc = acc * u + inner;
  }
  return BivariateZ(std::move(acc));
}

// ---------------------------------------------------------------------------
// Cubic integer roots

namespace {

mpz_class eval_cubic(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& w) {
  return ((w + a) * w + b) * w + c;
}

// Integer root of g on [lo, hi] where g is monotone with the given direction.
void bisect_root(const mpz_class& a, const mpz_class& b, const mpz_class& c, mpz_class lo, mpz_class hi,
                 int direction, std::vector<mpz_class>& out) {
  if (lo > hi) return;
  auto g = [&](const mpz_class& w) { return mpz_class(direction * eval_cubic(a, b, c, w)); };
  if (sgn(g(lo)) > 0 || sgn(g(hi)) < 0) return;
  while (lo < hi) {
    mpz_class mid = lo + (hi - lo) / 2;
    if (sgn(g(mid)) < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (sgn(g(lo)) == 0) out.push_back(lo);
}

mpz_class floor_div(const mpz_class& n, long d) {
  mpz_class q;
  mpz_fdiv_q_ui(q.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
  return q;
}

}  // namespace

std::vector<mpz_class> integer_roots_monic_cubic(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  std::vector<mpz_class> out;
  mpz_class bound = 1;
  for (const mpz_class* t : {&a, &b, &c}) bound = std::max(bound, mpz_class(abs(*t) + 1));
  bound += 1;
  const mpz_class crit_disc = a * a - 3 * b;
  if (crit_disc <= 0) {
    bisect_root(a, b, c, -bound, bound, 1, out);
  } else {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), crit_disc.get_mpz_t());
    const mpz_class lo_crit = floor_div(mpz_class(-a - s), 3);
    const mpz_class hi_crit = floor_div(mpz_class(-a + s), 3);
    bisect_root(a, b, c, -bound, lo_crit - 3, 1, out);
    bisect_root(a, b, c, lo_crit + 3, hi_crit - 3, -1, out);
    bisect_root(a, b, c, hi_crit + 3, bound, 1, out);
    for (const mpz_class& centre : {lo_crit, hi_crit}) {
      for (int k = -2; k <= 2; ++k) {
        mpz_class w = centre + k;
        if (eval_cubic(a, b, c, w) == 0) out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Quartic splitting over a real quadratic field

std::pair<QuadPoly, QuadPoly> quartic_split(const ZPoly& h, long delta) {
  if (h.degree() != 4 || h.lead() != 1) throw std::invalid_argument("quartic_split expects a monic quartic");
  const mpz_class& c0 = h[0];
  const mpz_class& c1 = h[1];
  const mpz_class& c2 = h[2];
  const mpz_class& c3 = h[3];
  // f = x^2 + u x + v with u = (U1 + U2 r)/2, v = (V1 + V2 r)/2, r = sqrt(delta).
  // Matching f * conj(f) = h gives U1 = c3 and, with W = delta U2^2 and
  // T = 4 V1 = 4 c2 - U1^2 + W, the resolvent (U1 T - 8 c1)^2 = W (T^2 - 64 c0).
  const mpz_class u1 = c3;
  const mpz_class k = 4 * c2 - u1 * u1;
  const mpz_class m = u1 * k - 8 * c1;
  const mpz_class ca = 2 * k - u1 * u1;
  const mpz_class cb = k * k - 2 * u1 * m - 64 * c0;
  const mpz_class cc = -m * m;
  const QuadPoly target = h.map([](const mpz_class& c) { return QuadElt(c); });
  auto accept = [&](const QuadElt& u, const QuadElt& v) -> std::optional<std::pair<QuadPoly, QuadPoly>> {
    const QuadPoly f(std::vector<QuadElt>{v, u, QuadElt(1)});
    const QuadPoly g = conj(f);
    if (!(f * g == target)) return std::nullopt;
    if (is_square(QuadElt(u * u - 4 * v))) return std::nullopt;  // f reducible over Q(sqrt(delta))
    return std::make_pair(f, g);
  };
  for (const mpz_class& w : integer_roots_monic_cubic(ca, cb, cc)) {
    if (w == 0 && k % 4 == 0) {
      // Rational u = U1 / 2: then V1 = k / 4 and delta V2^2 = V1^2 - 4 c0.
      const mpz_class v1 = k / 4;
      const mpz_class rest = v1 * v1 - 4 * c0;
      if (rest <= 0 || rest % delta != 0) continue;
      const mpz_class v2_sq = rest / delta;
      if (!mpz_perfect_square_p(v2_sq.get_mpz_t())) continue;
      mpz_class v2;
      mpz_sqrt(v2.get_mpz_t(), v2_sq.get_mpz_t());
      try {
        if (auto r = accept(QuadElt::from_twice(delta, u1, 0), QuadElt::from_twice(delta, v1, v2))) return *r;
      } catch (const std::domain_error&) {
      }
      continue;
    }
    if (w <= 0 || w % delta != 0) continue;
    const mpz_class u2_sq = w / delta;
    if (!mpz_perfect_square_p(u2_sq.get_mpz_t())) continue;
    mpz_class u2;
    mpz_sqrt(u2.get_mpz_t(), u2_sq.get_mpz_t());
    const mpz_class t = w + k;
    if (t % 4 != 0) continue;
    const mpz_class v1 = t / 4;
    const mpz_class num = u1 * v1 - 2 * c1;
    const mpz_class den = delta * u2;
    if (num % den != 0) continue;
    const mpz_class v2 = num / den;
    try {
      if (auto r = accept(QuadElt::from_twice(delta, u1, u2), QuadElt::from_twice(delta, v1, v2))) return *r;
    } catch (const std::domain_error&) {
    }
  }
  throw std::domain_error("quartic does not split into conjugate irreducible quadratics over Q(sqrt " +
                          std::to_string(delta) + ")");
}

// ---------------------------------------------------------------------------
// Integers

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

TrialFactorResult trial_factor(const mpz_class& n, u64 bound) {
  if (n == 0) throw std::domain_error("trial_factor of zero");
  if (bound < 2) throw std::invalid_argument("trial_factor bound must be >= 2");
  TrialFactorResult r;
  r.cofactor = n;
  for (u64 p : primes_up_to(bound)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(r.cofactor.get_mpz_t(), p)) {
      mpz_divexact_ui(r.cofactor.get_mpz_t(), r.cofactor.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) r.primes[p] = e;
  }
  return r;
}

u64 reduce_mod(const mpz_class& a, const PrimeModulus& p) {
  return mpz_fdiv_ui(a.get_mpz_t(), p.value());
}

FpPoly reduce_mod(const ZPoly& f, const PrimeModulus& p) {
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  for (const auto& k : f.coeffs()) c.push_back(reduce_mod(k, p));
  return FpPoly(p, std::move(c));
}

u64 reduce_mod(const QuadElt& a, u64 sqrt_delta, const PrimeModulus& p) {
  const u64 x = reduce_mod(a.twice_a(), p);
  const u64 y = reduce_mod(a.twice_b(), p);
  return p.mul(p.add(x, p.mul(y, sqrt_delta % p.value())), p.inv(2));
}

FpPoly reduce_mod(const QuadPoly& f, u64 sqrt_delta, const PrimeModulus& p) {
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  for (const auto& k : f.coeffs()) c.push_back(reduce_mod(k, sqrt_delta, p));
  return FpPoly(p, std::move(c));
}

ZPoly zpoly_from_strings(std::span<const std::string> coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.emplace_back(s, 10);
  return ZPoly(std::move(c));
}

std::string to_string(const ZPoly& f, char var) {
  if (f.zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const mpz_class& c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i > 0) out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace k7p
