#include "support.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "k7p/ssuper.hpp"

namespace k7p::testing {

const char* const kGolden211 = "(x+13)^4 (x^2+56x+23)^2 (x^2+152x+88)^2 (x^2+186x+97)^2";

const char* const kGolden241 =
    "(x+1)^2 (x+148)^2 (x+25)^4 (x^2+160x+117)^4 (x^2+11x+156)^2 (x^2+27x+44)^2 (x^2+28x+79)^2"
    " (x^2+111x+25)^2 (x^2+166x+180)^2";

const char* const kGolden311 =
    "(x+265)^2 (x+212)^2 x^4 (x+114)^4 (x+79)^4 (x+12)^4 (x+161)^4"
    " (x^2+22x+260)^4 (x^2+148x+243)^2 (x^2+158x+119)^2";

const char* const kGolden113 =
    "x^4 (x+14)^4 (x+41)^8 (x+59)^8 (x^2+9x+82)^6 (x^2+18x+38)^8 (x^2+32x+65)^6";

const char* const kGolden1217 =
    "(x+250)^2 (x+941)^2 x^4 (x+477)^4 (x+765)^4 (x+937)^4 (x+1168)^4"
    " (x^2+13x+600)^4 (x^2+89x+683)^4 (x^2+164x+968)^4 (x^2+172x+6)^4"
    " (x^2+263x+931)^4 (x^2+413x+546)^4 (x^2+463x+537)^4 (x^2+515x+390)^4"
    " (x^2+786x+754)^4 (x^2+805x+1184)^4 (x^2+877x+784)^4"
    " (x^2+1143x+815)^4 (x^2+871x+676)^6"
    " {(x^2+14x+190) (x^2+106x+85) (x^2+257x+897) (x^2+304x+612)"
    " (x^2+307x+276) (x^2+307x+314) (x^2+410x+94) (x^2+468x+850)"
    " (x^2+478x+1006) (x^2+522x+299) (x^2+529x+473) (x^2+535x+576)"
    " (x^2+596x+566) (x^2+608x+883) (x^2+656x+307) (x^2+873x+521)"
    " (x^2+944x+560) (x^2+944x+634) (x^2+1081x+27) (x^2+1100x+426)"
    " (x^2+1121x+717) (x^2+1129x+1045)}^2";

const char* const kJ311 =
    "(x+7)(x+12)(x+59)(x+64)(x+79)(x+86)(x+114)(x+143)"
    "(x+161)(x+179)(x+180)(x+209)(x+212)(x+234)(x+265)"
    "(x+279)(x+292)(x^2+158x+119)(x^2+198x+61)(x^2+22x+260)(x^2+148x+243)";

const char* const kGcd311 =
    "(x+12)(x+79)(x+114)(x+161)(x+212)(x+265)(x^2+22x+260)(x^2+148x+243)(x^2+158x+119)";

const char* const kJ113 = "(x+14)(x+41)(x+59)(x^2+9x+82)(x^2+18x+38)(x^2+32x+65)";

const char* const kGcd241 =
    "(x+1)(x+25)(x+148)(x^2+11x+156)(x^2+27x+44)(x^2+28x+79)(x^2+111x+25)(x^2+160x+117)(x^2+166x+180)";

namespace {

class GoldenParser {
 public:
  GoldenParser(std::string_view s, const PrimeModulus& p) : s_(s), p_(p) {}

  FactorMap parse() {
    FactorMap out;
    product(out, 1, '\0');
    if (pos_ != s_.size()) fail("trailing input");
    return out;
  }

 private:
  void product(FactorMap& out, unsigned scale, char close) {
    for (;;) {
      skip();
      if (pos_ == s_.size() || s_[pos_] == close) return;
      if (s_[pos_] == '{') {
        ++pos_;
        FactorMap group;
        product(group, 1, '}');
        expect('}');
        const unsigned e = exponent();
        for (const auto& entry : group.entries()) out.insert(entry.factor, entry.exponent * e * scale);
        continue;
      }
      FpPoly f(p_);
      if (s_[pos_] == '(') {
        ++pos_;
        f = polynomial();
        expect(')');
      } else if (s_[pos_] == 'x') {
        ++pos_;
        f = FpPoly::x(p_);
      } else {
        fail("expected a factor");
      }
      out.insert(f, exponent() * scale);
    }
  }

  FpPoly polynomial() {
    std::vector<u64> c;
    for (;;) {
      skip();
      u64 coeff = 1;
      bool have_digits = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coeff = number();
        have_digits = true;
      }
      std::size_t deg = 0;
      skip();
      if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        deg = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          deg = number();
        }
      } else if (!have_digits) {
        fail("expected a term");
      }
      if (c.size() <= deg) c.resize(deg + 1);
      c[deg] = p_.add(c[deg], coeff % p_.value());
      skip();
      if (pos_ < s_.size() && s_[pos_] == '+') {
        ++pos_;
        continue;
      }
      break;
    }
    FpPoly f(p_, c);
    if (f.lead() != 1) fail("factor is not monic");
    return f;
  }

  unsigned exponent() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return static_cast<unsigned>(number());
    }
    return 1;
  }

  u64 number() {
    skip();
    const std::size_t start = pos_;
    u64 v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = 10 * v + (s_[pos_++] - '0');
    if (pos_ == start) fail("expected a number");
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("golden parse error at " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  PrimeModulus p_;
  std::size_t pos_ = 0;
};

}  // namespace

FactorMap parse_golden(std::string_view text, const PrimeModulus& p) { return GoldenParser(text, p).parse(); }

u64 count_points_fp(u64 j, const PrimeModulus& p) {
  u64 A = 0;
  u64 B = 0;
  const u64 j0 = j % p.value();
  const u64 j1728 = 1728 % p.value();
  if (j0 == 0) {
    B = 1;
  } else if (j0 == j1728) {
    A = 1;
  } else {
    const u64 k = p.sub(j1728, j0);
    const u64 jk = p.mul(j0, k);
    A = p.mul(3, jk);
    B = p.mul(2, p.mul(jk, k));
  }
  u64 n = 1;
  for (u64 x = 0; x < p.value(); ++x) {
    const u64 f = p.add(p.mul(p.mul(x, x), x), p.add(p.mul(A, x), B));
    n += 1 + legendre_residue(f, p);
  }
  return n;
}

Fp2Field::Fp2Field(const PrimeModulus& p) : p_(p), n_(2), legendre_(p.value()) {
  while (legendre_residue(n_, p) != -1) ++n_;
  for (u64 a = 0; a < p.value(); ++a) legendre_[a] = legendre_residue(a, p);
}

Fp2 Fp2Field::add(Fp2 x, Fp2 y) const { return {p_.add(x.a, y.a), p_.add(x.b, y.b)}; }

Fp2 Fp2Field::mul(Fp2 x, Fp2 y) const {
  return {p_.add(p_.mul(x.a, y.a), p_.mul(n_, p_.mul(x.b, y.b))), p_.add(p_.mul(x.a, y.b), p_.mul(x.b, y.a))};
}

u64 Fp2Field::norm(Fp2 x) const { return p_.sub(p_.mul(x.a, x.a), p_.mul(n_, p_.mul(x.b, x.b))); }

int Fp2Field::chi(Fp2 x) const { return legendre_[norm(x)]; }

Fp2 Fp2Field::eval(const FpPoly& f, Fp2 at) const {
  Fp2 acc;
  const auto c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, at), Fp2{*it, 0});
  return acc;
}

u64 count_points_fp2(const Fp2Field& F, Fp2 j) {
  const PrimeModulus& p = F.base();
  const Fp2 c1728{1728 % p.value(), 0};
  Fp2 A;
  Fp2 B;
  if (j == Fp2{}) {
    B = {1, 0};
  } else if (j == c1728) {
    A = {1, 0};
  } else {
    const Fp2 k{p.sub(c1728.a, j.a), p.neg(j.b)};
    const Fp2 jk = F.mul(j, k);
    A = F.mul({3 % p.value(), 0}, jk);
    B = F.mul({2, 0}, F.mul(jk, k));
  }
  u64 n = 1;
  for (u64 a = 0; a < p.value(); ++a) {
    for (u64 b = 0; b < p.value(); ++b) {
      const Fp2 x{a, b};
      const Fp2 f = F.add(F.mul(F.mul(x, x), x), F.add(F.mul(A, x), B));
      n += static_cast<u64>(1 + F.chi(f));
    }
  }
  return n;
}

std::string supersingular_oracle(u64 pv) {
  const PrimeModulus p(pv);
  const SsData ss = ss_poly(p);
  const std::string at = " at p = " + std::to_string(pv);

  // Rational j: supersingular iff a_p = 0, checked for every j in F_p.
  for (u64 j = 0; j < pv; ++j) {
    const bool root = ss.ss.eval(j) == 0;
    const bool super = count_points_fp(j, p) == pv + 1;
    if (root != super) return "rational j = " + std::to_string(j) + (root ? " is a root but ordinary" : " is supersingular but not a root") + at;
  }

  // Irrational roots: each must lie in F_{p^2} and have a supersingular order there.
  const Fp2Field F(p);
  const u64 q = pv * pv;
  const std::vector<u64> orders{(pv + 1) * (pv + 1), (pv - 1) * (pv - 1), q + 1, q + pv + 1, q - pv + 1};
  const FactorMap fm = factor(ss.ss);
  std::vector<Fp2> roots;
  for (const auto& e : fm.entries()) {
    if (e.exponent != 1) return "ss_p is not squarefree" + at;
    if (e.factor.degree() == 1) {
      roots.push_back({p.neg(e.factor.coeff(0)), 0});
    } else if (e.factor.degree() == 2) {
      // x^2 + b x + c: roots (-b +- sqrt(b^2 - 4c)) / 2 with sqrt of a non-residue = s t.
      const u64 b = e.factor.coeff(1);
      const u64 c = e.factor.coeff(0);
      const u64 disc = p.sub(p.mul(b, b), p.mul(4, c));
      const u64 s = sqrt_mod(p.mul(disc, p.inv(F.nonresidue())), p);
      const u64 half = p.inv(2);
      roots.push_back({p.mul(p.neg(b), half), p.mul(s, half)});
      roots.push_back({p.mul(p.neg(b), half), p.mul(p.neg(s), half)});
    } else {
      return "ss_p has a factor of degree " + std::to_string(e.factor.degree()) + at;
    }
  }
  for (const Fp2& r : roots) {
    if (!(F.eval(ss.ss, r) == Fp2{})) return "computed root does not annihilate ss_p" + at;
    if (r.b == 0) continue;  // rational roots were counted over F_p
    const u64 n = count_points_fp2(F, r);
    if (std::find(orders.begin(), orders.end(), n) == orders.end()) {
      return "root with #E(F_p^2) = " + std::to_string(n) + " is ordinary" + at;
    }
  }

  // Mass formula: sum of 1 / #Aut over supersingular j is (p - 1) / 24.
  // Scaled by 24: weight 12 generally, 6 for j = 1728, 4 for j = 0.
  u64 mass24 = 0;
  for (const Fp2& r : roots) {
    if (r == Fp2{}) {
      mass24 += 4;
    } else if (r == Fp2{1728 % pv, 0}) {
      mass24 += 6;
    } else {
      mass24 += 12;
    }
  }
  if (mass24 != pv - 1) return "mass formula gives " + std::to_string(mass24) + "/24, want (p-1)/24" + at;
  return {};
}

mpz_class sylvester_resultant(const ZPoly& a, const ZPoly& b) {
  const int m = a.degree();
  const int n = b.degree();
  const int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) M[i][i + k] = a[m - k];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) M[n + i][i + k] = b[n - k];
  }
  // Bareiss elimination.
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k] == 0) {
      int r = k + 1;
      while (r < N && M[r][k] == 0) ++r;
      if (r == N) return 0;
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        M[i][j] = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = M[k][k];
  }
  return sign * M[N - 1][N - 1];
}

FpPoly random_poly(const PrimeModulus& p, int degree, std::mt19937_64& rng, bool monic) {
  std::vector<u64> c(static_cast<std::size_t>(degree) + 1);
  std::uniform_int_distribution<u64> d(0, p.value() - 1);
  for (auto& x : c) x = d(rng);
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = d(rng);
  return FpPoly(p, c);
}

ZPoly random_zpoly(int degree, int bits, std::mt19937_64& rng) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  std::uniform_int_distribution<long> d(-(1L << bits), 1L << bits);
  for (auto& x : c) x = d(rng);
  while (c.back() == 0) c.back() = d(rng);
  return ZPoly(c);
}

}  // namespace k7p::testing
