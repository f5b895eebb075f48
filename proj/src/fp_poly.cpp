#include "k7p/fp_poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace k7p {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_u64(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

constexpr u64 kMaxModulus = u64{1} << 61;

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(u64 p) : p_(p) {
  if (p <= 2 || p >= kMaxModulus) {
    throw std::invalid_argument("modulus must satisfy 2 < p < 2^61, got " + std::to_string(p));
  }
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

u64 PrimeModulus::reduce(i64 a) const {
  i64 r = a % static_cast<i64>(p_);
  return r < 0 ? static_cast<u64>(r + static_cast<i64>(p_)) : static_cast<u64>(r);
}

u64 PrimeModulus::pow(u64 base, u64 exponent) const { return powmod_u64(base, exponent, p_); }

u64 PrimeModulus::inv(u64 a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero residue");
  return pow(a, p_ - 2);
}

int legendre_residue(u64 a, const PrimeModulus& p) {
  a %= p.value();
  if (a == 0) return 0;
  return p.pow(a, (p.value() - 1) / 2) == 1 ? 1 : -1;
}

int legendre(i64 a, const PrimeModulus& p) { return legendre_residue(p.reduce(a), p); }

u64 sqrt_mod(u64 a, const PrimeModulus& pm) {
  const u64 p = pm.value();
  a %= p;
  if (a == 0) return 0;
  if (legendre_residue(a, pm) != 1) {
    throw std::domain_error("sqrt_mod: " + std::to_string(a) + " is a non-residue mod " + std::to_string(p));
  }
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (legendre_residue(z, pm) != -1) ++z;

  u64 m = s;
  u64 c = pm.pow(z, q);
  u64 t = pm.pow(a, q);
  u64 r = pm.pow(a, (q + 1) / 2);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = pm.mul(t2, t2);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = pm.mul(b, b);
    m = i;
    c = pm.mul(b, b);
    t = pm.mul(t, c);
    r = pm.mul(r, b);
  }
  return std::min(r, p - r);
}

// ---------------------------------------------------------------------------
// FpPoly

FpPoly::FpPoly(PrimeModulus modulus, std::vector<u64> coeffs) : mod_(modulus), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= mod_.value();
  trim();
}

FpPoly::FpPoly(PrimeModulus modulus, std::initializer_list<i64> coeffs) : mod_(modulus) {
  c_.reserve(coeffs.size());
  for (i64 c : coeffs) c_.push_back(mod_.reduce(c));
  trim();
}

FpPoly FpPoly::constant(PrimeModulus modulus, u64 c) { return FpPoly(modulus, std::vector<u64>{c}); }

FpPoly FpPoly::x(PrimeModulus modulus) { return FpPoly(modulus, std::vector<u64>{0, 1}); }

FpPoly FpPoly::monomial(PrimeModulus modulus, u64 c, std::size_t degree) {
  std::vector<u64> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(modulus, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::require_same(const FpPoly& o) const {
  if (!(mod_ == o.mod_)) throw std::invalid_argument("FpPoly modulus mismatch");
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_.inv(lead()));
}

FpPoly FpPoly::scaled(u64 s) const {
  FpPoly r(mod_);
  if (s % mod_.value() == 0) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = mod_.mul(c_[i], s);
  r.trim();
  return r;
}

FpPoly FpPoly::derivative() const {
  FpPoly r(mod_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mod_.mul(c_[i], i % mod_.value());
  r.trim();
  return r;
}

u64 FpPoly::eval(u64 at) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_.add(mod_.mul(acc, at), *it);
  return acc;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  require_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = mod_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  require_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = mod_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

FpPoly& FpPoly::operator*=(const FpPoly& o) { return *this = *this * o; }

FpPoly operator-(const FpPoly& a) {
  FpPoly r = a;
  for (auto& c : r.c_) c = a.mod_.neg(c);
  return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  a.require_same(b);
  FpPoly r(a.mod_);
  if (a.is_zero() || b.is_zero()) return r;
  const u64 p = a.mod_.value();
  const std::size_t na = a.c_.size();
  const std::size_t nb = b.c_.size();
  r.c_.assign(na + nb - 1, 0);
  // Number of products that can be summed in 128 bits before reducing.
  const u128 sq = static_cast<u128>(p - 1) * (p - 1);
  const u128 cap = sq == 0 ? ~u128{0} : (~u128{0}) / sq;
  const std::size_t flush = cap > (u128{1} << 40) ? std::size_t{1} << 40 : static_cast<std::size_t>(cap);
  const u64* pa = a.c_.data();
  const u64* pb = b.c_.data();
  for (std::size_t k = 0; k < na + nb - 1; ++k) {
    const std::size_t lo = k >= nb ? k - nb + 1 : 0;
    const std::size_t hi = std::min(k, na - 1);
    u128 acc = 0;
    std::size_t pending = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
      acc += static_cast<u128>(pa[i]) * pb[k - i];
      if (++pending == flush) {
        acc %= p;
        pending = 1;
      }
    }
    r.c_[k] = static_cast<u64>(acc % p);
  }
  r.trim();
  return r;
}

std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string FpPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const u64 c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division, gcd, powers

std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) {
  if (!(a.modulus() == b.modulus())) throw std::invalid_argument("FpPoly modulus mismatch");
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const PrimeModulus& m = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly(m), a};
  std::vector<u64> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = static_cast<std::size_t>(a.degree() - b.degree());
  std::vector<u64> q(dq + 1, 0);
  const u64 inv_lead = m.inv(b.lead());
  for (std::size_t k = dq + 1; k-- > 0;) {
    const u64 coef = m.mul(r[k + db], inv_lead);
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = m.sub(r[k + j], m.mul(coef, bc[j]));
  }
  r.resize(db);
  return {FpPoly(m, std::move(q)), FpPoly(m, std::move(r))};
}

FpPoly rem(const FpPoly& a, const FpPoly& b) { return divrem(a, b).second; }

FpPoly gcd_monic(const FpPoly& a, const FpPoly& b) {
  if (!(a.modulus() == b.modulus())) throw std::invalid_argument("FpPoly modulus mismatch");
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  FpPoly x = a;
  FpPoly y = b;
  while (!y.is_zero()) {
    FpPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly pow(const FpPoly& f, u64 e) {
  FpPoly result = FpPoly::constant(f.modulus(), 1);
  FpPoly base = f;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

FpPoly truncated(const FpPoly& f, std::size_t n) {
  auto c = f.coeffs();
  std::vector<u64> v(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(n, c.size())));
  return FpPoly(f.modulus(), std::move(v));
}

// Reverse of the length-n coefficient window [0, n).
FpPoly reversed(const FpPoly& f, std::size_t n) {
  std::vector<u64> v(n, 0);
  auto c = f.coeffs();
  for (std::size_t i = 0; i < n && i < c.size(); ++i) v[n - 1 - i] = c[i];
  return FpPoly(f.modulus(), std::move(v));
}

// Power-series inverse of f modulo x^n; f(0) must be nonzero.
FpPoly series_inverse(const FpPoly& f, std::size_t n) {
  const PrimeModulus& m = f.modulus();
  FpPoly g = FpPoly::constant(m, m.inv(f.coeff(0)));
  std::size_t k = 1;
  const FpPoly two = FpPoly::constant(m, 2);
  while (k < n) {
    k = std::min(2 * k, n);
    FpPoly fg = truncated(truncated(f, k) * g, k);
    g = truncated(g * (two - fg), k);
  }
  return g;
}

}  // namespace

PolyModulus::PolyModulus(FpPoly m) : m_(std::move(m)), inv_rev_(m_.modulus()) {
  if (m_.degree() < 1) throw std::domain_error("PolyModulus requires a non-constant modulus");
  const std::size_t n = static_cast<std::size_t>(m_.degree());
  inv_rev_ = series_inverse(reversed(m_, n + 1), n);
}

FpPoly PolyModulus::reduce(const FpPoly& a) const {
  const int n = m_.degree();
  if (a.degree() < n) return a;
  const std::size_t k = static_cast<std::size_t>(a.degree() - n + 1);
  if (k > static_cast<std::size_t>(n)) return rem(a, m_);
  FpPoly rev_a = reversed(a, static_cast<std::size_t>(a.degree()) + 1);
  FpPoly q_rev = truncated(truncated(rev_a, k) * inv_rev_, k);
  FpPoly q = reversed(q_rev, k);
  FpPoly r = a - q * m_;
  return truncated(r, static_cast<std::size_t>(n));
}

FpPoly PolyModulus::powmod(const FpPoly& base, u64 e) const {
  FpPoly result = reduce(FpPoly::constant(m_.modulus(), 1));
  FpPoly b = reduce(base);
  while (e > 0) {
    if (e & 1) result = mulmod(result, b);
    e >>= 1;
    if (e > 0) b = sqrmod(b);
  }
  return result;
}

FpPoly PolyModulus::frobenius_x(unsigned k) const {
  const u64 p = m_.modulus().value();
  FpPoly h = reduce(FpPoly::x(m_.modulus()));
  for (unsigned i = 0; i < k; ++i) h = powmod(h, p);
  return h;
}

FpPoly powmod_xp(const FpPoly& m) {
  if (m.degree() < 1) throw std::domain_error("powmod_xp requires a non-constant modulus");
  return PolyModulus(m).frobenius_x(1);
}

// ---------------------------------------------------------------------------
// FactorMap

void FactorMap::insert(const FpPoly& factor, unsigned exponent) {
  if (exponent == 0) return;
  if (factor.degree() < 1 || factor.lead() != 1) {
    throw std::invalid_argument("FactorMap entries must be monic and non-constant");
  }
  auto it = std::lower_bound(entries_.begin(), entries_.end(), factor,
                             [](const FactorEntry& e, const FpPoly& f) { return e.factor < f; });
  if (it != entries_.end() && it->factor == factor) {
    it->exponent += exponent;
    return;
  }
  entries_.insert(it, FactorEntry{factor, exponent});
}

void FactorMap::insert_new(const FpPoly& factor, unsigned exponent) {
  if (contains(factor)) throw std::logic_error("factor already present: " + factor.to_string());
  insert(factor, exponent);
}

bool FactorMap::contains(const FpPoly& factor) const { return exponent_of(factor) > 0; }

unsigned FactorMap::exponent_of(const FpPoly& factor) const {
  for (const auto& e : entries_) {
    if (e.factor == factor) return e.exponent;
  }
  return 0;
}

int FactorMap::degree() const {
  int d = 0;
  for (const auto& e : entries_) d += e.factor.degree() * static_cast<int>(e.exponent);
  return d;
}

FpPoly FactorMap::expand(const PrimeModulus& modulus) const {
  FpPoly r = FpPoly::constant(modulus, 1);
  for (const auto& e : entries_) r *= pow(e.factor, e.exponent);
  return r;
}

std::string FactorMap::to_string() const {
  std::string out;
  for (const auto& e : entries_) {
    const std::string f = e.factor.to_string();
    out += f == "x" ? f : "(" + f + ")";
    if (e.exponent > 1) out += "^" + std::to_string(e.exponent);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

FpPoly pth_root(const FpPoly& f) {
  const u64 p = f.modulus().value();
  auto c = f.coeffs();
  std::vector<u64> r;
  for (std::size_t i = 0; i < c.size(); i += p) r.push_back(c[i]);
  return FpPoly(f.modulus(), std::move(r));
}

FpPoly exact_quotient(const FpPoly& a, const FpPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

}  // namespace

std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f_in) {
  if (f_in.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<FpPoly, unsigned>> out;
  FpPoly f = f_in.monic();
  if (f.degree() < 1) return out;
  const unsigned p = static_cast<unsigned>(std::min<u64>(f.modulus().value(), 1u << 30));
  FpPoly g = f.derivative();
  if (g.is_zero()) {
    for (auto& [h, j] : squarefree_decomposition(pth_root(f))) out.emplace_back(h, j * p);
    return out;
  }
  FpPoly c = gcd_monic(f, g);
  FpPoly w = exact_quotient(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd_monic(w, c);
    FpPoly z = exact_quotient(w, y);
    if (!z.is_one()) out.emplace_back(z, i);
    ++i;
    w = y;
    c = exact_quotient(c, y);
  }
  if (!c.is_one()) {
    for (auto& [h, j] : squarefree_decomposition(pth_root(c))) out.emplace_back(h, j * p);
  }
  return out;
}

std::vector<std::pair<FpPoly, unsigned>> distinct_degree_factor(const FpPoly& f_in) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  FpPoly f = f_in.monic();
  const PrimeModulus& m = f.modulus();
  const FpPoly x = FpPoly::x(m);
  FpPoly h = x;
  unsigned d = 0;
  while (f.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    PolyModulus pm(f);
    h = pm.powmod(pm.reduce(h), m.value());
    FpPoly g = gcd_monic(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = exact_quotient(f, g);
      if (f.degree() >= 1) h = rem(h, f);
    }
  }
  if (f.degree() >= 1) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

std::vector<FpPoly> equal_degree_factor(const FpPoly& f_in, unsigned d, u64 seed) {
  FpPoly f0 = f_in.monic();
  const PrimeModulus& m = f0.modulus();
  const u64 p = m.value();
  std::mt19937_64 rng(seed);
  std::vector<FpPoly> done;
  std::vector<FpPoly> todo{f0};
  while (!todo.empty()) {
    FpPoly f = std::move(todo.back());
    todo.pop_back();
    if (f.degree() == static_cast<int>(d)) {
      done.push_back(std::move(f));
      continue;
    }
    PolyModulus pm(f);
    const std::size_t n = static_cast<std::size_t>(f.degree());
    for (;;) {
      std::vector<u64> coeffs(n);
      for (auto& c : coeffs) c = rng() % p;
      FpPoly a(m, std::move(coeffs));
      if (a.degree() < 1) continue;
      FpPoly g = gcd_monic(a, f);
      if (g.is_one()) {
        // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
        FpPoly t = a;
        FpPoly conj = a;
        for (unsigned i = 1; i < d; ++i) {
          conj = pm.powmod(conj, p);
          t = pm.mulmod(t, conj);
        }
        t = pm.powmod(t, (p - 1) / 2);
        g = gcd_monic(t - FpPoly::constant(m, 1), f);
      }
      if (g.degree() > 0 && g.degree() < f.degree()) {
        todo.push_back(exact_quotient(f, g));
        todo.push_back(std::move(g));
        break;
      }
    }
  }
  std::sort(done.begin(), done.end());
  return done;
}

FactorMap factor(const FpPoly& f, u64 seed) {
  if (f.is_zero()) throw std::domain_error("factor of zero polynomial");
  FactorMap out;
  u64 round = 0;
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    for (auto& [group, d] : distinct_degree_factor(part)) {
      for (auto& irr : equal_degree_factor(group, d, seed + round++)) out.insert(irr, mult);
    }
  }
  return out;
}

bool is_irreducible(const FpPoly& f_in) {
  if (f_in.degree() < 1) throw std::domain_error("irreducibility of a constant");
  FpPoly f = f_in.monic();
  const int n = f.degree();
  if (n == 1) return true;
  const PrimeModulus& m = f.modulus();
  const FpPoly x = FpPoly::x(m);
  PolyModulus pm(f);
  std::vector<int> prime_divisors;
  for (int r = 2, k = n; r <= k; ++r) {
    if (k % r == 0) {
      prime_divisors.push_back(r);
      while (k % r == 0) k /= r;
    }
  }
  // x^(p^i) for i = 0..n
  std::vector<FpPoly> frob{pm.reduce(x)};
  for (int i = 1; i <= n; ++i) frob.push_back(pm.powmod(frob.back(), m.value()));
  if (!(frob[static_cast<std::size_t>(n)] == pm.reduce(x))) return false;
  for (int r : prime_divisors) {
    if (!gcd_monic(frob[static_cast<std::size_t>(n / r)] - x, f).is_one()) return false;
  }
  return true;
}

}  // namespace k7p
