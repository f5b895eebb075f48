#ifndef K7P_POLY_HPP
#define K7P_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace k7p {

/// Exact division in Z; throws when the quotient is not integral.
inline mpz_class divexact(const mpz_class& a, const mpz_class& b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::domain_error("inexact integer division");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }

/// Dense univariate polynomial over an exact commutative ring R, ascending
/// coefficients, canonical (no trailing zeros). R must provide ring
/// arithmetic, equality, value-initialization to zero, construction from
/// int, and `divexact(R, R)` / `is_zero(R)` found by lookup.
template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  Poly(int c) : Poly(R(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(R c) {
    if (!is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(R c, std::size_t degree) {
    std::vector<R> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](std::size_t i) const { return c_[i]; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }
  const R& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<R> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const R& s) {
    std::vector<R> r(a.c_);
    for (auto& c : r) c *= s;
    return Poly(std::move(r));
  }
  friend Poly operator*(const R& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Exact division of every coefficient by a scalar.
  friend Poly divexact(const Poly& a, const R& s) {
    std::vector<R> r;
    r.reserve(a.c_.size());
    for (const auto& c : a.c_) r.push_back(divexact(c, s));
    return Poly(std::move(r));
  }

  /// Exact polynomial division; throws if b does not divide a.
  friend Poly divexact(const Poly& a, const Poly& b) {
    if (b.zero()) throw std::domain_error("division by zero polynomial");
    if (a.zero()) return Poly();
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<R> r = a.c_;
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const std::size_t dq = static_cast<std::size_t>(a.degree() - b.degree());
    std::vector<R> q(dq + 1);
    for (std::size_t k = dq + 1; k-- > 0;) {
      if (is_zero(r[k + db])) continue;
      q[k] = divexact(r[k + db], b.c_.back());
      for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q[k] * b.c_[j];
    }
    for (const auto& c : r) {
      if (!is_zero(c)) throw std::domain_error("inexact polynomial division");
    }
    return Poly(std::move(q));
  }

  friend bool is_zero(const Poly& a) { return a.zero(); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<int>(i));
    return Poly(std::move(r));
  }

  /// Horner evaluation at a point of any ring S that accepts R coefficients.
  template <class S>
  S eval(const S& at) const {
    S acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + S(*it);
    return acc;
  }

  /// Maps every coefficient through fn.
  template <class Fn>
  auto map(Fn&& fn) const {
    using S = decltype(fn(std::declval<const R&>()));
    std::vector<S> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(fn(c));
    return Poly<S>(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
Poly<R> pow(const Poly<R>& f, unsigned e) {
  Poly<R> result(1);
  Poly<R> base = f;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

template <class R>
R ring_pow(R base, unsigned e) {
  R result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
Poly<R> prem(const Poly<R>& a, const Poly<R>& b) {
  if (b.zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<R> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const R& lb = b.lead();
  const auto& bc = b.coeffs();
  for (std::size_t top = r.size(); top-- > db;) {
    R lr = r[top];
    for (auto& c : r) c *= lb;
    if (!is_zero(lr)) {
      const std::size_t shift = top - db;
      for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * bc[j];
    }
  }
  r.resize(db);
  return Poly<R>(std::move(r));
}

/// Resultant by the subresultant pseudo-remainder sequence; valid over any
/// integral domain with exact division. Convention:
/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  if (a.zero() || b.zero()) throw std::domain_error("resultant of a zero polynomial");
  R sign(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * ring_pow(b.lead(), static_cast<unsigned>(a.degree()));
  R g(1);
  R h(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    Poly<R> r = prem(a, b);
    a = std::move(b);
    if (r.zero()) return R();
    b = divexact(r, R(g * ring_pow(h, static_cast<unsigned>(delta))));
    g = a.lead();
    if (delta > 0) h = divexact(R(ring_pow(g, static_cast<unsigned>(delta))), ring_pow(h, static_cast<unsigned>(delta - 1)));
    if (b.degree() == 0) break;
  }
  const unsigned da = static_cast<unsigned>(a.degree());
  R res = divexact(ring_pow(b.lead(), da), ring_pow(h, da - 1));
  return sign * res;
}

/// Discriminant with the convention disc(a y^2 + b y + c) = b^2 - 4ac:
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
template <class R>
R discriminant(const Poly<R>& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant of a constant polynomial");
  const int n = f.degree();
  if (n == 1) return R(1);
  R r = divexact(resultant(f, f.derivative()), f.lead());
  if (((n * (n - 1)) / 2) & 1) r = -r;
  return r;
}

}  // namespace k7p

#endif  // K7P_POLY_HPP
