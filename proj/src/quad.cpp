#include "k7p/quad.hpp"

#include <stdexcept>

namespace k7p {

namespace {

bool is_squarefree(long d) {
  if (d < 2) return false;
  for (long q = 2; q * q <= d; ++q) {
    if (d % (q * q) == 0) return false;
  }
  return true;
}

bool perfect_square(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

}  // namespace

QuadElt::QuadElt(long delta, const mpz_class& a, const mpz_class& b, int denom) : delta_(delta) {
  if (denom != 1 && denom != 2) throw std::invalid_argument("QuadElt denominator must be 1 or 2");
  x_ = denom == 1 ? mpz_class(2 * a) : a;
  y_ = denom == 1 ? mpz_class(2 * b) : b;
  validate();
}

QuadElt QuadElt::from_twice(long delta, mpz_class twice_a, mpz_class twice_b) {
  QuadElt r;
  r.delta_ = delta;
  r.x_ = std::move(twice_a);
  r.y_ = std::move(twice_b);
  r.validate();
  return r;
}

void QuadElt::validate() const {
  if (delta_ != 0 && !is_squarefree(delta_)) {
    throw std::invalid_argument("QuadElt delta must be squarefree and > 1: " + std::to_string(delta_));
  }
  if (delta_ == 0 && y_ != 0) throw std::invalid_argument("QuadElt with irrational part needs a delta");
  const bool x_odd = mpz_odd_p(x_.get_mpz_t()) != 0;
  const bool y_odd = mpz_odd_p(y_.get_mpz_t()) != 0;
  if (!x_odd && !y_odd) return;
  if (x_odd != y_odd || delta_ % 4 != 1) {
    throw std::domain_error("QuadElt is not an algebraic integer of Q(sqrt " + std::to_string(delta_) + ")");
  }
}

long QuadElt::joint_delta(const QuadElt& o) const {
  if (delta_ == 0) return o.delta_;
  if (o.delta_ == 0 || o.delta_ == delta_) return delta_;
  throw std::invalid_argument("QuadElt delta mismatch: " + std::to_string(delta_) + " vs " + std::to_string(o.delta_));
}

QuadElt QuadElt::conj() const {
  QuadElt r = *this;
  r.y_ = -r.y_;
  return r;
}

mpz_class QuadElt::norm() const { return divexact(mpz_class(x_ * x_ - delta_ * (y_ * y_)), mpz_class(4)); }

mpz_class QuadElt::to_integer() const {
  if (!is_rational()) throw std::domain_error("QuadElt is not rational: " + to_string());
  return divexact(x_, mpz_class(2));
}

QuadElt& QuadElt::operator+=(const QuadElt& o) {
  delta_ = joint_delta(o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadElt& QuadElt::operator-=(const QuadElt& o) {
  delta_ = joint_delta(o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadElt& QuadElt::operator*=(const QuadElt& o) {
  const long d = joint_delta(o);
  mpz_class x = x_ * o.x_ + d * (y_ * o.y_);
  mpz_class y = x_ * o.y_ + y_ * o.x_;
  x_ = divexact(x, mpz_class(2));
  y_ = divexact(y, mpz_class(2));
  delta_ = d;
  return *this;
}

bool operator==(const QuadElt& a, const QuadElt& b) {
  if (a.x_ != b.x_ || a.y_ != b.y_) return false;
  return a.y_ == 0 || a.delta_ == b.delta_;
}

QuadElt divexact(const QuadElt& a, const QuadElt& b) {
  if (is_zero(b)) throw std::domain_error("QuadElt division by zero");
  const long d = a.joint_delta(b);
  if (b.is_rational()) {
    const mpz_class bv = b.to_integer();
    return QuadElt::from_twice(d, divexact(a.x_, bv), divexact(a.y_, bv));
  }
  // a / b = a * conj(b) / N(b)
  QuadElt num = a * b.conj();
  const mpz_class n = b.norm();
  return QuadElt::from_twice(d, divexact(num.x_, n), divexact(num.y_, n));
}

std::string QuadElt::to_string() const {
  const int den = denom();
  std::string s = a().get_str();
  if (y_ != 0) {
    const mpz_class bb = b();
    s += bb < 0 ? " - " : " + ";
    s += mpz_class(abs(bb)).get_str() + "*sqrt(" + std::to_string(delta_) + ")";
  }
  if (den == 2) s = "(" + s + ")/2";
  return s;
}

QuadElt quad_mul(const QuadElt& x, const QuadElt& y) { return x * y; }
mpz_class quad_norm(const QuadElt& x) { return x.norm(); }
QuadElt quad_conj(const QuadElt& x) { return x.conj(); }

QuadPoly conj(const QuadPoly& f) {
  return f.map([](const QuadElt& c) { return c.conj(); });
}

bool is_square(const QuadElt& x) {
  if (is_zero(x)) return true;
  if (x.is_rational()) {
    // Either a rational square or delta times one, the square of b sqrt(delta).
    mpz_class r;
    const mpz_class n = x.to_integer();
    if (perfect_square(n, r)) return true;
    const long delta = x.delta();
    return delta >= 2 && n % delta == 0 && perfect_square(mpz_class(n / delta), r);
  }
  // s = (c + d sqrt(delta)) / 2 with s^2 = x gives c^2 + delta d^2 = 2X and
  // c^2 - delta d^2 = 4 N(s), where N(s)^2 = N(x).
  mpz_class root_norm;
  if (!perfect_square(x.norm(), root_norm)) return false;
  const long delta = x.delta();
  for (const mpz_class& ns : {mpz_class(root_norm), mpz_class(-root_norm)}) {
    mpz_class c2 = x.twice_a() + 2 * ns;
    mpz_class dd2 = x.twice_a() - 2 * ns;
    if (dd2 < 0 || c2 < 0 || dd2 % delta != 0) continue;
    mpz_class c;
    mpz_class d;
    if (!perfect_square(c2, c) || !perfect_square(mpz_class(dd2 / delta), d)) continue;
    for (int sign : {1, -1}) {
      try {
        QuadElt s = QuadElt::from_twice(delta, c, sign * d);
        if (s * s == x) return true;
      } catch (const std::domain_error&) {
      }
    }
  }
  return false;
}

}  // namespace k7p
