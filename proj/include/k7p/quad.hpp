#ifndef K7P_QUAD_HPP
#define K7P_QUAD_HPP

#include <gmpxx.h>

#include <string>

#include "k7p/poly.hpp"

namespace k7p {

/// Element (a + b*sqrt(delta)) / denom of the ring of integers of
/// Q(sqrt(delta)), delta squarefree and positive, denom in {1, 2}.
///
/// Rational integers carry delta = 0 ("not bound to a field") and combine
/// with elements of any field; two elements bound to different fields throw.
class QuadElt {
 public:
  QuadElt() = default;
  QuadElt(int v) : x_(2 * static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  QuadElt(const mpz_class& v) : x_(2 * v) {}        // NOLINT(google-explicit-constructor)
  QuadElt(long delta, const mpz_class& a, const mpz_class& b, int denom = 1);

  static QuadElt sqrt_of(long delta) { return QuadElt(delta, 0, 1); }
  /// Builds (twice_a + twice_b sqrt(delta)) / 2, validating integrality.
  static QuadElt from_twice(long delta, mpz_class twice_a, mpz_class twice_b);

  long delta() const { return delta_; }
  /// Canonical components: value = (a() + b() sqrt(delta)) / denom().
  mpz_class a() const { return denom() == 1 ? mpz_class(x_ / 2) : x_; }
  mpz_class b() const { return denom() == 1 ? mpz_class(y_ / 2) : y_; }
  int denom() const { return (mpz_even_p(x_.get_mpz_t()) && mpz_even_p(y_.get_mpz_t())) ? 1 : 2; }
  /// Twice the rational part and twice the sqrt(delta) coefficient.
  const mpz_class& twice_a() const { return x_; }
  const mpz_class& twice_b() const { return y_; }

  bool is_rational() const { return y_ == 0; }
  QuadElt conj() const;
  mpz_class norm() const;
  mpz_class trace() const { return x_; }

  /// The rational integer value; throws unless is_rational().
  mpz_class to_integer() const;

  QuadElt& operator+=(const QuadElt& o);
  QuadElt& operator-=(const QuadElt& o);
  QuadElt& operator*=(const QuadElt& o);

  friend QuadElt operator+(QuadElt a, const QuadElt& b) { return a += b; }
  friend QuadElt operator-(QuadElt a, const QuadElt& b) { return a -= b; }
  friend QuadElt operator*(QuadElt a, const QuadElt& b) { return a *= b; }
  friend QuadElt operator-(QuadElt a) {
    a.x_ = -a.x_;
    a.y_ = -a.y_;
    return a;
  }
  friend bool operator==(const QuadElt& a, const QuadElt& b);

  friend bool is_zero(const QuadElt& a) { return a.x_ == 0 && a.y_ == 0; }
  /// Exact quotient in the ring; throws if b does not divide a.
  friend QuadElt divexact(const QuadElt& a, const QuadElt& b);

  std::string to_string() const;

 private:
  void validate() const;
  long joint_delta(const QuadElt& o) const;

  long delta_ = 0;
  mpz_class x_;  // value = (x_ + y_ sqrt(delta)) / 2
  mpz_class y_;
};

using QuadPoly = Poly<QuadElt>;

QuadElt quad_mul(const QuadElt& x, const QuadElt& y);
mpz_class quad_norm(const QuadElt& x);
QuadElt quad_conj(const QuadElt& x);
QuadPoly conj(const QuadPoly& f);

/// True when x is the square of an element of the same ring.
bool is_square(const QuadElt& x);

}  // namespace k7p

#endif  // K7P_QUAD_HPP
