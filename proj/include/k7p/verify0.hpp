#ifndef K7P_VERIFY0_HPP
#define K7P_VERIFY0_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k7p/moddata.hpp"
#include "k7p/quad.hpp"
#include "k7p/zalg.hpp"

namespace k7p {

/// Q7 and its first and second partials in (u, v).
struct PartialsBundle {
  BivariateZ q, q1, q2, q11, q12, q22;

  static const PartialsBundle& instance();
};

enum class CheckStatus { exact_match, prime_support_match, mismatch };
const char* to_string(CheckStatus s);

struct TableCheckResult {
  std::string table;
  std::string row;
  std::string computed;
  std::string expected;
  CheckStatus status = CheckStatus::mismatch;
  std::string detail;

  bool ok() const { return status != CheckStatus::mismatch; }
};

template <class T>
struct FDerivatives {
  T f, f1, f2;
};

/// F(t), F'(t), F''(t) at a root t of a linear factor: Q, -Q1 + t Q2 and
/// Q11 - 2t Q12 + t^2 Q22, all at (-2t, t^2).
FDerivatives<mpz_class> f_derivatives_at_linear(const mpz_class& t);
FDerivatives<QuadElt> f_derivatives_at_linear(const QuadElt& t);

struct DPair {
  QuadElt d1, d2;
};

/// D1 = Q11 - v Q22 and D2 = 2 Q12 + u Q22 at (u, v); throws
/// std::domain_error unless Q = Q1 = Q2 = 0 there.
DPair d1_d2_at_quadratic(const QuadElt& u, const QuadElt& v);

struct SporadicNorms {
  mpz_class norm_q;       // N(Q(u, v))
  mpz_class gcd_q1_q2;    // gcd(N(Q1(u, v)), N(Q2(u, v)))
  QuadPoly factor;        // x^2 + u x + v over Q(sqrt delta)
};

SporadicNorms sporadic_norms(int d, long delta);

/// Q(u, v) at the coefficients of H_-24.
mpz_class h24_nonoccurrence();

struct D4Norms {
  QuadElt p;    // prod over i in {1,2}, j in {3,4} of Q(-(eta_i+eta_j), eta_i eta_j)
  QuadElt p1;   // the same for Q1
  QuadElt p2;   // the same for Q2
};

/// Nested resultants over the roots of q_171 and its conjugate.
D4Norms d4_cross_norms();
/// Res_Y(qt(Y), G(X, Y)) computed by reducing G modulo qt in Y.
QuadPoly d4_inner_by_reduction(const BivariateZ& q_uv);
QuadPoly d4_inner_by_resultant(const BivariateZ& q_uv);

/// Positive (x, y) with 4p = x^2 + 19 y^2, absent when (-19/p) = -1.
std::optional<std::pair<u64, u64>> cornacchia_19(u64 p);

/// Row checks for one table ("1" .. "6").
std::vector<TableCheckResult> check_table(int table);
std::vector<TableCheckResult> check_inline();
std::vector<TableCheckResult> identity_suite();
std::vector<TableCheckResult> q171_checks();
std::vector<TableCheckResult> d4_checks();
std::vector<TableCheckResult> pairwise_resultants();
/// Bold primes in Tables 4-5 agree with the sporadic-prime rule.
std::vector<TableCheckResult> bold_prime_checks();
/// PSV parity and the splitting rule for H_-171 over [from, to].
std::vector<TableCheckResult> h171_splitting_checks(u64 from, u64 to);

/// Prime support of |n| restricted to [lo, hi].
std::vector<u64> prime_support(const mpz_class& n, u64 lo, u64 hi);
std::vector<u64> prime_support(const Factorization& f, u64 lo, u64 hi);

/// Runs the named suites ("1".."6", "inline", "identities", "d4",
/// "resultants", "q171", "bold", "h171") on up to `jobs` threads and
/// concatenates the results in request order. Unknown names throw
/// std::invalid_argument.
std::vector<TableCheckResult> run_checks(const std::vector<std::string>& which, unsigned jobs);
bool is_known_suite(const std::string& name);

}  // namespace k7p

#endif  // K7P_VERIFY0_HPP
