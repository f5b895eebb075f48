#ifndef K7P_CONGRUENCE_HPP
#define K7P_CONGRUENCE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k7p/fp_poly.hpp"

namespace k7p {

/// The closed-form claims failed for this prime: a class equation did not
/// reduce as asserted, or two contributions overlap.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Legendre symbol needed by the exponent formulas vanished mod p.
class DegeneratePrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EpsilonVector {
  std::map<int, int> eps;  // d -> 0 or 1
  std::optional<u64> sqrt57;

  int at(int d) const;
  std::vector<int> active() const;
};

/// The exponent selectors for every discriminant in the closed form. Throws
/// DegeneratePrime if p divides a discriminant the formulas need.
EpsilonVector epsilons(const PrimeModulus& p);

struct Q171Selection {
  FpPoly poly;  // the irreducible image of q_171
  u64 sqrt57;
};

/// Image of q_171 mod p for the square root of 57 that makes it
/// irreducible. Absent unless (-3/p) = (-19/p) = -1.
std::optional<Q171Selection> select_q171(const PrimeModulus& p);

/// Images of q_171 mod p under sqrt(57) -> s; requires (57/p) = +1.
FpPoly q171_image(const PrimeModulus& p, u64 s);

/// Primes with a closed-form factorization: the small list plus p > 300
/// outside the exceptional set.
bool theorem_applicable(u64 p);

/// The closed-form factorization of K_{7p} mod p.
FactorMap theorem_factorization(const PrimeModulus& p, u64 seed = 0);

/// Irreducible factors of gcd(Phi_7(x^p, x) mod J_p, J_p).
FactorMap tail_candidates(const PrimeModulus& p, u64 seed = 0);

/// Phi_7(x^p, x) mod m, evaluated through the de-symmetrized form.
FpPoly phi7_xp_mod(const PolyModulus& m);

struct DirectResult {
  FactorMap factors;
  unsigned bound = 0;  // multiplicity bound that certified every exponent
};

/// K_{7p} mod p from the multiplicities of the factors of ss_p in
/// Phi_7(x^p, x); the bound doubles (up to max_bound) while it is attained.
DirectResult direct_k7p_detailed(const PrimeModulus& p, unsigned bound = 6, u64 seed = 0, unsigned max_bound = 48);
FactorMap direct_k7p(const PrimeModulus& p, unsigned bound = 6, u64 seed = 0);

/// Number of reduced primitive forms of discriminant -D.
u64 class_number(u64 D);

enum class Verdict { match, mismatch, not_applicable };
const char* to_string(Verdict v);

struct CongruenceReport {
  u64 p = 0;
  bool applicable = false;
  std::optional<EpsilonVector> epsilons;
  std::optional<FactorMap> theorem_side;
  FactorMap direct_side;
  unsigned direct_bound = 0;
  int degree = 0;  // deg of the direct side
  u64 h28 = 0;     // h(-28p)
  std::optional<u64> h7;  // h(-7p) when p = 1 mod 4
  Verdict verdict = Verdict::mismatch;
  std::vector<std::string> notes;

  u64 expected_degree() const { return h28 + h7.value_or(0); }
};

struct VerifyOptions {
  unsigned bound = 6;
  u64 seed = 0;
};

CongruenceReport verify_prime(const PrimeModulus& p, const VerifyOptions& opt = {});

struct SweepEntry {
  u64 p = 0;
  std::optional<CongruenceReport> report;
  std::string error;  // set when verification threw
};

/// verify_prime over all primes in [from, to] on `jobs` workers, in prime
/// order.
std::vector<SweepEntry> sweep(u64 from, u64 to, unsigned jobs, const VerifyOptions& opt = {});

}  // namespace k7p

#endif  // K7P_CONGRUENCE_HPP
