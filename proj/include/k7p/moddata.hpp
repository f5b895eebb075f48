#ifndef K7P_MODDATA_HPP
#define K7P_MODDATA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k7p/quad.hpp"
#include "k7p/zalg.hpp"

namespace k7p {

struct PrimePower {
  mpz_class prime;
  unsigned exponent = 1;
  bool bold = false;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A signed product of prime powers as tabulated in a reference row.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> terms;

  mpz_class value() const;
  /// Exponent of p in the product (0 when absent).
  unsigned exponent_of(u64 p) const;
  std::vector<u64> bold_primes() const;
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

Factorization parse_factorization(std::string_view text);

/// Key of a table row such as "d=96,delta=3" or "d=24,A".
struct RowKey {
  int d = 0;
  long delta = 0;
  std::string part;
};
RowKey parse_row_key(std::string_view key);

struct TableRow {
  std::string key;
  Factorization value;
};

/// The discriminant sets and per-discriminant metadata used by the closed form.
struct TheoremSets {
  std::vector<int> linear;      // class equations of degree 1 or 2 contributing roots in F_p
  std::vector<int> quadratic;   // irreducible quadratic class equations
  std::vector<int> quartic;     // quartic class equations
  std::vector<u64> exceptional;
  std::vector<u64> small_applicable;
  u64 large_from = 0;
  std::map<int, unsigned> disc_exponent;  // exponents in disc_y(Phi7) other than 2
  std::map<int, long> delta;              // quadratic subfield over which H_{-d} splits
  std::map<int, int> q;                   // auxiliary prime for the quartic exponent rule

  bool is_exceptional(u64 p) const;
  /// p in the small applicable list, or p > large_from and not exceptional.
  bool applicable(u64 p) const;
};

/// The quadratic factor of H_{-171} over Q(sqrt 57) and the data describing
/// its discriminant.
struct Q171Data {
  QuadPoly q171;           // x^2 + u x + v
  QuadElt disc;            // tabulated value of u^2 - 4v
  QuadElt alpha;           // disc / (2^30 3^4 13^2 19)
  QuadElt alpha_unit_cofactor;  // -alpha * unit^6
  std::vector<std::pair<QuadElt, unsigned>> alpha_factors;  // prime elements and exponents
  QuadElt unit;
  int unit_exponent = 0;
};

/// Constants embedded in the library, parsed and verified once.
class ModData {
 public:
  /// Parses a constants file; validates the checksum line when present.
  static ModData parse(std::string_view text);
  /// The embedded constants.
  static const ModData& instance();

  const ZPoly& class_poly(int d) const;
  bool has_class_poly(int d) const { return class_polys_.count(d) > 0; }
  std::vector<int> discriminants() const;

  const BivariateZ& q7() const { return q7_; }
  /// Res_z of the two degree-8 polynomials, before division by 7^14.
  BivariateZ phi7_resultant() const;
  const BivariateZ& phi7_res_x() const { return res_x_; }
  const BivariateZ& phi7_res_y() const { return res_y_; }

  const Q171Data& q171() const { return q171_; }
  const TheoremSets& sets() const { return sets_; }

  const std::vector<TableRow>& table(std::string_view name) const;
  const Factorization& row(std::string_view table, std::string_view key) const;

  std::string_view text() const { return text_; }

 private:
  std::string text_;
  std::map<int, ZPoly> class_polys_;
  BivariateZ q7_;
  BivariateZ res_x_;
  BivariateZ res_y_;
  Q171Data q171_;
  TheoremSets sets_;
  std::map<std::string, std::vector<TableRow>, std::less<>> tables_;
};

/// 64-bit FNV-1a hash used as the constants checksum.
std::uint64_t fnv1a64(std::string_view bytes);

/// The embedded constants text.
std::string_view embedded_constants_text();

/// Phi_7(x, y), derived once from the resultant and divided by 7^14; throws if
/// the division is inexact.
const BivariateZ& phi7();
/// q_171 over Z[(1+sqrt 57)/2]; checked against H_{-171} at load.
const QuadPoly& q171_over_z57();
const ZPoly& class_poly(int d);

/// Serializes a bivariate polynomial as a '# table <name>' section.
std::string format_bivariate_section(std::string_view name, const BivariateZ& f);

}  // namespace k7p

#endif  // K7P_MODDATA_HPP
