#include "k7p/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "k7p/moddata.hpp"
#include "k7p/ssuper.hpp"
#include "k7p/zalg.hpp"

namespace k7p {

namespace {

int symbol(i64 a, const PrimeModulus& p, int d) {
  const int l = legendre(a, p);
  if (l == 0) {
    throw DegeneratePrime("p = " + std::to_string(p.value()) + " divides a symbol needed for d = " + std::to_string(d));
  }
  return l;
}

int symbol(const mpz_class& a, const PrimeModulus& p, int d) {
  const int l = legendre_residue(reduce_mod(a, p), p);
  if (l == 0) {
    throw DegeneratePrime("p = " + std::to_string(p.value()) + " divides disc(H_-" + std::to_string(d) + ")");
  }
  return l;
}

std::string label(int d) { return "H_-" + std::to_string(d); }

// Adds every irreducible factor of f, raised to k * exponent, refusing overlaps.
void contribute(FactorMap& out, const FactorMap& parts, unsigned exponent, const std::string& what) {
  for (const auto& [q, k] : parts.entries()) {
    if (out.contains(q)) {
      throw TheoremViolation(what + " shares the factor " + q.to_string() + " with another contribution");
    }
    out.insert_new(q, k * exponent);
  }
}

}  // namespace

int EpsilonVector::at(int d) const {
  auto it = eps.find(d);
  return it == eps.end() ? 0 : it->second;
}

std::vector<int> EpsilonVector::active() const {
  std::vector<int> out;
  for (const auto& [d, e] : eps) {
    if (e) out.push_back(d);
  }
  return out;
}

FpPoly q171_image(const PrimeModulus& p, u64 s) { return reduce_mod(q171_over_z57(), s, p); }

std::optional<Q171Selection> select_q171(const PrimeModulus& p) {
  if (legendre(-3, p) != -1 || legendre(-19, p) != -1) return std::nullopt;
  const std::string at = " at p = " + std::to_string(p.value());
  if (legendre(57, p) != 1) throw TheoremViolation("(-3/p) = (-19/p) = -1 but 57 is not a square" + at);
  const u64 s = sqrt_mod(57, p);
  const FpPoly a = q171_image(p, s);
  const FpPoly b = q171_image(p, p.neg(s));
  const bool irr_a = is_irreducible(a);
  const bool irr_b = is_irreducible(b);
  if (irr_a == irr_b) {
    throw TheoremViolation(std::string(irr_a ? "both" : "neither") + " image of q_171 irreducible" + at);
  }
  Q171Selection sel{irr_a ? a : b, irr_a ? s : p.neg(s)};
  const u64 unit = p.add(15, p.mul(2, sel.sqrt57));
  if (legendre_residue(unit, p) != 1) {
    throw TheoremViolation("15 + 2 sqrt(57) is not a square for the selected root" + at);
  }
  return sel;
}

EpsilonVector epsilons(const PrimeModulus& p) {
  const ModData& data = ModData::instance();
  const TheoremSets& sets = data.sets();
  EpsilonVector ev;

  for (int d : {3, 12, 19, 27, 7, 28}) ev.eps[d] = (1 - symbol(-d, p, d)) / 2;
  ev.eps[24] = (1 - symbol(-24, p, 24)) * (1 + symbol(2, p, 24)) / 4;

  for (int d : sets.quadratic) {
    const mpz_class disc = discriminant(data.class_poly(d));
    ev.eps[d] = (1 - symbol(-d, p, d)) * (1 - symbol(disc, p, d)) / 4;
  }

  for (int d : sets.quartic) {
    if (d == 171) continue;
    const long delta = sets.delta.at(d);
    // q defaults to d/32 for the three discriminants split over Q(sqrt 2).
    const auto qi = sets.q.find(d);
    const int q = qi != sets.q.end() ? qi->second : d / 32;
    ev.eps[d] = (1 - symbol(-d, p, d)) * (1 + symbol(delta, p, d)) * (1 - symbol(q, p, d)) / 8;
  }

  if (legendre(57, p) == 1) ev.sqrt57 = sqrt_mod(57, p);
  ev.eps[171] = 0;
  if (auto sel = select_q171(p)) {
    ev.sqrt57 = sel->sqrt57;
    const int l = symbol(static_cast<i64>(p.add(15, p.mul(2, sel->sqrt57))), p, 171);
    ev.eps[171] = (1 - legendre(-3, p)) * (1 - legendre(-19, p)) * (1 + l) / 8;
  }
  return ev;
}

bool theorem_applicable(u64 p) { return ModData::instance().sets().applicable(p); }

FpPoly phi7_xp_mod(const PolyModulus& m) {
  const PrimeModulus& p = m.poly().modulus();
  const FpPoly x = m.reduce(FpPoly::x(p));
  const FpPoly y = m.frobenius_x(1);
  const FpPoly u = m.reduce(-(y + x));
  const FpPoly v = m.mulmod(y, x);

  // rows[i][j] = coefficient of u^i v^j mod p
  const BivariateZ& q7 = ModData::instance().q7();
  std::vector<std::vector<u64>> rows(q7.degree_first() + 1);
  for (const auto& t : q7.monomials()) {
    auto& row = rows[t.i];
    if (row.size() <= t.j) row.resize(t.j + 1, 0);
    row[t.j] = reduce_mod(t.c, p);
  }

  FpPoly acc(p);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    FpPoly inner(p);
    for (auto c = it->rbegin(); c != it->rend(); ++c) inner = m.mulmod(inner, v) + FpPoly::constant(p, *c);
    acc = m.mulmod(acc, u) + inner;
  }
  return acc;
}

FactorMap tail_candidates(const PrimeModulus& p, u64 seed) {
  const FpPoly jp = jp_poly(p);
  if (jp.degree() < 1) return {};
  const PolyModulus m(jp);
  const FpPoly g = gcd_monic(phi7_xp_mod(m), jp);
  if (g.degree() < 1) return {};
  return factor(g, seed);
}

FactorMap theorem_factorization(const PrimeModulus& p, u64 seed) {
  if (!theorem_applicable(p.value())) {
    throw std::invalid_argument("p = " + std::to_string(p.value()) + " has no closed-form factorization");
  }
  const ModData& data = ModData::instance();
  const TheoremSets& sets = data.sets();
  const EpsilonVector ev = epsilons(p);
  const std::string at = " at p = " + std::to_string(p.value());
  FactorMap out;

  auto reduced = [&](int d) { return reduce_mod(data.class_poly(d), p); };

  for (int d : {7, 28}) {
    if (ev.at(d)) contribute(out, factor(reduced(d), seed), 2, label(d));
  }
  for (int d : sets.linear) {
    if (!ev.at(d)) continue;
    const FactorMap parts = factor(reduced(d), seed);
    if (d == 24) {
      if (parts.size() != 2 || parts.degree() != 2 || parts.entries()[0].exponent != 1 ||
          parts.entries()[1].exponent != 1) {
        throw TheoremViolation("H_-24 is not a product of two distinct linear factors" + at);
      }
    }
    contribute(out, parts, 4, label(d));
  }
  for (int d : sets.quadratic) {
    if (!ev.at(d)) continue;
    const FpPoly h = reduced(d);
    if (!is_irreducible(h)) throw TheoremViolation(label(d) + " is not irreducible" + at);
    contribute(out, factor(h, seed), 4, label(d));
  }
  for (int d : sets.quartic) {
    if (d == 171 || !ev.at(d)) continue;
    const FactorMap parts = factor(reduced(d), seed);
    const bool two_quadratics = parts.size() == 2 && std::all_of(parts.entries().begin(), parts.entries().end(),
                                                                 [](const FactorEntry& e) {
                                                                   return e.factor.degree() == 2 && e.exponent == 1;
                                                                 });
    if (!two_quadratics) {
      throw TheoremViolation(label(d) + " is not a product of two distinct irreducible quadratics" + at);
    }
    contribute(out, parts, 4, label(d));
  }
  if (ev.at(171)) {
    const auto sel = select_q171(p);
    contribute(out, factor(sel->poly, seed), 4, "q_171");
  }

  const FactorMap tail = tail_candidates(p, seed);
  for (const auto& [q, k] : tail.entries()) {
    if (out.contains(q)) continue;
    if (q.degree() != 2) {
      throw TheoremViolation("factor " + q.to_string() + " of gcd(Phi_7(x^p, x), J_p) is not accounted for" + at);
    }
    out.insert_new(q, 2);
  }
  return out;
}

DirectResult direct_k7p_detailed(const PrimeModulus& p, unsigned bound, u64 seed, unsigned max_bound) {
  if (p.value() <= 28) throw std::invalid_argument("direct computation needs p > 28");
  if (bound < 1) throw std::invalid_argument("multiplicity bound must be positive");
  const FpPoly ss = ss_poly(p).ss;

  for (unsigned e = bound; e <= max_bound; e *= 2) {
    const PolyModulus m(pow(ss, e));
    const FpPoly val = phi7_xp_mod(m);
    const FpPoly g = gcd_monic(rem(val, ss), ss);

    DirectResult res{FactorMap{}, e};
    bool attained = false;
    if (g.degree() >= 1) {
      const FactorMap candidates = factor(g, seed);
      for (const auto& [q, k0] : candidates.entries()) {
        FpPoly t = rem(val, pow(q, e));
        unsigned k = 0;
        while (k < e) {
          auto [quo, r] = divrem(t, q);
          if (!r.is_zero()) break;
          t = std::move(quo);
          ++k;
        }
        if (k == e) {
          attained = true;
          break;
        }
        res.factors.insert(q, 2 * k);
      }
    }
    if (!attained) return res;
  }
  throw std::runtime_error("multiplicity bound exhausted at p = " + std::to_string(p.value()));
}

FactorMap direct_k7p(const PrimeModulus& p, unsigned bound, u64 seed) {
  return direct_k7p_detailed(p, bound, seed).factors;
}

u64 class_number(u64 D) {
  if (D == 0 || (D % 4 != 0 && D % 4 != 3)) {
    throw std::invalid_argument("-" + std::to_string(D) + " is not a discriminant");
  }
  if (D >= (u64{1} << 40)) throw std::invalid_argument("discriminant too large");
  // Reduced forms: |b| <= a <= c, b >= 0 if |b| = a or a = c; a <= sqrt(D/3).
  u64 h = 0;
  for (u64 a = 1; 3 * a * a <= D; ++a) {
    for (i64 b = -static_cast<i64>(a) + 1; b <= static_cast<i64>(a); ++b) {
      const u64 bb = static_cast<u64>(b < 0 ? -b : b);
      if ((bb & 1) != (D & 1)) continue;
      const u64 num = bb * bb + D;
      if (num % (4 * a) != 0) continue;
      const u64 c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (std::gcd(std::gcd(a, bb), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::match:
      return "match";
    case Verdict::mismatch:
      return "mismatch";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

CongruenceReport verify_prime(const PrimeModulus& p, const VerifyOptions& opt) {
  CongruenceReport r;
  r.p = p.value();
  r.applicable = theorem_applicable(r.p);

  try {
    r.epsilons = epsilons(p);
  } catch (const DegeneratePrime& e) {
    r.notes.emplace_back(e.what());
  } catch (const TheoremViolation& e) {
    r.notes.emplace_back(std::string("theorem violation: ") + e.what());
  }

  const DirectResult direct = direct_k7p_detailed(p, opt.bound, opt.seed);
  r.direct_side = direct.factors;
  r.direct_bound = direct.bound;
  r.degree = r.direct_side.degree();
  r.h28 = class_number(28 * r.p);
  if (r.p % 4 == 1) r.h7 = class_number(7 * r.p);

  const bool degree_ok = static_cast<u64>(r.degree) == r.expected_degree();
  if (!degree_ok) {
    r.notes.push_back("deg K = " + std::to_string(r.degree) + " but class numbers give " +
                      std::to_string(r.expected_degree()));
  }

  if (!r.applicable) {
    r.verdict = degree_ok ? Verdict::not_applicable : Verdict::mismatch;
    return r;
  }
  try {
    r.theorem_side = theorem_factorization(p, opt.seed);
  } catch (const TheoremViolation& e) {
    r.notes.push_back(std::string("theorem violation: ") + e.what());
  } catch (const DegeneratePrime& e) {
    r.notes.emplace_back(e.what());
  }
  const bool same = r.theorem_side && *r.theorem_side == r.direct_side;
  if (r.theorem_side && !same) r.notes.emplace_back("theorem side differs from direct side");
  r.verdict = same && degree_ok ? Verdict::match : Verdict::mismatch;
  return r;
}

std::vector<SweepEntry> sweep(u64 from, u64 to, unsigned jobs, const VerifyOptions& opt) {
  if (from > to) throw std::invalid_argument("empty range");
  std::vector<SweepEntry> entries;
  for (u64 n = std::max<u64>(from, 5); n <= to; ++n) {
    if (is_prime_u64(n)) entries.push_back({n, std::nullopt, {}});
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(entries.size(), 1));

  // Loaded once before workers start so they only read shared data.
  (void)ModData::instance();
  (void)phi7();

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      SweepEntry& e = entries[i];
      try {
        e.report = verify_prime(PrimeModulus(e.p), opt);
      } catch (const std::exception& ex) {
        e.error = ex.what();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  return entries;
}

}  // namespace k7p
