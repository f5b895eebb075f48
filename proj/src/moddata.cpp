#include "k7p/moddata.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace k7p {

namespace detail {
extern const char kConstantsText[];
}

namespace {

constexpr std::string_view kChecksumPrefix = "# checksum fnv1a64 ";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(const std::string& section, std::string_view line, const std::string& why) {
  throw std::runtime_error("constants [" + section + "]: " + why + ": '" + std::string(line) + "'");
}

template <class T>
T parse_int(std::string_view s) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return v;
}

mpz_class parse_mpz(std::string_view s) {
  mpz_class v;
  if (s.empty() || v.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return v;
}

// Splits "key : rest" at the first ':' surrounded by spaces.
std::pair<std::string_view, std::string_view> split_key(std::string_view line) {
  const auto pos = line.find(" : ");
  if (pos == std::string_view::npos) throw std::invalid_argument("missing ' : '");
  return {trim(line.substr(0, pos)), trim(line.substr(pos + 3))};
}

template <class T>
std::map<int, T> parse_int_map(std::string_view rest) {
  std::map<int, T> out;
  for (auto tok : split_ws(rest)) {
    const auto c = tok.find(':');
    if (c == std::string_view::npos) throw std::invalid_argument("expected k:v");
    out[parse_int<int>(tok.substr(0, c))] = parse_int<T>(tok.substr(c + 1));
  }
  return out;
}

QuadElt quad_from_pair(long delta, std::string_view rest, int denom) {
  const auto toks = split_ws(rest);
  if (toks.size() != 2) throw std::invalid_argument("expected two integers");
  return QuadElt(delta, parse_mpz(toks[0]), parse_mpz(toks[1]), denom);
}

struct RawSections {
  std::vector<std::pair<std::string, std::vector<std::string_view>>> list;

  const std::vector<std::string_view>& get(std::string_view name) const {
    for (const auto& [n, lines] : list) {
      if (n == name) return lines;
    }
    throw std::runtime_error("constants: missing section '" + std::string(name) + "'");
  }
};

RawSections split_sections(std::string_view text) {
  RawSections out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;
    if (line.starts_with("# table ")) {
      out.list.emplace_back(std::string(trim(line.substr(8))), std::vector<std::string_view>{});
      continue;
    }
    if (line.front() == '#') continue;
    if (out.list.empty()) throw std::runtime_error("constants: data before the first section");
    out.list.back().second.push_back(line);
  }
  return out;
}

BivariateZ parse_bivariate(const std::string& name, const std::vector<std::string_view>& lines) {
  std::vector<BivariateZ::Monomial> terms;
  for (auto line : lines) {
    const auto toks = split_ws(line);
    if (toks.size() != 3) fail(name, line, "expected 'i j coefficient'");
    try {
      terms.push_back({parse_int<unsigned>(toks[0]), parse_int<unsigned>(toks[1]), parse_mpz(toks[2])});
    } catch (const std::invalid_argument& e) {
      fail(name, line, e.what());
    }
  }
  return BivariateZ::from_monomials(terms);
}

std::vector<u64> parse_u64_list(std::string_view rest) {
  std::vector<u64> out;
  for (auto tok : split_ws(rest)) out.push_back(parse_int<u64>(tok));
  return out;
}

std::vector<int> parse_int_list(std::string_view rest) {
  std::vector<int> out;
  for (auto tok : split_ws(rest)) out.push_back(parse_int<int>(tok));
  return out;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view embedded_constants_text() { return detail::kConstantsText; }

mpz_class Factorization::value() const {
  mpz_class v = sign;
  for (const auto& t : terms) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), t.prime.get_mpz_t(), t.exponent);
    v *= pe;
  }
  return v;
}

unsigned Factorization::exponent_of(u64 p) const {
  unsigned e = 0;
  for (const auto& t : terms) {
    if (t.prime == mpz_class(std::to_string(p))) e += t.exponent;
  }
  return e;
}

std::vector<u64> Factorization::bold_primes() const {
  std::vector<u64> out;
  for (const auto& t : terms) {
    if (t.bold) out.push_back(t.prime.get_ui());
  }
  return out;
}

std::string Factorization::to_string() const {
  std::string s = sign < 0 ? "-" : "";
  for (const auto& t : terms) {
    if (!s.empty() && s != "-") s += ' ';
    if (s == "-") s += ' ';
    s += t.prime.get_str();
    if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
    if (t.bold) s += '*';
  }
  if (terms.empty()) s += s.empty() ? "1" : " 1";
  return s;
}

Factorization parse_factorization(std::string_view text) {
  Factorization f;
  auto toks = split_ws(text);
  std::size_t k = 0;
  if (!toks.empty() && toks[0] == "-") {
    f.sign = -1;
    k = 1;
  }
  if (k == toks.size()) throw std::invalid_argument("empty factorization");
  if (k + 1 == toks.size() && toks[k] == "1") return f;  // empty product
  for (; k < toks.size(); ++k) {
    std::string_view tok = toks[k];
    PrimePower pp;
    if (tok.ends_with('*')) {
      pp.bold = true;
      tok.remove_suffix(1);
    }
    const auto caret = tok.find('^');
    pp.prime = parse_mpz(tok.substr(0, caret));
    if (caret != std::string_view::npos) pp.exponent = parse_int<unsigned>(tok.substr(caret + 1));
    if (pp.prime < 2 || pp.exponent == 0) throw std::invalid_argument("bad prime power '" + std::string(toks[k]) + "'");
    f.terms.push_back(std::move(pp));
  }
  return f;
}

RowKey parse_row_key(std::string_view key) {
  RowKey out;
  std::size_t start = 0;
  bool first = true;
  while (start <= key.size()) {
    std::size_t end = key.find(',', start);
    if (end == std::string_view::npos) end = key.size();
    const std::string_view part = trim(key.substr(start, end - start));
    start = end + 1;
    if (part.starts_with("d=")) {
      out.d = parse_int<int>(part.substr(2));
    } else if (part.starts_with("delta=")) {
      out.delta = parse_int<long>(part.substr(6));
    } else if (!first) {
      out.part = std::string(part);
    } else {
      throw std::invalid_argument("bad row key '" + std::string(key) + "'");
    }
    first = false;
  }
  if (out.d == 0) throw std::invalid_argument("row key without d: '" + std::string(key) + "'");
  return out;
}

bool TheoremSets::is_exceptional(u64 p) const {
  return std::find(exceptional.begin(), exceptional.end(), p) != exceptional.end();
}

bool TheoremSets::applicable(u64 p) const {
  if (std::find(small_applicable.begin(), small_applicable.end(), p) != small_applicable.end()) return true;
  return p > large_from && !is_exceptional(p);
}

ModData ModData::parse(std::string_view text) {
  ModData m;
  m.text_ = std::string(text);

  if (text.starts_with(kChecksumPrefix)) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) throw std::runtime_error("constants: checksum line without body");
    const std::string_view hex = trim(text.substr(kChecksumPrefix.size(), nl - kChecksumPrefix.size()));
    std::uint64_t want = 0;
    auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), want, 16);
    if (ec != std::errc() || ptr != hex.data() + hex.size()) throw std::runtime_error("constants: malformed checksum");
    const std::uint64_t got = fnv1a64(text.substr(nl + 1));
    if (got != want) {
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(got));
      throw std::runtime_error("constants: checksum mismatch, body hashes to " + std::string(buf));
    }
  }

  const RawSections sec = split_sections(text);

  for (auto line : sec.get("class_polys")) {
    try {
      const auto [key, rest] = split_key(line);
      const int d = parse_int<int>(key);
      std::vector<mpz_class> c;
      for (auto tok : split_ws(rest)) c.push_back(parse_mpz(tok));
      ZPoly f(std::move(c));
      if (f.degree() < 1 || f.lead() != 1) fail("class_polys", line, "not monic of positive degree");
      if (!m.class_polys_.emplace(d, std::move(f)).second) fail("class_polys", line, "duplicate discriminant");
    } catch (const std::invalid_argument& e) {
      fail("class_polys", line, e.what());
    }
  }

  m.q7_ = parse_bivariate("q7", sec.get("q7"));
  m.res_x_ = parse_bivariate("phi7_res_x", sec.get("phi7_res_x"));
  m.res_y_ = parse_bivariate("phi7_res_y", sec.get("phi7_res_y"));

  // q171 and its discriminant data
  {
    QuadElt u;
    QuadElt v;
    bool have_u = false;
    bool have_v = false;
    for (auto line : sec.get("q171")) {
      try {
        const auto [key, rest] = split_key(line);
        if (key == "u") {
          u = quad_from_pair(57, rest, 1);
          have_u = true;
        } else if (key == "v") {
          v = quad_from_pair(57, rest, 1);
          have_v = true;
        } else {
          fail("q171", line, "unknown key");
        }
      } catch (const std::invalid_argument& e) {
        fail("q171", line, e.what());
      }
    }
    if (!have_u || !have_v) throw std::runtime_error("constants [q171]: need u and v");
    m.q171_.q171 = QuadPoly(std::vector<QuadElt>{v, u, QuadElt(1)});

    for (auto line : sec.get("q171_disc")) {
      try {
        const auto [key, rest] = split_key(line);
        if (key == "disc") {
          m.q171_.disc = quad_from_pair(57, rest, 1);
        } else if (key == "alpha") {
          m.q171_.alpha = quad_from_pair(57, rest, 2);
        } else if (key == "alpha_unit_cofactor") {
          m.q171_.alpha_unit_cofactor = quad_from_pair(57, rest, 2);
        } else if (key == "factor" || key == "unit") {
          const auto toks = split_ws(rest);
          if (toks.size() != 4) fail("q171_disc", line, "expected 'a b denom exp'");
          QuadElt base(57, parse_mpz(toks[0]), parse_mpz(toks[1]), parse_int<int>(toks[2]));
          const int e = parse_int<int>(toks[3]);
          if (key == "factor") {
            if (e <= 0) fail("q171_disc", line, "factor exponent must be positive");
            m.q171_.alpha_factors.emplace_back(base, static_cast<unsigned>(e));
          } else {
            m.q171_.unit = base;
            m.q171_.unit_exponent = e;
          }
        } else {
          fail("q171_disc", line, "unknown key");
        }
      } catch (const std::invalid_argument& e) {
        fail("q171_disc", line, e.what());
      } catch (const std::domain_error& e) {
        fail("q171_disc", line, e.what());
      }
    }
  }

  for (auto line : sec.get("sets")) {
    try {
      const auto [key, rest] = split_key(line);
      TheoremSets& s = m.sets_;
      if (key == "L") {
        s.linear = parse_int_list(rest);
      } else if (key == "Q") {
        s.quadratic = parse_int_list(rest);
      } else if (key == "R") {
        s.quartic = parse_int_list(rest);
      } else if (key == "E") {
        s.exceptional = parse_u64_list(rest);
      } else if (key == "small_applicable") {
        s.small_applicable = parse_u64_list(rest);
      } else if (key == "large_from") {
        s.large_from = parse_int<u64>(rest);
      } else if (key == "disc_e") {
        s.disc_exponent = parse_int_map<unsigned>(rest);
      } else if (key == "delta") {
        s.delta = parse_int_map<long>(rest);
      } else if (key == "q") {
        s.q = parse_int_map<int>(rest);
      } else {
        fail("sets", line, "unknown key");
      }
    } catch (const std::invalid_argument& e) {
      fail("sets", line, e.what());
    }
  }

  for (const auto& [name, lines] : sec.list) {
    if (!name.starts_with("table") && name != "inline") continue;
    auto& rows = m.tables_[name];
    for (auto line : lines) {
      try {
        const auto [key, rest] = split_key(line);
        rows.push_back({std::string(key), parse_factorization(rest)});
      } catch (const std::invalid_argument& e) {
        fail(name, line, e.what());
      }
    }
  }

  // Load-time invariants.
  for (int d : m.sets_.linear) (void)m.class_poly(d);
  for (int d : m.sets_.quadratic) {
    if (m.class_poly(d).degree() != 2) throw std::runtime_error("constants: H_-" + std::to_string(d) + " is not quadratic");
  }
  for (int d : m.sets_.quartic) {
    if (m.class_poly(d).degree() != 4) throw std::runtime_error("constants: H_-" + std::to_string(d) + " is not quartic");
    if (!m.sets_.delta.count(d)) throw std::runtime_error("constants: no delta for " + std::to_string(d));
  }
  {
    const QuadPoly& q = m.q171_.q171;
    const ZPoly h = m.class_poly(171);
    const QuadPoly prod = q * conj(q);
    const QuadPoly hq = h.map([](const mpz_class& c) { return QuadElt(c); });
    if (!(prod == hq)) throw std::runtime_error("constants: q171 * conj(q171) != H_-171");
    const QuadElt u = q.coeff(1);
    const QuadElt v = q.coeff(0);
    if (!(u * u - 4 * v == m.q171_.disc)) throw std::runtime_error("constants: q171 discriminant mismatch");
  }
  for (int k = 1; k <= 6; ++k) (void)m.table("table" + std::to_string(k));
  (void)m.table("inline");
  return m;
}

const ModData& ModData::instance() {
  static const ModData data = ModData::parse(embedded_constants_text());
  return data;
}

const ZPoly& ModData::class_poly(int d) const {
  auto it = class_polys_.find(d);
  if (it == class_polys_.end()) throw std::out_of_range("no class polynomial for discriminant -" + std::to_string(d));
  return it->second;
}

std::vector<int> ModData::discriminants() const {
  std::vector<int> out;
  for (const auto& [d, f] : class_polys_) out.push_back(d);
  return out;
}

BivariateZ ModData::phi7_resultant() const { return eliminate_z(res_x_, res_y_); }

const std::vector<TableRow>& ModData::table(std::string_view name) const {
  auto it = tables_.find(name);
  if (it == tables_.end()) throw std::out_of_range("no table '" + std::string(name) + "'");
  return it->second;
}

const Factorization& ModData::row(std::string_view table_name, std::string_view key) const {
  for (const auto& r : table(table_name)) {
    if (r.key == key) return r.value;
  }
  throw std::out_of_range("no row '" + std::string(key) + "' in " + std::string(table_name));
}

const BivariateZ& phi7() {
  static const BivariateZ value = [] {
    const BivariateZ res = ModData::instance().phi7_resultant();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 7, 14);
    std::vector<BivariateZ::Monomial> terms = res.monomials();
    for (auto& t : terms) {
      if (!mpz_divisible_p(t.c.get_mpz_t(), scale.get_mpz_t())) {
        throw std::runtime_error("Phi7: resultant coefficient at x^" + std::to_string(t.i) + " y^" + std::to_string(t.j) +
                                 " is not divisible by 7^14");
      }
      t.c = divexact(t.c, scale);
    }
    return BivariateZ::from_monomials(terms);
  }();
  return value;
}

const QuadPoly& q171_over_z57() { return ModData::instance().q171().q171; }

const ZPoly& class_poly(int d) { return ModData::instance().class_poly(d); }

std::string format_bivariate_section(std::string_view name, const BivariateZ& f) {
  std::ostringstream os;
  os << "# table " << name << '\n';
  for (const auto& t : f.monomials()) os << t.i << ' ' << t.j << ' ' << t.c.get_str() << '\n';
  return os.str();
}

}  // namespace k7p
