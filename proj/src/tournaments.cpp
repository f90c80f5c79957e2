#include "char2lift/tournaments.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "char2lift/lift.hpp"

namespace char2lift {

TournExprPtr almost_transitive(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("almost-transitive parameter must be >= 0");
  auto g = std::make_shared<TournExpr>();
  g->tag = TournExpr::Tag::AlmostTransitive;
  g->t = t;
  return g;
}

TournExprPtr single_vertex() {
  auto g = std::make_shared<TournExpr>();
  g->tag = TournExpr::Tag::Single;
  return g;
}

TournExprPtr join_of(std::vector<TournExprPtr> parts) {
  if (parts.empty()) throw std::invalid_argument("join of no parts");
  for (const auto& p : parts)
    if (!p) throw std::invalid_argument("join of null expression");
  if (parts.size() == 1) return parts.front();
  auto g = std::make_shared<TournExpr>();
  g->tag = TournExpr::Tag::Join;
  g->parts = std::move(parts);
  return g;
}

TournExprPtr join_pow(BigInt count, TournExprPtr child) {
  if (!child) throw std::invalid_argument("join power of null expression");
  if (count < 1) throw std::invalid_argument("join power count must be >= 1");
  auto g = std::make_shared<TournExpr>();
  g->tag = TournExpr::Tag::JoinPow;
  g->count = std::move(count);
  g->child = std::move(child);
  return g;
}

namespace {

// Recursive-descent parser for
//   expr := int '@' expr | 'join' '(' expr (',' expr)* ')'
//         | 'T' int | 'V1' | '(' expr ')'
struct TournParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit TournParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(const char* word) {
    skip_ws();
    std::size_t i = 0;
    while (word[i] != '\0') {
      if (pos + i >= text.size() || text[pos + i] != word[i]) return false;
      ++i;
    }
    pos += i;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  BigInt parse_int() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return BigInt(text.substr(start, pos - start));
  }

  TournExprPtr parse_expr() {
    const char c = peek();
    if (c == '(') {
      ++pos;
      TournExprPtr inner = parse_expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos;
      BigInt count = parse_int();
      if (count < 1) {
        pos = at;
        fail("join power count must be >= 1");
      }
      if (peek() != '@') fail("expected '@' after join power count");
      ++pos;
      return join_pow(std::move(count), parse_expr());
    }
    if (c == 'j') {
      if (!eat("join")) fail("expected 'join'");
      if (peek() != '(') fail("expected '(' after 'join'");
      ++pos;
      std::vector<TournExprPtr> parts;
      parts.push_back(parse_expr());
      while (peek() == ',') {
        ++pos;
        parts.push_back(parse_expr());
      }
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return join_of(std::move(parts));
    }
    if (c == 'V') {
      if (!eat("V1")) fail("expected 'V1'");
      return single_vertex();
    }
    if (c == 'T') {
      ++pos;
      const std::size_t at = pos;
      BigInt t = parse_int();
      if (t > std::numeric_limits<std::int64_t>::max()) {
        pos = at;
        fail("T atom parameter out of range");
      }
      return almost_transitive(static_cast<std::int64_t>(t));
    }
    fail("expected 'T', 'V1', 'join', a join power count or '('");
  }
};

}  // namespace

TournExprPtr parse_tourn_expr(const std::string& text) {
  TournParser p(text);
  TournExprPtr g = p.parse_expr();
  if (!p.at_end()) p.fail("trailing characters after expression");
  return g;
}

namespace {

void print_expr(const TournExpr& g, std::string& out) {
  switch (g.tag) {
    case TournExpr::Tag::AlmostTransitive:
      out += "T" + std::to_string(g.t);
      return;
    case TournExpr::Tag::Single:
      out += "V1";
      return;
    case TournExpr::Tag::Join: {
      out += "join(";
      bool first = true;
      for (const auto& p : g.parts) {
        if (!first) out += ",";
        first = false;
        print_expr(*p, out);
      }
      out += ")";
      return;
    }
    case TournExpr::Tag::JoinPow:
      out += g.count.str() + "@";
      print_expr(*g.child, out);
      return;
  }
  throw std::logic_error("unreachable tournament tag");
}

}  // namespace

std::string to_string(const TournExpr& g) {
  std::string out;
  print_expr(g, out);
  return out;
}

BigInt order_of(const TournExpr& g) {
  switch (g.tag) {
    case TournExpr::Tag::AlmostTransitive:
      return g.t + 2;
    case TournExpr::Tag::Single:
      return 1;
    case TournExpr::Tag::Join: {
      BigInt total = 0;
      for (const auto& p : g.parts) total += order_of(*p);
      return total;
    }
    case TournExpr::Tag::JoinPow:
      return g.count * order_of(*g.child);
  }
  throw std::logic_error("unreachable tournament tag");
}

IntMatrix almost_transitive_adj(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("almost-transitive parameter must be >= 0");
  const std::int64_t n = t + 2;
  IntMatrix a(n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j) a.set(i, j, 1);
  a.set(0, t + 1, 0);
  a.set(t + 1, 0, 1);
  return a;
}

namespace {

void flatten_atoms(const TournExpr& g, std::vector<const TournExpr*>& atoms) {
  switch (g.tag) {
    case TournExpr::Tag::AlmostTransitive:
    case TournExpr::Tag::Single:
      atoms.push_back(&g);
      return;
    case TournExpr::Tag::Join:
      for (const auto& p : g.parts) flatten_atoms(*p, atoms);
      return;
    case TournExpr::Tag::JoinPow:
      for (BigInt i = 0; i < g.count; ++i) flatten_atoms(*g.child, atoms);
      return;
  }
  throw std::logic_error("unreachable tournament tag");
}

}  // namespace

IntMatrix tourn_adjacency(const TournExpr& g, std::int64_t cap) {
  const BigInt order = order_of(g);
  if (order > cap)
    throw SizeError("tournament order " + order.str() + " exceeds the cap " +
                    std::to_string(cap) + "; use tourn_summary(...) instead");
  std::vector<const TournExpr*> atoms;
  flatten_atoms(g, atoms);
  IntMatrix a(static_cast<std::int64_t>(order));
  std::int64_t at = 0;
  std::vector<std::int64_t> offsets;
  for (const TournExpr* atom : atoms) {
    offsets.push_back(at);
    if (atom->tag == TournExpr::Tag::AlmostTransitive) {
      const auto block = almost_transitive_adj(atom->t);
      for (std::int64_t i = 0; i < block.order(); ++i)
        for (std::int64_t j = 0; j < block.order(); ++j)
          if (block.at(i, j) != 0) a.set(at + i, at + j, 1);
      at += block.order();
    } else {
      at += 1;  // single vertex, no loops
    }
  }
  // Every vertex of a later part beats every vertex of an earlier part.
  for (std::size_t b = 1; b < atoms.size(); ++b) {
    const std::int64_t lo = offsets[b];
    const std::int64_t hi = b + 1 < atoms.size() ? offsets[b + 1] : static_cast<std::int64_t>(order);
    for (std::int64_t i = lo; i < hi; ++i)
      for (std::int64_t j = 0; j < offsets[b]; ++j) a.set(i, j, 1);
  }
  return a;
}

std::vector<BigInt> tt_charpoly(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("almost-transitive parameter must be >= 0");
  std::vector<BigInt> c(static_cast<std::size_t>(t) + 3, BigInt(0));
  c[0] = 1;
  for (std::int64_t k = 3; k <= t + 2; ++k) c[static_cast<std::size_t>(k)] = -binomial(t, k - 2);
  return c;
}

namespace {

struct AtomKey {
  std::int64_t t;  // -1 encodes the single vertex
  int depth;
  int bits;
  bool walk;  // walk polynomial vs characteristic series
  bool operator<(const AtomKey& o) const {
    return std::tie(t, depth, bits, walk) < std::tie(o.t, o.depth, o.bits, o.walk);
  }
};

TruncSeries atom_series_uncached(const AtomKey& key) {
  TruncSeries s = TruncSeries::monic(key.depth, key.bits);
  if (key.walk) {
    if (key.t < 0) {
      // Single vertex: one walk of length 0, none longer.
      if (key.depth >= 1) s.set_coeff(1, Residue::one(key.bits));
      return s;
    }
    const IntMatrix a = almost_transitive_adj(key.t);
    std::vector<BigInt> u(static_cast<std::size_t>(a.order()), BigInt(1));
    for (int k = 1; k <= key.depth; ++k) {
      BigInt total = 0;
      for (const auto& x : u) total += x;
      s.set_coeff(k, Residue::from_int(total, key.bits));
      if (k == key.depth) break;
      std::vector<BigInt> next(u.size(), BigInt(0));
      for (std::int64_t i = 0; i < a.order(); ++i)
        for (std::int64_t j = 0; j < a.order(); ++j)
          if (a.at(i, j) != 0) next[static_cast<std::size_t>(i)] += u[static_cast<std::size_t>(j)];
      u.swap(next);
    }
    return s;
  }
  // Characteristic series: V1 is just x (monic, no lower coefficients kept).
  if (key.t < 0) return s;
  const auto exact = tt_charpoly(key.t);
  for (int k = 1; k <= key.depth && k < static_cast<int>(exact.size()); ++k)
    s.set_coeff(k, Residue::from_int(exact[static_cast<std::size_t>(k)], key.bits));
  return s;
}

TruncSeries atom_series(const AtomKey& key) {
  static std::mutex mu;
  static std::map<AtomKey, TruncSeries> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TruncSeries s = atom_series_uncached(key);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(s)).first->second;
}

TruncSeries eval_series(const TournExpr& g, int depth, int bits, bool walk) {
  switch (g.tag) {
    case TournExpr::Tag::AlmostTransitive:
      return atom_series(AtomKey{g.t, depth, bits, walk});
    case TournExpr::Tag::Single:
      return atom_series(AtomKey{-1, depth, bits, walk});
    case TournExpr::Tag::Join: {
      TruncSeries acc = eval_series(*g.parts.front(), depth, bits, walk);
      for (std::size_t i = 1; i < g.parts.size(); ++i)
        acc = series_mul(acc, eval_series(*g.parts[i], depth, bits, walk));
      return acc;
    }
    case TournExpr::Tag::JoinPow:
      return series_pow(eval_series(*g.child, depth, bits, walk), g.count);
  }
  throw std::logic_error("unreachable tournament tag");
}

}  // namespace

TruncSeries walk_poly(const TournExpr& g, int d, int bits) {
  if (d < 1) throw std::invalid_argument("walk polynomial degree must be >= 1");
  return eval_series(g, d, bits, /*walk=*/true);
}

TournSummary tourn_summary(const TournExpr& g, int depth, int walk_depth, int bits) {
  if (depth < 0) throw std::invalid_argument("summary depth must be >= 0");
  return TournSummary{order_of(g), eval_series(g, depth, bits, /*walk=*/false),
                      walk_poly(g, walk_depth, bits)};
}

std::vector<BigInt> solve_vandermonde_congruence(int e, int m) {
  if (e < 2) throw std::invalid_argument("solve_vandermonde_congruence needs e >= 2");
  if (m < 1) throw std::invalid_argument("solve_vandermonde_congruence needs m >= 1");
  const BigInt modulus = BigInt(1) << static_cast<unsigned>(m);
  std::vector<BigInt> a(static_cast<std::size_t>(e) - 1);
  for (int i = 0; i <= e - 2; ++i) {
    BigInt v = binomial(e - 2, i) % modulus;
    if ((e - 2 - i) % 2 != 0) v = (modulus - v) % modulus;
    a[static_cast<std::size_t>(i)] = v;
  }
  // The defining congruences are cheap to confirm; do so before returning.
  for (int t = 0; t <= e - 2; ++t) {
    BigInt sum = 0;
    for (int i = 0; i <= e - 2; ++i) {
      BigInt pw = 1;
      for (int rep = 0; rep < t; ++rep) pw *= i;
      sum += a[static_cast<std::size_t>(i)] * pw;
    }
    const BigInt want = t == e - 2 ? factorial(e - 2) : BigInt(0);
    if ((sum - want) % modulus != 0)
      throw ConstructionError("vandermonde congruence failed at exponent " + std::to_string(t));
  }
  return a;
}

int PolyFit::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

BigRat PolyFit::eval(const BigInt& t) const {
  BigRat acc = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    acc = acc * BigRat(t) + coeffs[static_cast<std::size_t>(i)];
  return acc;
}

PolyFit fit_polynomial_in_t(const std::function<BigRat(std::int64_t)>& sampler,
                            std::int64_t t_min, std::int64_t t_max, int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("fit degree must be >= 0");
  if (t_max < t_min + max_deg)
    throw std::invalid_argument("fit needs at least max_deg + 1 sample points");
  // Newton divided differences through the first max_deg+1 points.
  std::vector<BigRat> x, dd;
  for (int i = 0; i <= max_deg; ++i) {
    const std::int64_t t = t_min + i;
    x.push_back(BigRat(t));
    dd.push_back(sampler(t));
  }
  for (int level = 1; level <= max_deg; ++level)
    for (int i = max_deg; i >= level; --i)
      dd[static_cast<std::size_t>(i)] =
          (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
          (x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i - level)]);
  // Expand the Newton form into monomial coefficients.
  PolyFit fit;
  fit.coeffs.assign(static_cast<std::size_t>(max_deg) + 1, BigRat(0));
  std::vector<BigRat> basis{BigRat(1)};  // prod_{i<j} (t - x_i)
  for (int j = 0; j <= max_deg; ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) fit.coeffs[i] += dd[static_cast<std::size_t>(j)] * basis[i];
    if (j < max_deg) {
      basis.push_back(BigRat(0));
      for (std::size_t i = basis.size() - 1; i > 0; --i)
        basis[i] = basis[i - 1] - x[static_cast<std::size_t>(j)] * basis[i];
      basis[0] = -x[static_cast<std::size_t>(j)] * basis[0];
    }
  }
  // The remaining points over-determine the fit; any mismatch means the data
  // is not a polynomial of the stated degree.
  for (std::int64_t t = t_min + max_deg + 1; t <= t_max; ++t)
    if (fit.eval(BigInt(t)) != sampler(t))
      throw ConstructionError("sampled values do not lie on a degree-" +
                              std::to_string(max_deg) + " polynomial (checked t = " +
                              std::to_string(t) + ")");
  return fit;
}

namespace {

// Least 2-adic valuation over the coefficients of a fitted polynomial
// (infinity for the zero polynomial).
Val2 nu_min(const PolyFit& p) {
  Val2 best = Val2::infinity();
  for (const auto& c : p.coeffs)
    if (c != 0) best = Val2::min(best, v2(c));
  return best;
}

std::uint64_t reduce_to(std::uint64_t v, int bits) { return v & detail::word_mask(bits); }

}  // namespace

PowerSumTournament construct_power_sum_tournament(int e) {
  if (e < 4) throw std::invalid_argument("power-sum tournament construction needs e >= 4");
  const int target_exp = e + 1 + static_cast<int>(v2_factorial(e + 2));

  // Exact power-sum samples p_1..p_e for T_t, t = 0..e, of both the
  // characteristic polynomial and the walk polynomial of degree e.
  std::vector<std::vector<BigInt>> char_p, walk_p;
  for (std::int64_t t = 0; t <= e; ++t) {
    char_p.push_back(power_sums_from_coeffs(tt_charpoly(t), e));
    const IntMatrix a = almost_transitive_adj(t);
    std::vector<BigInt> wc{1};
    for (int k = 1; k <= e; ++k) wc.push_back(walk_count(a, k - 1));
    walk_p.push_back(power_sums_from_coeffs(wc, e));
  }

  // m = target_exp - min_k min(nu_min(p_k(Char)), nu_min(p_k(Walk))), the
  // min running over k = 1..e (k = 0 has no power sum).
  Val2 least = Val2::infinity();
  for (int k = 1; k <= e; ++k) {
    for (const auto* table : {&char_p, &walk_p}) {
      auto fit = fit_polynomial_in_t(
          [&](std::int64_t t) {
            return BigRat((*table)[static_cast<std::size_t>(t)][static_cast<std::size_t>(k - 1)]);
          },
          0, e, e - 2);
      least = Val2::min(least, nu_min(fit));
    }
  }
  if (least.is_infinity())
    throw ConstructionError("power-sum polynomials are all zero; cannot size the modulus");
  const int m = target_exp - static_cast<int>(least.value());
  if (m < 1) throw ConstructionError("power-sum modulus exponent collapsed to " + std::to_string(m));

  const auto a = solve_vandermonde_congruence(e, m);
  std::vector<TournExprPtr> parts;
  for (int t = 0; t <= e - 2; ++t) {
    if (a[static_cast<std::size_t>(t)] == 0) continue;
    if (a[static_cast<std::size_t>(t)] == 1)
      parts.push_back(almost_transitive(t));
    else
      parts.push_back(join_pow(a[static_cast<std::size_t>(t)], almost_transitive(t)));
  }
  PowerSumTournament out;
  out.expr = join_of(std::move(parts));
  out.m = m;
  out.modulus_exp = target_exp;

  // Verify the claimed congruences through the summary route, with guard
  // bits so every kept residue is exact.
  const int bits = target_exp + 2;
  if (bits > kMaxWordBits)
    throw ConstructionError("verification modulus exceeds the word backend");
  const TournSummary s = tourn_summary(*out.expr, e, e, bits);
  std::vector<std::uint64_t> cc, wc;
  for (int k = 0; k <= e; ++k) {
    cc.push_back(s.char_coeffs.coeff(k).value());
    wc.push_back(s.walk.coeff(k).value());
  }
  const auto pc = power_sums_from_coeffs_mod(cc, e, bits);
  const auto pw = power_sums_from_coeffs_mod(wc, e, bits);
  auto expect = [&](std::uint64_t got, const BigInt& want, int k, const char* family) {
    if (reduce_to(got, target_exp) !=
        Residue::from_int(want, target_exp).value())
      throw ConstructionError(std::string("power-sum tournament verification failed at k = ") +
                              std::to_string(k) + " (" + family + ")");
  };
  for (int k = 1; k <= e - 1; ++k) {
    expect(pw[static_cast<std::size_t>(k - 1)], 0, k, "walk");
    expect(pc[static_cast<std::size_t>(k - 1)], 0, k, "char");
  }
  // p_e targets: the magnitudes are pinned, the signs are recorded.
  const std::uint64_t pe_char = reduce_to(pc[static_cast<std::size_t>(e - 1)], target_exp);
  if (pe_char == Residue::from_int(e, target_exp).value())
    out.p_e_char_sign = 1;
  else if (pe_char == Residue::from_int(-e, target_exp).value())
    out.p_e_char_sign = -1;
  else
    throw ConstructionError("power-sum tournament verification failed at k = e (char)");
  const std::uint64_t pe_walk = reduce_to(pw[static_cast<std::size_t>(e - 1)], target_exp);
  if (e % 2 == 0) {
    if (pe_walk != 0)
      throw ConstructionError("power-sum tournament verification failed at k = e (walk)");
  } else if (pe_walk == Residue::from_int(-2 * e, target_exp).value()) {
    out.p_e_walk_sign = 1;
  } else if (pe_walk == Residue::from_int(2 * e, target_exp).value()) {
    out.p_e_walk_sign = -1;
  } else {
    throw ConstructionError("power-sum tournament verification failed at k = e (walk)");
  }
  return out;
}

TournExprPtr construct_lift_tournament_I(int e, int f) {
  if (f < 4 || f % 2 != 0) throw std::invalid_argument("type-I lift tournaments need even f >= 4");
  if (e < f + 1) throw std::invalid_argument("type-I lift tournaments need e >= f+1");
  TournExprPtr g = construct_power_sum_tournament(f).expr;
  for (int step = 0; step < e - f - 1; ++step) g = join_pow(2, g);
  const auto cert = check_lift_tournament_I(*g, e, f);
  if (!cert.passed)
    throw ConstructionError("constructed tournament failed its type-I certificate at (" +
                            std::to_string(e) + ", " + std::to_string(f) + ")");
  return g;
}

TournExprPtr construct_lift_tournament_II(int e) {
  if (e < 6 || e % 2 != 0) throw std::invalid_argument("type-II lift tournaments need even e >= 6");
  // Power-sum construction at the odd parameter e-1; its congruences mod
  // 2^{(e-1)+1+v2((e+1)!)} = 2^{e+v2((e+1)!)} are exactly what the type-II
  // conditions need at level e.
  TournExprPtr g = construct_power_sum_tournament(e - 1).expr;
  const auto cert = check_lift_tournament_II(*g, e);
  if (!cert.passed)
    throw ConstructionError("constructed tournament failed its type-II certificate at e = " +
                            std::to_string(e));
  return g;
}

}  // namespace char2lift
