#include "char2lift/lift.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "char2lift/exact_linalg.hpp"
#include "char2lift/ring.hpp"

namespace char2lift {

std::string to_string(LiftKind kind) {
  switch (kind) {
    case LiftKind::GraphI:
      return "graphI";
    case LiftKind::GraphII:
      return "graphII";
    case LiftKind::TournI:
      return "tournI";
    case LiftKind::TournII:
      return "tournII";
  }
  throw std::logic_error("unreachable lift kind");
}

namespace {

std::uint64_t pow2(int exp) { return exp <= 0 ? 1ull : (1ull << exp); }

// Accumulates one graded congruence per call; nothing short-circuits, so a
// failed certificate still lists every condition.
struct CheckList {
  std::vector<LiftCheck> checks;
  bool all_ok = true;

  void add(const char* cond, int k, std::uint64_t expected, std::uint64_t observed,
           int mod_exp) {
    LiftCheck c;
    c.cond = cond;
    c.k = k;
    c.modulus = pow2(std::max(mod_exp, 0));
    c.expected = expected & (c.modulus - 1);
    c.observed = observed & (c.modulus - 1);
    c.ok = c.expected == c.observed;
    all_ok = all_ok && c.ok;
    checks.push_back(std::move(c));
  }
};

int certificate_bits(int widest_exp) {
  const int bits = widest_exp + 2;
  if (bits > kMaxWordBits)
    throw SizeError("certificate modulus 2^" + std::to_string(widest_exp) +
                    " exceeds the word backend");
  return bits;
}

}  // namespace

LiftCertificate check_lift_graph_I(const GraphExpr& g, int e, int f) {
  if (e < 1 || f < 1) throw std::invalid_argument("lift graph parameters must be >= 1");
  if (f >= e) throw std::invalid_argument("type-I lift graphs need f < e");
  const int bits = certificate_bits(e);
  const ComponentSummary s = summary(g, e - 1, e + kGraphWalkHorizonSlack, bits);

  CheckList list;
  for (int k = 0; k <= e + kGraphWalkHorizonSlack; ++k)
    list.add("L1a", k, 0, s.walks[static_cast<std::size_t>(k)].value(), e - 2);
  for (int k = 1; k <= e - 1; ++k)
    list.add("L1b", k, k == f ? pow2(e - f - 1) : 0, s.char_coeffs.coeff(k).value(), e - k);

  LiftCertificate cert;
  cert.kind = LiftKind::GraphI;
  cert.e = e;
  cert.f = f;
  cert.passed = list.all_ok;
  cert.checks = std::move(list.checks);
  return cert;
}

LiftCertificate check_lift_graph_II(const GraphExpr& g, int e) {
  if (e < 1) throw std::invalid_argument("lift graph parameter e must be >= 1");
  const int bits = certificate_bits(e + 2);
  const ComponentSummary s = summary(g, e + 1, e, bits);

  CheckList list;
  for (int k = 0; k <= e; ++k)
    list.add("L2a", k, k == e ? 2 : 0, s.walks[static_cast<std::size_t>(k)].value(), e + 2 - k);
  for (int k = 1; k <= e + 1; ++k)
    list.add("L2b", k, 0, s.char_coeffs.coeff(k).value(), e + 2 - k);

  LiftCertificate cert;
  cert.kind = LiftKind::GraphII;
  cert.e = e;
  cert.passed = list.all_ok;
  cert.checks = std::move(list.checks);
  return cert;
}

LiftCertificate check_lift_tournament_I(const TournExpr& g, int e, int f) {
  if (f < 1 || e <= f) throw std::invalid_argument("type-I lift tournaments need e > f >= 1");
  const int bits = certificate_bits(e);
  const TournSummary s = tourn_summary(g, e - 1, e, bits);

  CheckList list;
  for (int k = 0; k <= e - 1; ++k)
    list.add("LT1a", k, 0, s.walk.coeff(k + 1).value(), e - k);
  for (int k = 1; k <= e - 1; ++k)
    list.add("LT1b", k, k == f ? pow2(e - f - 1) : 0, s.char_coeffs.coeff(k).value(), e - k);

  LiftCertificate cert;
  cert.kind = LiftKind::TournI;
  cert.e = e;
  cert.f = f;
  cert.passed = list.all_ok;
  cert.checks = std::move(list.checks);
  return cert;
}

LiftCertificate check_lift_tournament_II(const TournExpr& g, int e) {
  if (e < 2) throw std::invalid_argument("type-II lift tournaments need e >= 2");
  const int bits = certificate_bits(e);
  const TournSummary s = tourn_summary(g, std::max(e - 2, 0), e, bits);

  CheckList list;
  for (int k = 0; k <= e - 3; ++k)
    list.add("LT2a", k, 0, s.walk.coeff(k + 1).value(), e);
  list.add("LT2b", e - 2, 2, s.walk.coeff(e - 1).value(), 2);
  list.add("LT2b", e - 1, 1, s.walk.coeff(e).value(), 1);
  for (int k = 1; k <= e - 2; ++k)
    list.add("LT2c", k, 0, s.char_coeffs.coeff(k).value(), e);

  LiftCertificate cert;
  cert.kind = LiftKind::TournII;
  cert.e = e;
  cert.passed = list.all_ok;
  cert.checks = std::move(list.checks);
  return cert;
}

std::string LiftCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  j["e"] = e;
  if (f) j["f"] = *f;
  j["passed"] = passed;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["cond"] = c.cond;
    jc["k"] = c.k;
    jc["expected"] = c.expected;
    jc["observed"] = c.observed;
    jc["modulus"] = c.modulus;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  return j.dump();
}

std::string ShiftReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["level"] = c.level;
    jc["k"] = c.k;
    jc["expected_delta"] = c.expected_delta;
    jc["observed_delta"] = c.observed_delta;
    jc["modulus"] = c.modulus;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  return j.dump();
}

GraphExprPtr construct_lift_graph_I(int e, int f) {
  GraphExprPtr g;
  int base_e = 0;
  if (f == 2) {
    if (e < 4) throw std::invalid_argument("(e,2) type-I lift graphs need e >= 4");
    g = repeat_of(2, path_atom(2));
    base_e = 4;
  } else if (f >= 3) {
    if (e < f + 2) throw std::invalid_argument("(e,f) type-I lift graphs need e >= f+2");
    const BigInt big = (BigInt(1) << static_cast<unsigned>(f + 1)) * factorial(f + 1) - f;
    if (big > std::numeric_limits<std::int64_t>::max())
      throw SizeError("type-I companion cycle too large for an explicit atom");
    g = union_of(cycle_atom(f), cycle_atom(static_cast<std::int64_t>(big)));
    base_e = f + 2;
  } else {
    throw std::invalid_argument("type-I lift graphs need f >= 2");
  }
  for (int step = 0; step < e - base_e; ++step) g = repeat_of(2, g);
  if (!check_lift_graph_I(*g, e, f).passed)
    throw ConstructionError("constructed graph failed its type-I certificate at (" +
                            std::to_string(e) + ", " + std::to_string(f) + ")");
  return g;
}

GraphExprPtr construct_lift_graph_II(int e) {
  if (e < 3) throw std::invalid_argument("type-II lift graphs need e >= 3");
  const std::int64_t m = e + 1 + v2_factorial(e);
  const BigInt block = BigInt(1) << static_cast<unsigned>(m);
  const BigInt long_path = block + (e - 1);
  if (long_path > std::numeric_limits<std::int64_t>::max())
    throw SizeError("type-II path atom too large for an explicit atom");
  GraphExprPtr g = union_of(path_atom(e - 1),
                            repeat_of(block - 1, path_atom(static_cast<std::int64_t>(long_path))));
  if (!check_lift_graph_II(*g, e).passed)
    throw ConstructionError("constructed graph failed its type-II certificate at e = " +
                            std::to_string(e));
  return g;
}

namespace {

// c_0..c_kmax of Char_{J-2A} mod 2^target through summaries.
std::vector<std::uint64_t> jm2a_of(const GraphExpr& g, int kmax, int target, int bits) {
  const ComponentSummary s = summary(g, kmax, std::max(kmax - 1, 1), bits);
  return jm2a_coeffs(s.char_coeffs, s.walks, kmax, target);
}

std::vector<std::uint64_t> jm2a_of(const TournExpr& g, int kmax, int target, int bits) {
  const TournSummary s = tourn_summary(g, kmax, std::max(kmax, 1), bits);
  std::vector<Residue> walks;
  for (int k = 0; k < kmax; ++k) walks.push_back(s.walk.coeff(k + 1));
  return jm2a_coeffs(s.char_coeffs, walks, kmax, target);
}

// The padded expression must realize the base's class tuple as a prefix:
// c_2..c_t of Char_{J-2A} mod 2^e with t = min(base order, e).
template <typename Expr>
void confirm_padding(const Expr& base, const Expr& padded, int e) {
  const BigInt base_order = order_of(base);
  const int t = base_order < e ? static_cast<int>(base_order) : e;
  const int bits = certificate_bits(e + 1);
  const auto before = jm2a_of(base, std::max(t, 1), e, bits);
  const auto after = jm2a_of(padded, std::max(t, 1), e, bits);
  for (int k = 2; k <= t; ++k)
    if (before[static_cast<std::size_t>(k)] != after[static_cast<std::size_t>(k)])
      throw ConstructionError("order padding moved the class tuple at k = " + std::to_string(k));
}

BigInt padding_count(const BigInt& current, const BigInt& target, int step_exp,
                     const char* what) {
  if (target < current)
    throw std::invalid_argument(std::string(what) + ": target order below the current order");
  const BigInt diff = target - current;
  const BigInt step = BigInt(1) << static_cast<unsigned>(step_exp);
  if (diff % step != 0)
    throw std::invalid_argument(std::string(what) + ": order difference is not a multiple of 2^" +
                                std::to_string(step_exp));
  return diff;
}

}  // namespace

GraphExprPtr pad_order(const GraphExpr& g, int e, const BigInt& target_order) {
  if (e < 2) throw std::invalid_argument("pad_order: graphs need e >= 2");
  const BigInt diff = padding_count(order_of(g), target_order, e - 2, "pad_order");
  GraphExprPtr base = std::make_shared<GraphExpr>(g);
  if (diff == 0) return base;
  GraphExprPtr padded = union_of(base, repeat_of(diff, path_atom(1)));
  confirm_padding(g, *padded, e);
  return padded;
}

TournExprPtr pad_order(const TournExpr& g, int e, const BigInt& target_order) {
  if (e < 1) throw std::invalid_argument("pad_order: tournaments need e >= 1");
  const BigInt diff = padding_count(order_of(g), target_order, e, "pad_order");
  TournExprPtr base = std::make_shared<TournExpr>(g);
  if (diff == 0) return base;
  TournExprPtr padded = join_of({base, join_pow(diff, single_vertex())});
  confirm_padding(g, *padded, e);
  return padded;
}

namespace {

struct ShiftList {
  std::vector<ShiftCheck> checks;
  bool all_ok = true;

  void add(const char* level, int k, std::uint64_t expected, std::uint64_t observed,
           int mod_exp) {
    ShiftCheck c;
    c.level = level;
    c.k = k;
    c.modulus = pow2(std::max(mod_exp, 0));
    c.expected_delta = expected & (c.modulus - 1);
    c.observed_delta = observed & (c.modulus - 1);
    c.ok = c.expected_delta == c.observed_delta;
    all_ok = all_ok && c.ok;
    checks.push_back(std::move(c));
  }
};

std::uint64_t delta(std::uint64_t after, std::uint64_t before) { return after - before; }

int required_f(std::optional<int> f, const char* kind) {
  if (!f) throw std::invalid_argument(std::string(kind) + " shift effects need the parameter f");
  return *f;
}

}  // namespace

ShiftReport verify_shift_effect(const GraphExpr& base, const GraphExpr& lifter, int e,
                                std::optional<int> f, LiftKind kind) {
  ShiftList list;
  if (kind == LiftKind::GraphI) {
    const int ff = required_f(f, "type-I graph");
    if (!check_lift_graph_I(lifter, e, ff).passed)
      throw std::invalid_argument("lifter is not an (e,f)-lift graph of type I");
    const int bits = certificate_bits(e + 1);
    GraphExprPtr combined = union_of(std::make_shared<GraphExpr>(base),
                                     std::make_shared<GraphExpr>(lifter));
    const ComponentSummary sb = summary(base, e, e, bits);
    const ComponentSummary sc = summary(*combined, e, e, bits);
    for (int k = 1; k <= e - 1; ++k)
      list.add("charA", k, k == ff ? pow2(e - ff - 1) : 0,
               (sc.char_coeffs.coeff(k) - sb.char_coeffs.coeff(k)).value(), e - k);
    for (int k = 0; k <= e; ++k)
      list.add("walks", k, 0,
               (sc.walks[static_cast<std::size_t>(k)] - sb.walks[static_cast<std::size_t>(k)]).value(),
               e - 2);
    const auto jb = jm2a_coeffs(sb.char_coeffs, sb.walks, e, e);
    const auto jc = jm2a_coeffs(sc.char_coeffs, sc.walks, e, e);
    const bool base_odd = order_of(base) % 2 != 0;
    for (int k = 3; k <= e; ++k) {
      std::uint64_t expect = 0;
      if (k == ff || (k == ff + 1 && base_odd)) expect = pow2(e - 1);
      list.add("jm2a", k, expect, delta(jc[static_cast<std::size_t>(k)], jb[static_cast<std::size_t>(k)]), e);
    }
  } else if (kind == LiftKind::GraphII) {
    if (f) throw std::invalid_argument("type-II shift effects take no parameter f");
    if (!check_lift_graph_II(lifter, e).passed)
      throw std::invalid_argument("lifter is not an e-lift graph of type II");
    const int bits = certificate_bits(e + 3);
    GraphExprPtr combined = union_of(std::make_shared<GraphExpr>(base),
                                     std::make_shared<GraphExpr>(lifter));
    const ComponentSummary sb = summary(base, e + 1, e, bits);
    const ComponentSummary sc = summary(*combined, e + 1, e, bits);
    for (int k = 1; k <= e + 1; ++k)
      list.add("charA", k, 0, (sc.char_coeffs.coeff(k) - sb.char_coeffs.coeff(k)).value(),
               e + 2 - k);
    for (int k = 0; k <= e; ++k)
      list.add("walks", k, k == e ? 2 : 0,
               (sc.walks[static_cast<std::size_t>(k)] - sb.walks[static_cast<std::size_t>(k)]).value(),
               e + 2 - k);
    const auto jb = jm2a_coeffs(sb.char_coeffs, sb.walks, e + 1, e + 2);
    const auto jc = jm2a_coeffs(sc.char_coeffs, sc.walks, e + 1, e + 2);
    for (int k = 2; k <= e + 1; ++k)
      list.add("jm2a", k, k == e + 1 ? pow2(e + 1) : 0,
               delta(jc[static_cast<std::size_t>(k)], jb[static_cast<std::size_t>(k)]), e + 2);
  } else {
    throw std::invalid_argument("graph shift effects support kinds graphI and graphII");
  }
  ShiftReport rep;
  rep.passed = list.all_ok;
  rep.checks = std::move(list.checks);
  return rep;
}

ShiftReport verify_shift_effect(const TournExpr& base, const TournExpr& lifter, int e,
                                std::optional<int> f, LiftKind kind) {
  ShiftList list;
  if (kind == LiftKind::TournI) {
    const int ff = required_f(f, "type-I tournament");
    if (ff < 4 || ff % 2 != 0 || e <= ff)
      throw std::invalid_argument("tournament type-I shift effects need even f >= 4 and e > f");
    if (!check_lift_tournament_I(lifter, e, ff).passed)
      throw std::invalid_argument("lifter is not an (e,f)-lift tournament of type I");
    const int bits = certificate_bits(e + 1);
    TournExprPtr combined = join_of({std::make_shared<TournExpr>(base),
                                     std::make_shared<TournExpr>(lifter)});
    const TournSummary sb = tourn_summary(base, e - 1, e, bits);
    const TournSummary sc = tourn_summary(*combined, e - 1, e, bits);
    for (int k = 1; k <= e - 1; ++k)
      list.add("charA", k, k == ff ? pow2(e - ff - 1) : 0,
               (sc.char_coeffs.coeff(k) - sb.char_coeffs.coeff(k)).value(), e - k);
    for (int k = 0; k <= e - 2; ++k)
      list.add("walks", k, 0, (sc.walk.coeff(k + 1) - sb.walk.coeff(k + 1)).value(), e - k);
    std::vector<Residue> wb, wc;
    for (int k = 0; k <= e - 2; ++k) {
      wb.push_back(sb.walk.coeff(k + 1));
      wc.push_back(sc.walk.coeff(k + 1));
    }
    const auto jb = jm2a_coeffs(sb.char_coeffs, wb, e - 1, e);
    const auto jc = jm2a_coeffs(sc.char_coeffs, wc, e - 1, e);
    for (int k = 2; k <= e - 1; k += 2)
      list.add("jm2a", k, k == ff ? pow2(e - 1) : 0,
               delta(jc[static_cast<std::size_t>(k)], jb[static_cast<std::size_t>(k)]), e);
  } else if (kind == LiftKind::TournII) {
    if (f) throw std::invalid_argument("type-II shift effects take no parameter f");
    if (e % 2 != 0)
      throw std::invalid_argument("tournament type-II shift effects need even e");
    if (order_of(base) % 2 != 0)
      throw std::invalid_argument("tournament type-II shift effects need an even-order base");
    if (!check_lift_tournament_II(lifter, e).passed)
      throw std::invalid_argument("lifter is not an e-lift tournament of type II");
    const int bits = certificate_bits(e + 1);
    TournExprPtr combined = join_of({std::make_shared<TournExpr>(base),
                                     std::make_shared<TournExpr>(lifter)});
    const TournSummary sb = tourn_summary(base, e, e, bits);
    const TournSummary sc = tourn_summary(*combined, e, e, bits);
    for (int k = 1; k <= e - 2; ++k)
      list.add("charA", k, 0, (sc.char_coeffs.coeff(k) - sb.char_coeffs.coeff(k)).value(), e);
    for (int k = 0; k <= e - 3; ++k)
      list.add("walks", k, 0, (sc.walk.coeff(k + 1) - sb.walk.coeff(k + 1)).value(), e);
    list.add("walks", e - 1, 1, (sc.walk.coeff(e) - sb.walk.coeff(e)).value(), 1);
    std::vector<Residue> wb, wc;
    for (int k = 0; k <= e - 1; ++k) {
      wb.push_back(sb.walk.coeff(k + 1));
      wc.push_back(sc.walk.coeff(k + 1));
    }
    const auto jb = jm2a_coeffs(sb.char_coeffs, wb, e, e);
    const auto jc = jm2a_coeffs(sc.char_coeffs, wc, e, e);
    for (int k = 2; k <= e; k += 2)
      list.add("jm2a", k, k == e ? pow2(e - 1) : 0,
               delta(jc[static_cast<std::size_t>(k)], jb[static_cast<std::size_t>(k)]), e);
  } else {
    throw std::invalid_argument("tournament shift effects support kinds tournI and tournII");
  }
  ShiftReport rep;
  rep.passed = list.all_ok;
  rep.checks = std::move(list.checks);
  return rep;
}

}  // namespace char2lift
