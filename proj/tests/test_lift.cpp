#include "doctest.h"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "char2lift/exact_linalg.hpp"
#include "char2lift/graphs.hpp"
#include "char2lift/lift.hpp"
#include "char2lift/tournaments.hpp"
#include "oracles.hpp"

using namespace char2lift;
using namespace char2lift::testing;

namespace {

// c_2..c_{min(n,e)} of Char_{J-2A} mod 2^e: the class tuple of the expression.
std::vector<std::uint64_t> class_tuple(const GraphExpr& g, int e) {
  const ComponentSummary s = summary(g, e, e, e + 3);
  const auto c = jm2a_coeffs(s.char_coeffs, s.walks, e, e);
  const BigInt n = order_of(g);
  const int top = n < e ? static_cast<int>(n) : e;
  return std::vector<std::uint64_t>(c.begin() + 2, c.begin() + top + 1);
}

std::vector<std::uint64_t> class_tuple(const TournExpr& g, int e) {
  const TournSummary s = tourn_summary(g, e, e, e + 3);
  std::vector<Residue> walks;
  for (int k = 0; k < e; ++k) walks.push_back(s.walk.coeff(k + 1));
  const auto c = jm2a_coeffs(s.char_coeffs, walks, e, e);
  const BigInt n = order_of(g);
  const int top = n < e ? static_cast<int>(n) : e;
  return std::vector<std::uint64_t>(c.begin() + 2, c.begin() + top + 1);
}

const LiftCheck* find_check(const LiftCertificate& cert, const char* cond, int k) {
  for (const auto& c : cert.checks)
    if (c.cond == cond && c.k == k) return &c;
  return nullptr;
}

const ShiftCheck* find_shift(const ShiftReport& rep, const char* level, int k) {
  for (const auto& c : rep.checks)
    if (c.level == level && c.k == k) return &c;
  return nullptr;
}

// Each (condition, k) pair must appear exactly once in a certificate.
void check_no_duplicate_conditions(const LiftCertificate& cert) {
  for (std::size_t i = 0; i < cert.checks.size(); ++i)
    for (std::size_t j = i + 1; j < cert.checks.size(); ++j)
      CHECK((cert.checks[i].cond != cert.checks[j].cond ||
             cert.checks[i].k != cert.checks[j].k));
}

GraphExprPtr random_graph(TestRng& rng, int budget) {
  const std::uint64_t kind = rng.below(budget > 6 ? 5 : 3);
  switch (kind) {
    case 0:
      return path_atom(rng.range(1, 7));
    case 1:
      return cycle_atom(rng.range(3, 7));
    case 2:
      return dpath_atom(rng.range(1, 5));
    case 3:
      return union_of(random_graph(rng, budget / 2), random_graph(rng, budget / 2));
    default:
      return repeat_of(BigInt(rng.range(1, 3)), random_graph(rng, budget / 3));
  }
}

GraphExprPtr random_small_graph(TestRng& rng) {
  for (;;) {
    auto g = random_graph(rng, 20);
    if (order_of(*g) <= 20) return g;
  }
}

TournExprPtr random_texpr(TestRng& rng, int budget) {
  const std::uint64_t kind = rng.below(budget > 6 ? 4 : 2);
  switch (kind) {
    case 0:
      return almost_transitive(rng.range(0, 4));
    case 1:
      return single_vertex();
    case 2: {
      std::vector<TournExprPtr> parts{random_texpr(rng, budget / 2),
                                      random_texpr(rng, budget / 2)};
      return join_of(std::move(parts));
    }
    default:
      return join_pow(BigInt(rng.range(1, 3)), random_texpr(rng, budget / 2));
  }
}

TournExprPtr random_small_texpr(TestRng& rng, std::int64_t max_order, bool even_order) {
  for (;;) {
    auto g = random_texpr(rng, 16);
    const BigInt n = order_of(*g);
    if (n <= max_order && (!even_order || n % 2 == 0)) return g;
  }
}

}  // namespace

TEST_CASE("type-I graph certificates match the worked examples") {
  const LiftCertificate pass = check_lift_graph_I(*parse_graph_expr("2*P2"), 4, 2);
  CHECK(pass.kind == LiftKind::GraphI);
  CHECK(pass.e == 4);
  CHECK(pass.f == 2);
  CHECK(pass.passed);
  CHECK(pass.checks.size() == 8);  // L1a k=0..4, L1b k=1..3
  check_no_duplicate_conditions(pass);
  const LiftCheck* cf = find_check(pass, "L1b", 2);
  REQUIRE(cf != nullptr);
  CHECK(cf->expected == 2);  // 2^{e-f-1}
  CHECK(cf->observed == 2);  // c_2((x^2-1)^2) = -2 == 2 mod 4
  CHECK(cf->modulus == 4);

  const LiftCertificate fail = check_lift_graph_I(*parse_graph_expr("P2"), 4, 2);
  CHECK(!fail.passed);
  const LiftCheck* bad = find_check(fail, "L1a", 0);
  REQUIRE(bad != nullptr);
  CHECK(!bad->ok);
  CHECK(bad->expected == 0);
  CHECK(bad->observed == 2);  // order 2 is not divisible by 2^{e-2} = 4
  CHECK(bad->modulus == 4);

  CHECK(check_lift_graph_I(*parse_graph_expr("C3+C381"), 5, 3).passed);

  CHECK_THROWS_AS(check_lift_graph_I(*parse_graph_expr("P2"), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_lift_graph_I(*parse_graph_expr("P2"), 4, 4), std::invalid_argument);
}

TEST_CASE("type-II graph certificates match the worked examples") {
  const LiftCertificate pass = check_lift_graph_II(*parse_graph_expr("P2+31*P34"), 3);
  CHECK(pass.kind == LiftKind::GraphII);
  CHECK(pass.e == 3);
  CHECK(!pass.f.has_value());
  CHECK(pass.passed);
  CHECK(pass.checks.size() == 8);  // L2a k=0..3, L2b k=1..4
  check_no_duplicate_conditions(pass);
  const LiftCheck* we = find_check(pass, "L2a", 3);
  REQUIRE(we != nullptr);
  CHECK(we->expected == 2);  // the walk count at k=e must be exactly 2 mod 4
  CHECK(we->modulus == 4);

  CHECK(!check_lift_graph_II(*parse_graph_expr("P2"), 3).passed);

  const GraphExprPtr four = construct_lift_graph_II(4);
  CHECK(to_string(*four) == "P3+255*P259");
  CHECK(check_lift_graph_II(*four, 4).passed);
}

TEST_CASE("type-I tournament certificates match the worked examples") {
  const TournExprPtr base = construct_lift_tournament_I(5, 4);
  const LiftCertificate pass = check_lift_tournament_I(*base, 5, 4);
  CHECK(pass.kind == LiftKind::TournI);
  CHECK(pass.passed);
  CHECK(pass.checks.size() == 9);  // LT1a k=0..4, LT1b k=1..4
  check_no_duplicate_conditions(pass);
  const LiftCheck* cf = find_check(pass, "LT1b", 4);
  REQUIRE(cf != nullptr);
  CHECK(cf->expected == 1);  // 2^{e-f-1} = 1 mod 2^{e-f} = 2
  CHECK(cf->modulus == 2);

  CHECK(check_lift_tournament_I(*join_pow(2, base), 6, 4).passed);

  const LiftCertificate fail = check_lift_tournament_I(*parse_tourn_expr("T3"), 5, 4);
  CHECK(!fail.passed);
  const LiftCheck* bad = find_check(fail, "LT1a", 0);
  REQUIRE(bad != nullptr);
  CHECK(!bad->ok);
  CHECK(bad->observed == 5);  // odd order violates the k=0 divisibility outright
  CHECK(bad->modulus == 32);

  CHECK_THROWS_AS(check_lift_tournament_I(*parse_tourn_expr("T3"), 4, 4),
                  std::invalid_argument);
}

TEST_CASE("type-II tournament certificates match the worked examples") {
  const TournExprPtr six = construct_lift_tournament_II(6);
  const LiftCertificate pass = check_lift_tournament_II(*six, 6);
  CHECK(pass.kind == LiftKind::TournII);
  CHECK(pass.passed);
  CHECK(pass.checks.size() == 10);  // LT2a k=0..3, LT2b twice, LT2c k=1..4
  check_no_duplicate_conditions(pass);
  const LiftCheck* par = find_check(pass, "LT2b", 5);
  REQUIRE(par != nullptr);
  CHECK(par->expected == 1);  // 1^T A^{e-1} 1 must be odd
  CHECK(par->modulus == 2);

  const LiftCertificate fail = check_lift_tournament_II(*parse_tourn_expr("T0"), 6);
  CHECK(!fail.passed);
  const LiftCheck* bad = find_check(fail, "LT2a", 0);
  REQUIRE(bad != nullptr);
  CHECK(bad->observed == 2);  // order 2 is not divisible by 2^6
  CHECK(bad->modulus == 64);

  CHECK(check_lift_tournament_II(*construct_lift_tournament_II(8), 8).passed);

  CHECK_THROWS_AS(check_lift_tournament_II(*parse_tourn_expr("T0"), 1),
                  std::invalid_argument);
}

TEST_CASE("certificates serialize to the pinned JSON shape") {
  const LiftCertificate gi = check_lift_graph_I(*parse_graph_expr("2*P2"), 4, 2);
  const std::string text = gi.to_json();
  CHECK(text.rfind("{\"kind\":", 0) == 0);  // field order is part of the format
  const auto j = nlohmann::json::parse(text);
  CHECK(j["kind"] == "graphI");
  CHECK(j["e"] == 4);
  CHECK(j["f"] == 2);
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].is_array());
  CHECK(j["checks"].size() == gi.checks.size());
  const auto& c0 = j["checks"][0];
  CHECK(c0.contains("cond"));
  CHECK(c0.contains("k"));
  CHECK(c0.contains("expected"));
  CHECK(c0.contains("observed"));
  CHECK(c0.contains("modulus"));
  CHECK(!c0.contains("ok"));

  const auto j2 = nlohmann::json::parse(check_lift_graph_II(*parse_graph_expr("P2"), 3).to_json());
  CHECK(j2["kind"] == "graphII");
  CHECK(!j2.contains("f"));
  CHECK(j2["passed"] == false);

  const auto jt =
      nlohmann::json::parse(check_lift_tournament_I(*parse_tourn_expr("T3"), 5, 4).to_json());
  CHECK(jt["kind"] == "tournI");
  CHECK(jt["f"] == 4);
  const auto jt2 =
      nlohmann::json::parse(check_lift_tournament_II(*parse_tourn_expr("T0"), 6).to_json());
  CHECK(jt2["kind"] == "tournII");
}

TEST_CASE("constructed lift graphs match their closed forms") {
  CHECK(to_string(*construct_lift_graph_I(4, 2)) == "2*P2");
  CHECK(to_string(*construct_lift_graph_I(5, 2)) == "2*2*P2");
  CHECK(to_string(*construct_lift_graph_I(5, 3)) == "C3+C381");
  CHECK(to_string(*construct_lift_graph_I(6, 3)) == "2*(C3+C381)");
  CHECK(to_string(*construct_lift_graph_II(3)) == "P2+31*P34");
  CHECK(to_string(*construct_lift_graph_II(5)) == "P4+511*P516");

  CHECK_THROWS_AS(construct_lift_graph_I(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(construct_lift_graph_I(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(construct_lift_graph_I(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_lift_graph_II(2), std::invalid_argument);
}

TEST_CASE("doubling preserves type-I certificates") {
  const GraphExprPtr g42 = construct_lift_graph_I(4, 2);
  CHECK(check_lift_graph_I(*repeat_of(2, g42), 5, 2).passed);
  const GraphExprPtr g53 = construct_lift_graph_I(5, 3);
  CHECK(check_lift_graph_I(*repeat_of(2, g53), 6, 3).passed);

  const TournExprPtr t54 = construct_lift_tournament_I(5, 4);
  CHECK(check_lift_tournament_I(*join_pow(2, t54), 6, 4).passed);
}

TEST_CASE("order padding preserves the class tuple") {
  const GraphExprPtr base = parse_graph_expr("P2+P1");
  const std::vector<std::uint64_t> before = class_tuple(*base, 3);
  CHECK(before == std::vector<std::uint64_t>{0, 4});

  const GraphExprPtr padded = pad_order(*base, 3, 5);
  CHECK(order_of(*padded) == 5);
  CHECK(to_string(*padded) == "P2+P1+2*P1");
  CHECK(class_tuple(*padded, 3) == before);

  CHECK(to_string(*pad_order(*base, 3, 3)) == "P2+P1");

  CHECK_THROWS_AS(pad_order(*base, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(pad_order(*base, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(pad_order(*base, 4, 8), std::invalid_argument);  // step 4, diff 5

  const TournExprPtr t1 = parse_tourn_expr("T1");
  const std::vector<std::uint64_t> tup = class_tuple(*t1, 3);
  CHECK(tup == std::vector<std::uint64_t>{6, 4});
  const TournExprPtr tp = pad_order(*t1, 3, 11);
  CHECK(to_string(*tp) == "join(T1,8@V1)");
  CHECK(class_tuple(*tp, 3) == tup);
  CHECK_THROWS_AS(pad_order(*t1, 3, 7), std::invalid_argument);
}

TEST_CASE("the worked union example shifts exactly one coefficient") {
  const GraphExprPtr base = parse_graph_expr("3*P1");
  const GraphExprPtr lifter = parse_graph_expr("2*P2");
  const ShiftReport rep = verify_shift_effect(*base, *lifter, 4, 2, LiftKind::GraphI);
  CHECK(rep.passed);

  // Against the odd-order base only c_3(Char_{J-2A}) moves, and by 2^{e-1}.
  const ShiftCheck* j3 = find_shift(rep, "jm2a", 3);
  REQUIRE(j3 != nullptr);
  CHECK(j3->observed_delta == 8);
  CHECK(j3->modulus == 16);
  const ShiftCheck* j4 = find_shift(rep, "jm2a", 4);
  REQUIRE(j4 != nullptr);
  CHECK(j4->observed_delta == 0);
  CHECK(find_shift(rep, "jm2a", 2) == nullptr);

  // At the Char_A level the shift sits at k=f and equals 2^{e-f-1}.
  const ShiftCheck* c2 = find_shift(rep, "charA", 2);
  REQUIRE(c2 != nullptr);
  CHECK(c2->expected_delta == 2);
  CHECK(c2->observed_delta == 2);
  CHECK(c2->modulus == 4);

  for (const auto& c : rep.checks)
    if (c.level == "walks") CHECK(c.observed_delta == 0);
}

TEST_CASE("shift effects hold for random bases of every kind") {
  TestRng rng(90210);

  const GraphExprPtr g42 = construct_lift_graph_I(4, 2);
  const GraphExprPtr g52 = construct_lift_graph_I(5, 2);
  const GraphExprPtr g53 = construct_lift_graph_I(5, 3);
  for (int trial = 0; trial < 50; ++trial) {
    auto base = random_small_graph(rng);
    CHECK(verify_shift_effect(*base, *g42, 4, 2, LiftKind::GraphI).passed);
    if (trial < 25) CHECK(verify_shift_effect(*base, *g52, 5, 2, LiftKind::GraphI).passed);
    if (trial >= 25) CHECK(verify_shift_effect(*base, *g53, 5, 3, LiftKind::GraphI).passed);
  }

  const GraphExprPtr h4 = construct_lift_graph_II(4);
  const GraphExprPtr h5 = construct_lift_graph_II(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto base = random_small_graph(rng);
    CHECK(verify_shift_effect(*base, *h4, 4, std::nullopt, LiftKind::GraphII).passed);
    CHECK(verify_shift_effect(*base, *h5, 5, std::nullopt, LiftKind::GraphII).passed);
  }

  const TournExprPtr t54 = construct_lift_tournament_I(5, 4);
  for (int trial = 0; trial < 100; ++trial) {
    auto base = random_small_texpr(rng, 14, false);
    CHECK(verify_shift_effect(*base, *t54, 5, 4, LiftKind::TournI).passed);
  }

  const TournExprPtr t6 = construct_lift_tournament_II(6);
  for (int trial = 0; trial < 100; ++trial) {
    auto base = random_small_texpr(rng, 14, true);
    CHECK(verify_shift_effect(*base, *t6, 6, std::nullopt, LiftKind::TournII).passed);
  }
}

TEST_CASE("shift effect guards reject unfit inputs") {
  const GraphExprPtr base = parse_graph_expr("3*P1");
  CHECK_THROWS_AS(verify_shift_effect(*base, *parse_graph_expr("P2"), 4, 2, LiftKind::GraphI),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      verify_shift_effect(*base, *parse_graph_expr("2*P2"), 4, std::nullopt, LiftKind::GraphI),
      std::invalid_argument);
  CHECK_THROWS_AS(
      verify_shift_effect(*base, *parse_graph_expr("2*P2"), 4, 2, LiftKind::TournI),
      std::invalid_argument);
  CHECK_THROWS_AS(
      verify_shift_effect(*base, *construct_lift_graph_II(4), 4, 2, LiftKind::GraphII),
      std::invalid_argument);

  const TournExprPtr tbase = parse_tourn_expr("T2");  // order 4
  CHECK_THROWS_AS(
      verify_shift_effect(*tbase, *parse_tourn_expr("T3"), 5, 4, LiftKind::TournI),
      std::invalid_argument);
  CHECK_THROWS_AS(verify_shift_effect(*tbase, *construct_lift_tournament_I(5, 4), 5, 3,
                                      LiftKind::TournI),
                  std::invalid_argument);
  // Type-II tournament shifts require an even-order base.
  const TournExprPtr odd = parse_tourn_expr("T1");
  CHECK_THROWS_AS(verify_shift_effect(*odd, *construct_lift_tournament_II(6), 6, std::nullopt,
                                      LiftKind::TournII),
                  std::invalid_argument);
}
