#include "doctest.h"

#include "char2lift/exact_linalg.hpp"
#include "oracles.hpp"

using namespace char2lift;
using namespace char2lift::testing;

namespace {

IntMatrix two_p2() {
  IntMatrix a(4);
  a.set(0, 1, 1);
  a.set(1, 0, 1);
  a.set(2, 3, 1);
  a.set(3, 2, 1);
  return a;
}

IntMatrix path_adj(int n) {
  IntMatrix a(n);
  for (int i = 0; i + 1 < n; ++i) {
    a.set(i, i + 1, 1);
    a.set(i + 1, i, 1);
  }
  return a;
}

IntMatrix cycle_adj(int n) {
  IntMatrix a = path_adj(n);
  a.set(0, n - 1, 1);
  a.set(n - 1, 0, 1);
  return a;
}

// Transitive tournament on 0..t+1 with the arc (0, t+1) reversed.
IntMatrix almost_transitive_by_hand(int t) {
  IntMatrix a(t + 2);
  for (int i = 0; i < t + 2; ++i)
    for (int j = i + 1; j < t + 2; ++j) a.set(i, j, 1);
  a.set(0, t + 1, 0);
  a.set(t + 1, 0, 1);
  return a;
}

std::vector<BigInt> big(std::vector<std::int64_t> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

IntMatrix random_small_matrix(TestRng& rng, int n, std::int64_t lo, std::int64_t hi) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, rng.range(lo, hi));
  return m;
}

}  // namespace

TEST_CASE("charpoly on pinned matrices") {
  IntMatrix z(4);
  CHECK(charpoly(z) == big({1, 0, 0, 0, 0}));
  CHECK(charpoly(two_p2()) == big({1, 0, -2, 0, 1}));
  CHECK(charpoly(almost_transitive_by_hand(3)) == big({1, 0, 0, -3, -3, -1}));
}

TEST_CASE("charpoly agrees with cofactor and trace-recurrence oracles") {
  TestRng rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng.below(4)) + 1;
    auto m = random_small_matrix(rng, n, -1, 1);
    const auto c = charpoly(m);
    CHECK(c == cofactor_charpoly(m));
    CHECK(c == faddeev_leverrier_charpoly(m));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(2));
    auto m = random_small_matrix(rng, n, -3, 3);
    const auto c = charpoly(m);
    CHECK(c == cofactor_charpoly(m));
    CHECK(c == faddeev_leverrier_charpoly(m));
  }
}

TEST_CASE("charpoly_mod is the exact charpoly reduced") {
  TestRng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.below(6)) + 1;
    const int bits = static_cast<int>(rng.below(kMaxWordBits)) + 1;
    auto m = random_small_matrix(rng, n, -4, 4);
    const auto exact = charpoly(m);
    const auto mod = charpoly_mod(m, bits);
    REQUIRE(mod.size() == exact.size());
    for (std::size_t k = 0; k < mod.size(); ++k)
      CHECK(mod[k] == Residue::from_int(exact[k], bits).value());
  }
}

TEST_CASE("power sums from coefficients") {
  // (x-1)(x-2) = x^2 - 3x + 2
  CHECK(power_sums_from_coeffs(big({1, -3, 2}), 2) == big({3, 5}));
  CHECK(power_sums_from_coeffs(big({1, 0, 0, 0}), 3) == big({0, 0, 0}));
  auto p = power_sums_from_coeffs(big({1, 0, 0, -3, -3, -1}), 3);
  CHECK(p == big({0, 0, 9}));
  // trace oracle: p_3 = tr(A(T_3)^3)
  CHECK(trace_power(almost_transitive_by_hand(3), 3) == 9);
}

TEST_CASE("coeffs from power sums and the round trip") {
  CHECK(coeffs_from_power_sums(big({3, 5}), 2) == big({1, -3, 2}));
  CHECK(coeffs_from_power_sums(big({0, 0, 0}), 3) == big({1, 0, 0, 0}));
  auto p = power_sums_from_coeffs(big({1, 0, 0, -3, -3, -1}), 5);
  CHECK(coeffs_from_power_sums(p, 5) == big({1, 0, 0, -3, -3, -1}));
  CHECK_THROWS_AS(coeffs_from_power_sums(big({1, 0}), 2), ExactnessError);

  TestRng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int deg = static_cast<int>(rng.below(12)) + 1;
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    c[0] = 1;
    for (int k = 1; k <= deg; ++k) c[static_cast<std::size_t>(k)] = rng.range(-30, 30);
    CHECK(coeffs_from_power_sums(power_sums_from_coeffs(c, deg), deg) == c);
  }
}

TEST_CASE("power sums are additive over products of characteristic polynomials") {
  TestRng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int na = static_cast<int>(rng.below(4)) + 1;
    const int nb = static_cast<int>(rng.below(4)) + 1;
    auto a = random_small_matrix(rng, na, -2, 2);
    auto b = random_small_matrix(rng, nb, -2, 2);
    const auto ca = charpoly(a), cb = charpoly(b);
    PolyZ pa(ca.rbegin(), ca.rend()), pb(cb.rbegin(), cb.rend());
    auto prod = poly_mul(pa, pb);
    std::vector<BigInt> cprod(prod.rbegin(), prod.rend());
    const int kmax = 8;
    auto sums = power_sums_from_coeffs(cprod, kmax);
    auto sa = power_sums_from_coeffs(ca, kmax);
    auto sb = power_sums_from_coeffs(cb, kmax);
    for (int k = 0; k < kmax; ++k)
      CHECK(sums[static_cast<std::size_t>(k)] ==
            sa[static_cast<std::size_t>(k)] + sb[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("modular power sums match exact power sums reduced") {
  TestRng rng(40);
  for (int trial = 0; trial < 50; ++trial) {
    const int bits = static_cast<int>(rng.below(40)) + 8;
    std::vector<BigInt> c{1};
    std::vector<std::uint64_t> cm{1};
    for (int k = 1; k <= 8; ++k) {
      BigInt v = rng.range(-1000, 1000);
      c.push_back(v);
      cm.push_back(Residue::from_int(v, bits).value());
    }
    auto pe = power_sums_from_coeffs(c, 8);
    auto pm = power_sums_from_coeffs_mod(cm, 8, bits);
    for (int k = 0; k < 8; ++k)
      CHECK(pm[static_cast<std::size_t>(k)] ==
            Residue::from_int(pe[static_cast<std::size_t>(k)], bits).value());
  }
}

TEST_CASE("walk counts by vector iteration") {
  for (int k = 0; k <= 6; ++k) CHECK(walk_count(two_p2(), k) == 4);
  CHECK(walk_count(path_adj(3), 2) == 6);
  CHECK(walk_count(cycle_adj(3), 2) == 12);
  CHECK(walk_count(cycle_adj(5), 3) == 40);  // 2-regular: n 2^k
}

TEST_CASE("walk counts of undirected graphs are even for k >= 1") {
  TestRng rng(61);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng.below(10)) + 1;
    auto a = random_graph_adjacency(n, rng);
    for (int k = 1; k <= 10; ++k) CHECK(walk_count(a, k) % 2 == 0);
  }
}

TEST_CASE("jm2a_coeffs on rank-one and pinned union inputs") {
  const int bits = 8, e = 4;
  SUBCASE("zero adjacency gives Char_J") {
    const int n = 5;
    auto char_a = TruncSeries::monic(4, bits);
    std::vector<Residue> walks{Residue(n, bits), Residue::zero(bits), Residue::zero(bits),
                               Residue::zero(bits)};
    auto c = jm2a_coeffs(char_a, walks, 4, e);
    CHECK(c == std::vector<std::uint64_t>{1, Residue::from_int(-n, e).value(), 0, 0, 0});
  }
  SUBCASE("P2 + P1 hits c_3 = 4 mod 8") {
    // Char_A = x^3 - x: (1, 0, -1, 0); walks 3, 2, 2.
    TruncSeries char_a = TruncSeries::monic(3, bits);
    char_a.set_coeff(2, Residue::from_int(-1, bits));
    std::vector<Residue> walks{Residue(3, bits), Residue(2, bits), Residue(2, bits)};
    auto c = jm2a_coeffs(char_a, walks, 3, 3);
    CHECK(c[2] == 0);
    CHECK(c[3] == 4);
    CHECK(c[1] == Residue::from_int(-3, 3).value());
  }
  SUBCASE("P3 + P1 hits c_3 = 8 mod 16") {
    // Char_A = x^4 - 2x^2: (1, 0, -2, 0, 0); walks 4, 4, 6, 8.
    TruncSeries char_a = TruncSeries::monic(4, bits);
    char_a.set_coeff(2, Residue::from_int(-2, bits));
    std::vector<Residue> walks{Residue(4, bits), Residue(4, bits), Residue(6, bits),
                               Residue(8, bits)};
    auto c = jm2a_coeffs(char_a, walks, 4, 4);
    CHECK(c[3] == 8);
  }
  SUBCASE("narrow working modulus is rejected") {
    auto char_a = TruncSeries::monic(4, 4);
    std::vector<Residue> walks(4, Residue::zero(4));
    CHECK_THROWS_AS(jm2a_coeffs(char_a, walks, 4, 4), ExactnessError);
  }
}

TEST_CASE("jm2a_coeffs equals the explicit J-2A characteristic polynomial") {
  TestRng rng(123);
  const int bits = 12, e = 6;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.below(7)) + 6;  // keep n >= e
    auto a = random_graph_adjacency(n, rng);
    TruncSeries char_a(e, bits);
    auto exact = charpoly(a);
    for (int k = 0; k <= e; ++k)
      char_a.set_coeff(k, Residue::from_int(exact[static_cast<std::size_t>(k)], bits));
    std::vector<Residue> walks;
    for (int k = 0; k < e; ++k) walks.push_back(Residue::from_int(walk_count(a, k), bits));
    auto got = jm2a_coeffs(char_a, walks, e, e);
    auto want = charpoly(jm2a_matrix(a));
    for (int k = 0; k <= e; ++k)
      CHECK(got[static_cast<std::size_t>(k)] ==
            Residue::from_int(want[static_cast<std::size_t>(k)], e).value());
  }
}

TEST_CASE("ptoe divisibility transfer") {
  const std::vector<BigInt> t3 = big({1, 0, 0, -3, -3, -1});
  SUBCASE("holds for the almost-transitive charpoly") {
    // p = (0, 0, 9, 12, ...): hypothesis holds mod 4 with n = 3.
    auto rep = ptoe_verify(t3, 2, 3);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.passed);
    CHECK(rep.checks.size() == 4);  // k = 1, 2, 4 plus the k = n congruence
  }
  SUBCASE("monomial passes for any m, n") {
    auto rep = ptoe_verify(big({1, 0, 0, 0, 0, 0, 0}), 5, 4);
    CHECK(rep.passed);
  }
  SUBCASE("hypothesis violation is flagged separately") {
    auto rep = ptoe_verify(big({1, -1, 0, 0, 0, 0}), 3, 3);  // p_1 = 1
    CHECK_FALSE(rep.hypothesis_ok);
    CHECK_FALSE(rep.passed);
  }
  SUBCASE("fuzzed inconsistent coefficients report the violating k") {
    // Genuine power sums of x^5-3x^2-3x-1 against corrupted coefficients.
    auto p = power_sums_from_coeffs(t3, 4);
    auto bad = t3;
    bad[1] = 2;  // now 2^{m-v2(1!)} = 4 does not divide c_1
    auto rep = ptoe_verify(p, bad, 2, 3);
    CHECK(rep.hypothesis_ok);
    CHECK_FALSE(rep.passed);
    bool found = false;
    for (const auto& chk : rep.checks)
      if (!chk.ok && chk.k == 1) found = true;
    CHECK(found);
  }
}

TEST_CASE("self-converse walk congruence") {
  CHECK(burnside_check(cycle_adj(3), 3).passed);
  {
    auto rep = burnside_check(cycle_adj(4), 4);
    CHECK(rep.lhs == 40);  // 2*0 + 8 + 32
    CHECK(rep.rhs == -32);
    CHECK(rep.passed);
  }
  IntMatrix edgeless(6);
  for (int n = 3; n <= 8; ++n) CHECK(burnside_check(edgeless, n).passed);
  CHECK_THROWS_AS(burnside_check(edgeless, 2), std::invalid_argument);

  TestRng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng.below(9)) + 1;
    auto a = random_graph_adjacency(n, rng);
    const int walk_len = static_cast<int>(rng.below(10)) + 3;
    CHECK(burnside_check(a, walk_len).passed);
  }
}
