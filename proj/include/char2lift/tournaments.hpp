#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "char2lift/bigint.hpp"
#include "char2lift/errors.hpp"
#include "char2lift/exact_linalg.hpp"
#include "char2lift/ring.hpp"

namespace char2lift {

// Expression over tournament atoms combined with the join  G1 (+) G2, whose
// adjacency is [[A1, 0], [J, A2]] (every vertex of the second part beats
// every vertex of the first).  Atoms:
//   Tt  -- the almost-transitive tournament on t+2 vertices: transitive
//          order 0 < 1 < ... < t+1 with the arc (0, t+1) reversed;
//   V1  -- a single vertex.
// join(a,b,...) folds joins left; "N@expr" is the N-fold join power.
struct TournExpr;
using TournExprPtr = std::shared_ptr<const TournExpr>;

struct TournExpr {
  enum class Tag { AlmostTransitive, Single, Join, JoinPow };
  Tag tag;
  std::int64_t t = 0;                 // AlmostTransitive
  std::vector<TournExprPtr> parts;    // Join (>= 2 parts, left fold)
  BigInt count;                       // JoinPow (>= 1)
  TournExprPtr child;                 // JoinPow
};

TournExprPtr almost_transitive(std::int64_t t);
TournExprPtr single_vertex();
TournExprPtr join_of(std::vector<TournExprPtr> parts);
TournExprPtr join_pow(BigInt count, TournExprPtr child);

// Grammar:  expr := int '@' expr | 'join' '(' expr (',' expr)* ')'
//                 | 'T' int | 'V1' | '(' expr ')'
// Whitespace is ignored.  Throws ParseError with the offending position.
TournExprPtr parse_tourn_expr(const std::string& text);
std::string to_string(const TournExpr& g);

BigInt order_of(const TournExpr& g);

// Explicit 0/1 adjacency of the almost-transitive tournament on t+2
// vertices (arc i -> j means entry (i, j) = 1).
IntMatrix almost_transitive_adj(std::int64_t t);

// Explicit adjacency of a whole expression; refuses orders above cap.
IntMatrix tourn_adjacency(const TournExpr& g, std::int64_t cap = 100000);

// Exact coefficients of Char_{A(Tt)} = x^{t+2} - sum_{i=1}^{t} C(t,i) x^{t-i},
// top-anchored c_0..c_{t+2} (c_1 = c_2 = 0, c_k = -C(t, k-2) for k >= 3).
std::vector<BigInt> tt_charpoly(std::int64_t t);

// Walk polynomial of degree d: x^d + sum_{i=1}^{d} (1^T A^{i-1} 1) x^{d-i},
// as a truncated series (coeff k is 1^T A^{k-1} 1 for k >= 1).  It is
// multiplicative under join, which is how joins and join powers are
// evaluated without explicit matrices.
TruncSeries walk_poly(const TournExpr& g, int d, int bits);

// Structural data of a tournament expression: exact order, characteristic
// coefficients c_0..c_depth mod 2^bits (char is multiplicative under join
// because the join adjacency is block triangular) and the walk polynomial
// of degree walk_depth.
struct TournSummary {
  BigInt order;
  TruncSeries char_coeffs;
  TruncSeries walk;
};
TournSummary tourn_summary(const TournExpr& g, int depth, int walk_depth, int bits);

// The unique (a_0,...,a_{e-2}) mod 2^m with sum_t a_t t^j == 0 for
// j = 0..e-3 and == (e-2)! for j = e-2: a_i = (-1)^{e-2-i} C(e-2, i) mod 2^m,
// returned as canonical representatives in [0, 2^m).
std::vector<BigInt> solve_vandermonde_congruence(int e, int m);

// Exact interpolation of a rational-valued function of t by a polynomial of
// degree <= max_deg: fits through the first max_deg+1 sample points and
// verifies the remaining points exactly (ConstructionError on mismatch).
// coeffs[i] is the coefficient of t^i; degree() is the index of the last
// nonzero coefficient (-1 for the zero polynomial).
struct PolyFit {
  std::vector<BigRat> coeffs;
  int degree() const;
  BigRat eval(const BigInt& t) const;
};
PolyFit fit_polynomial_in_t(const std::function<BigRat(std::int64_t)>& sampler,
                            std::int64_t t_min, std::int64_t t_max, int max_deg);

// Join of join powers a_t @ Tt whose characteristic and walk power sums
// vanish to high 2-adic order:
//   p_k(Walk_{G,e}) == 0 mod 2^{e+1+v2((e+2)!)}   for k = 1..e-1, and for
//     k = e when e is even; for odd e, p_e(Walk) == -2e;
//   p_k(Char_A)     == 0                          for k = 1..e-1, and
//     p_e(Char_A) == +-e (the sign is recorded, not assumed).
// The multipliers a_t come from solve_vandermonde_congruence at a modulus
// 2^m set by the least 2-adic valuation among the interpolated coefficient
// polynomials of p_k(Char_{A(Tt)}) and p_k(Walk_{Tt,e}) for k = 1..e.
// The result is verified through the summary route before being returned.
struct PowerSumTournament {
  TournExprPtr expr;
  int m = 0;             // multiplier modulus exponent
  int modulus_exp = 0;   // e + 1 + v2((e+2)!)
  int p_e_char_sign = 0; // +1 if p_e(Char) == e, -1 if == -e (mod 2^modulus_exp)
  int p_e_walk_sign = 0; // for odd e: +-1 as p_e(Walk) == -+2e; 0 for even e
};
PowerSumTournament construct_power_sum_tournament(int e);

// (e,f)-lift tournament of type I for even f >= 4 and e >= f+1: power-sum
// construction at parameter f, then (e-f-1) doublings by 2-fold join power.
// Verified (check_lift_tournament_I) before being returned.
TournExprPtr construct_lift_tournament_I(int e, int f);

// e-lift tournament of type II for even e >= 6: power-sum construction at
// parameter e-1 (odd), whose targets become
//   p_k(Walk) == 0 (k <= e-2),  p_{e-1}(Walk) == 2(1-e),
//   p_k(Char) == 0 (k <= e-2),  p_{e-1}(Char) == +-(e-1),
// all mod 2^{e+v2((e+1)!)}.  Verified before being returned.
TournExprPtr construct_lift_tournament_II(int e);

}  // namespace char2lift
