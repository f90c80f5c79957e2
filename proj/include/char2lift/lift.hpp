#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "char2lift/bigint.hpp"
#include "char2lift/graphs.hpp"
#include "char2lift/tournaments.hpp"

namespace char2lift {

enum class LiftKind { GraphI, GraphII, TournI, TournII };
std::string to_string(LiftKind kind);

// One verified congruence: `cond` names the defining condition, k the index
// it applies to, and observed/expected are residues mod `modulus`.
struct LiftCheck {
  std::string cond;
  int k = 0;
  std::uint64_t expected = 0;
  std::uint64_t observed = 0;
  std::uint64_t modulus = 0;
  bool ok = false;
};

// Certificate listing every condition of the relevant definition, one entry
// per applicable k, no short-circuiting.
struct LiftCertificate {
  LiftKind kind = LiftKind::GraphI;
  int e = 0;
  std::optional<int> f;
  bool passed = false;
  std::vector<LiftCheck> checks;

  std::string to_json() const;
};

// Walk-count horizon for the type-I graph walk condition, which quantifies
// over all k: verified for k = 0..e.
inline constexpr int kGraphWalkHorizonSlack = 0;  // horizon = e + slack

// (e,f)-lift graph of type I, 2 <= f <= e-2:
//   (L1a) 2^{e-2} | 1^T A^k 1            for k = 0..e (horizon above);
//   (L1b) c_k(Char_A) == 0 (k != f) resp. 2^{e-f-1} (k = f)  mod 2^{e-k},
//         for k = 1..e-1.
LiftCertificate check_lift_graph_I(const GraphExpr& g, int e, int f);

// e-lift graph of type II:
//   (L2a) 1^T A^k 1 == 0 (k != e) resp. 2 (k = e)  mod 2^{e+2-k}, k = 0..e;
//   (L2b) c_k(Char_A) == 0 mod 2^{e+2-k}, k = 1..e+1.
LiftCertificate check_lift_graph_II(const GraphExpr& g, int e);

// (e,f)-lift tournament of type I:
//   (LT1a) 2^{e-k} | 1^T A^k 1, k = 0..e-1;
//   (LT1b) c_k(Char_A) == 0 (k != f) resp. 2^{e-f-1} (k = f)  mod 2^{e-k},
//          k = 1..e-1.
LiftCertificate check_lift_tournament_I(const TournExpr& g, int e, int f);

// e-lift tournament of type II (e even):
//   (LT2a) 2^e | 1^T A^k 1, k = 0..e-3;
//   (LT2b) 1^T A^{e-2} 1 == 2 mod 4  and  1^T A^{e-1} 1 == 1 mod 2;
//   (LT2c) 2^e | c_k(Char_A), k = 1..e-2.
LiftCertificate check_lift_tournament_II(const TournExpr& g, int e);

// (e,f)-lift graph of type I, for (f = 2, e >= 4) or (3 <= f, e >= f+2):
// base 2*P2 (f = 2, e = 4) or C_f + C_{2^{f+1}(f+1)! - f} (f >= 3,
// e = f+2), then doubled (2*...) up to e.  Verified before being returned.
GraphExprPtr construct_lift_graph_I(int e, int f);

// e-lift graph of type II for e >= 3:  P_{e-1} + (2^m - 1)*P_{e-1+2^m} with
// m = e + 1 + v2(e!).  Verified before being returned.
GraphExprPtr construct_lift_graph_II(int e);

// Padding that preserves the congruence class tuple mod 2^e while raising
// the order to target_order: isolated vertices for graphs (step 2^{e-2}),
// a transitive tournament joined on the right for tournaments (step 2^e).
// target_order must exceed the current order by a multiple of the step.
// The preservation is re-verified by recomputing both tuples.
GraphExprPtr pad_order(const GraphExpr& g, int e, const BigInt& target_order);
TournExprPtr pad_order(const TournExpr& g, int e, const BigInt& target_order);

// One compared coefficient of the shift-effect report.
struct ShiftCheck {
  std::string level;  // "charA", "walks" or "jm2a"
  int k = 0;
  std::uint64_t expected_delta = 0;
  std::uint64_t observed_delta = 0;
  std::uint64_t modulus = 0;
  bool ok = false;
};

struct ShiftReport {
  bool passed = false;
  std::vector<ShiftCheck> checks;
  std::string to_json() const;
};

// Verifies the effect of unioning (graphs) / joining (tournaments) a
// certified lifter onto a base.  The lifter is re-certified first (throws
// std::invalid_argument if it is not a lifter of the given kind); shift
// mismatches are report entries, never exceptions.  Compared levels:
//  - graph type I (f < e): Char_A moves only at k = f, by 2^{e-f-1}, over
//    k = 1..e-1 mod 2^{e-k}; walk counts are preserved mod 2^{e-2} for
//    k = 0..e; the J-2A coefficients mod 2^e over k = 3..e move only at
//    k = f (by 2^{e-1}) plus, when the base order is odd, at k = f+1
//    (also by 2^{e-1}).  k = 2 is outside every provable range and is
//    not compared.
//  - graph type II: Char_A preserved over k = 1..e+1 mod 2^{e+2-k}; walk
//    counts move only at k = e, by 2, over k = 0..e mod 2^{e+2-k}; the
//    J-2A coefficients mod 2^{e+2} over k = 2..e+1 move only at k = e+1
//    (by 2^{e+1}).
//  - tournament type I (f >= 4 even, e > f): Char_A moves only at k = f,
//    by 2^{e-f-1}, over k = 1..e-1 mod 2^{e-k}; walk counts preserved at
//    k = 0..e-2 mod 2^{e-k}; even-index J-2A coefficients mod 2^e over
//    k = 2..e-1 move only at k = f (by 2^{e-1}).
//  - tournament type II (e even, base order even): Char_A preserved over
//    k = 1..e-2 mod 2^e; walk counts preserved at k = 0..e-3 mod 2^e while
//    the count at k = e-1 flips parity; even-index J-2A coefficients
//    mod 2^e over k = 2..e move only at k = e (by 2^{e-1}).
ShiftReport verify_shift_effect(const GraphExpr& base, const GraphExpr& lifter, int e,
                                std::optional<int> f, LiftKind kind);
ShiftReport verify_shift_effect(const TournExpr& base, const TournExpr& lifter, int e,
                                std::optional<int> f, LiftKind kind);

}  // namespace char2lift
