#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "char2lift/bigint.hpp"
#include "char2lift/errors.hpp"
#include "char2lift/exact_linalg.hpp"
#include "char2lift/ring.hpp"

namespace char2lift {

// Expression over graph atoms: paths P_n (n>=1), cycles C_n (n>=3) and
// directed paths DP_n (n>=0, every edge oriented the same way).  "+" is
// disjoint union, "d*expr" repeats an expression d times (d can be huge).
// Vertices are 0-based everywhere explicit adjacency is produced.
struct GraphExpr;
using GraphExprPtr = std::shared_ptr<const GraphExpr>;

struct GraphExpr {
  enum class Tag { Path, Cycle, DirectedPath, Union, Repeat };
  Tag tag;
  std::int64_t atom_order = 0;  // atoms only
  GraphExprPtr left, right;     // Union
  BigInt count;                 // Repeat
  GraphExprPtr child;           // Repeat
};

GraphExprPtr path_atom(std::int64_t n);
GraphExprPtr cycle_atom(std::int64_t n);
GraphExprPtr dpath_atom(std::int64_t n);
GraphExprPtr union_of(GraphExprPtr a, GraphExprPtr b);
GraphExprPtr repeat_of(BigInt count, GraphExprPtr child);

// Grammar:  expr := term ('+' term)* ; term := int '*' term | atom | '(' expr ')'
//           atom := 'P' int | 'C' int | 'DP' int
// Whitespace is ignored.  Throws ParseError with the offending position.
GraphExprPtr parse_graph_expr(const std::string& text);
// Canonical form; parse_graph_expr(to_string(g)) reproduces g.
std::string to_string(const GraphExpr& g);

BigInt order_of(const GraphExpr& g);
// True when no directed-path atom occurs (adjacency is symmetric).
bool is_undirected(const GraphExpr& g);

// Explicit 0/1 adjacency; refuses orders above cap.
IntMatrix adjacency(const GraphExpr& g, std::int64_t cap = 100000);

// Structural data of a (possibly astronomically large) disjoint union:
// exact order, c_0..c_depth of the characteristic polynomial mod 2^bits and
// walk counts 1^T A^k 1 for k = 0..walk_kmax mod 2^bits.  Characteristic
// data comes from the three-term path/cycle recurrence plus truncated
// products, never from explicit matrices; walk counts come from per-atom
// closed forms or single-component vector iteration.
struct ComponentSummary {
  BigInt order;
  TruncSeries char_coeffs;
  std::vector<Residue> walks;
};
ComponentSummary summary(const GraphExpr& g, int depth, int walk_kmax, int bits);

// tr(A(C_n)^k) in closed form: a closed k-walk on the cycle has net winding
// w, so tr = n * sum_w C(k, (k + w n)/2) over w with |w| n <= k and
// k + w n even.  (For even k < n this is n*C(k, k/2); at k = n the
// two w = +-1 windings add 2n.)
BigInt cycle_trace(std::int64_t n, int k);

// [A(P_n)^k 1]_v exactly (v is 0-based).
BigInt path_vertex_walks(std::int64_t n, std::int64_t v, int k);

}  // namespace char2lift
