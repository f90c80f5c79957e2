#include "char2lift/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace char2lift {

namespace {

GraphExprPtr make_atom(GraphExpr::Tag tag, std::int64_t n) {
  auto g = std::make_shared<GraphExpr>();
  g->tag = tag;
  g->atom_order = n;
  return g;
}

}  // namespace

GraphExprPtr path_atom(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("path atom needs order >= 1");
  return make_atom(GraphExpr::Tag::Path, n);
}

GraphExprPtr cycle_atom(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("cycle atom needs order >= 3");
  return make_atom(GraphExpr::Tag::Cycle, n);
}

GraphExprPtr dpath_atom(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("directed path atom needs order >= 0");
  return make_atom(GraphExpr::Tag::DirectedPath, n);
}

GraphExprPtr union_of(GraphExprPtr a, GraphExprPtr b) {
  if (!a || !b) throw std::invalid_argument("union of null expression");
  auto g = std::make_shared<GraphExpr>();
  g->tag = GraphExpr::Tag::Union;
  g->left = std::move(a);
  g->right = std::move(b);
  return g;
}

GraphExprPtr repeat_of(BigInt count, GraphExprPtr child) {
  if (!child) throw std::invalid_argument("repeat of null expression");
  if (count < 1) throw std::invalid_argument("repeat count must be >= 1");
  auto g = std::make_shared<GraphExpr>();
  g->tag = GraphExpr::Tag::Repeat;
  g->count = std::move(count);
  g->child = std::move(child);
  return g;
}

namespace {

// Recursive-descent parser for
//   expr := term ('+' term)* ; term := int '*' term | atom | '(' expr ')'
//   atom := 'P' int | 'C' int | 'DP' int
struct GraphParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit GraphParser(const std::string& t) : text(t) {}

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

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  BigInt parse_int() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return BigInt(text.substr(start, pos - start));
  }

  std::int64_t parse_atom_order(std::int64_t least, const char* kind) {
    const std::size_t at = pos;
    BigInt n = parse_int();
    if (n < least || n > std::numeric_limits<std::int64_t>::max()) {
      pos = at;
      fail(std::string(kind) + " atom order out of range");
    }
    return static_cast<std::int64_t>(n);
  }

  GraphExprPtr parse_expr() {
    GraphExprPtr acc = parse_term();
    while (peek() == '+') {
      ++pos;
      acc = union_of(std::move(acc), parse_term());
    }
    return acc;
  }

  GraphExprPtr parse_term() {
    const char c = peek();
    if (c == '(') {
      ++pos;
      GraphExprPtr inner = parse_expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos;
      BigInt count = parse_int();
      if (count < 1) {
        pos = at;
        fail("repeat count must be >= 1");
      }
      if (peek() != '*') fail("expected '*' after repeat count");
      ++pos;
      return repeat_of(std::move(count), parse_term());
    }
    if (c == 'D') {
      ++pos;
      if (pos >= text.size() || text[pos] != 'P') fail("expected 'DP'");
      ++pos;
      return dpath_atom(parse_atom_order(0, "DP"));
    }
    if (c == 'P') {
      ++pos;
      return path_atom(parse_atom_order(1, "P"));
    }
    if (c == 'C') {
      ++pos;
      return cycle_atom(parse_atom_order(3, "C"));
    }
    fail("expected an atom, a repeat count or '('");
  }
};

}  // namespace

GraphExprPtr parse_graph_expr(const std::string& text) {
  GraphParser p(text);
  GraphExprPtr g = p.parse_expr();
  if (!p.at_end()) p.fail("trailing characters after expression");
  return g;
}

namespace {

void print_expr(const GraphExpr& g, std::string& out) {
  switch (g.tag) {
    case GraphExpr::Tag::Path:
      out += "P" + std::to_string(g.atom_order);
      return;
    case GraphExpr::Tag::Cycle:
      out += "C" + std::to_string(g.atom_order);
      return;
    case GraphExpr::Tag::DirectedPath:
      out += "DP" + std::to_string(g.atom_order);
      return;
    case GraphExpr::Tag::Union:
      print_expr(*g.left, out);
      out += "+";
      print_expr(*g.right, out);
      return;
    case GraphExpr::Tag::Repeat:
      out += g.count.str() + "*";
      if (g.child->tag == GraphExpr::Tag::Union) {
        out += "(";
        print_expr(*g.child, out);
        out += ")";
      } else {
        print_expr(*g.child, out);
      }
      return;
  }
  throw std::logic_error("unreachable graph tag");
}

}  // namespace

std::string to_string(const GraphExpr& g) {
  std::string out;
  print_expr(g, out);
  return out;
}

BigInt order_of(const GraphExpr& g) {
  switch (g.tag) {
    case GraphExpr::Tag::Path:
    case GraphExpr::Tag::Cycle:
    case GraphExpr::Tag::DirectedPath:
      return g.atom_order;
    case GraphExpr::Tag::Union:
      return order_of(*g.left) + order_of(*g.right);
    case GraphExpr::Tag::Repeat:
      return g.count * order_of(*g.child);
  }
  throw std::logic_error("unreachable graph tag");
}

bool is_undirected(const GraphExpr& g) {
  switch (g.tag) {
    case GraphExpr::Tag::Path:
    case GraphExpr::Tag::Cycle:
      return true;
    case GraphExpr::Tag::DirectedPath:
      return g.atom_order <= 1;  // no arc at all
    case GraphExpr::Tag::Union:
      return is_undirected(*g.left) && is_undirected(*g.right);
    case GraphExpr::Tag::Repeat:
      return is_undirected(*g.child);
  }
  throw std::logic_error("unreachable graph tag");
}

namespace {

// Writes the atom's edges into m starting at vertex offset `at`.
void place_atom(IntMatrix& m, std::int64_t at, const GraphExpr& g) {
  const std::int64_t n = g.atom_order;
  for (std::int64_t i = 0; i + 1 < n; ++i) {
    m.set(at + i, at + i + 1, 1);
    if (g.tag != GraphExpr::Tag::DirectedPath) m.set(at + i + 1, at + i, 1);
  }
  if (g.tag == GraphExpr::Tag::Cycle) {
    m.set(at, at + n - 1, 1);
    m.set(at + n - 1, at, 1);
  }
}

void place_expr(IntMatrix& m, std::int64_t& at, const GraphExpr& g) {
  switch (g.tag) {
    case GraphExpr::Tag::Path:
    case GraphExpr::Tag::Cycle:
    case GraphExpr::Tag::DirectedPath:
      place_atom(m, at, g);
      at += g.atom_order;
      return;
    case GraphExpr::Tag::Union:
      place_expr(m, at, *g.left);
      place_expr(m, at, *g.right);
      return;
    case GraphExpr::Tag::Repeat: {
      if (order_of(*g.child) == 0) return;
      for (BigInt i = 0; i < g.count; ++i) place_expr(m, at, *g.child);
      return;
    }
  }
  throw std::logic_error("unreachable graph tag");
}

}  // namespace

IntMatrix adjacency(const GraphExpr& g, std::int64_t cap) {
  const BigInt order = order_of(g);
  if (order > cap)
    throw SizeError("graph order " + order.str() + " exceeds the cap " + std::to_string(cap) +
                    "; use summary(...) instead of explicit adjacency");
  IntMatrix m(static_cast<std::int64_t>(order));
  std::int64_t at = 0;
  place_expr(m, at, g);
  return m;
}

namespace {

// Top-anchored coefficient row of the three-term path recurrence
// f_n = x f_{n-1} - f_{n-2}:  row_n[k] = row_{n-1}[k] - row_{n-2}[k-2],
// keeping only k <= depth.  Rows for f_0 and f_1 store identically as
// (1, 0, ...), and entries with k > n stay zero by induction, so each row is
// exactly the top-anchored truncation of f_row.  Returns the row for f_n.
std::vector<Residue> path_row(std::int64_t n, int depth, int bits) {
  std::vector<Residue> prev(static_cast<std::size_t>(depth) + 1, Residue::zero(bits));
  prev[0] = Residue::one(bits);  // f_0 = 1
  if (n == 0) return prev;
  std::vector<Residue> cur = prev;  // f_1 = x
  for (std::int64_t row = 2; row <= n; ++row) {
    std::vector<Residue> next = cur;
    for (int k = 2; k <= depth; ++k)
      next[static_cast<std::size_t>(k)] =
          cur[static_cast<std::size_t>(k)] - prev[static_cast<std::size_t>(k - 2)];
    prev.swap(cur);
    cur.swap(next);
  }
  return cur;
}

struct AtomKey {
  int tag;
  std::int64_t n;
  int depth;
  int kmax;
  int bits;
  bool operator<(const AtomKey& o) const {
    return std::tie(tag, n, depth, kmax, bits) < std::tie(o.tag, o.n, o.depth, o.kmax, o.bits);
  }
};

ComponentSummary atom_summary_uncached(const GraphExpr& g, int depth, int kmax, int bits) {
  const std::int64_t n = g.atom_order;
  ComponentSummary s{BigInt(n), TruncSeries(depth, bits),
                     std::vector<Residue>(static_cast<std::size_t>(kmax) + 1, Residue::zero(bits))};
  switch (g.tag) {
    case GraphExpr::Tag::Path: {
      const auto row = path_row(n, depth, bits);
      for (int k = 0; k <= depth; ++k) s.char_coeffs.set_coeff(k, row[static_cast<std::size_t>(k)]);
      // Walk counts by mat-vec iteration confined to this one component.
      std::vector<Residue> u(static_cast<std::size_t>(n), Residue::one(bits));
      for (int k = 0; k <= kmax; ++k) {
        Residue total = Residue::zero(bits);
        for (const auto& x : u) total = total + x;
        s.walks[static_cast<std::size_t>(k)] = total;
        if (k == kmax) break;
        std::vector<Residue> next(static_cast<std::size_t>(n), Residue::zero(bits));
        for (std::int64_t v = 0; v < n; ++v) {
          if (v > 0) next[static_cast<std::size_t>(v)] = next[static_cast<std::size_t>(v)] + u[static_cast<std::size_t>(v - 1)];
          if (v + 1 < n) next[static_cast<std::size_t>(v)] = next[static_cast<std::size_t>(v)] + u[static_cast<std::size_t>(v + 1)];
        }
        u.swap(next);
      }
      return s;
    }
    case GraphExpr::Tag::Cycle: {
      // Char_{C_n} = f_n - f_{n-2} - 2, top-anchored:
      //   c[k] = row_n[k] - row_{n-2}[k-2] - 2[k = n].
      const auto row_n = path_row(n, depth, bits);
      const auto row_low = path_row(n - 2, depth, bits);
      for (int k = 0; k <= depth; ++k) {
        Residue c = row_n[static_cast<std::size_t>(k)];
        if (k >= 2) c = c - row_low[static_cast<std::size_t>(k - 2)];
        if (k == n) c = c - Residue(2, bits);
        s.char_coeffs.set_coeff(k, c);
      }
      // 2-regular, so A 1 = 2 1 and the walk count is n 2^k.
      for (int k = 0; k <= kmax; ++k)
        s.walks[static_cast<std::size_t>(k)] =
            Residue::from_int(BigInt(n) << static_cast<unsigned>(k), bits);
      return s;
    }
    case GraphExpr::Tag::DirectedPath: {
      // Nilpotent adjacency: Char = x^n; walks of length k are the n-k
      // starting points that leave room for k forward steps.
      s.char_coeffs.set_coeff(0, Residue::one(bits));
      for (int k = 0; k <= kmax; ++k)
        s.walks[static_cast<std::size_t>(k)] =
            Residue::from_int(std::max<std::int64_t>(n - k, 0), bits);
      return s;
    }
    default:
      throw std::logic_error("atom_summary on non-atom");
  }
}

ComponentSummary atom_summary(const GraphExpr& g, int depth, int kmax, int bits) {
  static std::mutex mu;
  static std::map<AtomKey, ComponentSummary> cache;
  const AtomKey key{static_cast<int>(g.tag), g.atom_order, depth, kmax, bits};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ComponentSummary s = atom_summary_uncached(g, depth, kmax, bits);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(s)).first->second;
}

}  // namespace

ComponentSummary summary(const GraphExpr& g, int depth, int walk_kmax, int bits) {
  if (depth < 0 || walk_kmax < 0) throw std::invalid_argument("summary depths must be >= 0");
  switch (g.tag) {
    case GraphExpr::Tag::Path:
    case GraphExpr::Tag::Cycle:
    case GraphExpr::Tag::DirectedPath:
      return atom_summary(g, depth, walk_kmax, bits);
    case GraphExpr::Tag::Union: {
      ComponentSummary a = summary(*g.left, depth, walk_kmax, bits);
      const ComponentSummary b = summary(*g.right, depth, walk_kmax, bits);
      a.order += b.order;
      a.char_coeffs = series_mul(a.char_coeffs, b.char_coeffs);
      for (int k = 0; k <= walk_kmax; ++k)
        a.walks[static_cast<std::size_t>(k)] =
            a.walks[static_cast<std::size_t>(k)] + b.walks[static_cast<std::size_t>(k)];
      return a;
    }
    case GraphExpr::Tag::Repeat: {
      ComponentSummary a = summary(*g.child, depth, walk_kmax, bits);
      a.order *= g.count;
      a.char_coeffs = series_pow(a.char_coeffs, g.count);
      const Residue d = Residue::from_int(g.count, bits);
      for (auto& w : a.walks) w = d * w;
      return a;
    }
  }
  throw std::logic_error("unreachable graph tag");
}

BigInt cycle_trace(std::int64_t n, int k) {
  if (n < 3) throw std::invalid_argument("cycle_trace needs n >= 3");
  if (k < 1 || k > n + 1) throw std::invalid_argument("cycle_trace needs 1 <= k <= n+1");
  // A closed k-walk on C_n takes s forward and k-s backward steps with
  // s - (k-s) = w n for some winding number w, giving n*C(k, s) walks per w.
  BigInt total = 0;
  for (std::int64_t w = -(k / n); w <= k / n; ++w) {
    const std::int64_t twice_s = k + w * n;
    if (twice_s % 2 != 0) continue;
    total += BigInt(n) * binomial(k, twice_s / 2);
  }
  return total;
}

BigInt path_vertex_walks(std::int64_t n, std::int64_t v, int k) {
  if (n < 1 || v < 0 || v >= n || k < 0) throw std::invalid_argument("path_vertex_walks domain");
  std::vector<BigInt> u(static_cast<std::size_t>(n), BigInt(1));
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> next(static_cast<std::size_t>(n), BigInt(0));
    for (std::int64_t i = 0; i < n; ++i) {
      if (i > 0) next[static_cast<std::size_t>(i)] += u[static_cast<std::size_t>(i - 1)];
      if (i + 1 < n) next[static_cast<std::size_t>(i)] += u[static_cast<std::size_t>(i + 1)];
    }
    u.swap(next);
  }
  return u[static_cast<std::size_t>(v)];
}

}  // namespace char2lift
