#include "char2lift/classes.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "char2lift/errors.hpp"
#include "char2lift/ring.hpp"
#include "json.hpp"

namespace char2lift {

std::string to_string(Family f) {
  switch (f) {
    case Family::U: return "U";
    case Family::S: return "S";
    case Family::T: return "T";
  }
  throw std::invalid_argument("unknown family");
}

Family family_from_string(const std::string& s) {
  if (s == "U") return Family::U;
  if (s == "S") return Family::S;
  if (s == "T") return Family::T;
  throw std::invalid_argument("unknown family '" + s + "' (expected U, S or T)");
}

namespace {

std::uint64_t pow2_mask(int e) { return (e >= 64) ? ~0ull : ((1ull << e) - 1); }

void require_exponent(int e) {
  if (e < 2) throw std::invalid_argument("modulus exponent e must be at least 2");
  if (e + 3 > kMaxWordBits) throw SizeError("modulus exponent too large for machine words");
}

// Free adjacency bits of the family at order n.
int family_bits(Family family, int n) {
  const int pairs = n * (n - 1) / 2;
  return family == Family::U ? 2 * pairs : pairs;
}

std::vector<std::string> membership_violations(const IntMatrix& m, Family family) {
  std::vector<std::string> out;
  const int n = m.order();
  for (int i = 0; i < n && out.empty(); ++i)
    if (m.at(i, i) != 1) out.push_back("diagonal entry (" + std::to_string(i) + ") is not 1");
  for (int i = 0; i < n && out.empty(); ++i)
    for (int j = 0; j < n && out.empty(); ++j)
      if (i != j && m.at(i, j) != 1 && m.at(i, j) != -1)
        out.push_back("off-diagonal entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not +-1");
  if (out.empty() && family == Family::S)
    for (int i = 0; i < n && out.empty(); ++i)
      for (int j = i + 1; j < n && out.empty(); ++j)
        if (m.at(i, j) != m.at(j, i))
          out.push_back("not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (out.empty() && family == Family::T)
    for (int i = 0; i < n && out.empty(); ++i)
      for (int j = i + 1; j < n && out.empty(); ++j)
        if (m.at(i, j) != -m.at(j, i))
          out.push_back("M - I not skew-symmetric at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
  return out;
}

ClassTuple tuple_from_word_coeffs(const std::vector<std::uint64_t>& coeffs, int n, int e) {
  const int kmax = std::min(n, e);
  const std::uint64_t mask = pow2_mask(e);
  ClassTuple out;
  for (int k = 2; k <= kmax; ++k) out.push_back(coeffs[static_cast<std::size_t>(k)] & mask);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration kernel.
//
// A family member of order n <= 8 is held as bitmask rows/columns of its
// {0,1} adjacency A (bit j of row i set when A_ij = 1, so M = J - 2A has
// entry -1 there).  Since every entry of M is +-1,
//   (M^2)_ij = sum_k M_ik M_kj = n - 2 popcount(row_i XOR col_j),
// and traces of higher powers follow from pairwise products of the stored
// powers.  The power sums tr(M^k) are exact in int64 (|tr(M^k)| <= n^{k+1}),
// and Newton's identities invert to the exact integer coefficients c_k, which
// are only then reduced mod 2^e.  This replaces a per-matrix word-size
// Berkowitz pass with ~200 integer ops, which is what lets the 2^28-matrix
// run at n = 8 finish in minutes; tests pin it against charpoly_mod.
// ---------------------------------------------------------------------------

struct PairTable {
  int pi[32];
  int pj[32];
  int pairs = 0;
};

PairTable pair_table(int n) {
  PairTable t;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      t.pi[t.pairs] = i;
      t.pj[t.pairs] = j;
      ++t.pairs;
    }
  return t;
}

// Decodes the documented bitmask layout (upper triangle row-major; for T
// bit=1 means arc i->j with i < j; for U the low pair bits give the upper
// triangle and the high pair bits the lower one).
void masks_from_bits(Family family, const PairTable& t, std::uint64_t mask, std::uint32_t* row,
                     std::uint32_t* col, int n) {
  for (int i = 0; i < n; ++i) row[i] = col[i] = 0;
  switch (family) {
    case Family::S:
      for (int b = 0; b < t.pairs; ++b)
        if ((mask >> b) & 1) {
          row[t.pi[b]] |= 1u << t.pj[b];
          row[t.pj[b]] |= 1u << t.pi[b];
        }
      for (int i = 0; i < n; ++i) col[i] = row[i];
      break;
    case Family::T:
      for (int b = 0; b < t.pairs; ++b) {
        const int i = t.pi[b], j = t.pj[b];
        if ((mask >> b) & 1) {
          row[i] |= 1u << j;
          col[j] |= 1u << i;
        } else {
          row[j] |= 1u << i;
          col[i] |= 1u << j;
        }
      }
      break;
    case Family::U:
      for (int b = 0; b < t.pairs; ++b) {
        const int i = t.pi[b], j = t.pj[b];
        if ((mask >> b) & 1) {
          row[i] |= 1u << j;
          col[j] |= 1u << i;
        }
        if ((mask >> (b + t.pairs)) & 1) {
          row[j] |= 1u << i;
          col[i] |= 1u << j;
        }
      }
      break;
  }
}

// Exact c_0..c_kmax of Char_M for the +-1 matrix given by adjacency masks.
void coeffs_from_masks(const std::uint32_t* row, const std::uint32_t* col, int n, int kmax,
                       std::int64_t* c) {
  std::int64_t b[8][8];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b[i][j] = n - 2 * std::popcount(row[i] ^ col[j]);

  std::int64_t p[9] = {0};
  p[1] = n;
  for (int i = 0; i < n; ++i) p[2] += b[i][i];
  if (kmax >= 3) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += b[i][j] * (1 - 2 * static_cast<int>((row[j] >> i) & 1));
    p[3] = s;
  }
  if (kmax >= 4) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += b[i][j] * b[j][i];
    p[4] = s;
  }
  if (kmax >= 5) {
    std::int64_t e3[8][8];  // M^3 = M^2 M, via row sums and a masked correction
    for (int i = 0; i < n; ++i) {
      std::int64_t rs = 0;
      for (int k = 0; k < n; ++k) rs += b[i][k];
      for (int j = 0; j < n; ++j) {
        std::int64_t neg = 0;
        std::uint32_t m = col[j];
        while (m) {
          const int k = std::countr_zero(m);
          m &= m - 1;
          neg += b[i][k];
        }
        e3[i][j] = rs - 2 * neg;
      }
    }
    std::int64_t c4[8][8];  // M^4 = (M^2)^2
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < n; ++k) s += b[i][k] * b[k][j];
        c4[i][j] = s;
      }
    std::int64_t t5 = 0, t6 = 0, t7 = 0, t8 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        t5 += c4[i][j] * (1 - 2 * static_cast<int>((row[j] >> i) & 1));
        t6 += c4[i][j] * b[j][i];
        t7 += c4[i][j] * e3[j][i];
        t8 += c4[i][j] * c4[j][i];
      }
    p[5] = t5;
    p[6] = t6;
    p[7] = t7;
    p[8] = t8;
  }

  c[0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    std::int64_t s = p[k];
    for (int i = 1; i < k; ++i) s += c[i] * p[k - i];
    c[k] = -s / k;
    if (c[k] * k != -s) throw ExactnessError("power-sum inversion not exact");
  }
}

struct ShardResult {
  std::vector<bool> bitmap;             // packed-key path
  std::set<ClassTuple> tuples;          // general path
};

void enumerate_shard(Family family, int n, int e, std::uint64_t lo, std::uint64_t hi,
                     bool packed, int packed_bits, ShardResult& out) {
  const PairTable table = pair_table(n);
  const int kmax = std::min(n, e);
  const std::uint64_t mask_e = pow2_mask(e);
  if (packed) out.bitmap.assign(1ull << packed_bits, false);
  std::uint32_t row[8], col[8];
  std::int64_t c[9];
  for (std::uint64_t m = lo; m < hi; ++m) {
    masks_from_bits(family, table, m, row, col, n);
    coeffs_from_masks(row, col, n, kmax, c);
    if (packed) {
      std::uint64_t key = 0;
      for (int k = 2; k <= kmax; ++k)
        key |= (static_cast<std::uint64_t>(c[k]) & mask_e)
               << (static_cast<unsigned>(e) * static_cast<unsigned>(kmax - k));
      out.bitmap[key] = true;
    } else {
      ClassTuple t;
      for (int k = 2; k <= kmax; ++k) t.push_back(static_cast<std::uint64_t>(c[k]) & mask_e);
      out.tuples.insert(std::move(t));
    }
  }
}

// Counter-based bit source: word j of trial (seed, index) is
// splitmix64(splitmix64(seed) ^ splitmix64(index + 1) + j).
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class BitStream {
 public:
  BitStream(std::uint64_t seed, std::uint64_t index)
      : key_(splitmix64(seed) ^ splitmix64(index + 1)) {}
  int next() {
    if (used_ == 64) {
      used_ = 0;
      ++word_;
    }
    if (used_ == 0) current_ = splitmix64(key_ + word_);
    return static_cast<int>((current_ >> used_++) & 1);
  }

 private:
  std::uint64_t key_;
  std::uint64_t word_ = 0;
  std::uint64_t current_ = 0;
  int used_ = 0;
};

}  // namespace

ClassTuple extract_class(const IntMatrix& m, Family family, int e) {
  require_exponent(e);
  const auto violations = membership_violations(m, family);
  if (!violations.empty()) throw std::invalid_argument("not a family member: " + violations[0]);
  return tuple_from_word_coeffs(charpoly_mod(m, e + 2), m.order(), e);
}

ClassTuple extract_class(const GraphExpr& g, int e) {
  require_exponent(e);
  const ComponentSummary s = summary(g, e, e, e + 3);
  const std::vector<std::uint64_t> coeffs = jm2a_coeffs(s.char_coeffs, s.walks, e, e);
  const int kmax = s.order < e ? s.order.convert_to<int>() : e;
  if (kmax < 2) return {};
  return ClassTuple(coeffs.begin() + 2, coeffs.begin() + kmax + 1);
}

ClassTuple extract_class(const TournExpr& g, int e) {
  require_exponent(e);
  const TournSummary s = tourn_summary(g, e, e, e + 3);
  std::vector<Residue> walks;
  for (int k = 0; k < e; ++k) walks.push_back(s.walk.coeff(k + 1));
  const std::vector<std::uint64_t> coeffs = jm2a_coeffs(s.char_coeffs, walks, e, e);
  const int kmax = s.order < e ? s.order.convert_to<int>() : e;
  if (kmax < 2) return {};
  return ClassTuple(coeffs.begin() + 2, coeffs.begin() + kmax + 1);
}

ClassSet enumerate_classes(Family family, int n, int e, int workers) {
  require_exponent(e);
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (workers < 1) throw std::invalid_argument("worker count must be positive");
  const int bits = family_bits(family, n);
  if (bits > 32) throw SizeError("adjacency bit count " + std::to_string(bits) +
                                 " exceeds the exhaustive cap of 32; use sample_classes");

  const int kmax = std::min(n, e);
  const int packed_bits = (kmax - 1) * e;
  const bool packed = packed_bits <= 24;
  const std::uint64_t total = 1ull << bits;
  const int nw = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers),
                                                          total));

  std::vector<ShardResult> shards(static_cast<std::size_t>(nw));
  std::vector<std::thread> threads;
  for (int w = 0; w < nw; ++w) {
    const std::uint64_t lo = total / nw * w + std::min<std::uint64_t>(w, total % nw);
    const std::uint64_t hi = lo + total / nw + (static_cast<std::uint64_t>(w) < total % nw);
    threads.emplace_back(enumerate_shard, family, n, e, lo, hi, packed, packed_bits,
                         std::ref(shards[static_cast<std::size_t>(w)]));
  }
  for (auto& t : threads) t.join();

  ClassSet out;
  out.family = family;
  out.n = n;
  out.e = e;
  out.provenance = "exhaustive";
  if (packed) {
    std::vector<bool> all(1ull << packed_bits, false);
    for (const auto& s : shards)
      for (std::uint64_t k = 0; k < all.size(); ++k)
        if (s.bitmap[k]) all[k] = true;
    const std::uint64_t mask = pow2_mask(e);
    for (std::uint64_t key = 0; key < all.size(); ++key) {
      if (!all[key]) continue;
      ClassTuple t;
      for (int k = 2; k <= kmax; ++k)
        t.push_back((key >> (static_cast<unsigned>(e) * static_cast<unsigned>(kmax - k))) & mask);
      out.classes.push_back(std::move(t));
    }
  } else {
    std::set<ClassTuple> all;
    for (auto& s : shards) all.insert(s.tuples.begin(), s.tuples.end());
    out.classes.assign(all.begin(), all.end());
  }
  return out;
}

IntMatrix random_family_matrix(Family family, int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  BitStream bits(seed, index);
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int b = bits.next();
      switch (family) {
        case Family::S:
          m.set(i, j, 1 - 2 * b);
          m.set(j, i, 1 - 2 * b);
          break;
        case Family::T:
          m.set(i, j, 1 - 2 * b);
          m.set(j, i, 2 * b - 1);
          break;
        case Family::U:
          m.set(i, j, 1 - 2 * b);
          break;
      }
    }
  if (family == Family::U)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m.set(j, i, 1 - 2 * bits.next());
  return m;
}

ClassSet sample_classes(Family family, int n, int e, std::uint64_t trials, std::uint64_t seed) {
  require_exponent(e);
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::set<ClassTuple> seen;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const IntMatrix m = random_family_matrix(family, n, seed, i);
    seen.insert(tuple_from_word_coeffs(charpoly_mod(m, e + 2), n, e));
  }
  ClassSet out;
  out.family = family;
  out.n = n;
  out.e = e;
  out.provenance = "sampled";
  out.trials = trials;
  out.seed = seed;
  out.classes.assign(seen.begin(), seen.end());
  return out;
}

BigInt predicted_count(Family family, int e, bool odd_n) {
  if (family == Family::U) {
    if (e < 1) throw std::invalid_argument("U-family count needs e >= 1");
    return BigInt(1) << static_cast<unsigned>(e * (e - 1) / 2);
  }
  if (e < 3) throw std::invalid_argument("S/T-family counts need e >= 3");
  if (family == Family::S) {
    const int exponent = (e - 2) * (e - 3) / 2 + (odd_n ? 1 : 0);
    return BigInt(1) << static_cast<unsigned>(exponent);
  }
  const int exponent = odd_n ? ((e - 2) / 2) * ((e - 3) / 2) : ((e - 1) / 2) * ((e - 2) / 2);
  return BigInt(1) << static_cast<unsigned>(exponent);
}

StructuralReport structural_checks(const IntMatrix& m, Family family) {
  StructuralReport report;
  report.failures = membership_violations(m, family);
  if (!report.failures.empty()) {
    report.failures[0] = "family validation: " + report.failures[0];
    return report;
  }

  const int n = m.order();
  const std::vector<BigInt> c = charpoly(m);
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };

  if (c[0] != 1) fail("c_0 = " + c[0].str() + ", expected 1");
  if (n >= 1 && c[1] != -BigInt(n)) fail("c_1 = " + c[1].str() + ", expected " + (-BigInt(n)).str());
  for (int k = 1; k <= n; ++k)
    if ((c[static_cast<std::size_t>(k)] % (BigInt(1) << static_cast<unsigned>(k - 1))) != 0)
      fail("2^" + std::to_string(k - 1) + " does not divide c_" + std::to_string(k) + " = " +
           c[static_cast<std::size_t>(k)].str());
  if (n >= 2) {
    if (family == Family::S && c[2] != 0) fail("c_2 = " + c[2].str() + ", expected 0");
    if (family == Family::T && c[2] != BigInt(n) * (n - 1))
      fail("c_2 = " + c[2].str() + ", expected n(n-1) = " + (BigInt(n) * (n - 1)).str());
  }
  if (family == Family::T) {
    for (int k = 1; k <= n; k += 2) {
      BigInt sum = 0;
      for (int i = 0; i < k; ++i)
        sum += binomial(n - i, n - k) * c[static_cast<std::size_t>(i)];
      if (c[static_cast<std::size_t>(k)] != -sum)
        fail("odd-coefficient recurrence fails at k = " + std::to_string(k));
      if (n % 2 == 1) {
        BigInt lhs = BigInt(n - k + 1) * c[static_cast<std::size_t>(k - 1)];
        for (int i = 0; i <= k - 2; ++i)
          lhs += binomial(n - i, n - k) * c[static_cast<std::size_t>(i)];
        if ((lhs % (BigInt(1) << static_cast<unsigned>(k - 1))) != 0)
          fail("odd-order companion congruence fails at k = " + std::to_string(k));
      }
    }
  }
  report.passed = report.failures.empty();
  return report;
}

WitnessResult u_class_witness(int e, const std::vector<std::uint64_t>& targets) {
  require_exponent(e);
  if (targets.size() != static_cast<std::size_t>(e - 1))
    throw std::invalid_argument("expected " + std::to_string(e - 1) + " target residues");
  const std::uint64_t mod = 1ull << e;
  for (int k = 2; k <= e; ++k) {
    const std::uint64_t r = targets[static_cast<std::size_t>(k - 2)];
    if (r >= mod) throw std::invalid_argument("target residue out of range at k = " +
                                              std::to_string(k));
    if (r & ((1ull << (k - 1)) - 1))
      throw std::invalid_argument("2^" + std::to_string(k - 1) + " must divide the target at k = " +
                                  std::to_string(k));
  }

  // d_{i-1} + 2 d_{i-2} + ... + (i-1) d_1 == (-1)^{i-1} r_i / 2^{i-1} mod 2^e,
  // solved forward, multipliers normalized into {1, ..., 2^e}.
  std::vector<std::uint64_t> d(static_cast<std::size_t>(e), 0);  // d[1..e-1]
  for (int i = 2; i <= e; ++i) {
    const std::uint64_t divided = targets[static_cast<std::size_t>(i - 2)] >> (i - 1);
    std::uint64_t rhs = (i % 2 == 1) ? divided : (mod - divided) % mod;
    for (int j = 2; j <= i - 1; ++j) {
      const std::uint64_t term = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(j) * d[static_cast<std::size_t>(i - j)] % mod);
      rhs = (rhs + mod - term) % mod;
    }
    d[static_cast<std::size_t>(i - 1)] = rhs == 0 ? mod : rhs;
  }

  // Gamma_f = (2^e - 1) DP_{f-1} + DP_{f-1+2^e}: characteristic polynomial a
  // monomial, walk counts f - k - 1 mod 2^e for e >= k >= f and 0 below f.
  GraphExprPtr expr;
  for (int f = 1; f <= e - 1; ++f) {
    GraphExprPtr gamma = union_of(repeat_of(BigInt(mod) - 1, dpath_atom(f - 1)),
                                  dpath_atom(static_cast<std::int64_t>(f - 1 + mod)));
    GraphExprPtr block = repeat_of(BigInt(d[static_cast<std::size_t>(f)]), gamma);
    expr = expr ? union_of(expr, block) : block;
  }

  WitnessResult result;
  result.expr = expr;
  result.targets = targets;
  for (int f = 1; f <= e - 1; ++f) result.multipliers.push_back(BigInt(d[static_cast<std::size_t>(f)]));
  result.achieved = extract_class(*expr, e);
  result.verified = result.achieved == ClassTuple(targets.begin(), targets.end());
  if (!result.verified) throw ConstructionError("witness does not reach the requested residues");
  return result;
}

std::vector<std::vector<std::uint64_t>> admissible_u_targets(int e) {
  require_exponent(e);
  if (e * (e - 1) / 2 > 24) throw SizeError("admissible target list too large to materialize");
  std::vector<std::vector<std::uint64_t>> out{{}};
  for (int k = 2; k <= e; ++k) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& prefix : out)
      for (std::uint64_t r = 0; r < (1ull << e); r += 1ull << (k - 1)) {
        auto t = prefix;
        t.push_back(r);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<TheoremRow> theorem_report(Family family, int e, const std::vector<int>& ns,
                                       int workers) {
  std::vector<TheoremRow> rows;
  for (int n : ns) {
    TheoremRow row;
    row.n = n;
    row.observed = BigInt(static_cast<std::int64_t>(
        enumerate_classes(family, n, e, workers).classes.size()));
    row.predicted = predicted_count(family, e, n % 2 == 1);
    row.bound_ok = row.observed <= row.predicted;
    row.equal = row.observed == row.predicted;
    rows.push_back(row);
  }
  return rows;
}

std::string ClassSet::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = char2lift::to_string(family);
  j["n"] = n;
  j["e"] = e;
  j["provenance"] = provenance;
  if (trials) j["trials"] = *trials;
  if (seed) j["seed"] = *seed;
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& t : classes) j["classes"].push_back(t);
  return j.dump();
}

std::string ClassSet::to_csv() const {
  std::string out;
  for (const auto& t : classes) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(t[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace char2lift
