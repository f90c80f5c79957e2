#include "char2lift/exact_linalg.hpp"

#include <cstdlib>

namespace char2lift {

IntMatrix::IntMatrix(int n) : n_(n) {
  if (n < 1) throw SizeError("matrix order must be >= 1");
  a_.assign(static_cast<std::size_t>(n) * n, 0);
}

std::size_t IntMatrix::idx(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw SizeError("matrix index out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix jm2a_matrix(const IntMatrix& m) {
  IntMatrix out(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) out.set(i, j, 1 - 2 * m.at(i, j));
  return out;
}

// Berkowitz's division-free vector recurrence.  After processing the r-th
// leading principal block the vector c holds the characteristic coefficients
// of that block; the update is a lower-triangular Toeplitz product whose
// column is built from -R A^j C over the previous block.  Works verbatim
// over any commutative ring; Conv turns a matrix entry into a ring element.
template <typename R, typename Conv>
static std::vector<R> berkowitz(const IntMatrix& m, Conv conv) {
  const int n = m.order();
  std::vector<R> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  c.push_back(conv(1));
  c.push_back(conv(0) - conv(m.at(0, 0)));
  std::vector<R> t, u, v, next;
  for (int r = 2; r <= n; ++r) {
    t.assign(static_cast<std::size_t>(r) + 1, conv(0));
    t[0] = conv(1);
    t[1] = conv(0) - conv(m.at(r - 1, r - 1));
    u.assign(static_cast<std::size_t>(r) - 1, conv(0));
    for (int i = 0; i < r - 1; ++i) u[static_cast<std::size_t>(i)] = conv(m.at(i, r - 1));
    for (int j = 2; j <= r; ++j) {
      R dot = conv(0);
      for (int i = 0; i < r - 1; ++i) dot = dot + conv(m.at(r - 1, i)) * u[static_cast<std::size_t>(i)];
      t[static_cast<std::size_t>(j)] = conv(0) - dot;
      if (j < r) {
        v.assign(static_cast<std::size_t>(r) - 1, conv(0));
        for (int i = 0; i < r - 1; ++i) {
          R acc = conv(0);
          for (int l = 0; l < r - 1; ++l) acc = acc + conv(m.at(i, l)) * u[static_cast<std::size_t>(l)];
          v[static_cast<std::size_t>(i)] = acc;
        }
        u.swap(v);
      }
    }
    next.assign(static_cast<std::size_t>(r) + 1, conv(0));
    for (int i = 0; i <= r; ++i) {
      R acc = conv(0);
      const int jmax = std::min(i, r);
      for (int j = 0; j <= jmax; ++j) {
        const int old = i - j;
        if (old < static_cast<int>(c.size()))
          acc = acc + t[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(old)];
      }
      next[static_cast<std::size_t>(i)] = acc;
    }
    c.swap(next);
  }
  return c;
}

std::vector<BigInt> charpoly(const IntMatrix& m) {
  return berkowitz<BigInt>(m, [](std::int64_t v) { return BigInt(v); });
}

std::vector<std::uint64_t> charpoly_mod(const IntMatrix& m, int bits) {
  if (bits < 1 || bits > kMaxWordBits) throw RingError("charpoly_mod: bad modulus exponent");
  // Plain wrapping arithmetic is exact mod 2^64, of which Z/2^bits is a
  // quotient, so a single final mask suffices.
  auto c = berkowitz<std::uint64_t>(m, [](std::int64_t v) { return static_cast<std::uint64_t>(v); });
  const std::uint64_t mask = detail::word_mask(bits);
  for (auto& x : c) x &= mask;
  return c;
}

std::vector<BigInt> power_sums_from_coeffs(const std::vector<BigInt>& coeffs, int kmax) {
  if (coeffs.empty() || coeffs[0] != 1) throw RingError("power sums need c_0 = 1");
  if (kmax < 1) throw SizeError("power_sums_from_coeffs: kmax must be >= 1");
  auto cc = [&](int i) -> BigInt {
    return i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(i)] : BigInt(0);
  };
  std::vector<BigInt> p(static_cast<std::size_t>(kmax) + 1);
  for (int k = 1; k <= kmax; ++k) {
    BigInt acc = k * cc(k);
    for (int i = 1; i < k; ++i) acc += cc(i) * p[static_cast<std::size_t>(k - i)];
    p[static_cast<std::size_t>(k)] = -acc;
  }
  return std::vector<BigInt>(p.begin() + 1, p.end());
}

std::vector<std::uint64_t> power_sums_from_coeffs_mod(const std::vector<std::uint64_t>& coeffs,
                                                      int kmax, int bits) {
  if (bits < 1 || bits > kMaxWordBits) throw RingError("power_sums_from_coeffs_mod: bad modulus");
  const std::uint64_t mask = detail::word_mask(bits);
  if (coeffs.empty() || (coeffs[0] & mask) != 1) throw RingError("power sums need c_0 = 1");
  if (kmax < 1) throw SizeError("power_sums_from_coeffs_mod: kmax must be >= 1");
  auto cc = [&](int i) -> std::uint64_t {
    return i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(i)] : 0;
  };
  std::vector<std::uint64_t> p(static_cast<std::size_t>(kmax) + 1, 0);
  for (int k = 1; k <= kmax; ++k) {
    std::uint64_t acc = static_cast<std::uint64_t>(k) * cc(k);
    for (int i = 1; i < k; ++i) acc += cc(i) * p[static_cast<std::size_t>(k - i)];
    p[static_cast<std::size_t>(k)] = (0 - acc) & mask;
  }
  return std::vector<std::uint64_t>(p.begin() + 1, p.end());
}

std::vector<BigInt> coeffs_from_power_sums(const std::vector<BigInt>& psums, int kmax) {
  if (kmax < 1 || static_cast<int>(psums.size()) < kmax)
    throw SizeError("coeffs_from_power_sums: need p_1..p_kmax");
  std::vector<BigInt> c(static_cast<std::size_t>(kmax) + 1);
  c[0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    BigInt acc = psums[static_cast<std::size_t>(k - 1)];
    for (int i = 1; i < k; ++i) acc += c[static_cast<std::size_t>(i)] * psums[static_cast<std::size_t>(k - i - 1)];
    if (acc % k != 0)
      throw ExactnessError("coeffs_from_power_sums: p is not the power-sum sequence of an integer polynomial");
    c[static_cast<std::size_t>(k)] = -acc / k;
  }
  return c;
}

BigInt walk_count(const IntMatrix& m, int k) {
  if (k < 0) throw std::invalid_argument("walk_count: k must be >= 0");
  const int n = m.order();
  std::vector<BigInt> v(static_cast<std::size_t>(n), BigInt(1)), w(static_cast<std::size_t>(n));
  for (int step = 0; step < k; ++step) {
    for (int i = 0; i < n; ++i) {
      BigInt acc = 0;
      for (int j = 0; j < n; ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = acc;
    }
    v.swap(w);
  }
  BigInt total = 0;
  for (const auto& x : v) total += x;
  return total;
}

BigInt trace_power(const IntMatrix& m, int k) {
  if (k < 0) throw std::invalid_argument("trace_power: k must be >= 0");
  const int n = m.order();
  if (k == 0) return n;
  // One vector iteration per basis vector; never a dense matrix power.
  BigInt tr = 0;
  std::vector<BigInt> v(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(v.begin(), v.end(), BigInt(0));
    v[static_cast<std::size_t>(s)] = 1;
    for (int step = 0; step < k; ++step) {
      for (int i = 0; i < n; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < n; ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
        w[static_cast<std::size_t>(i)] = acc;
      }
      v.swap(w);
    }
    tr += v[static_cast<std::size_t>(s)];
  }
  return tr;
}

std::vector<std::uint64_t> jm2a_coeffs(const TruncSeries& char_a,
                                       const std::vector<Residue>& walks, int kmax, int e) {
  if (e < 1) throw std::invalid_argument("jm2a_coeffs: e must be >= 1");
  const int bits = char_a.bits();
  // One guard bit keeps the halved walk term exact down to e bits.
  if (bits < e + 1)
    throw ExactnessError("jm2a_coeffs: working modulus too narrow for the halved walk term");
  if (char_a.depth() < kmax) throw SizeError("jm2a_coeffs: characteristic data too shallow");
  if (static_cast<int>(walks.size()) < kmax) throw SizeError("jm2a_coeffs: missing walk counts");
  if (char_a.coeff(0) != Residue::one(bits)) throw RingError("jm2a_coeffs: series not monic");
  for (const auto& w : walks)
    if (w.bits() != bits) throw RingError("jm2a_coeffs: mixed moduli");

  // c_k(Char_{J-2A}) = (-1)^k (2^k c_k(A) + 2^{k-1} sum_{i=1}^k c_{k-i}(A) w_{i-1});
  // the 1/2 of the determinant-lemma form is folded into the power of two,
  // so every operation stays in the ring.
  std::vector<std::uint64_t> out(static_cast<std::size_t>(kmax) + 1);
  out[0] = 1;
  const std::uint64_t emask = detail::word_mask(e);
  for (int k = 1; k <= kmax; ++k) {
    Residue sum = Residue::zero(bits);
    for (int i = 1; i <= k; ++i) sum = sum + char_a.coeff(k - i) * walks[static_cast<std::size_t>(i - 1)];
    Residue pow_k = Residue::from_int(BigInt(1) << k, bits);
    Residue pow_km1 = Residue::from_int(BigInt(1) << (k - 1), bits);
    Residue val = pow_k * char_a.coeff(k) + pow_km1 * sum;
    if (k % 2 == 1) val = -val;
    out[static_cast<std::size_t>(k)] = val.value() & emask;
  }
  return out;
}

PtoeReport ptoe_verify(const std::vector<BigInt>& psums, const std::vector<BigInt>& coeffs,
                       int m, int n) {
  if (m < 1 || n < 2) throw std::invalid_argument("ptoe_verify: need m >= 1 and n >= 2");
  if (static_cast<int>(psums.size()) < n + 1) throw SizeError("ptoe_verify: need p_1..p_{n+1}");
  PtoeReport rep;
  auto cc = [&](int i) -> BigInt {
    return i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(i)] : BigInt(0);
  };
  const auto& p = psums;
  auto div_by = [](const BigInt& x, std::int64_t exp) {
    if (exp <= 0) return true;
    return (x % (BigInt(1) << exp)) == 0;
  };
  rep.hypothesis_ok = true;
  for (int k = 1; k <= n + 1; ++k) {
    if (k == n) continue;
    if (!div_by(p[static_cast<std::size_t>(k - 1)], m)) rep.hypothesis_ok = false;
  }
  rep.passed = rep.hypothesis_ok;
  for (int k = 1; k <= n + 1; ++k) {
    if (k == n) continue;
    PtoeCheck chk;
    chk.cond = "2^(m-v2(k!)) | c_k";
    chk.k = k;
    chk.ok = div_by(cc(k), m - v2_factorial(k));
    rep.passed = rep.passed && chk.ok;
    rep.checks.push_back(chk);
  }
  PtoeCheck last;
  last.cond = "c_0 p_n == -n c_n mod 2^(m-v2((n-1)!))";
  last.k = n;
  last.ok = div_by(p[static_cast<std::size_t>(n - 1)] + n * cc(n), m - v2_factorial(n - 1));
  rep.passed = rep.passed && last.ok;
  rep.checks.push_back(last);
  return rep;
}

PtoeReport ptoe_verify(const std::vector<BigInt>& coeffs, int m, int n) {
  if (m < 1 || n < 2) throw std::invalid_argument("ptoe_verify: need m >= 1 and n >= 2");
  return ptoe_verify(power_sums_from_coeffs(coeffs, n + 1), coeffs, m, n);
}

static std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

BurnsideReport burnside_check(const IntMatrix& adj, int walk_len) {
  if (walk_len < 3) throw std::invalid_argument("burnside_check: walk length must be >= 3");
  for (int i = 0; i < adj.order(); ++i) {
    if (adj.at(i, i) != 0) throw std::invalid_argument("burnside_check: diagonal must be zero");
    for (int j = 0; j < adj.order(); ++j) {
      const auto v = adj.at(i, j);
      if ((v != 0 && v != 1) || v != adj.at(j, i))
        throw std::invalid_argument("burnside_check: not an undirected 0/1 adjacency");
    }
  }
  BurnsideReport rep;
  rep.walk_len = walk_len;
  rep.modulus = 2 * walk_len;
  rep.lhs = 0;
  for (int d = 1; d <= walk_len; ++d)
    if (walk_len % d == 0) rep.lhs += totient(walk_len / d) * trace_power(adj, d);
  rep.rhs = (walk_len % 2 == 1) ? BigInt(0) : BigInt(-(walk_len / 2)) * walk_count(adj, walk_len / 2);
  BigInt diff = (rep.lhs - rep.rhs) % rep.modulus;
  rep.passed = (diff == 0);
  return rep;
}

}  // namespace char2lift
