#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "char2lift/bigint.hpp"
#include "char2lift/errors.hpp"
#include "char2lift/ring.hpp"

namespace char2lift {

// Dense square matrix with small integer entries (adjacency matrices and
// their signed relatives).  Derived quantities that can grow (characteristic
// coefficients, walk counts, traces of powers) are computed in BigInt.
class IntMatrix {
 public:
  explicit IntMatrix(int n);

  int order() const { return n_; }
  std::int64_t at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, std::int64_t v) { a_[idx(i, j)] = v; }

  static IntMatrix identity(int n);
  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  std::size_t idx(int i, int j) const;
  int n_;
  std::vector<std::int64_t> a_;
};

// J - 2M where J is the all-ones matrix.
IntMatrix jm2a_matrix(const IntMatrix& m);

// Coefficients c_0..c_n of det(xI - m) = sum_k c_k x^{n-k}, c_0 = 1,
// computed division-free (Berkowitz), exact integers.
std::vector<BigInt> charpoly(const IntMatrix& m);
// Same with every ring operation in Z/2^bits.
std::vector<std::uint64_t> charpoly_mod(const IntMatrix& m, int bits);

// Newton's identity with c_0 = 1 and zero padding past the true degree:
//   p_k = -(k c_k + sum_{i=1}^{k-1} c_i p_{k-i}),
// division-free, so it is valid verbatim in Z/2^M.  Returns p_1..p_kmax.
std::vector<BigInt> power_sums_from_coeffs(const std::vector<BigInt>& coeffs, int kmax);
std::vector<std::uint64_t> power_sums_from_coeffs_mod(const std::vector<std::uint64_t>& coeffs,
                                                      int kmax, int bits);

// Inverse direction; divides by k, so it only exists over exact integers.
// Throws ExactnessError when a division is not exact.
std::vector<BigInt> coeffs_from_power_sums(const std::vector<BigInt>& psums, int kmax);

// 1^T m^k 1 by k matrix-vector products, exact.
BigInt walk_count(const IntMatrix& m, int k);
// tr(m^k), exact.
BigInt trace_power(const IntMatrix& m, int k);

// Coefficients c_0..c_kmax of Char_{J-2A} mod 2^e from truncated data of A:
//   c_k(Char_{J-2A}) = (-1)^k (2^k c_k(A) + 2^{k-1} sum_{i=1}^k c_{k-i}(A) w_{i-1})
// with w_i = 1^T A^i 1.  Needs char_a.depth() >= kmax, walks w_0..w_{kmax-1}
// and a working modulus of at least e+1 bits so the halved term keeps e bits.
std::vector<std::uint64_t> jm2a_coeffs(const TruncSeries& char_a,
                                       const std::vector<Residue>& walks, int kmax, int e);

struct PtoeCheck {
  std::string cond;
  int k = 0;
  bool ok = false;
};

// Divisibility transfer from power sums to coefficients: when
// p_k == 0 mod 2^m for k in {1..n-1, n+1}, then 2^{m - v2(k!)} | c_k for
// those k and c_0 p_n == -n c_n mod 2^{m - v2((n-1)!)}.  Verifies both the
// hypothesis and every conclusion for the polynomial with exact coefficients
// c_0..c_deg (deg >= n+1).
struct PtoeReport {
  bool hypothesis_ok = false;
  bool passed = false;
  std::vector<PtoeCheck> checks;
};
// psums supplies p_1..p_{n+1}; coeffs is zero-padded past its length.
PtoeReport ptoe_verify(const std::vector<BigInt>& psums, const std::vector<BigInt>& coeffs,
                       int m, int n);
// Convenience form deriving the power sums from the coefficients.
PtoeReport ptoe_verify(const std::vector<BigInt>& coeffs, int m, int n);

// Self-converse walk congruence for an undirected graph with adjacency adj:
//   sum_{d | N} phi(N/d) tr(A^d)  ==  0 (N odd)  /  -(N/2) 1^T A^{N/2} 1 (N even)
// modulo 2N.
struct BurnsideReport {
  int walk_len = 0;
  BigInt lhs;
  BigInt rhs;
  BigInt modulus;
  bool passed = false;
};
BurnsideReport burnside_check(const IntMatrix& adj, int walk_len);

}  // namespace char2lift
