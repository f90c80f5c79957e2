#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "char2lift/bigint.hpp"
#include "char2lift/errors.hpp"

namespace char2lift {

// Widest modulus exponent served by the machine-word backend.  Wider moduli
// go through BigResidue.
inline constexpr int kMaxWordBits = 63;

namespace detail {
inline std::uint64_t word_mask(int bits) {
  return (1ull << bits) - 1ull;  // bits <= 63
}
}  // namespace detail

// Element of Z/2^M, 1 <= M <= kMaxWordBits, canonical value in [0, 2^M).
// Addition and multiplication are plain wrapping word operations followed by
// a mask, so every result is exact in the quotient ring.
class Residue {
 public:
  Residue() : v_(0), bits_(1) {}
  Residue(std::uint64_t value, int bits);

  static Residue zero(int bits) { return Residue(0, bits); }
  static Residue one(int bits) { return Residue(1, bits); }
  // Reduces an arbitrary integer (negatives included) into [0, 2^bits).
  static Residue from_int(const BigInt& value, int bits);
  static Residue from_int(std::int64_t value, int bits);

  std::uint64_t value() const { return v_; }
  int bits() const { return bits_; }

  // Image in Z/2^target_bits for target_bits <= bits().
  Residue reduced(int target_bits) const;

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue operator-() const;
  bool operator==(const Residue& o) const { return bits_ == o.bits_ && v_ == o.v_; }
  bool operator!=(const Residue& o) const { return !(*this == o); }

 private:
  std::uint64_t v_;
  int bits_;
};

// Same ring, arbitrary modulus exponent.  Used as the cross-check backend
// and for moduli wider than kMaxWordBits.
class BigResidue {
 public:
  BigResidue() : v_(0), bits_(1) {}
  BigResidue(BigInt value, int bits);

  static BigResidue zero(int bits) { return BigResidue(BigInt(0), bits); }
  static BigResidue one(int bits) { return BigResidue(BigInt(1), bits); }
  static BigResidue from_int(const BigInt& value, int bits) { return BigResidue(value, bits); }
  static BigResidue from_int(std::int64_t value, int bits) { return BigResidue(BigInt(value), bits); }

  const BigInt& value() const { return v_; }
  int bits() const { return bits_; }
  BigResidue reduced(int target_bits) const;

  friend BigResidue operator+(const BigResidue& a, const BigResidue& b);
  friend BigResidue operator-(const BigResidue& a, const BigResidue& b);
  friend BigResidue operator*(const BigResidue& a, const BigResidue& b);
  BigResidue operator-() const;
  bool operator==(const BigResidue& o) const { return bits_ == o.bits_ && v_ == o.v_; }
  bool operator!=(const BigResidue& o) const { return !(*this == o); }

 private:
  BigInt v_;
  int bits_;
};

// Value of the 2-adic valuation: a (signed) integer or +infinity (for 0).
class Val2 {
 public:
  static Val2 infinity() { return Val2(true, 0); }
  static Val2 of(std::int64_t v) { return Val2(false, v); }

  bool is_infinity() const { return infinite_; }
  std::int64_t value() const;  // throws RingError when infinite

  bool operator==(const Val2& o) const {
    return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
  }
  bool operator!=(const Val2& o) const { return !(*this == o); }
  bool operator<(const Val2& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const Val2& o) const { return *this < o || *this == o; }

  static Val2 min(const Val2& a, const Val2& b) { return a < b ? a : b; }
  std::string to_string() const;

 private:
  Val2(bool inf, std::int64_t v) : infinite_(inf), v_(v) {}
  bool infinite_;
  std::int64_t v_;
};

// 2-adic valuation of an integer (infinity for 0).
Val2 v2(const BigInt& a);
// 2-adic valuation of the rational num/den; den must be nonzero.
Val2 v2(const BigInt& num, const BigInt& den);
Val2 v2(const BigRat& q);

// v2(k!) by Legendre's formula: k - popcount(k).
std::int64_t v2_factorial(std::int64_t k);

// Truncated top-anchored polynomial data over Z/2^M: coeff(k) is the
// coefficient of x^{deg-k} of a monic polynomial whose (possibly enormous)
// degree is tracked by the caller.  Only coefficients 0..depth are kept, so
// products are truncated convolutions.  For a polynomial of degree < depth
// the tail entries are zero padding, which keeps products and Newton sums
// correct for every index that is kept.
template <typename R>
class TruncSeriesT {
 public:
  TruncSeriesT() : c_(1, R::zero(1)) {}
  TruncSeriesT(int depth, int bits);
  static TruncSeriesT monic(int depth, int bits);

  int depth() const { return static_cast<int>(c_.size()) - 1; }
  int bits() const { return c_.front().bits(); }

  const R& coeff(int k) const;
  void set_coeff(int k, const R& v);

  bool operator==(const TruncSeriesT& o) const { return c_ == o.c_; }

 private:
  std::vector<R> c_;
};

using TruncSeries = TruncSeriesT<Residue>;
using BigTruncSeries = TruncSeriesT<BigResidue>;

template <typename R>
TruncSeriesT<R>::TruncSeriesT(int depth, int bits) {
  if (depth < 0) throw SizeError("series depth must be >= 0");
  c_.assign(static_cast<std::size_t>(depth) + 1, R::zero(bits));
}

template <typename R>
TruncSeriesT<R> TruncSeriesT<R>::monic(int depth, int bits) {
  TruncSeriesT s(depth, bits);
  s.c_[0] = R::one(bits);
  return s;
}

template <typename R>
const R& TruncSeriesT<R>::coeff(int k) const {
  if (k < 0 || k > depth()) throw SizeError("series coefficient index out of range");
  return c_[static_cast<std::size_t>(k)];
}

template <typename R>
void TruncSeriesT<R>::set_coeff(int k, const R& v) {
  if (k < 0 || k > depth()) throw SizeError("series coefficient index out of range");
  if (v.bits() != bits()) throw RingError("series coefficient has mismatched modulus");
  c_[static_cast<std::size_t>(k)] = v;
}

// Truncated product; depths and moduli must match.
template <typename R>
TruncSeriesT<R> series_mul(const TruncSeriesT<R>& a, const TruncSeriesT<R>& b) {
  if (a.depth() != b.depth()) throw SizeError("series_mul: depth mismatch");
  if (a.bits() != b.bits()) throw RingError("series_mul: modulus mismatch");
  TruncSeriesT<R> out(a.depth(), a.bits());
  for (int m = 0; m <= a.depth(); ++m) {
    R acc = R::zero(a.bits());
    for (int k = 0; k <= m; ++k) acc = acc + a.coeff(k) * b.coeff(m - k);
    out.set_coeff(m, acc);
  }
  return out;
}

// a^n by binary exponentiation; n is an arbitrary-precision nonnegative
// integer (repeat counts can be huge while the truncated data stays small).
template <typename R>
TruncSeriesT<R> series_pow(const TruncSeriesT<R>& a, BigInt n) {
  if (n < 0) throw RingError("series_pow: negative exponent");
  TruncSeriesT<R> acc = TruncSeriesT<R>::monic(a.depth(), a.bits());
  TruncSeriesT<R> base = a;
  while (n > 0) {
    if (boost::multiprecision::bit_test(n, 0)) acc = series_mul(acc, base);
    n >>= 1;
    if (n > 0) base = series_mul(base, base);
  }
  return acc;
}

// (c_2 mod 2^e, ..., c_e mod 2^e) from exact coefficients c_0..c_n, n >= e.
std::vector<std::uint64_t> residues_mod(const std::vector<BigInt>& coeffs, int e);

}  // namespace char2lift
