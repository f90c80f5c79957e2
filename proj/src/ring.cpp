#include "char2lift/ring.hpp"

#include <bit>

namespace char2lift {

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is a binomial prefix
  }
  return r;
}

static void check_bits(int bits) {
  if (bits < 1 || bits > kMaxWordBits)
    throw RingError("modulus exponent out of machine-word range [1, 63]");
}

Residue::Residue(std::uint64_t value, int bits) : bits_(bits) {
  check_bits(bits);
  v_ = value & detail::word_mask(bits);
}

Residue Residue::from_int(const BigInt& value, int bits) {
  check_bits(bits);
  BigInt m = BigInt(1) << bits;
  BigInt r = value % m;
  if (r < 0) r += m;
  return Residue(r.convert_to<std::uint64_t>(), bits);
}

Residue Residue::from_int(std::int64_t value, int bits) {
  return from_int(BigInt(value), bits);
}

Residue Residue::reduced(int target_bits) const {
  if (target_bits > bits_) throw RingError("cannot widen a residue");
  return Residue(v_, target_bits);
}

static void check_same(int a, int b) {
  if (a != b) throw RingError("mixed moduli in residue arithmetic");
}

Residue operator+(const Residue& a, const Residue& b) {
  check_same(a.bits_, b.bits_);
  return Residue(a.v_ + b.v_, a.bits_);
}

Residue operator-(const Residue& a, const Residue& b) {
  check_same(a.bits_, b.bits_);
  return Residue(a.v_ - b.v_, a.bits_);
}

Residue operator*(const Residue& a, const Residue& b) {
  check_same(a.bits_, b.bits_);
  return Residue(a.v_ * b.v_, a.bits_);
}

Residue Residue::operator-() const { return Residue(0 - v_, bits_); }

BigResidue::BigResidue(BigInt value, int bits) : bits_(bits) {
  if (bits < 1) throw RingError("modulus exponent must be >= 1");
  BigInt m = BigInt(1) << bits;
  v_ = value % m;
  if (v_ < 0) v_ += m;
}

BigResidue BigResidue::reduced(int target_bits) const {
  if (target_bits > bits_) throw RingError("cannot widen a residue");
  return BigResidue(v_, target_bits);
}

BigResidue operator+(const BigResidue& a, const BigResidue& b) {
  check_same(a.bits_, b.bits_);
  return BigResidue(a.v_ + b.v_, a.bits_);
}

BigResidue operator-(const BigResidue& a, const BigResidue& b) {
  check_same(a.bits_, b.bits_);
  return BigResidue(a.v_ - b.v_, a.bits_);
}

BigResidue operator*(const BigResidue& a, const BigResidue& b) {
  check_same(a.bits_, b.bits_);
  return BigResidue(a.v_ * b.v_, a.bits_);
}

BigResidue BigResidue::operator-() const { return BigResidue(-v_, bits_); }

std::int64_t Val2::value() const {
  if (infinite_) throw RingError("valuation is infinite");
  return v_;
}

std::string Val2::to_string() const {
  return infinite_ ? "inf" : std::to_string(v_);
}

Val2 v2(const BigInt& a) {
  if (a == 0) return Val2::infinity();
  return Val2::of(static_cast<std::int64_t>(boost::multiprecision::lsb(abs(a))));
}

Val2 v2(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("v2: zero denominator");
  if (num == 0) return Val2::infinity();
  return Val2::of(v2(num).value() - v2(den).value());
}

Val2 v2(const BigRat& q) {
  return v2(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

std::int64_t v2_factorial(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("v2_factorial of negative argument");
  return k - std::popcount(static_cast<std::uint64_t>(k));
}

std::vector<std::uint64_t> residues_mod(const std::vector<BigInt>& coeffs, int e) {
  if (e < 2) throw std::invalid_argument("residues_mod: e must be >= 2");
  if (e > kMaxWordBits) throw std::invalid_argument("residues_mod: e exceeds word width");
  if (coeffs.size() < static_cast<std::size_t>(e) + 1)
    throw std::invalid_argument("residues_mod: need coefficients up to index e");
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(e) - 1);
  for (int k = 2; k <= e; ++k)
    out.push_back(Residue::from_int(coeffs[static_cast<std::size_t>(k)], e).value());
  return out;
}

}  // namespace char2lift
