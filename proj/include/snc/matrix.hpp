// Exact integer scalar and dense matrix types used throughout the library.
//
// All homological computations are done over the integers with arbitrary
// precision (intermediate entries of Smith reductions can blow up far past
// 64 bits), so the Eigen matrices are templated on a thin wrapper around
// boost::multiprecision::cpp_int.

#ifndef SNC_MATRIX_HPP
#define SNC_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace snc {

/// Arbitrary-precision signed integer with the minimal operator surface
/// Eigen needs. The wrapper exists because cpp_int's own converting
/// constructors collide with Eigen expression types during overload
/// resolution.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : v_(v) {}
  BigInt(long v) : v_(v) {}
  BigInt(long long v) : v_(v) {}
  explicit BigInt(const std::string& s) : v_(s) {}
  explicit BigInt(boost::multiprecision::cpp_int v) : v_(std::move(v)) {}

  const boost::multiprecision::cpp_int& value() const { return v_; }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  /// Truncated division, as for built-in integers.
  BigInt& operator/=(const BigInt& o) { v_ /= o.v_; return *this; }
  BigInt& operator%=(const BigInt& o) { v_ %= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
  BigInt operator-() const { return BigInt(-v_); }

  friend bool operator==(const BigInt& a, const BigInt& b) = default;
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.v_ < b.v_; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  bool is_zero() const { return v_.is_zero(); }
  std::string str() const { return v_.str(); }

  friend BigInt abs(const BigInt& a) { return BigInt(boost::multiprecision::abs(a.v_)); }
  friend BigInt gcd(const BigInt& a, const BigInt& b) {
    return BigInt(boost::multiprecision::gcd(a.v_, b.v_));
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& x);

 private:
  boost::multiprecision::cpp_int v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& x);

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using Rational = boost::multiprecision::cpp_rational;

/// True iff every entry of m is zero.
bool is_zero_matrix(const IntMatrix& m);

}  // namespace snc

namespace Eigen {

template <>
struct NumTraits<snc::BigInt> {
  typedef snc::BigInt Real;
  typedef snc::BigInt NonInteger;
  typedef snc::BigInt Nested;
  typedef snc::BigInt Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 30,
    MulCost = 60,
  };
  static inline Real epsilon() { return snc::BigInt(0); }
  static inline Real dummy_precision() { return snc::BigInt(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SNC_MATRIX_HPP
