#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigmalab {

// Exact signed integer used for every index value. Arbitrary precision, so no
// evaluation can overflow silently.
// Expression templates are off so generic code can deduce the scalar type.
using IndexValue = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                                 boost::multiprecision::et_off>;

// Exact rational, used where a formula divides (the average-degree bound).
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline std::string to_string(const IndexValue& v) { return v.str(); }

// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  const IndexValue num = boost::multiprecision::numerator(q);
  const IndexValue den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

// Two's-complement 32-bit integer whose every operation wraps modulo 2^32.
// Only used to replay how a program with `int` arithmetic would have produced
// a printed value; never used for ground truth.
class Wrap32 {
 public:
  constexpr Wrap32() = default;
  constexpr Wrap32(std::int64_t v) : bits_(static_cast<std::uint32_t>(v)) {}  // NOLINT: implicit by design of the scalar concept

  static Wrap32 from_exact(const IndexValue& v) {
    // Low 32 bits of the two's-complement representation.
    const IndexValue mod = IndexValue(1) << 32;
    IndexValue r = v % mod;
    if (r < 0) r += mod;
    Wrap32 w;
    w.bits_ = static_cast<std::uint32_t>(r);
    return w;
  }

  constexpr std::int32_t value() const { return static_cast<std::int32_t>(bits_); }

  friend constexpr Wrap32 operator+(Wrap32 a, Wrap32 b) { return raw(a.bits_ + b.bits_); }
  friend constexpr Wrap32 operator-(Wrap32 a, Wrap32 b) { return raw(a.bits_ - b.bits_); }
  friend constexpr Wrap32 operator*(Wrap32 a, Wrap32 b) { return raw(a.bits_ * b.bits_); }
  friend constexpr Wrap32 operator-(Wrap32 a) { return raw(0u - a.bits_); }
  Wrap32& operator+=(Wrap32 o) { return *this = *this + o; }
  Wrap32& operator-=(Wrap32 o) { return *this = *this - o; }
  Wrap32& operator*=(Wrap32 o) { return *this = *this * o; }
  friend constexpr bool operator==(Wrap32 a, Wrap32 b) { return a.bits_ == b.bits_; }

 private:
  static constexpr Wrap32 raw(std::uint32_t bits) {
    Wrap32 w;
    w.bits_ = bits;
    return w;
  }
  std::uint32_t bits_ = 0;
};

inline IndexValue to_exact(const IndexValue& v) { return v; }
inline IndexValue to_exact(Wrap32 v) { return IndexValue(v.value()); }

template <class Scalar>
Scalar square(const Scalar& x) {
  return x * x;
}

template <class Scalar>
Scalar cube(const Scalar& x) {
  return x * x * x;
}

}  // namespace sigmalab
