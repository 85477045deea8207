#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace conesphere {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Element of the ring Z[w], w = exp(2*pi*i/3), stored as a + b*w.
// Products reduce through w^2 = -1 - w.
struct EisInt {
  BigInt a{0};
  BigInt b{0};

  EisInt() = default;
  EisInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit EisInt(long x) : a(x) {}

  static EisInt omega() { return {0, 1}; }
  // sqrt(-3) = 1 + 2w; squares to -3
  static EisInt sqrt_minus_three() { return {1, 2}; }

  friend EisInt operator+(const EisInt& x, const EisInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend EisInt operator-(const EisInt& x, const EisInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend EisInt operator-(const EisInt& x) { return {-x.a, -x.b}; }
  friend EisInt operator*(const EisInt& x, const EisInt& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  EisInt& operator+=(const EisInt& y) { a += y.a; b += y.b; return *this; }
  EisInt& operator-=(const EisInt& y) { a -= y.a; b -= y.b; return *this; }
  EisInt& operator*=(const EisInt& y) { *this = *this * y; return *this; }
  friend bool operator==(const EisInt& x, const EisInt& y) = default;

  [[nodiscard]] bool is_zero() const { return a == 0 && b == 0; }
  [[nodiscard]] EisInt conj() const { return {a - b, -b}; }
  [[nodiscard]] BigInt norm() const { return a * a - a * b + b * b; }
  [[nodiscard]] bool is_unit() const { return norm() == 1; }

  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::complex<double> embed() const;
};

// Element of the field Q(w): a + b*w with rational a, b.
struct EisFrac {
  BigRat a{0};
  BigRat b{0};

  EisFrac() = default;
  EisFrac(BigRat a_, BigRat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit EisFrac(long x) : a(x) {}
  EisFrac(const EisInt& x) : a(x.a), b(x.b) {}  // ring embeds in its field

  friend EisFrac operator+(const EisFrac& x, const EisFrac& y) { return {x.a + y.a, x.b + y.b}; }
  friend EisFrac operator-(const EisFrac& x, const EisFrac& y) { return {x.a - y.a, x.b - y.b}; }
  friend EisFrac operator-(const EisFrac& x) { return {-x.a, -x.b}; }
  friend EisFrac operator*(const EisFrac& x, const EisFrac& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend EisFrac operator/(const EisFrac& x, const EisFrac& y);
  EisFrac& operator+=(const EisFrac& y) { a += y.a; b += y.b; return *this; }
  EisFrac& operator-=(const EisFrac& y) { a -= y.a; b -= y.b; return *this; }
  EisFrac& operator*=(const EisFrac& y) { *this = *this * y; return *this; }
  EisFrac& operator/=(const EisFrac& y) { *this = *this / y; return *this; }
  friend bool operator==(const EisFrac& x, const EisFrac& y) = default;

  [[nodiscard]] bool is_zero() const { return a == 0 && b == 0; }
  [[nodiscard]] bool is_real() const { return b == 0; }
  [[nodiscard]] EisFrac conj() const { return {a - b, -b}; }
  [[nodiscard]] BigRat norm() const { return a * a - a * b + b * b; }
  [[nodiscard]] EisFrac inverse() const;
  // true when both coordinates are integers, i.e. the value lies in Z[w]
  [[nodiscard]] bool is_integral() const;
  [[nodiscard]] EisInt to_integral() const;  // pre: is_integral()

  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::complex<double> embed() const;
};

// One of the six units of Z[w]: value (1+w)^k = exp(i*pi*k/3), k in 0..5.
struct UnitSixth {
  int k{0};

  UnitSixth() = default;
  explicit UnitSixth(int k_) : k(((k_ % 6) + 6) % 6) {}

  [[nodiscard]] EisInt value() const;
  [[nodiscard]] UnitSixth inverse() const { return UnitSixth(6 - k); }
  friend UnitSixth operator*(UnitSixth x, UnitSixth y) { return UnitSixth(x.k + y.k); }
  friend bool operator==(UnitSixth x, UnitSixth y) = default;

  // recognizes exactly the six units of the ring
  static std::optional<UnitSixth> from(const EisInt& x);
};

std::string rational_str(const BigRat& q);
BigRat parse_rational(const std::string& s);  // "p/q" or "p"

}  // namespace conesphere
