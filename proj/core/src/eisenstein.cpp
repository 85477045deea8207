#include "conesphere/eisenstein.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace conesphere {

namespace {

// canonical "a+bw" rendering shared by the integer and rational types
template <typename Scalar>
std::string render(const Scalar& a, const Scalar& b, const std::string& (*fmt)(const Scalar&, std::string&)) {
  std::string buf;
  if (b == 0) return fmt(a, buf);
  std::string out;
  if (a != 0) out += fmt(a, buf);
  if (b > 0 && a != 0) out += "+";
  if (b == -1) {
    out += "-";
  } else if (b != 1) {
    out += fmt(b, buf);
  }
  out += "w";
  return out;
}

const std::string& fmt_int(const BigInt& v, std::string& buf) {
  buf = v.str();
  return buf;
}

const std::string& fmt_rat(const BigRat& v, std::string& buf) {
  buf = rational_str(v);
  return buf;
}

constexpr double kHalfSqrt3 = 0.86602540378443864676;

}  // namespace

std::string EisInt::str() const { return render<BigInt>(a, b, fmt_int); }

std::complex<double> EisInt::embed() const {
  double x = a.convert_to<double>();
  double y = b.convert_to<double>();
  return {x - 0.5 * y, kHalfSqrt3 * y};
}

EisFrac operator/(const EisFrac& x, const EisFrac& y) { return x * y.inverse(); }

EisFrac EisFrac::inverse() const {
  BigRat n = norm();
  if (n == 0) throw std::domain_error("division by zero in Q(w)");
  EisFrac c = conj();
  return {c.a / n, c.b / n};
}

bool EisFrac::is_integral() const {
  return boost::multiprecision::denominator(a) == 1 && boost::multiprecision::denominator(b) == 1;
}

EisInt EisFrac::to_integral() const {
  if (!is_integral()) throw std::domain_error("value not in Z[w]: " + str());
  return {boost::multiprecision::numerator(a), boost::multiprecision::numerator(b)};
}

std::string EisFrac::str() const { return render<BigRat>(a, b, fmt_rat); }

std::complex<double> EisFrac::embed() const {
  double x = a.convert_to<double>();
  double y = b.convert_to<double>();
  return {x - 0.5 * y, kHalfSqrt3 * y};
}

EisInt UnitSixth::value() const {
  static const std::array<EisInt, 6> table = {
      EisInt{1, 0}, EisInt{1, 1}, EisInt{0, 1}, EisInt{-1, 0}, EisInt{-1, -1}, EisInt{0, -1}};
  return table[k];
}

std::optional<UnitSixth> UnitSixth::from(const EisInt& x) {
  for (int k = 0; k < 6; ++k) {
    if (UnitSixth(k).value() == x) return UnitSixth(k);
  }
  return std::nullopt;
}

std::string rational_str(const BigRat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigRat parse_rational(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + s + "'"); };
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) throw bad();
  std::string trimmed = s.substr(first, s.find_last_not_of(" \t") - first + 1);
  auto slash = trimmed.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(trimmed));
    BigInt num(trimmed.substr(0, slash));
    BigInt den(trimmed.substr(slash + 1));
    if (den == 0) throw bad();
    return BigRat(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

}  // namespace conesphere
