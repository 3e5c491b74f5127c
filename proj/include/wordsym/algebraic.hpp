#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "wordsym/word.hpp"

namespace wordsym {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with int64 parts, reduced, positive denominator. Exponents
// |w|/p at desk scale stay far below the 64-bit range.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw contract_error("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  explicit Rational(std::int64_t n) : num(n), den(1) {}

  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

enum class Sign { negative, zero, positive };

// x^3 - 2x^2 - 1 at the rational u/v; only the sign is needed.
inline Sign mu_poly_sign(const BigInt& u, const BigInt& v) {
  BigInt val = u * u * u - 2 * u * u * v - v * v * v;
  if (val < 0) return Sign::negative;
  if (val > 0) return Sign::positive;
  return Sign::zero;
}

// Thresholds the paper compares exponents against:
//   rational q, q + r*sqrt(2), and 1 + 1/(3 - mu) with mu the unique real
//   root of x^3 - 2x^2 - 1. All comparisons are exact; no float decides.
class Threshold {
 public:
  enum class Kind { rational, sqrt2, ternary_mu };

  static Threshold from_rational(Rational q) { return Threshold(Kind::rational, q, Rational(0)); }
  // a + b*sqrt(2)
  static Threshold sqrt2_form(Rational a, Rational b) {
    if (b.num == 0) return from_rational(a);
    return Threshold(Kind::sqrt2, a, b);
  }
  static Threshold ternary_mu_form() { return Threshold(Kind::ternary_mu, Rational(0), Rational(0)); }

  Kind kind() const noexcept { return kind_; }

  std::string str() const {
    switch (kind_) {
      case Kind::rational:
        return a_.str();
      case Kind::sqrt2:
        return a_.str() + " + (" + b_.str() + ")*sqrt(2)";
      case Kind::ternary_mu:
        return "1 + 1/(3 - mu), mu^3 = 2 mu^2 + 1";
    }
    return "";
  }

  // x <= threshold, decided exactly.
  bool admits(const Rational& x) const {
    switch (kind_) {
      case Kind::rational:
        return x <= a_;
      case Kind::sqrt2: {
        // x - a vs b*sqrt(2); sign-aware squaring.
        BigInt d_num = BigInt(x.num) * a_.den - BigInt(a_.num) * x.den;
        BigInt d_den = BigInt(x.den) * a_.den;  // > 0
        BigInt b_num = b_.num, b_den = b_.den;
        bool d_neg = d_num < 0, b_neg = b_num < 0;
        if (d_neg && !b_neg) return true;
        if (!d_neg && b_neg) return false;
        // same sign (or d == 0 with b >= 0): compare squares
        BigInt lhs = d_num * d_num * b_den * b_den;
        BigInt rhs = 2 * b_num * b_num * d_den * d_den;
        if (!d_neg) return lhs <= rhs;
        return lhs >= rhs;  // both negative: |d| >= |b sqrt 2| means d <= b sqrt 2
      }
      case Kind::ternary_mu: {
        // threshold = 1 + 1/(3-mu) with mu in (2.20, 2.21), so threshold > 2.
        // For x > 1: x <= 1 + 1/(3-mu)  <=>  mu >= 3 - 1/(x-1),
        // decided by the sign of the minimal polynomial at that rational
        // (the polynomial is negative strictly below the root).
        if (x <= Rational(1)) return true;
        // x0 = 3 - 1/(x-1) = (3(num-den) - den) / (num-den)
        BigInt w = BigInt(x.num) - x.den;  // > 0
        BigInt u = 3 * w - x.den;
        Sign s = mu_poly_sign(u, w);
        return s != Sign::positive;  // mu >= x0  <=>  P(x0) <= 0
      }
    }
    return false;
  }

  // Certified rational enclosure [lo, hi] of the threshold value with
  // hi - lo <= 2^-precision_bits.
  std::pair<Rational, Rational> interval(int precision_bits = 48) const;

 private:
  Threshold(Kind k, Rational a, Rational b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  Rational a_;
  Rational b_;
};

namespace detail {

// Bisect p (sign-computable at rationals u/2^k) over [lo_num/2^0, hi] down to
// width 2^-bits. Returns numerators scaled by 2^bits.
template <typename SignAt>
inline std::pair<BigInt, BigInt> bisect_dyadic(std::int64_t lo, std::int64_t hi, int bits,
                                               SignAt sign_at) {
  BigInt a = lo, b = hi, scale = 1;  // invariant: sign(a/scale) <= 0 < sign(b/scale)
  if (sign_at(a, scale) == Sign::positive || sign_at(b, scale) != Sign::positive) {
    throw contract_error("bisect: no sign change on initial interval");
  }
  for (int i = 0; i < bits; ++i) {
    a *= 2;
    b *= 2;
    scale *= 2;
    BigInt mid = (a + b) / 2;
    if (sign_at(mid, scale) == Sign::positive) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return {a, b};
}

inline Rational dyadic_to_rational(const BigInt& num, int bits) {
  // num / 2^bits with bits small enough for int64 (bits <= 52 keeps us exact)
  std::int64_t n = static_cast<std::int64_t>(num);
  std::int64_t d = std::int64_t(1) << bits;
  return Rational(n, d);
}

}  // namespace detail

inline std::pair<Rational, Rational> Threshold::interval(int precision_bits) const {
  if (precision_bits < 1 || precision_bits > 52) {
    throw contract_error("threshold interval: precision out of range");
  }
  switch (kind_) {
    case Kind::rational:
      return {a_, a_};
    case Kind::sqrt2: {
      // enclose sqrt(2) in [s_lo, s_hi], then map through a + b*x (b > 0 for
      // the catalog constant; handle b < 0 by swapping).
      auto s = detail::bisect_dyadic(1, 2, precision_bits, [](const BigInt& u, const BigInt& v) {
        BigInt val = u * u - 2 * v * v;
        return val < 0 ? Sign::negative : (val > 0 ? Sign::positive : Sign::zero);
      });
      Rational s_lo = detail::dyadic_to_rational(s.first, precision_bits);
      Rational s_hi = detail::dyadic_to_rational(s.second, precision_bits);
      auto affine = [&](const Rational& x) {
        return Rational(a_.num * x.den * b_.den + b_.num * x.num * a_.den,
                        a_.den * b_.den * x.den);
      };
      Rational lo = affine(s_lo), hi = affine(s_hi);
      if (b_.num < 0) std::swap(lo, hi);
      return {lo, hi};
    }
    case Kind::ternary_mu: {
      auto m = detail::bisect_dyadic(2, 3, precision_bits, [](const BigInt& u, const BigInt& v) {
        return mu_poly_sign(u, v);
      });
      Rational mu_lo = detail::dyadic_to_rational(m.first, precision_bits);
      Rational mu_hi = detail::dyadic_to_rational(m.second, precision_bits);
      // 1 + 1/(3-x) is increasing for x < 3
      auto transform = [](const Rational& x) {
        // 1 + den/(3 den - num)
        std::int64_t d = 3 * x.den - x.num;
        return Rational(d + x.den, d);
      };
      return {transform(mu_lo), transform(mu_hi)};
    }
  }
  throw contract_error("threshold interval: unknown kind");
}

// The certified enclosure of mu itself (root of x^3 - 2x^2 - 1 in [2,3]).
inline std::pair<Rational, Rational> mu_interval(int precision_bits = 48) {
  auto m = detail::bisect_dyadic(2, 3, precision_bits,
                                 [](const BigInt& u, const BigInt& v) { return mu_poly_sign(u, v); });
  return {detail::dyadic_to_rational(m.first, precision_bits),
          detail::dyadic_to_rational(m.second, precision_bits)};
}

inline Threshold threshold_tm() { return Threshold::from_rational(Rational(2)); }
inline Threshold threshold_binary_rich() {
  return Threshold::sqrt2_form(Rational(2), Rational(1, 2));
}
inline Threshold threshold_ternary_rich() { return Threshold::ternary_mu_form(); }

inline Threshold threshold_by_name(const std::string& name) {
  if (name == "tm") return threshold_tm();
  if (name == "binary_rich") return threshold_binary_rich();
  if (name == "ternary_rich") return threshold_ternary_rich();
  // "p/q" or integer
  auto slash = name.find('/');
  try {
    if (slash == std::string::npos) {
      return Threshold::from_rational(Rational(std::stoll(name)));
    }
    return Threshold::from_rational(
        Rational(std::stoll(name.substr(0, slash)), std::stoll(name.substr(slash + 1))));
  } catch (const std::exception&) {
    throw spec_error("unsupported threshold: " + name);
  }
}

}  // namespace wordsym
