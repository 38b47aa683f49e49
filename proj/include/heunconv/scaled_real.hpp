#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace heunconv {

/// Real number sign * mantissa * 2^exp2 with mantissa in [1, 2) and a 64-bit exponent.
///
/// The mantissa is a double, so within the double range every operation rounds exactly
/// like the corresponding IEEE operation; outside it the exponent just keeps growing.
/// Zero is canonical: sign 0, mantissa 0, exp2 0.
class ScaledReal {
 public:
  /// Width of the mantissa in bits.
  static constexpr int kMantissaBits = 53;

  constexpr ScaledReal() = default;
  /// Throws DomainError for infinities and NaN.
  explicit ScaledReal(double value);

  /// sign * mantissa * 2^exp2 for an arbitrary finite mantissa; renormalizes.
  static ScaledReal from_parts(double mantissa, std::int64_t exp2);
  /// Inverse of to_sci (also accepts anything std::from_chars reads as a double,
  /// with an exponent of any size).
  static ScaledReal parse(std::string_view text);
  static ScaledReal pow10(std::int64_t k);

  int sign() const { return sign_; }
  double mantissa() const { return mantissa_; }
  std::int64_t exp2() const { return exp2_; }
  bool is_zero() const { return sign_ == 0; }

  /// Nearest double; +-inf when out of range.
  double to_double() const;
  /// log2|x|, -inf for zero.
  double log2_abs() const;
  double log10_abs() const;

  /// Decimal scientific notation "d.ddde+X" with `digits` significant digits,
  /// rounded half-to-even from the exact binary value. Zero prints as "0".
  std::string to_sci(int digits) const;

  ScaledReal operator-() const;
  ScaledReal& operator+=(const ScaledReal& y);
  ScaledReal& operator-=(const ScaledReal& y);
  ScaledReal& operator*=(const ScaledReal& y);

  friend ScaledReal operator+(ScaledReal x, const ScaledReal& y) { return x += y; }
  friend ScaledReal operator-(ScaledReal x, const ScaledReal& y) { return x -= y; }
  friend ScaledReal operator*(ScaledReal x, const ScaledReal& y) { return x *= y; }

  friend bool operator==(const ScaledReal&, const ScaledReal&) = default;
  friend std::strong_ordering operator<=>(const ScaledReal& x, const ScaledReal& y);

 private:
  int sign_ = 0;
  double mantissa_ = 0.0;
  std::int64_t exp2_ = 0;
};

ScaledReal abs(const ScaledReal& x);
ScaledReal pow(ScaledReal base, std::int64_t n);

inline ScaledReal sr_add(const ScaledReal& x, const ScaledReal& y) { return x + y; }
inline ScaledReal sr_mul(const ScaledReal& x, const ScaledReal& y) { return x * y; }
inline ScaledReal sr_neg(const ScaledReal& x) { return -x; }
inline ScaledReal sr_abs(const ScaledReal& x) { return abs(x); }
inline std::strong_ordering sr_cmp(const ScaledReal& x, const ScaledReal& y) { return x <=> y; }
inline std::string sr_to_sci(const ScaledReal& x, int digits) { return x.to_sci(digits); }

/// C(n, k) by the multiplicative recurrence; 0 <= k <= n <= 10^6, DomainError otherwise.
ScaledReal sr_binomial(std::int64_t n, std::int64_t k);

}  // namespace heunconv
