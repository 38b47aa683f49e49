#include "heunconv/scaled_real.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "heunconv/errors.hpp"

namespace heunconv {

namespace {

constexpr double kLog10Of2 = 0.30102999566398119521;

}  // namespace

ScaledReal::ScaledReal(double value) {
  if (!std::isfinite(value)) throw DomainError("ScaledReal: non-finite value");
  if (value == 0.0) return;
  int e = 0;
  const double f = std::frexp(value, &e);
  sign_ = f < 0 ? -1 : 1;
  mantissa_ = 2.0 * std::fabs(f);
  exp2_ = e - 1;
}

ScaledReal ScaledReal::from_parts(double mantissa, std::int64_t exp2) {
  ScaledReal r(mantissa);
  if (!r.is_zero()) r.exp2_ += exp2;
  return r;
}

ScaledReal ScaledReal::pow10(std::int64_t k) {
  const ScaledReal p = pow(ScaledReal(10.0), k < 0 ? -k : k);
  if (k >= 0) return p;
  // 1/p = (1/m) * 2^-e, one rounding.
  return from_parts(1.0 / p.mantissa_, -p.exp2_);
}

ScaledReal ScaledReal::parse(std::string_view text) {
  const auto epos = text.find_first_of("eE");
  const std::string_view head = text.substr(0, epos);
  double m = 0.0;
  const auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), m);
  if (ec != std::errc() || p != head.data() + head.size()) {
    throw DomainError("ScaledReal::parse: bad mantissa in '" + std::string(text) + "'");
  }
  std::int64_t e10 = 0;
  if (epos != std::string_view::npos) {
    std::string_view tail = text.substr(epos + 1);
    if (!tail.empty() && tail.front() == '+') tail.remove_prefix(1);
    const auto [q, ec2] = std::from_chars(tail.data(), tail.data() + tail.size(), e10);
    if (ec2 != std::errc() || q != tail.data() + tail.size()) {
      throw DomainError("ScaledReal::parse: bad exponent in '" + std::string(text) + "'");
    }
  }
  return ScaledReal(m) * pow10(e10);
}

double ScaledReal::to_double() const {
  if (is_zero()) return 0.0;
  if (exp2_ > std::numeric_limits<double>::max_exponent) return sign_ * HUGE_VAL;
  if (exp2_ < std::numeric_limits<double>::min_exponent - 60) return sign_ * 0.0;
  return sign_ * std::ldexp(mantissa_, static_cast<int>(exp2_));
}

double ScaledReal::log2_abs() const {
  if (is_zero()) return -HUGE_VAL;
  return static_cast<double>(exp2_) + std::log2(mantissa_);
}

double ScaledReal::log10_abs() const { return log2_abs() * kLog10Of2; }

ScaledReal ScaledReal::operator-() const {
  ScaledReal r = *this;
  r.sign_ = -r.sign_;
  return r;
}

ScaledReal& ScaledReal::operator+=(const ScaledReal& y) {
  if (y.is_zero()) return *this;
  if (is_zero()) return *this = y;
  const ScaledReal& big = exp2_ >= y.exp2_ ? *this : y;
  const ScaledReal& small = exp2_ >= y.exp2_ ? y : *this;
  const std::int64_t diff = big.exp2_ - small.exp2_;
  if (diff > kMantissaBits) return *this = big;
  const double sum = big.sign_ * big.mantissa_ +
                     small.sign_ * std::ldexp(small.mantissa_, -static_cast<int>(diff));
  return *this = from_parts(sum, big.exp2_);
}

ScaledReal& ScaledReal::operator-=(const ScaledReal& y) { return *this += -y; }

ScaledReal& ScaledReal::operator*=(const ScaledReal& y) {
  if (is_zero() || y.is_zero()) return *this = ScaledReal();
  return *this = from_parts(sign_ * y.sign_ * mantissa_ * y.mantissa_, exp2_ + y.exp2_);
}

std::strong_ordering operator<=>(const ScaledReal& x, const ScaledReal& y) {
  if (x.sign_ != y.sign_) return x.sign_ <=> y.sign_;
  if (x.is_zero()) return std::strong_ordering::equal;
  std::strong_ordering mag = x.exp2_ <=> y.exp2_;
  if (mag == 0) {
    mag = x.mantissa_ < y.mantissa_   ? std::strong_ordering::less
          : x.mantissa_ > y.mantissa_ ? std::strong_ordering::greater
                                      : std::strong_ordering::equal;
  }
  return x.sign_ > 0 ? mag : 0 <=> mag;
}

std::string ScaledReal::to_sci(int digits) const {
  using boost::multiprecision::cpp_int;
  if (digits < 1) throw DomainError("to_sci: digits must be >= 1");
  if (is_zero()) return "0";

  // |x| = M * 2^e2 with M a 53-bit integer; write it as N * 10^shift exactly.
  const auto M = static_cast<std::uint64_t>(std::ldexp(mantissa_, kMantissaBits - 1));
  const std::int64_t e2 = exp2_ - (kMantissaBits - 1);
  cpp_int N = M;
  std::int64_t shift = 0;
  if (e2 >= 0) {
    N <<= static_cast<unsigned>(e2);
  } else {
    N *= boost::multiprecision::pow(cpp_int(5), static_cast<unsigned>(-e2));
    shift = e2;
  }
  std::string s = N.str();
  std::int64_t exponent = static_cast<std::int64_t>(s.size()) - 1 + shift;

  const auto keep = static_cast<std::size_t>(digits);
  if (s.size() <= keep) {
    s.append(keep - s.size(), '0');
  } else {
    const char first_dropped = s[keep];
    const bool rest_nonzero =
        std::any_of(s.begin() + static_cast<std::ptrdiff_t>(keep) + 1, s.end(),
                    [](char c) { return c != '0'; });
    s.resize(keep);
    const bool odd = (s.back() - '0') % 2 == 1;
    const bool up = first_dropped > '5' || (first_dropped == '5' && (rest_nonzero || odd));
    if (up) {
      int i = static_cast<int>(keep) - 1;
      while (i >= 0 && s[static_cast<std::size_t>(i)] == '9') s[static_cast<std::size_t>(i--)] = '0';
      if (i < 0) {
        s.insert(s.begin(), '1');
        s.pop_back();
        ++exponent;
      } else {
        ++s[static_cast<std::size_t>(i)];
      }
    }
  }

  std::string out;
  if (sign_ < 0) out.push_back('-');
  out.push_back(s[0]);
  if (keep > 1) {
    out.push_back('.');
    out.append(s, 1, std::string::npos);
  }
  out.push_back('e');
  out.push_back(exponent < 0 ? '-' : '+');
  out += std::to_string(exponent < 0 ? -exponent : exponent);
  return out;
}

ScaledReal abs(const ScaledReal& x) { return x.sign() < 0 ? -x : x; }

ScaledReal pow(ScaledReal base, std::int64_t n) {
  if (n < 0) throw DomainError("pow: negative exponent");
  ScaledReal result(1.0);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

ScaledReal sr_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k || n > 1'000'000) {
    throw DomainError("sr_binomial: requires 0 <= k <= n <= 10^6");
  }
  k = std::min(k, n - k);
  ScaledReal r(1.0);
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= ScaledReal(static_cast<double>(n - k + i) / static_cast<double>(i));
  }
  return r;
}

}  // namespace heunconv
