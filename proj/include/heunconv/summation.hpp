#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "heunconv/errors.hpp"
#include "heunconv/heun_params.hpp"
#include "heunconv/recurrence.hpp"
#include "heunconv/scaled_real.hpp"

namespace heunconv {

/// x~ = A x and y~ = B x^2 for the Heun constants A = (1+a)/a, B = -1/a.
struct DoubleSeriesArgs {
  double x_tilde = 0.0;
  double y_tilde = 0.0;
};

DoubleSeriesArgs double_series_args(double a, double x);

/// sum_{n=0}^{N} dbar_n x^n for dbar_{n+1} = ((1+a)/a) dbar_n - (1/a) dbar_{n-1},
/// dbar_0 = 1, dbar_1 = (1+a)/a. N is inclusive.
ScaledReal direct_sum(double a, double x, long N);

/// sum_{n=0}^{N} sum_{m=0}^{N} C(n+m, n) x~^n y~^m, outer n, inner m.
ScaledReal rect_double_sum(double a, double x, long N);

/// sum_{r=0}^{R} (x~ + y~)^r.
ScaledReal diagonal_sum(double a, double x, long R);
/// sum_{r=0}^{R} (|x~| + |y~|)^r.
ScaledReal abs_diagonal_sum(double a, double x, long R);

namespace detail {

template <typename Scalar>
Scalar leading_power(Scalar x, Scalar lambda) {
  using Real = real_t<Scalar>;
  const Real lr = std::real(lambda);
  const bool nonneg_integer = std::imag(std::complex<Real>(lambda)) == 0 && lr >= 0 &&
                              lr == std::floor(lr);
  if (nonneg_integer) return ipow(x, static_cast<long>(lr));
  if (x == Scalar(0)) throw DomainError("heun_series_sum: x = 0 with non-integer exponent");
  if constexpr (!is_complex_v<Scalar>) {
    if (x < 0) throw DomainError("heun_series_sum: x < 0 with non-integer exponent needs complex x");
  }
  return std::pow(x, lambda);
}

}  // namespace detail

/// sum_{n=0}^{N} d_n x^{n+lambda} for any three-term rule, d_0 = 1.
template <typename Scalar>
Scalar heun_series_sum(const RecurrenceRule<Scalar>& rule, Scalar lambda, Scalar x, long N) {
  if (N < 0) throw DomainError("heun_series_sum: N must be >= 0");
  const Scalar lead = detail::leading_power(x, lambda);
  const auto d = coefficients(rule, N);
  Scalar sum(0), xpow(1);
  for (long n = 0; n <= N; ++n) {
    sum += d[static_cast<std::size_t>(n)] * xpow;
    xpow *= x;
  }
  return lambda == Scalar(0) ? sum : lead * sum;
}

/// Partial sum of the Heun series about x = 0 with exponent lambda.
template <typename Scalar>
Scalar heun_series_sum(const HeunParameters<Scalar>& params, Scalar lambda, Scalar x, long N) {
  return heun_series_sum(heun_recurrence(params, lambda), lambda, x, N);
}

struct SumVerdict {
  enum class Kind { converged, diverging, indeterminate };
  Kind kind = Kind::indeterminate;
  ScaledReal value;  // converged: the last partial
  long at_N = 0;     // converged: N of the last partial
  double ratio = 0.0;  // diverging: per-unit-N growth factor of |S_N|
};

std::string to_string(SumVerdict::Kind k);

using Partials = std::vector<std::pair<long, ScaledReal>>;

/// Reads a run of partial sums at increasing N (at least 8):
///  - converged when the last 5 agree pairwise to relative 1e-12;
///  - diverging when |S| increases strictly over the last 5 and the per-unit-N growth
///    factor (|S_last| / |S_first|)^(1/(N_last - N_first)) over that window exceeds 1.01;
///  - indeterminate otherwise.
SumVerdict probe(const Partials& partials);

struct SumReport {
  Partials partials;
  SumVerdict verdict;
};

enum class SumMethod { direct, rect_double, diagonal };

/// Partials of the chosen method at each N in `checkpoints` (strictly increasing),
/// followed by probe() when there are enough of them.
SumReport sum_report(SumMethod method, double a, double x, const std::vector<long>& checkpoints);

/// Builds a report from already-computed partials.
SumReport make_report(Partials partials);

/// N = 10, 50, 100, 200, ..., 1000.
std::vector<long> table_checkpoints();
/// min(n, 20) checkpoints spread evenly over 1..n and ending at n.
std::vector<long> default_checkpoints(long n);

/// `N,value` rows with values in to_sci(digits) form.
std::string to_csv(const SumReport& report, int digits);

}  // namespace heunconv
