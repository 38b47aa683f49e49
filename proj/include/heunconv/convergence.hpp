#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "heunconv/errors.hpp"
#include "heunconv/heun_params.hpp"
#include "heunconv/recurrence.hpp"

namespace heunconv {

/// Relative tolerance used to decide root coincidence and equal moduli.
inline constexpr double kRootTieTolerance = 1e-12;

/// Roots of rho^2 - A rho - B = 0 ordered by |rho1| <= |rho2|, ties by real then imaginary part.
struct CharacteristicRoots {
  std::complex<double> rho1;
  std::complex<double> rho2;
  bool degenerate = false;   // rho1 == rho2
  bool equimodular = false;  // |rho1| == |rho2|, rho1 != rho2
};

CharacteristicRoots characteristic_roots(std::complex<double> A, std::complex<double> B);

enum class DomainStatus { ok, no_solution_a_zero, pp_indeterminate_a_minus_one };

std::string to_string(DomainStatus s);

/// Poincare-Perron disc |x| < pp_radius: 1 for |a| >= 1, |a| for 0 < |a| < 1.
struct PPDomain {
  DomainStatus status = DomainStatus::ok;
  std::optional<double> radius;
};

template <typename Scalar>
PPDomain pp_domain(Scalar a) {
  if (a == Scalar(0)) return {DomainStatus::no_solution_a_zero, std::nullopt};
  const double m = static_cast<double>(std::abs(a));
  return {DomainStatus::ok, m >= 1.0 ? 1.0 : m};
}

/// Absolute-convergence test |((1+a)/a) x| + |x^2/a| < 1.
template <typename Scalar>
bool abs_test(Scalar a, Scalar x) {
  if (a == Scalar(0)) throw NoSolutionError();
  return std::abs((Scalar(1) + a) / a * x) + std::abs(x * x / a) < 1;
}

/// Real-axis shape of the absolute-convergence region for real a.
struct AbsRegion {
  enum class Kind { none, radius, interval };
  DomainStatus status = DomainStatus::ok;
  Kind kind = Kind::none;
  double radius = 0.0;          // |x| < radius
  double lower = 0.0, upper = 0.0;  // lower < x < upper

  bool contains(double x) const;
  /// Half-width of the region (radius, or (upper-lower)/2 for intervals).
  double half_width() const;
};

/// a > 0: |x| < (-1-a+sqrt(a^2+6a+1))/2;  -1 < a < 0: a < x < -a;  a <= -1: |x| < 1.
AbsRegion abs_boundary(double a);

enum class RatioVerdict { converges, diverges, boundary, indeterminate };

std::string to_string(RatioVerdict v);

struct RatioTestResult {
  RatioVerdict verdict = RatioVerdict::indeterminate;
  std::optional<double> limit;  // L, when defined
};

/// lim |d_{n+1}/d_n| |x| for the constant recurrence with coefficients (A, B), via the
/// closed form of its solution. With use_moduli, A and B are replaced by |A| and |B| first.
/// Equal-modulus distinct roots make the ratio oscillate and give `indeterminate`.
RatioTestResult ratio_test_limit(std::complex<double> A, std::complex<double> B,
                                 std::complex<double> x, bool use_moduli);

/// Roots of rho^k + |c1| rho^{k-1} + ... + |ck| = 0.
std::vector<std::complex<double>> revised_characteristic(const std::vector<double>& coeffs);

/// Ratio test for 2F1(a, b; c; x): the coefficient ratio tends to 1, so the verdict is
/// decided by |x| alone. c in {0, -1, -2, ...} throws PoleError.
RatioVerdict hypergeom_ratio_limit(double a, double b, double c, double x);

/// First N >= 1 such that |A_n| < (1+eps)|A| and |B_n| < (1+eps)|B| for N <= n < n_end.
template <typename Scalar>
std::optional<long> premise_start(const RecurrenceRule<Scalar>& rule, long n_end, double eps) {
  const double bound_a = (1 + eps) * std::abs(rule.asymptotic_A);
  const double bound_b = (1 + eps) * std::abs(rule.asymptotic_B);
  long start = 1;
  for (long n = 1; n < n_end; ++n) {
    if (!(std::abs(rule.a_fn(n)) < bound_a && std::abs(rule.b_fn(n)) < bound_b)) start = n + 1;
  }
  if (start >= n_end) return std::nullopt;
  return start;
}

/// Checks the dominating-series chain
///
///   |d_{N+j}| <= c_j |d_N| + c_{j-1} |B~| |d_{N-1}|,   j = 1, 2, ...
///
/// over the whole sequence, where A~ = (1+eps)A, B~ = (1+eps)B and c_j is the constant
/// recurrence on (|A~|, |B~|) with c_0 = 1, c_1 = |A~|. Throws PremiseViolation at the
/// first n >= N where |A_n| >= (1+eps)|A| or |B_n| >= (1+eps)|B|, i.e. |Abar_n| or
/// |Bbar_n| >= 1+eps.
template <typename Scalar>
bool dominating_bound(const RecurrenceRule<Scalar>& rule, const CoefficientSequence<Scalar>& d,
                      long N, double eps = 0.5) {
  const long len = static_cast<long>(d.size());
  if (N < 1 || N >= len) throw DomainError("dominating_bound: need 1 <= N < sequence length");
  if (!(eps > 0)) throw DomainError("dominating_bound: eps must be positive");
  const double bound_a = (1 + eps) * std::abs(rule.asymptotic_A);
  const double bound_b = (1 + eps) * std::abs(rule.asymptotic_B);
  for (long n = N; n + 1 < len; ++n) {
    if (!(std::abs(rule.a_fn(n)) < bound_a) || !(std::abs(rule.b_fn(n)) < bound_b)) {
      throw PremiseViolation(n, "dominating_bound: |Abar_n| or |Bbar_n| >= 1+eps at n=" +
                                    std::to_string(n));
    }
  }
  const double at = bound_a, bt = bound_b;
  const double dN = std::abs(d[static_cast<std::size_t>(N)]);
  const double dN1 = std::abs(d[static_cast<std::size_t>(N - 1)]);
  double c_prev = 1.0, c = at;  // c_{j-1}, c_j at j = 1
  for (long j = 1; N + j < len; ++j) {
    const double lhs = std::abs(d[static_cast<std::size_t>(N + j)]);
    const double rhs = c * dN + c_prev * bt * dN1;
    // Both sides carry independent rounding; allow a few ulps per step.
    if (lhs > rhs * (1 + 4e-16 * static_cast<double>(j + 4))) return false;
    const double next = at * c + bt * c_prev;
    c_prev = c;
    c = next;
  }
  return true;
}

/// Membership of one (a, x) point in both regions.
struct DomainVerdict {
  double a = 0.0;
  double x = 0.0;
  bool in_pp = false;
  bool in_abs = false;
  std::optional<double> pp_radius;
  AbsRegion abs_bound;
  DomainStatus status = DomainStatus::ok;
};

DomainVerdict domain_verdict(double a, double x);

enum class RegionClass : std::uint8_t { outside = 0, pp_only = 1, both = 2, undefined = 3 };

RegionClass classify(const DomainVerdict& v);

/// Raster of region classes over [a_min, a_max] x [x_min, x_max].
///
/// Cells are sampled at their centers, except that a column whose a-extent contains
/// a = 0 or a = -1 is evaluated at that value (and so comes out `undefined`).
/// cells(i, j) belongs to x_axis[i], a_axis[j].
struct RegionGrid {
  Eigen::VectorXd a_axis;
  Eigen::VectorXd x_axis;
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> cells;

  /// Class of the cell containing (a, x); DomainError outside the grid.
  RegionClass at(double a, double x) const;

  double a_min = 0.0, a_max = 0.0, x_min = 0.0, x_max = 0.0;
};

RegionGrid region_scan(double a_min, double a_max, double x_min, double x_max, int res_a,
                       int res_x);

/// `a,x,class` rows in row-major cell order.
std::string to_csv(const RegionGrid& grid);
/// {"a": [...], "x": [...], "class": [row-major codes]}.
std::string to_json(const RegionGrid& grid);

}  // namespace heunconv
