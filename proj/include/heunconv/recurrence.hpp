#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "heunconv/errors.hpp"
#include "heunconv/heun_params.hpp"

namespace heunconv {

/// Three-term recurrence d_{n+1} = A_n d_n + B_n d_{n-1} with d_1 = A_0 d_0.
///
/// asymptotic_A and asymptotic_B are the n -> infinity limits of A_n and B_n.
template <typename Scalar>
struct RecurrenceRule {
  using Fn = std::function<Scalar(long)>;

  Fn a_fn;
  Fn b_fn;
  Scalar asymptotic_A;
  Scalar asymptotic_B;
};

/// Constant-coefficient rule: A_n = A, B_n = B for every n.
template <typename Scalar>
RecurrenceRule<Scalar> constant_rule(Scalar A, Scalar B) {
  return RecurrenceRule<Scalar>{[A](long) { return A; }, [B](long) { return B; }, A, B};
}

namespace detail {

// n^2 + c1 n + c0
template <typename Scalar>
struct MonicQuadratic {
  Scalar c1, c0;
  Scalar operator()(long n) const {
    const Scalar m(static_cast<real_t<Scalar>>(n));
    return (m + c1) * m + c0;
  }
};

// First n >= 0 with (n + r) == 0, or -1.
template <typename Scalar>
long first_nonneg_integer_zero(Scalar r) {
  using std::real;
  using std::imag;
  const auto neg = -r;
  if constexpr (is_complex_v<Scalar>) {
    if (imag(neg) != 0) return -1;
  }
  const double v = static_cast<double>(real(neg));
  if (v < 0 || v != std::floor(v)) return -1;
  return static_cast<long>(v);
}

// z^n by repeated squaring, n >= 0.
template <typename T>
T ipow(T z, long n) {
  T result(1);
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

}  // namespace detail

/// Heun recurrence about x = 0 for exponent lambda.
///
///   Abar(n) = [n^2 + (alpha+beta-delta+2l + a(gamma+delta-1+2l))/(1+a) n
///              + (l(alpha+beta-delta+l + a(gamma+delta-1+l)) + q)/(1+a)] / D(n)
///   Bbar(n) = [n^2 + (alpha+beta-2+2l) n + (alpha-1+l)(beta-1+l)] / D(n)
///   D(n)    = (n+1+l)(n+gamma+l),  A = (1+a)/a,  B = -1/a.
///
/// Throws PoleError naming the first n >= 0 with D(n) = 0.
template <typename Scalar>
RecurrenceRule<Scalar> heun_recurrence(const HeunParameters<Scalar>& p, Scalar lambda) {
  const Scalar a = p.a(), one(1), two(2);
  const Scalar al = p.alpha(), be = p.beta(), ga = p.gamma(), de = p.delta(), q = p.q();

  const long pole1 = detail::first_nonneg_integer_zero(one + lambda);
  const long pole2 = detail::first_nonneg_integer_zero(ga + lambda);
  long pole = pole1;
  if (pole2 >= 0 && (pole < 0 || pole2 < pole)) pole = pole2;
  if (pole >= 0) {
    throw PoleError(pole, "pole in recurrence: denominator (n+1+lambda)(n+gamma+lambda) "
                          "vanishes at n=" + std::to_string(pole));
  }

  const detail::MonicQuadratic<Scalar> den{one + ga + two * lambda, (one + lambda) * (ga + lambda)};
  const detail::MonicQuadratic<Scalar> bnum{al + be - two + two * lambda,
                                            (al - one + lambda) * (be - one + lambda)};

  auto checked = [den](Scalar num, long n) {
    const Scalar d = den(n);
    if (d == Scalar(0)) {
      throw PoleError(n, "pole in recurrence at n=" + std::to_string(n));
    }
    return num / d;
  };

  const Scalar A = (one + a) / a, B = -one / a;
  auto b_fn = [bnum, checked, B](long n) { return B * checked(bnum(n), n); };

  const Scalar lin = al + be - de + two * lambda + a * (ga + de - one + two * lambda);
  const Scalar cst = lambda * (al + be - de + lambda + a * (ga + de - one + lambda)) + q;

  if (one + a == Scalar(0)) {
    // A = 0: the n^2 term cancels and A_n = (lin n + cst) / (a D(n)) -> 0.
    auto a_fn = [lin, cst, a, checked](long n) {
      const Scalar m(static_cast<real_t<Scalar>>(n));
      return checked((lin * m + cst) / a, n);
    };
    return RecurrenceRule<Scalar>{a_fn, b_fn, A, B};
  }

  const detail::MonicQuadratic<Scalar> anum{lin / (one + a), cst / (one + a)};
  auto a_fn = [anum, checked, A](long n) { return A * checked(anum(n), n); };
  return RecurrenceRule<Scalar>{a_fn, b_fn, A, B};
}

/// Coefficients d_0 .. d_{n_max} of a three-term recurrence.
template <typename Scalar>
struct CoefficientSequence {
  std::vector<Scalar> terms;
  RecurrenceRule<Scalar> rule;

  std::size_t size() const { return terms.size(); }
  const Scalar& operator[](std::size_t n) const { return terms[n]; }
};

template <typename Scalar>
CoefficientSequence<Scalar> coefficients(const RecurrenceRule<Scalar>& rule, long n_max,
                                         Scalar d0 = Scalar(1)) {
  if (n_max < 0) throw DomainError("coefficients: n_max must be >= 0");
  if (d0 == Scalar(0)) throw DomainError("coefficients: d0 must be nonzero");
  std::vector<Scalar> d;
  d.reserve(static_cast<std::size_t>(n_max) + 1);
  d.push_back(d0);
  if (n_max >= 1) d.push_back(rule.a_fn(0) * d0);
  for (long n = 1; n < n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    d.push_back(rule.a_fn(n) * d[i] + rule.b_fn(n) * d[i - 1]);
  }
  return CoefficientSequence<Scalar>{std::move(d), rule};
}

/// n-th term of the constant recurrence c_{n+1} = A c_n + B c_{n-1}, c_0 = 1, c_1 = A:
///
///   c_n = [(A + s)^{n+1} - (A - s)^{n+1}] / (2^{n+1} s),  s = sqrt(A^2 + 4B)
///
/// and (n+1)(A/2)^n when A^2 + 4B = 0.
template <typename Scalar>
Scalar closed_form_term(Scalar A, Scalar B, long n) {
  if (n < 0) throw DomainError("closed_form_term: n must be >= 0");
  using Real = real_t<Scalar>;
  using C = std::complex<Real>;
  const C disc = C(A) * C(A) + Real(4) * C(B);
  if (disc == C(0)) {
    const C value = Real(n + 1) * detail::ipow(C(A) / Real(2), n);
    if constexpr (is_complex_v<Scalar>) return value;
    else return value.real();
  }
  if constexpr (!is_complex_v<Scalar>) {
    if (disc.real() > 0) {
      const Real s = std::sqrt(disc.real());
      return (detail::ipow((A + s) / 2, n + 1) - detail::ipow((A - s) / 2, n + 1)) / s;
    }
  }
  const C s = std::sqrt(disc);
  const C value =
      (detail::ipow((C(A) + s) / Real(2), n + 1) - detail::ipow((C(A) - s) / Real(2), n + 1)) / s;
  if constexpr (is_complex_v<Scalar>) return value;
  else return value.real();
}

/// Generating function 1/(1 - A x - B x^2) of the constant recurrence with c_0 = 1.
template <typename Scalar>
Scalar generating_value(Scalar A, Scalar B, Scalar x) {
  const Scalar den = Scalar(1) - A * x - B * x * x;
  if (den == Scalar(0)) throw PoleError(-1, "generating function pole: 1 - A x - B x^2 = 0");
  return Scalar(1) / den;
}

}  // namespace heunconv
