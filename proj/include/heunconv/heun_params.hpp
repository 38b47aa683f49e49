#pragma once

#include <complex>
#include <type_traits>
#include <utility>

#include "heunconv/errors.hpp"

namespace heunconv {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <typename Scalar>
struct real_of {
  using type = Scalar;
};
template <typename T>
struct real_of<std::complex<T>> {
  using type = T;
};
/// Underlying real type: double for both double and std::complex<double>.
template <typename Scalar>
using real_t = typename real_of<Scalar>::type;

/// Parameters (a, q, alpha, beta, gamma, delta) of the Heun equation
///
///   y'' + (gamma/x + delta/(x-1) + epsilon/(x-a)) y' + (alpha beta x - q)/(x(x-1)(x-a)) y = 0
///
/// epsilon is not stored; it is always alpha + beta - gamma - delta + 1.
template <typename Scalar>
class HeunParameters {
 public:
  HeunParameters(Scalar a, Scalar q, Scalar alpha, Scalar beta, Scalar gamma, Scalar delta)
      : a_(a), q_(q), alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
    if (a == Scalar(0)) throw NoSolutionError();
  }

  Scalar a() const { return a_; }
  Scalar q() const { return q_; }
  Scalar alpha() const { return alpha_; }
  Scalar beta() const { return beta_; }
  Scalar gamma() const { return gamma_; }
  Scalar delta() const { return delta_; }
  Scalar epsilon() const { return alpha_ + beta_ - gamma_ - delta_ + Scalar(1); }

  bool operator==(const HeunParameters&) const = default;

 private:
  Scalar a_, q_, alpha_, beta_, gamma_, delta_;
};

template <typename Scalar>
HeunParameters<Scalar> make_heun_params(Scalar a, Scalar q, Scalar alpha, Scalar beta,
                                        Scalar gamma, Scalar delta) {
  return HeunParameters<Scalar>(a, q, alpha, beta, gamma, delta);
}

/// Exponent of the leading power x^lambda of a Frobenius series about x = 0.
template <typename Scalar>
struct IndicialRoot {
  Scalar lambda;
  bool operator==(const IndicialRoot&) const = default;
};

/// The two exponents at x = 0, in the order (0, 1 - gamma).
template <typename Scalar>
std::pair<IndicialRoot<Scalar>, IndicialRoot<Scalar>> indicial_roots(
    const HeunParameters<Scalar>& p) {
  return {IndicialRoot<Scalar>{Scalar(0)}, IndicialRoot<Scalar>{Scalar(1) - p.gamma()}};
}

}  // namespace heunconv
