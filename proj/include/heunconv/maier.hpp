#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "heunconv/convergence.hpp"
#include "heunconv/errors.hpp"
#include "heunconv/heun_params.hpp"

namespace heunconv {

/// Nine of Maier's local solutions about x = 0, 1, a and infinity.
enum class MaierVariant { A1a, A1b, A2a, A2b, A3, A4a, A4b, A5, A6 };

inline constexpr std::array<MaierVariant, 9> kAllMaierVariants = {
    MaierVariant::A1a, MaierVariant::A1b, MaierVariant::A2a, MaierVariant::A2b, MaierVariant::A3,
    MaierVariant::A4a, MaierVariant::A4b, MaierVariant::A5,  MaierVariant::A6};

/// Stable lowercase id: "a1a", "a1b", ..., "a6".
std::string_view variant_id(MaierVariant v);
std::optional<MaierVariant> parse_variant(std::string_view id);

/// Symbolic description of a variant: the substituted argument t(x), the prefactor
/// multiplying Hl, and the transformed singularity parameter a'.
struct MaierInfo {
  std::string_view argument;
  std::string_view prefactor;
  std::string_view transformed_a;
};

MaierInfo maier_info(MaierVariant v);

namespace detail {

template <typename Scalar>
void check_maier_point(MaierVariant v, Scalar a, Scalar x) {
  const Scalar one(1);
  if (a == Scalar(0)) throw NoSolutionError();
  switch (v) {
    case MaierVariant::A1a:
    case MaierVariant::A1b:
      break;
    case MaierVariant::A2a:
    case MaierVariant::A2b:
      if (a == one) throw ExcludedPointError("a != 1");
      break;
    case MaierVariant::A3:
      if (x == Scalar(0)) throw ExcludedPointError("x != 0");
      break;
    case MaierVariant::A4a:
    case MaierVariant::A4b:
      if (x == a) throw ExcludedPointError("x != a");
      // a' = 1 - a must not vanish either.
      if (a == one) throw ExcludedPointError("a != 1");
      break;
    case MaierVariant::A5:
      if (a == one) throw ExcludedPointError("a != 1");
      if (x == Scalar(0)) throw ExcludedPointError("x != 0");
      break;
    case MaierVariant::A6:
      if (x == a) throw ExcludedPointError("x != a");
      break;
  }
}

}  // namespace detail

/// Convergence condition of a variant: the absolute-convergence test with a and x
/// replaced by the variant's a' and t(x), written out as
///
///   A1:  |((1+a)/a) x| + |x^2/a| < 1
///   A2:  |(1-x)^2/(1-a)| + |((2-a)/(1-a))(1-x)| < 1                 a != 1
///   A3:  |a x^-2| + |(1+a) x^-1| < 1                                  x != 0
///   A4:  |(1-a) x^2/(x-a)^2| + |(2-a) x/(x-a)| < 1                    x != a, a != 1
///   A5:  |(a/(1-a)) (x-1)^2/x^2| + |((1-2a)/(1-a)) (x-1)/x| < 1      a != 1, x != 0
///   A6:  |a (x-1)^2/(x-a)^2| + |(1+a)(x-1)/(x-a)| < 1                 x != a
///
/// Excluded points throw ExcludedPointError; a = 0 throws NoSolutionError.
template <typename Scalar>
bool maier_condition(MaierVariant v, Scalar a, Scalar x) {
  using std::abs;
  detail::check_maier_point(v, a, x);
  const Scalar one(1), two(2);
  double lhs = 0.0;
  switch (v) {
    case MaierVariant::A1a:
    case MaierVariant::A1b:
      lhs = abs((one + a) / a * x) + abs(x * x / a);
      break;
    case MaierVariant::A2a:
    case MaierVariant::A2b:
      lhs = abs((one - x) * (one - x) / (one - a)) + abs((two - a) / (one - a) * (one - x));
      break;
    case MaierVariant::A3:
      lhs = abs(a / (x * x)) + abs((one + a) / x);
      break;
    case MaierVariant::A4a:
    case MaierVariant::A4b:
      lhs = abs((one - a) * x * x / ((x - a) * (x - a))) + abs((two - a) * x / (x - a));
      break;
    case MaierVariant::A5:
      lhs = abs(a / (one - a) * ((x - one) * (x - one)) / (x * x)) +
            abs((one - two * a) / (one - a) * (x - one) / x);
      break;
    case MaierVariant::A6:
      lhs = abs(a * (x - one) * (x - one) / ((x - a) * (x - a))) +
            abs((one + a) * (x - one) / (x - a));
      break;
  }
  return lhs < 1;
}

/// Transformed Hl parameters of a variant and its argument map x -> t(x).
template <typename Scalar>
struct MaierTransform {
  MaierVariant variant;
  HeunParameters<Scalar> params;
  Scalar original_a;

  /// t(x); throws ExcludedPointError where the map is singular.
  Scalar argument(Scalar x) const {
    const Scalar one(1), a = original_a;
    switch (variant) {
      case MaierVariant::A1a:
      case MaierVariant::A1b:
        return x;
      case MaierVariant::A2a:
      case MaierVariant::A2b:
        return one - x;
      case MaierVariant::A3:
        if (x == Scalar(0)) throw ExcludedPointError("x != 0");
        return one / x;
      case MaierVariant::A4a:
      case MaierVariant::A4b:
        if (x == a) throw ExcludedPointError("x != a");
        return (one - a) * x / (x - a);
      case MaierVariant::A5:
        if (x == Scalar(0)) throw ExcludedPointError("x != 0");
        return (x - one) / x;
      case MaierVariant::A6:
        if (x == a) throw ExcludedPointError("x != a");
        return a * (x - one) / (x - a);
    }
    return x;
  }

  /// Condition evaluated as abs_test(a', t(x)).
  bool condition_via_abs_test(Scalar x) const { return abs_test(params.a(), argument(x)); }
};

/// Reads the transformed (a', q', alpha', beta', gamma', delta') of a variant off its
/// local-solution form Hl(a', q'; alpha', beta', gamma', delta'; t). epsilon' is derived
/// from the transformed exponents. a' = 0 throws ExcludedPointError.
template <typename Scalar>
MaierTransform<Scalar> maier_transformed_params(MaierVariant v, const HeunParameters<Scalar>& p) {
  const Scalar a = p.a(), q = p.q(), al = p.alpha(), be = p.beta(), ga = p.gamma(),
               de = p.delta();
  const Scalar one(1), two(2);
  auto make = [&](Scalar a2, Scalar q2, Scalar al2, Scalar be2, Scalar ga2, Scalar de2) {
    if (a2 == Scalar(0)) throw ExcludedPointError("a != 1 (transformed a' vanishes)");
    return MaierTransform<Scalar>{v, HeunParameters<Scalar>(a2, q2, al2, be2, ga2, de2), a};
  };
  switch (v) {
    case MaierVariant::A1a:
      return make(a, q - (de - one) * ga * a, al - de + one, be - de + one, ga, two - de);
    case MaierVariant::A1b:
      return make(a, q - (ga + de - two) * a - (ga - one) * (al + be - ga - de + one),
                  al - ga - de + two, be - ga - de + two, two - ga, two - de);
    case MaierVariant::A2a:
      return make(one - a, -q + al * be, al, be, de, ga);
    case MaierVariant::A2b:
      return make(one - a, -q + (de - one) * ga * a + (al - de + one) * (be - de + one),
                  al - de + one, be - de + one, two - de, ga);
    case MaierVariant::A3:
      return make(one / a, (q + al * ((al - ga - de + one) * a - be + de)) / a, al,
                  al - ga + one, al - be + one, de);
    case MaierVariant::A4a:
      return make(one - a, -q + ga * be, -al + ga + de, be, ga, de);
    case MaierVariant::A4b:
      return make(one - a, -q + ga * ((de - one) * a + be - de + one), -al + ga + one,
                  be - de + one, ga, two - de);
    case MaierVariant::A5:
      return make((a - one) / a, (-q + al * (de * a + be - de)) / a, al, al - ga + one, de,
                  al - be + one);
    case MaierVariant::A6:
      return make(a, q - (be - de) * al, al, -be + ga + de, de, ga);
  }
  throw DomainError("unknown Maier variant");
}

}  // namespace heunconv
