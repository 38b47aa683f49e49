#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include <json.hpp>

#include "heunconv/convergence.hpp"

using namespace heunconv;
using Complex = std::complex<double>;

namespace {

bool near(Complex u, Complex v, double tol) {
  return std::abs(u - v) <= tol * std::max(1.0, std::abs(v));
}

// Heun constants A = (1+a)/a, B = -1/a.
Complex heun_A(double a) { return (1 + a) / a; }
Complex heun_B(double a) { return -1 / a; }

}  // namespace

TEST_CASE("characteristic_roots examples") {
  const auto r = characteristic_roots(2.25, -1.25);
  CHECK(near(r.rho1, 1.0, 1e-14));
  CHECK(near(r.rho2, 1.25, 1e-14));
  CHECK_FALSE(r.degenerate);
  CHECK_FALSE(r.equimodular);

  const auto d = characteristic_roots(2.0, -1.0);
  CHECK(d.degenerate);
  CHECK_FALSE(d.equimodular);
  CHECK(near(d.rho1, 1.0, 1e-14));
  CHECK(near(d.rho2, 1.0, 1e-14));

  const auto e = characteristic_roots(0.0, 1.0);
  CHECK(e.equimodular);
  CHECK_FALSE(e.degenerate);
  CHECK(near(e.rho1, -1.0, 1e-15));  // tie broken by real part
  CHECK(near(e.rho2, 1.0, 1e-15));

  const auto c = characteristic_roots(0.0, -1.0);  // rho^2 + 1 = 0
  CHECK(c.equimodular);
  CHECK(near(c.rho1, Complex(0, -1), 1e-15));
  CHECK(near(c.rho2, Complex(0, 1), 1e-15));
}

TEST_CASE("characteristic_roots satisfy Vieta relations") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 2000; ++i) {
    const Complex A(u(rng), i % 2 ? u(rng) : 0.0), B(u(rng), i % 3 ? u(rng) : 0.0);
    const auto r = characteristic_roots(A, B);
    CHECK(std::abs(r.rho1) <= std::abs(r.rho2) * (1 + 1e-12));
    const double scale = std::max({std::abs(A), std::abs(B), 1.0});
    CHECK(std::abs(r.rho1 + r.rho2 - A) <= 1e-12 * scale);
    CHECK(std::abs(r.rho1 * r.rho2 + B) <= 1e-12 * scale);
  }
}

TEST_CASE("characteristic roots of Heun constants are {1, 1/a}") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> mag(-3, 3);
  std::bernoulli_distribution neg(0.5);
  for (int i = 0; i < 1000; ++i) {
    double a = std::pow(10.0, mag(rng));
    if (neg(rng)) a = -a;
    const auto r = characteristic_roots(heun_A(a), heun_B(a));
    const Complex one(1.0), inv(1.0 / a);
    const bool direct = near(r.rho1, one, 1e-10) && near(r.rho2, inv, 1e-10);
    const bool swapped = near(r.rho1, inv, 1e-10) && near(r.rho2, one, 1e-10);
    INFO("a=" << a);
    CHECK((direct || swapped));
  }
}

TEST_CASE("pp_domain follows the radius table") {
  CHECK(pp_domain(2.0).radius == 1.0);
  CHECK(pp_domain(0.5).radius == 0.5);
  CHECK(pp_domain(-0.5).radius == 0.5);
  CHECK(pp_domain(1.0).radius == 1.0);
  CHECK(pp_domain(-1.0).radius == 1.0);
  CHECK(pp_domain(-3.0).radius == 1.0);
  const auto z = pp_domain(0.0);
  CHECK(z.status == DomainStatus::no_solution_a_zero);
  CHECK_FALSE(z.radius.has_value());
  CHECK(pp_domain(Complex(0, 0.5)).radius == 0.5);
}

TEST_CASE("abs_test examples") {
  CHECK(abs_test(0.8, 0.3));
  CHECK_FALSE(abs_test(0.8, 0.7));
  CHECK(abs_test(-1.0, 0.99));
  CHECK_FALSE(abs_test(-1.0, 1.0));
  CHECK_THROWS_AS(abs_test(0.0, 0.5), NoSolutionError);
  CHECK(abs_test(Complex(0.8), Complex(0, 0.3)));
  CHECK_FALSE(abs_test(Complex(0.8), Complex(0.7, 0.1)));
}

TEST_CASE("abs_boundary examples") {
  CHECK(abs_boundary(1.0).radius == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-15));
  CHECK(std::abs(abs_boundary(1.0).radius - 0.414214) < 1e-5);
  CHECK(std::abs(abs_boundary(10.0).radius - 0.84429) < 1e-5);
  CHECK(std::abs(abs_boundary(100.0).radius - 0.98058) < 1e-5);
  CHECK(std::abs(abs_boundary(0.8).radius - 0.368858) < 1e-5);

  const auto m = abs_boundary(-0.4);
  CHECK(m.kind == AbsRegion::Kind::interval);
  CHECK(m.lower == -0.4);
  CHECK(m.upper == 0.4);
  CHECK(m.half_width() == doctest::Approx(0.4));
  CHECK(m.contains(0.39));
  CHECK_FALSE(m.contains(-0.41));

  CHECK(abs_boundary(-1.0).radius == 1.0);
  CHECK(abs_boundary(-7.0).radius == 1.0);
  CHECK(abs_boundary(0.0).status == DomainStatus::no_solution_a_zero);
  CHECK(abs_boundary(0.0).kind == AbsRegion::Kind::none);
  CHECK_FALSE(abs_boundary(0.0).contains(0.0));
}

TEST_CASE("abs_boundary radius solves the equality form of the test") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> mag(-3, 4);
  for (int i = 0; i < 2000; ++i) {
    const double a = std::pow(10.0, mag(rng));
    const double r = abs_boundary(a).radius;
    CHECK(std::abs((1 + a) / a * r + r * r / a - 1) < 1e-12);
  }
}

TEST_CASE("abs_boundary is increasing in a and tends to 1") {
  double prev = 0.0;
  for (double a = 1e-3; a < 1e6; a *= 1.05) {
    const double r = abs_boundary(a).radius;
    CHECK(r > prev);
    CHECK(r < 1.0);
    prev = r;
  }
  CHECK(abs_boundary(1e12).radius == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("abs_boundary agrees with abs_test away from the edge") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> ua(-5, 5), ux(-1.5, 1.5);
  for (int i = 0; i < 10000; ++i) {
    const double a = ua(rng), x = ux(rng);
    if (a == 0.0) continue;
    const AbsRegion r = abs_boundary(a);
    const double edge = r.kind == AbsRegion::Kind::interval ? r.upper : r.radius;
    if (std::abs(std::abs(x) - edge) < 1e-9) continue;
    CHECK(abs_test(a, x) == r.contains(x));
  }
}

TEST_CASE("abs region is contained in the P-P region") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ua(-5, 5), ux(-2, 2);
  int inside = 0;
  for (int i = 0; i < 10000; ++i) {
    const double a = ua(rng), x = ux(rng);
    if (a == 0.0) continue;
    if (abs_test(a, x)) {
      ++inside;
      CHECK(std::abs(x) < *pp_domain(a).radius);
    }
  }
  CHECK(inside > 1000);
}

TEST_CASE("abs_test depends only on |x| for real arguments") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> ua(-5, 5), ux(-2, 2);
  for (int i = 0; i < 5000; ++i) {
    const double a = ua(rng), x = ux(rng);
    if (a == 0.0) continue;
    CHECK(abs_test(a, x) == abs_test(a, -x));
  }
}

TEST_CASE("ratio_test_limit examples") {
  const auto r = ratio_test_limit(2.25, -1.25, 0.7, false);
  CHECK(r.verdict == RatioVerdict::converges);
  CHECK(*r.limit == doctest::Approx(0.875).epsilon(1e-14));

  const auto d = ratio_test_limit(2.0, -1.0, 0.5, false);
  CHECK(d.verdict == RatioVerdict::converges);
  CHECK(*d.limit == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ratio_test_limit(2.0, -1.0, 1.0, false).verdict == RatioVerdict::boundary);
  CHECK(ratio_test_limit(2.0, -1.0, 1.5, false).verdict == RatioVerdict::diverges);

  for (double x : {0.1, 0.5, 0.99, 1.0, 2.0}) {
    const auto m = ratio_test_limit(heun_A(-1.0), heun_B(-1.0), x, true);
    CHECK(m.verdict == RatioVerdict::indeterminate);
    CHECK_FALSE(m.limit.has_value());
  }
  CHECK(ratio_test_limit(0.0, 1.0, 0.3, false).verdict == RatioVerdict::indeterminate);
  CHECK(ratio_test_limit(2.25, -1.25, 0.8, false).verdict == RatioVerdict::boundary);
  CHECK(ratio_test_limit(2.25, -1.25, 0.9, false).verdict == RatioVerdict::diverges);
}

TEST_CASE("ratio_test_limit with moduli reproduces the absolute-convergence radii") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> ua(-6, 6);
  for (int i = 0; i < 2000; ++i) {
    const double a = ua(rng);
    if (a == 0.0 || std::abs(a + 1) < 1e-6) continue;
    const auto r = ratio_test_limit(heun_A(a), heun_B(a), 1.0, true);
    REQUIRE(r.limit.has_value());
    const double radius = 1.0 / *r.limit;
    INFO("a=" << a);
    CHECK(radius == doctest::Approx(abs_boundary(a).half_width()).epsilon(1e-12));
  }
}

TEST_CASE("revised_characteristic examples") {
  auto residual_ok = [](const std::vector<double>& c, const std::vector<Complex>& roots) {
    const double cmax = std::abs(*std::max_element(c.begin(), c.end(),
                                                   [](double u, double v) { return std::abs(u) < std::abs(v); }));
    for (const Complex& z : roots) {
      Complex p(1.0);
      for (double ci : c) p = p * z + std::abs(ci);
      if (std::abs(p) >= 1e-10 * std::max(cmax, 1.0)) return false;
    }
    return true;
  };

  const auto r2 = revised_characteristic({2.25, 1.25});
  REQUIRE(r2.size() == 2);
  CHECK(near(r2[0], -1.0, 1e-13));
  CHECK(near(r2[1], -1.25, 1e-13));

  const auto r1 = revised_characteristic({3.0});
  REQUIRE(r1.size() == 1);
  CHECK(near(r1[0], -3.0, 1e-14));

  const auto ri = revised_characteristic({0.0, 1.0});
  REQUIRE(ri.size() == 2);
  CHECK(near(ri[0], Complex(0, -1), 1e-14));
  CHECK(near(ri[1], Complex(0, 1), 1e-14));

  // Negative inputs are taken by modulus.
  const auto rn = revised_characteristic({-2.25, -1.25});
  CHECK(near(rn[1], -1.25, 1e-13));

  CHECK_THROWS_AS(revised_characteristic({}), DomainError);
  CHECK_THROWS_AS(revised_characteristic({1.0, 0.0}), DomainError);

  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(static_cast<std::size_t>(1 + trial % 6));
    for (double& ci : c) ci = u(rng);
    const auto roots = revised_characteristic(c);
    CHECK(roots.size() == c.size());
    CHECK(residual_ok(c, roots));
  }
}

TEST_CASE("hypergeom_ratio_limit") {
  CHECK(hypergeom_ratio_limit(1, 1, 2, 0.5) == RatioVerdict::converges);
  CHECK(hypergeom_ratio_limit(1, 1, 2, 1.0) == RatioVerdict::boundary);
  CHECK(hypergeom_ratio_limit(1, 1, 2, -1.0) == RatioVerdict::boundary);
  CHECK(hypergeom_ratio_limit(1, 1, 2, -2.0) == RatioVerdict::diverges);
  CHECK(hypergeom_ratio_limit(1, 1, -0.5, 0.5) == RatioVerdict::converges);
  CHECK_THROWS_AS(hypergeom_ratio_limit(1, 1, 0, 0.5), PoleError);
  CHECK_THROWS_AS(hypergeom_ratio_limit(1, 1, -3, 0.5), PoleError);
}

TEST_CASE("dominating_bound on constant coefficients") {
  for (double eps : {0.01, 0.5, 2.0}) {
    const auto rule = constant_rule(1.0, 1.0);
    const auto d = coefficients(rule, 80);
    for (long N : {1L, 5L, 40L}) CHECK(dominating_bound(rule, d, N, eps));
  }
}

TEST_CASE("dominating_bound on the reference Heun rule") {
  const auto rule = heun_recurrence(make_heun_params(0.8, 0.5, 2.0, 1.0, 1.0, 1.0), 0.0);
  const auto d = coefficients(rule, 300);
  const auto N = premise_start(rule, 299, 0.5);
  REQUIRE(N.has_value());
  CHECK(dominating_bound(rule, d, *N, 0.5));
  if (*N > 1) CHECK_THROWS_AS(dominating_bound(rule, d, *N - 1, 0.5), PremiseViolation);
}

TEST_CASE("dominating_bound negative control") {
  const auto rule = constant_rule(1.0, 1.0);
  auto d = coefficients(rule, 40);
  d.terms[20] *= 10;  // no longer a solution of the recurrence
  CHECK_FALSE(dominating_bound(rule, d, 5, 0.1));
}

TEST_CASE("dominating_bound reports the premise violation index") {
  // Abar_n = 1 + 3/(n+1) crosses 1 + eps = 1.5 between n = 5 and n = 6.
  RecurrenceRule<double> rule{[](long n) { return 1.0 + 3.0 / static_cast<double>(n + 1); },
                              [](long) { return 0.5; }, 1.0, 0.5};
  const auto d = coefficients(rule, 30);
  try {
    dominating_bound(rule, d, 2, 0.5);
    FAIL("expected PremiseViolation");
  } catch (const PremiseViolation& e) {
    CHECK(e.index() == 2);
  }
  CHECK(premise_start(rule, 29, 0.5) == 6);
  CHECK(dominating_bound(rule, d, 6, 0.5));
  CHECK_THROWS_AS(dominating_bound(rule, d, 0, 0.5), DomainError);
  CHECK_THROWS_AS(dominating_bound(rule, d, 6, 0.0), DomainError);
}

TEST_CASE("dominating_bound holds for random Heun parameter sets") {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> u(-3, 3), ua(0.2, 5);
  std::bernoulli_distribution neg(0.5);
  int tested = 0, attempts = 0;
  while (tested < 100) {
    ++attempts;
    double a = ua(rng);
    if (neg(rng)) a = -a;
    if (std::abs(1 + a) < 0.2) continue;  // A -> 0 makes the premise unreachable in 400 terms
    const auto params = make_heun_params(a, u(rng), u(rng), u(rng), u(rng) + 3.5, u(rng));
    const auto rule = heun_recurrence(params, 0.0);
    const auto d = coefficients(rule, 400);
    const auto N = premise_start(rule, 399, 0.5);
    if (!N) continue;
    INFO("a=" << a << " N=" << *N);
    CHECK(dominating_bound(rule, d, *N, 0.5));
    ++tested;
  }
  CHECK(attempts < 200);
}

TEST_CASE("domain_verdict and classify") {
  const auto v = domain_verdict(0.8, 0.3);
  CHECK(v.in_pp);
  CHECK(v.in_abs);
  CHECK(*v.pp_radius == 0.8);
  CHECK(classify(v) == RegionClass::both);

  CHECK(classify(domain_verdict(0.8, 0.7)) == RegionClass::pp_only);
  CHECK(classify(domain_verdict(0.8, 0.9)) == RegionClass::outside);
  CHECK(classify(domain_verdict(-2.0, 0.5)) == RegionClass::both);

  const auto z = domain_verdict(0.0, 0.1);
  CHECK(z.status == DomainStatus::no_solution_a_zero);
  CHECK(classify(z) == RegionClass::undefined);

  const auto m = domain_verdict(-1.0, 0.5);
  CHECK(m.status == DomainStatus::pp_indeterminate_a_minus_one);
  CHECK(m.in_abs);
  CHECK(classify(m) == RegionClass::undefined);
}

TEST_CASE("region_scan reference grid") {
  const RegionGrid g = region_scan(-3, 3, -1.5, 1.5, 300, 300);
  CHECK(g.cells.rows() == 300);
  CHECK(g.cells.cols() == 300);
  CHECK(g.a_axis.size() == 300);
  CHECK(g.x_axis.size() == 300);
  CHECK(g.a_axis(0) == doctest::Approx(-2.99));
  CHECK(g.x_axis(299) == doctest::Approx(1.495));

  CHECK(g.at(-2.0, 0.5) == RegionClass::both);
  CHECK(g.at(0.8, 0.7) == RegionClass::pp_only);
  CHECK(g.at(0.8, 0.3) == RegionClass::both);
  for (double x = -1.49; x < 1.5; x += 0.01) {
    CHECK(g.at(0.0, x) == RegionClass::undefined);
    CHECK(g.at(-1.0, x) == RegionClass::undefined);
  }
  CHECK_THROWS_AS(g.at(3.5, 0.0), DomainError);
  CHECK_NOTHROW(g.at(3.0, 1.5));
}

TEST_CASE("region_scan cells are recomputable from domain_verdict") {
  const RegionGrid g = region_scan(-2.5, 2.5, -1.2, 1.2, 37, 23);
  int special = 0;
  for (Eigen::Index j = 0; j < g.cells.cols(); ++j) {
    const double a = g.a_axis(j);
    const bool is_special = g.cells(0, j) == static_cast<std::uint8_t>(RegionClass::undefined);
    special += is_special;
    for (Eigen::Index i = 0; i < g.cells.rows(); ++i) {
      if (is_special) {
        CHECK(g.cells(i, j) == static_cast<std::uint8_t>(RegionClass::undefined));
      } else {
        CHECK(g.cells(i, j) == static_cast<std::uint8_t>(classify(domain_verdict(a, g.x_axis(i)))));
      }
    }
  }
  CHECK(special == 2);
  CHECK_THROWS_AS(region_scan(1, 0, -1, 1, 10, 10), DomainError);
  CHECK_THROWS_AS(region_scan(-1, 1, -1, 1, 0, 10), DomainError);
}

TEST_CASE("region grid serialization") {
  const RegionGrid g = region_scan(-1, 1, -0.5, 0.5, 4, 2);
  const std::string csv = to_csv(g);
  CHECK(csv.rfind("a,x,class\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
  CHECK(csv.find("-0.75,-0.25,") != std::string::npos);

  const auto j = nlohmann::json::parse(to_json(g));
  CHECK(j["a"].size() == 4);
  CHECK(j["x"].size() == 2);
  REQUIRE(j["class"].size() == 8);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 4; ++k) CHECK(j["class"][static_cast<std::size_t>(i * 4 + k)] == g.cells(i, k));
}
