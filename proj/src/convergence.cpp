#include "heunconv/convergence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace heunconv {

namespace {

using Complex = std::complex<double>;

bool close_rel(double u, double v, double scale) {
  return std::abs(u - v) <= kRootTieTolerance * scale;
}

// Order by modulus, ties (to kRootTieTolerance) by real part, then imaginary part.
bool root_less(const Complex& p, const Complex& q) {
  const double mp = std::abs(p), mq = std::abs(q);
  if (!close_rel(mp, mq, std::max(mp, mq))) return mp < mq;
  if (p.real() != q.real()) return p.real() < q.real();
  return p.imag() < q.imag();
}

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

std::string to_string(DomainStatus s) {
  switch (s) {
    case DomainStatus::ok: return "ok";
    case DomainStatus::no_solution_a_zero: return "no_solution_a_zero";
    case DomainStatus::pp_indeterminate_a_minus_one: return "pp_indeterminate_a_minus_one";
  }
  return "?";
}

std::string to_string(RatioVerdict v) {
  switch (v) {
    case RatioVerdict::converges: return "converges";
    case RatioVerdict::diverges: return "diverges";
    case RatioVerdict::boundary: return "boundary";
    case RatioVerdict::indeterminate: return "indeterminate";
  }
  return "?";
}

CharacteristicRoots characteristic_roots(Complex A, Complex B) {
  const Complex s = std::sqrt(A * A + 4.0 * B);
  // Larger-magnitude root from the formula, the other from rho1 rho2 = -B.
  const Complex q = (std::real(std::conj(A) * s) >= 0 ? A + s : A - s) / 2.0;
  CharacteristicRoots r;
  if (q == Complex(0)) {
    r.rho1 = r.rho2 = Complex(0);
  } else {
    r.rho1 = q;
    r.rho2 = -B / q;
  }
  if (root_less(r.rho2, r.rho1)) std::swap(r.rho1, r.rho2);
  const double scale = std::max(std::abs(r.rho1), std::abs(r.rho2));
  r.degenerate = std::abs(r.rho1 - r.rho2) <= kRootTieTolerance * scale;
  r.equimodular = !r.degenerate && close_rel(std::abs(r.rho1), std::abs(r.rho2), scale);
  return r;
}

bool AbsRegion::contains(double x) const {
  switch (kind) {
    case Kind::radius: return std::abs(x) < radius;
    case Kind::interval: return lower < x && x < upper;
    case Kind::none: return false;
  }
  return false;
}

double AbsRegion::half_width() const {
  switch (kind) {
    case Kind::radius: return radius;
    case Kind::interval: return (upper - lower) / 2;
    case Kind::none: return 0.0;
  }
  return 0.0;
}

AbsRegion abs_boundary(double a) {
  AbsRegion r;
  if (a == 0.0) {
    r.status = DomainStatus::no_solution_a_zero;
  } else if (a > 0) {
    // (-1-a+sqrt(a^2+6a+1))/2 rationalized to avoid cancellation at large a.
    r.kind = AbsRegion::Kind::radius;
    r.radius = 2 * a / (1 + a + std::sqrt(a * a + 6 * a + 1));
  } else if (a > -1) {
    r.kind = AbsRegion::Kind::interval;
    r.lower = a;
    r.upper = -a;
  } else {
    r.kind = AbsRegion::Kind::radius;
    r.radius = 1.0;
  }
  return r;
}

RatioTestResult ratio_test_limit(Complex A, Complex B, Complex x, bool use_moduli) {
  if (use_moduli) {
    A = std::abs(A);
    B = std::abs(B);
  }
  const Complex s = std::sqrt(A * A + 4.0 * B);
  const double plus = std::abs(A + s), minus = std::abs(A - s);
  const double scale = std::max(plus, minus);

  double rho;
  if (std::abs(s) <= kRootTieTolerance * std::max(std::abs(A), 1e-300)) {
    // Double root A/2: d_{n+1}/d_n = (n+2)/(n+1) A/2 -> A/2.
    rho = std::abs(A) / 2;
  } else if (close_rel(plus, minus, scale)) {
    // |rho1| = |rho2|, rho1 != rho2: the ratio oscillates.
    return {RatioVerdict::indeterminate, std::nullopt};
  } else {
    rho = std::max(plus, minus) / 2;
  }
  const double L = rho * std::abs(x);
  RatioVerdict v = RatioVerdict::converges;
  if (std::abs(L - 1) <= kRootTieTolerance) v = RatioVerdict::boundary;
  else if (L > 1) v = RatioVerdict::diverges;
  return {v, L};
}

std::vector<Complex> revised_characteristic(const std::vector<double>& coeffs) {
  const auto k = static_cast<Eigen::Index>(coeffs.size());
  if (k == 0) throw DomainError("revised_characteristic: degree 0 polynomial");
  if (coeffs.back() == 0.0) throw DomainError("revised_characteristic: last coefficient is zero");

  Eigen::VectorXd c(k);
  for (Eigen::Index i = 0; i < k; ++i) c(i) = std::abs(coeffs[static_cast<std::size_t>(i)]);

  // Companion matrix of rho^k + c1 rho^{k-1} + ... + ck.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
  companion.row(0) = -c.transpose();
  if (k > 1) companion.diagonal(-1).setOnes();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error("revised_characteristic: eigen solver failed");

  auto eval = [&c, k](Complex z, Complex& dp) {
    Complex p(1.0);
    dp = Complex(0.0);
    for (Eigen::Index i = 0; i < k; ++i) {
      dp = dp * z + p;
      p = p * z + c(i);
    }
    return p;
  };

  std::vector<Complex> roots;
  roots.reserve(coeffs.size());
  for (Eigen::Index i = 0; i < k; ++i) {
    Complex z = solver.eigenvalues()(i);
    // Newton polish; keep a step only if it lowers the residual.
    for (int it = 0; it < 4; ++it) {
      Complex dp;
      const Complex p = eval(z, dp);
      if (dp == Complex(0)) break;
      const Complex z_next = z - p / dp;
      Complex dq;
      if (std::abs(eval(z_next, dq)) >= std::abs(p)) break;
      z = z_next;
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), root_less);
  return roots;
}

RatioVerdict hypergeom_ratio_limit(double a, double b, double c, double x) {
  (void)a;
  (void)b;
  if (c <= 0 && c == std::floor(c)) {
    throw PoleError(static_cast<long>(-c),
                    "hypergeometric coefficients have a pole: c is a nonpositive integer");
  }
  const double ax = std::abs(x);
  if (ax == 1.0) return RatioVerdict::boundary;
  return ax < 1.0 ? RatioVerdict::converges : RatioVerdict::diverges;
}

DomainVerdict domain_verdict(double a, double x) {
  DomainVerdict v;
  v.a = a;
  v.x = x;
  v.abs_bound = abs_boundary(a);
  if (a == 0.0) {
    v.status = DomainStatus::no_solution_a_zero;
    return v;
  }
  const PPDomain pp = pp_domain(a);
  v.pp_radius = pp.radius;
  v.in_pp = std::abs(x) < *pp.radius;
  v.in_abs = abs_test(a, x);
  if (a == -1.0) v.status = DomainStatus::pp_indeterminate_a_minus_one;
  return v;
}

RegionClass classify(const DomainVerdict& v) {
  if (v.status != DomainStatus::ok) return RegionClass::undefined;
  if (!v.in_pp) return RegionClass::outside;
  return v.in_abs ? RegionClass::both : RegionClass::pp_only;
}

RegionClass RegionGrid::at(double a, double x) const {
  const auto cols = a_axis.size(), rows = x_axis.size();
  const double da = (a_max - a_min) / static_cast<double>(cols);
  const double dx = (x_max - x_min) / static_cast<double>(rows);
  // Same edge guard as region_scan, so a = 0 and a = -1 land in their special columns.
  auto j = static_cast<Eigen::Index>(std::floor((a - a_min) / da + 1e-9));
  auto i = static_cast<Eigen::Index>(std::floor((x - x_min) / dx + 1e-9));
  if (a == a_max) j = cols - 1;
  if (x == x_max) i = rows - 1;
  if (j < 0 || j >= cols || i < 0 || i >= rows) throw DomainError("RegionGrid::at: point outside grid");
  return static_cast<RegionClass>(cells(i, j));
}

RegionGrid region_scan(double a_min, double a_max, double x_min, double x_max, int res_a,
                       int res_x) {
  if (res_a <= 0 || res_x <= 0) throw DomainError("region_scan: resolutions must be positive");
  if (!(a_min < a_max) || !(x_min < x_max)) throw DomainError("region_scan: bounds must be ordered");

  RegionGrid g;
  g.a_min = a_min;
  g.a_max = a_max;
  g.x_min = x_min;
  g.x_max = x_max;
  const double da = (a_max - a_min) / res_a, dx = (x_max - x_min) / res_x;
  g.a_axis = Eigen::VectorXd::NullaryExpr(res_a, [&](Eigen::Index j) { return a_min + (static_cast<double>(j) + 0.5) * da; });
  g.x_axis = Eigen::VectorXd::NullaryExpr(res_x, [&](Eigen::Index i) { return x_min + (static_cast<double>(i) + 0.5) * dx; });

  // Columns crossed by a = -1 or a = 0 are evaluated on that line; a = 0 wins a tie.
  Eigen::VectorXd a_sample = g.a_axis;
  for (double special : {-1.0, 0.0}) {
    const double t = (special - a_min) / da;
    if (t < -1e-9 || t >= res_a) continue;
    const auto j = std::min<Eigen::Index>(static_cast<Eigen::Index>(std::floor(t + 1e-9)), res_a - 1);
    a_sample(j) = special;
  }

  g.cells.resize(res_x, res_a);
  for (Eigen::Index i = 0; i < res_x; ++i) {
    for (Eigen::Index j = 0; j < res_a; ++j) {
      g.cells(i, j) = static_cast<std::uint8_t>(classify(domain_verdict(a_sample(j), g.x_axis(i))));
    }
  }
  return g;
}

std::string to_csv(const RegionGrid& grid) {
  std::string out = "a,x,class\n";
  for (Eigen::Index i = 0; i < grid.cells.rows(); ++i) {
    for (Eigen::Index j = 0; j < grid.cells.cols(); ++j) {
      out += format_double(grid.a_axis(j));
      out += ',';
      out += format_double(grid.x_axis(i));
      out += ',';
      out += std::to_string(static_cast<int>(grid.cells(i, j)));
      out += '\n';
    }
  }
  return out;
}

std::string to_json(const RegionGrid& grid) {
  nlohmann::json j;
  j["a"] = std::vector<double>(grid.a_axis.data(), grid.a_axis.data() + grid.a_axis.size());
  j["x"] = std::vector<double>(grid.x_axis.data(), grid.x_axis.data() + grid.x_axis.size());
  std::vector<int> codes;
  codes.reserve(static_cast<std::size_t>(grid.cells.size()));
  for (Eigen::Index i = 0; i < grid.cells.rows(); ++i)
    for (Eigen::Index j2 = 0; j2 < grid.cells.cols(); ++j2) codes.push_back(grid.cells(i, j2));
  j["class"] = codes;
  return j.dump();
}

}  // namespace heunconv
