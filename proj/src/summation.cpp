#include "heunconv/summation.hpp"

#include <algorithm>
#include <cmath>

namespace heunconv {

namespace {

void require_a(double a) {
  if (a == 0.0) throw NoSolutionError();
}

void require_n(long N) {
  if (N < 0) throw DomainError("upper summation index must be >= 0");
}

// Calls visit(n, S_n) for n = 0..N over the direct series.
template <typename Visit>
void walk_direct(double a, double x, long N, Visit&& visit) {
  // Same operation order as heun_series_sum over constant_rule((1+a)/a, -1/a), so the
  // two agree bit for bit wherever doubles do not overflow.
  const ScaledReal A((1 + a) / a), B(-1 / a), xs(x);
  ScaledReal d_prev, d(1.0), sum, xpow(1.0);
  for (long n = 0; n <= N; ++n) {
    sum += d * xpow;
    xpow *= xs;
    const ScaledReal next = n == 0 ? A * d : A * d + B * d_prev;
    d_prev = d;
    d = next;
    visit(n, sum);
  }
}

template <typename Visit>
void walk_geometric(ScaledReal z, long R, Visit&& visit) {
  ScaledReal sum, zpow(1.0);
  for (long r = 0; r <= R; ++r) {
    sum += zpow;
    zpow *= z;
    visit(r, sum);
  }
}

ScaledReal geometric_partial(ScaledReal z, long R) {
  ScaledReal last;
  walk_geometric(z, R, [&](long, const ScaledReal& s) { last = s; });
  return last;
}

}  // namespace

DoubleSeriesArgs double_series_args(double a, double x) {
  require_a(a);
  return {(1 + a) / a * x, -1 / a * (x * x)};
}

ScaledReal direct_sum(double a, double x, long N) {
  require_a(a);
  require_n(N);
  ScaledReal last;
  walk_direct(a, x, N, [&](long, const ScaledReal& s) { last = s; });
  return last;
}

ScaledReal rect_double_sum(double a, double x, long N) {
  require_a(a);
  require_n(N);
  const auto [xt, yt] = double_series_args(a, x);
  const ScaledReal xs(xt), ys(yt);
  ScaledReal sum, row(1.0);  // row = x~^n
  for (long n = 0; n <= N; ++n) {
    ScaledReal term = row;  // C(n+m, n) x~^n y~^m
    for (long m = 0; m <= N; ++m) {
      sum += term;
      term *= ScaledReal(static_cast<double>(n + m + 1) / static_cast<double>(m + 1));
      term *= ys;
    }
    row *= xs;
  }
  return sum;
}

ScaledReal diagonal_sum(double a, double x, long R) {
  require_a(a);
  require_n(R);
  const auto [xt, yt] = double_series_args(a, x);
  return geometric_partial(ScaledReal(xt + yt), R);
}

ScaledReal abs_diagonal_sum(double a, double x, long R) {
  require_a(a);
  require_n(R);
  const auto [xt, yt] = double_series_args(a, x);
  return geometric_partial(ScaledReal(std::abs(xt) + std::abs(yt)), R);
}

std::string to_string(SumVerdict::Kind k) {
  switch (k) {
    case SumVerdict::Kind::converged: return "converged";
    case SumVerdict::Kind::diverging: return "diverging";
    case SumVerdict::Kind::indeterminate: return "indeterminate";
  }
  return "?";
}

SumVerdict probe(const Partials& partials) {
  constexpr std::size_t kMinPoints = 8, kWindow = 5;
  if (partials.size() < kMinPoints) throw DomainError("probe: too few partials (need at least 8)");
  for (std::size_t i = 1; i < partials.size(); ++i) {
    if (partials[i].first <= partials[i - 1].first) {
      throw DomainError("probe: partials must be at strictly increasing N");
    }
  }
  const auto first = partials.end() - kWindow;

  bool agree = true;
  const ScaledReal tol(1e-12);
  for (auto i = first; i != partials.end() && agree; ++i) {
    for (auto j = i + 1; j != partials.end(); ++j) {
      const ScaledReal scale = std::max(abs(i->second), abs(j->second));
      if (abs(i->second - j->second) > tol * scale) {
        agree = false;
        break;
      }
    }
  }
  SumVerdict v;
  if (agree) {
    v.kind = SumVerdict::Kind::converged;
    v.value = partials.back().second;
    v.at_N = partials.back().first;
    return v;
  }

  bool increasing = true;
  for (auto i = first + 1; i != partials.end(); ++i) {
    if (!(abs(i->second) > abs((i - 1)->second))) increasing = false;
  }
  if (increasing) {
    const double dlog2 = partials.back().second.log2_abs() - first->second.log2_abs();
    const double ratio = std::exp2(dlog2 / static_cast<double>(partials.back().first - first->first));
    if (ratio > 1.01) {
      v.kind = SumVerdict::Kind::diverging;
      v.ratio = ratio;
      return v;
    }
  }
  return v;
}

SumReport make_report(Partials partials) {
  SumReport report;
  report.partials = std::move(partials);
  if (report.partials.size() >= 8) report.verdict = probe(report.partials);
  return report;
}

SumReport sum_report(SumMethod method, double a, double x, const std::vector<long>& checkpoints) {
  require_a(a);
  Partials partials;
  partials.reserve(checkpoints.size());
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 0 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw DomainError("sum_report: checkpoints must be nonnegative and strictly increasing");
    }
  }
  if (method == SumMethod::rect_double) {
    for (long N : checkpoints) partials.emplace_back(N, rect_double_sum(a, x, N));
  } else {
    // Single pass; each recorded partial equals the one-shot sum at that N.
    const long n_max = checkpoints.empty() ? -1 : checkpoints.back();
    auto next = checkpoints.begin();
    auto record = [&](long n, const ScaledReal& s) {
      if (next != checkpoints.end() && n == *next) partials.emplace_back(n, s), ++next;
    };
    if (method == SumMethod::direct) {
      walk_direct(a, x, n_max, record);
    } else {
      const auto [xt, yt] = double_series_args(a, x);
      walk_geometric(ScaledReal(xt + yt), n_max, record);
    }
  }
  return make_report(std::move(partials));
}

std::vector<long> table_checkpoints() {
  std::vector<long> ns{10, 50};
  for (long n = 100; n <= 1000; n += 100) ns.push_back(n);
  return ns;
}

std::vector<long> default_checkpoints(long n) {
  if (n < 0) throw DomainError("default_checkpoints: n must be >= 0");
  if (n == 0) return {0};
  const long k = std::min<long>(n, 20);
  std::vector<long> ns;
  for (long i = 1; i <= k; ++i) {
    const long v = (i * n + k / 2) / k;
    if (ns.empty() || v > ns.back()) ns.push_back(v);
  }
  if (ns.back() != n) ns.push_back(n);
  return ns;
}

std::string to_csv(const SumReport& report, int digits) {
  std::string out = "N,value\n";
  for (const auto& [N, value] : report.partials) {
    out += std::to_string(N);
    out += ',';
    out += value.to_sci(digits);
    out += '\n';
  }
  return out;
}

}  // namespace heunconv
