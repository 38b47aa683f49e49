#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heunconv/convergence.hpp"
#include "heunconv/maier.hpp"
#include "heunconv/recurrence.hpp"
#include "heunconv/summation.hpp"

namespace heunconv::cli {

namespace {

using nlohmann::json;

std::string fmt_general(double v, int precision = 6) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
  return std::string(buf, r.ptr);
}

std::string fmt_fixed(double v, int decimals) {
  char buf[512];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
  return std::string(buf, r.ptr);
}

std::string fmt_shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// 12 decimals while the value is an ordinary double, scientific beyond that.
std::string fmt_value(const ScaledReal& v) {
  if (v.is_zero() || std::abs(v.log10_abs()) < 15) return fmt_fixed(v.to_double(), 12);
  return v.to_sci(13);
}

std::string describe(const AbsRegion& r) {
  switch (r.kind) {
    case AbsRegion::Kind::radius: return "|x| < " + fmt_general(r.radius);
    case AbsRegion::Kind::interval:
      return fmt_general(r.lower) + " < x < " + fmt_general(r.upper);
    case AbsRegion::Kind::none: return "none";
  }
  return "none";
}

json abs_region_json(const AbsRegion& r) {
  json j;
  switch (r.kind) {
    case AbsRegion::Kind::radius:
      j = {{"kind", "radius"}, {"radius", r.radius}};
      break;
    case AbsRegion::Kind::interval:
      j = {{"kind", "interval"}, {"lower", r.lower}, {"upper", r.upper}};
      break;
    case AbsRegion::Kind::none:
      j = {{"kind", "none"}};
      break;
  }
  return j;
}

const char* class_name(RegionClass c) {
  switch (c) {
    case RegionClass::outside: return "outside";
    case RegionClass::pp_only: return "pp_only";
    case RegionClass::both: return "both";
    case RegionClass::undefined: return "undefined";
  }
  return "?";
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("malformed range '" + text + "' (want lo:hi)");
  auto number = [&text](std::string_view s) {
    double v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw DomainError("malformed range '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  const double lo = number(sv.substr(0, colon)), hi = number(sv.substr(colon + 1));
  if (!(lo < hi)) throw DomainError("malformed range '" + text + "' (need lo < hi)");
  return {lo, hi};
}

std::pair<int, int> parse_resolution(const std::string& text) {
  auto number = [&text](std::string_view s) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v <= 0) {
      throw DomainError("malformed resolution '" + text + "' (want RxC)");
    }
    return v;
  };
  const std::string_view sv(text);
  const auto x = sv.find('x');
  if (x == std::string_view::npos) {
    const int n = number(sv);
    return {n, n};
  }
  return {number(sv.substr(0, x)), number(sv.substr(x + 1))};
}

struct DomainArgs {
  double a = 0;
  std::optional<double> x;
};

struct TableArgs {
  int id = 3;
  std::vector<long> ns;
};

struct RegionArgs {
  std::string a_range = "-3:3";
  std::string x_range = "-1.5:1.5";
  std::string res = "300x300";
};

struct SumArgs {
  double a = 0, x = 0;
  long n = 100;
  std::string method = "direct";
  bool heun = false;
  double q = 0, alpha = 1, beta = 1, gamma = 1, delta = 1;
  int root = 0;
};

struct MaierArgs {
  std::string variant;
  double a = 0, x = 0;
  double q = 0, alpha = 1, beta = 1, gamma = 1, delta = 1;
};

void cmd_domain(const DomainArgs& args, const std::string& format, std::ostream& out) {
  if (args.a == 0.0) throw NoSolutionError();
  const PPDomain pp = pp_domain(args.a);
  const AbsRegion region = abs_boundary(args.a);
  const DomainStatus status =
      args.a == -1.0 ? DomainStatus::pp_indeterminate_a_minus_one : DomainStatus::ok;

  std::optional<DomainVerdict> v;
  if (args.x) v = domain_verdict(args.a, *args.x);

  if (format == "json") {
    json j = {{"a", args.a},
              {"status", to_string(status)},
              {"pp_radius", *pp.radius},
              {"abs_region", abs_region_json(region)}};
    if (v) {
      j["x"] = v->x;
      j["in_pp"] = v->in_pp;
      j["in_abs"] = v->in_abs;
      j["class"] = static_cast<int>(classify(*v));
    }
    out << j.dump() << '\n';
    return;
  }
  if (format == "csv") {
    out << "a,x,pp_radius,abs_half_width,in_pp,in_abs,class\n";
    out << fmt_shortest(args.a) << ',' << (v ? fmt_shortest(v->x) : "") << ','
        << fmt_general(*pp.radius) << ',' << fmt_general(region.half_width()) << ','
        << (v ? (v->in_pp ? "true" : "false") : "") << ','
        << (v ? (v->in_abs ? "true" : "false") : "") << ','
        << (v ? std::to_string(static_cast<int>(classify(*v))) : "") << '\n';
    return;
  }
  out << "a = " << fmt_shortest(args.a) << '\n'
      << "status = " << to_string(status) << '\n'
      << "pp_radius = " << fmt_general(*pp.radius) << '\n'
      << "abs_region = " << describe(region) << '\n';
  if (region.kind == AbsRegion::Kind::radius) {
    out << "abs_radius = " << fmt_general(region.radius) << '\n';
  }
  if (v) {
    out << "x = " << fmt_shortest(v->x) << '\n'
        << "in_pp = " << (v->in_pp ? "true" : "false") << '\n'
        << "in_abs = " << (v->in_abs ? "true" : "false") << '\n'
        << "class = " << class_name(classify(*v)) << '\n';
  }
}

void write_rows(const std::vector<std::pair<long, std::string>>& rows, const std::string& format,
                std::ostream& out) {
  if (format == "json") {
    json j = json::array();
    for (const auto& [N, value] : rows) j.push_back({{"N", N}, {"value", value}});
    out << j.dump() << '\n';
  } else if (format == "pretty") {
    for (const auto& [N, value] : rows) out << N << '\t' << value << '\n';
  } else {
    out << "N,value\n";
    for (const auto& [N, value] : rows) out << N << ',' << value << '\n';
  }
}

void cmd_table(const TableArgs& args, const std::string& format, std::ostream& out) {
  const std::vector<long> ns = args.ns.empty() ? table_checkpoints() : args.ns;
  SumMethod method;
  double x;
  switch (args.id) {
    case 3: method = SumMethod::direct, x = 0.3; break;
    case 4: method = SumMethod::rect_double, x = 0.3; break;
    case 5: method = SumMethod::rect_double, x = 0.7; break;
    case 6: method = SumMethod::direct, x = 0.7; break;
    default: throw DomainError("table id must be one of 3, 4, 5, 6");
  }
  const SumReport report = sum_report(method, 0.8, x, ns);
  std::vector<std::pair<long, std::string>> rows;
  for (const auto& [N, value] : report.partials) {
    rows.emplace_back(N, args.id == 5 ? value.to_sci(6) : fmt_fixed(value.to_double(), 12));
  }
  write_rows(rows, format, out);
}

void cmd_region(const RegionArgs& args, const std::string& format, std::ostream& out) {
  const auto [a_lo, a_hi] = parse_range(args.a_range);
  const auto [x_lo, x_hi] = parse_range(args.x_range);
  const auto [res_a, res_x] = parse_resolution(args.res);
  const RegionGrid grid = region_scan(a_lo, a_hi, x_lo, x_hi, res_a, res_x);
  if (format == "json") out << to_json(grid) << '\n';
  else out << to_csv(grid);
}

std::string verdict_text(const SumVerdict& v) {
  switch (v.kind) {
    case SumVerdict::Kind::converged:
      return "converged " + fmt_value(v.value) + " at N=" + std::to_string(v.at_N);
    case SumVerdict::Kind::diverging:
      return "diverging ratio=" + fmt_general(v.ratio, 6);
    case SumVerdict::Kind::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

void cmd_sum(const SumArgs& args, const std::string& format, std::ostream& out) {
  if (args.a == 0.0) throw NoSolutionError();
  const std::vector<long> ns = default_checkpoints(args.n);
  SumReport report;
  if (args.heun) {
    const auto params = make_heun_params(args.a, args.q, args.alpha, args.beta, args.gamma, args.delta);
    const auto roots = indicial_roots(params);
    const double lambda = args.root == 0 ? roots.first.lambda : roots.second.lambda;
    Partials partials;
    for (long N : ns) partials.emplace_back(N, ScaledReal(heun_series_sum(params, lambda, args.x, N)));
    report = make_report(std::move(partials));
  } else {
    SumMethod method;
    if (args.method == "direct") method = SumMethod::direct;
    else if (args.method == "double") method = SumMethod::rect_double;
    else if (args.method == "diagonal") method = SumMethod::diagonal;
    else throw DomainError("unknown method '" + args.method + "'");
    report = sum_report(method, args.a, args.x, ns);
  }
  const bool probed = report.partials.size() >= 8;

  if (format == "csv") {
    out << to_csv(report, 13);
    return;
  }
  if (format == "json") {
    json j;
    j["partials"] = json::array();
    for (const auto& [N, value] : report.partials) {
      j["partials"].push_back({{"N", N}, {"value", value.to_sci(13)}});
    }
    j["verdict"] = probed ? to_string(report.verdict.kind) : "too_few_partials";
    if (report.verdict.kind == SumVerdict::Kind::converged) {
      j["value"] = report.verdict.value.to_sci(13);
      j["N"] = report.verdict.at_N;
    } else if (report.verdict.kind == SumVerdict::Kind::diverging) {
      j["ratio"] = report.verdict.ratio;
    }
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [N, value] : report.partials) out << N << '\t' << value.to_sci(13) << '\n';
  out << "verdict: " << (probed ? verdict_text(report.verdict) : "indeterminate (fewer than 8 partials)")
      << '\n';
}

void cmd_maier(const MaierArgs& args, const std::string& format, std::ostream& out) {
  const auto variant = parse_variant(args.variant);
  if (!variant) throw DomainError("unknown variant '" + args.variant + "'");
  const bool condition = maier_condition(*variant, args.a, args.x);
  const auto params = make_heun_params(args.a, args.q, args.alpha, args.beta, args.gamma, args.delta);
  const auto transform = maier_transformed_params(*variant, params);
  const double t = transform.argument(args.x);
  const MaierInfo info = maier_info(*variant);
  const auto& p = transform.params;

  if (format == "json") {
    json j = {{"variant", std::string(variant_id(*variant))},
              {"condition", condition},
              {"a'", p.a()},
              {"q'", p.q()},
              {"alpha'", p.alpha()},
              {"beta'", p.beta()},
              {"gamma'", p.gamma()},
              {"delta'", p.delta()},
              {"epsilon'", p.epsilon()},
              {"t", t},
              {"argument", std::string(info.argument)},
              {"prefactor", std::string(info.prefactor)}};
    out << j.dump() << '\n';
    return;
  }
  out << "variant = " << variant_id(*variant) << '\n'
      << "condition = " << (condition ? "true" : "false") << '\n'
      << "a' = " << fmt_shortest(p.a()) << "   [" << info.transformed_a << "]\n"
      << "q' = " << fmt_shortest(p.q()) << '\n'
      << "alpha' = " << fmt_shortest(p.alpha()) << '\n'
      << "beta' = " << fmt_shortest(p.beta()) << '\n'
      << "gamma' = " << fmt_shortest(p.gamma()) << '\n'
      << "delta' = " << fmt_shortest(p.delta()) << '\n'
      << "epsilon' = " << fmt_shortest(p.epsilon()) << '\n'
      << "t = " << fmt_shortest(t) << "   [t(x) = " << info.argument << "]\n"
      << "prefactor = " << info.prefactor << '\n';
}

void add_heun_params(CLI::App* cmd, double& q, double& alpha, double& beta, double& gamma,
                     double& delta) {
  cmd->add_option("--q", q, "accessory parameter q")->capture_default_str();
  cmd->add_option("--alpha", alpha, "exponent parameter alpha")->capture_default_str();
  cmd->add_option("--beta", beta, "exponent parameter beta")->capture_default_str();
  cmd->add_option("--gamma", gamma, "exponent parameter gamma")->capture_default_str();
  cmd->add_option("--delta", delta, "exponent parameter delta")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convergence domains and summation experiments for Heun power series"};
  app.name("heunconv");
  app.require_subcommand(1);

  std::string output;
  auto add_common = [&](CLI::App* cmd, std::string& format, const std::string& default_format) {
    format = default_format;
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->default_str(default_format);
    cmd->add_option("-o,--output", output, "write to this file instead of standard output");
  };

  DomainArgs domain;
  auto* domain_cmd = app.add_subcommand(
      "domain", "Poincare-Perron radius and absolute-convergence region for a; membership of x");
  domain_cmd->add_option("--a", domain.a, "singularity parameter a (nonzero)")->required();
  domain_cmd->add_option("--x", domain.x, "point to classify");

  TableArgs table;
  auto* table_cmd = app.add_subcommand(
      "table",
      "Partial sums at a = 0.8 as (N, value):\n"
      "  3: direct sum of the asymptotic recurrence, x = 0.3\n"
      "  4: rectangular double sum, x = 0.3\n"
      "  5: rectangular double sum, x = 0.7 (diverges; 6 significant digits)\n"
      "  6: direct sum of the asymptotic recurrence, x = 0.7");
  table_cmd->add_option("--id", table.id, "table id (3, 4, 5 or 6)")
      ->required()
      ->check(CLI::IsMember({3, 4, 5, 6}));
  table_cmd->add_option("--n-list", table.ns, "truncation indices (default 10 50 100 200 ... 1000)")
      ->delimiter(',');

  RegionArgs region;
  auto* region_cmd = app.add_subcommand(
      "region", "Classify an (a, x) raster: 0 outside, 1 P-P only, 2 both, 3 undefined");
  region_cmd->add_option("--a-range", region.a_range, "a interval lo:hi")->capture_default_str();
  region_cmd->add_option("--x-range", region.x_range, "x interval lo:hi")->capture_default_str();
  region_cmd->add_option("--res", region.res, "resolution <a cells>x<x cells>, or N for NxN")
      ->capture_default_str();

  SumArgs sum;
  auto* sum_cmd = app.add_subcommand("sum", "Partial sums up to N and the convergence verdict");
  sum_cmd->add_option("--a", sum.a, "singularity parameter a (nonzero)")->required();
  sum_cmd->add_option("--x", sum.x, "argument x")->required();
  sum_cmd->add_option("--n", sum.n, "largest truncation index N")->capture_default_str();
  sum_cmd->add_option("--method", sum.method, "direct, double (rectangular) or diagonal")
      ->check(CLI::IsMember({"direct", "double", "diagonal"}))
      ->capture_default_str();
  sum_cmd->add_flag("--heun", sum.heun, "sum the full Heun series instead of the asymptotic one");
  add_heun_params(sum_cmd, sum.q, sum.alpha, sum.beta, sum.gamma, sum.delta);
  sum_cmd->add_option("--root", sum.root, "indicial root: 0 for lambda=0, 1 for lambda=1-gamma")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();

  MaierArgs maier;
  auto* maier_cmd = app.add_subcommand("maier", "Convergence condition of a Maier local solution");
  maier_cmd->add_option("--variant", maier.variant, "a1a a1b a2a a2b a3 a4a a4b a5 a6")
      ->required()
      ->check(CLI::IsMember({"a1a", "a1b", "a2a", "a2b", "a3", "a4a", "a4b", "a5", "a6"}));
  maier_cmd->add_option("--a", maier.a, "singularity parameter a")->required();
  maier_cmd->add_option("--x", maier.x, "argument x")->required();
  add_heun_params(maier_cmd, maier.q, maier.alpha, maier.beta, maier.gamma, maier.delta);

  std::string domain_fmt, table_fmt, region_fmt, sum_fmt, maier_fmt;
  add_common(domain_cmd, domain_fmt, "pretty");
  add_common(table_cmd, table_fmt, "csv");
  add_common(region_cmd, region_fmt, "csv");
  add_common(sum_cmd, sum_fmt, "pretty");
  add_common(maier_cmd, maier_fmt, "pretty");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    std::ostringstream buffer;
    if (*domain_cmd) cmd_domain(domain, domain_fmt, buffer);
    else if (*table_cmd) cmd_table(table, table_fmt, buffer);
    else if (*region_cmd) cmd_region(region, region_fmt, buffer);
    else if (*sum_cmd) cmd_sum(sum, sum_fmt, buffer);
    else if (*maier_cmd) cmd_maier(maier, maier_fmt, buffer);

    if (output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw Error("cannot open output file '" + output + "'");
      file << buffer.str();
    }
  } catch (const NoSolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kNoSolution;
  } catch (const ExcludedPointError& e) {
    err << "error: " << e.what() << '\n';
    return kExcludedPoint;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kOk;
}

}  // namespace heunconv::cli
