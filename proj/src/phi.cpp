#include "summa/phi.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "summa/error.hpp"
#include "summa/format.hpp"

namespace summa {

namespace {

const double kEE = std::exp(std::numbers::e);  // e^e

// ln(e^z - 1) for z > 0.
double log_expm1(double z) {
  return z > 1.0 ? z + std::log1p(-std::exp(-z)) : std::log(std::expm1(z));
}

double exponent(const PhiSpec& phi, double t) {
  switch (phi.family) {
    case PhiSpec::Family::ExpLinear: return phi.a * t;
    case PhiSpec::Family::ExpPower: return phi.a * std::pow(t, phi.alpha);
    case PhiSpec::Family::ExpSqrtLogLog: return phi.a * std::sqrt(t / std::log(std::log(t + kEE)));
    case PhiSpec::Family::Power: break;
  }
  return 0.0;
}

[[noreturn]] void bad_phi(std::string_view text) {
  fail(ErrorCode::InvalidArgument, "malformed growth function '" + std::string(text) + "'");
}

double parse_number(std::string_view tok, std::string_view whole) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) bad_phi(whole);
  return v;
}

Trend analytic_trend(const PhiSpec& phi, std::string_view condition) {
  using F = PhiSpec::Family;
  switch (phi.family) {
    case F::Power:
    case F::ExpSqrtLogLog:
      return Trend::Bounded;
    case F::ExpLinear:
      return condition == "rodin" ? Trend::Bounded : Trend::Growing;
    case F::ExpPower:
      if (condition == "rodin") return phi.alpha <= 1.0 ? Trend::Bounded : Trend::Growing;
      if (condition == "t4") return phi.alpha < 0.5 ? Trend::Bounded : Trend::Growing;
      return phi.alpha <= 0.5 ? Trend::Bounded : Trend::Growing;
  }
  return Trend::Bounded;
}

double condition_ratio(const PhiSpec& phi, std::string_view condition, double t) {
  const double lp = log_phi(phi, t);
  if (condition == "rodin") return lp / t;
  if (condition == "t4") return lp / std::sqrt(t / std::log(std::log(t)));
  return lp / std::sqrt(t);
}

double log_sum_exp(const std::vector<double>& xs) {
  const double m = *std::max_element(xs.begin(), xs.end());
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

std::string PhiSpec::name() const {
  switch (family) {
    case Family::Power: return "power:" + format_double(a);
    case Family::ExpLinear: return "exp_linear:" + format_double(a);
    case Family::ExpPower: return "exp_power:" + format_double(a) + "," + format_double(alpha);
    case Family::ExpSqrtLogLog: return "exp_sqrt_loglog:" + format_double(a);
  }
  return {};
}

PhiSpec parse_phi(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) bad_phi(text);
  const std::string_view family = text.substr(0, colon);
  std::vector<double> args;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    args.push_back(parse_number(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  for (double v : args)
    if (!(v > 0.0) || !std::isfinite(v)) bad_phi(text);
  if (family == "power" && args.size() == 1) return PhiSpec::power(args[0]);
  if (family == "exp_linear" && args.size() == 1) return PhiSpec::exp_linear(args[0]);
  if (family == "exp_power" && args.size() == 2) return PhiSpec::exp_power(args[0], args[1]);
  if (family == "exp_sqrt_loglog" && args.size() == 1) return PhiSpec::exp_sqrt_loglog(args[0]);
  bad_phi(text);
}

std::vector<PhiSpec> parse_phi_list(std::string_view text) {
  std::vector<std::string> specs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    if (tok.find(':') != std::string_view::npos) {
      specs.emplace_back(tok);
    } else {
      if (specs.empty()) bad_phi(tok);
      specs.back() += "," + std::string(tok);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::vector<PhiSpec> out;
  for (const auto& s : specs) out.push_back(parse_phi(s));
  return out;
}

double phi_eval(const PhiSpec& phi, double t) {
  if (!(t >= 0.0)) fail(ErrorCode::DomainError, "growth function argument must be >= 0");
  if (t == 0.0) return 0.0;
  if (phi.family == PhiSpec::Family::Power) return std::pow(t, phi.a);
  return std::expm1(exponent(phi, t));
}

double log_phi(const PhiSpec& phi, double t) {
  if (!(t > 0.0)) fail(ErrorCode::DomainError, "log growth requires t > 0");
  if (phi.family == PhiSpec::Family::Power) return phi.a * std::log(t);
  return log_expm1(exponent(phi, t));
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

const ConditionEstimate& GrowthReport::find(std::string_view condition) const {
  for (const auto& c : conditions)
    if (c.condition == condition) return c;
  fail(ErrorCode::InvalidArgument, "unknown growth condition " + std::string(condition));
}

GrowthReport classify_growth(const PhiSpec& phi, const std::vector<double>& s_grid) {
  if (s_grid.size() < 4) fail(ErrorCode::InvalidArgument, "growth grid needs at least 4 points");
  GrowthReport report;
  const std::size_t first = s_grid.size() / 2;
  for (const char* condition : {"rodin", "t4", "t6"}) {
    ConditionEstimate est;
    est.condition = condition;
    est.max_tail_ratio = -std::numeric_limits<double>::infinity();
    for (std::size_t i = first; i < s_grid.size(); ++i) {
      est.max_tail_ratio = std::max(est.max_tail_ratio, condition_ratio(phi, condition, s_grid[i]));
    }
    const double start = condition_ratio(phi, condition, s_grid[first]);
    const double end = condition_ratio(phi, condition, s_grid.back());
    est.tail_growth = start > 0.0 ? end / start : 0.0;
    est.sampled = (end > 0.0 && est.tail_growth > kGrowthFactor) ? Trend::Growing : Trend::Bounded;
    est.analytic = analytic_trend(phi, condition);
    report.conditions.push_back(est);
  }
  return report;
}

double log_u(double s) { return std::sqrt(s / std::log(std::log(s + 2.0))); }

double log_v(double s, double d, int terms) {
  std::vector<double> logs(static_cast<std::size_t>(terms));
  const double half_log_s = 0.5 * std::log(s);
  const double log_d = std::log(d);
  for (int k = 1; k <= terms; ++k) {
    const double kk = k;
    logs[static_cast<std::size_t>(k - 1)] =
        kk * (log_d - std::log(kk) + half_log_s - 0.5 * std::log(std::log(std::log(kk + 2.0))));
  }
  return log_sum_exp(logs);
}

long k_of_s(double s) { return static_cast<long>(std::floor(log_u(s))) + 1; }

UvReport u_v_domination(const std::vector<double>& s_grid, int terms, double d_max) {
  if (terms < 1) fail(ErrorCode::InvalidArgument, "series truncation must be >= 1");
  UvReport report;
  report.terms = terms;
  report.samples = s_grid.size();
  for (double s : s_grid) {
    const double r = log_u(s);
    const auto k = static_cast<double>(k_of_s(s));
    if (!(1.0 < r && r < k && k < 2.0 * r)) report.bracketing_holds = false;
  }
  for (double d = 1.0; d <= d_max; d += 0.5) {
    double margin = std::numeric_limits<double>::infinity();
    for (double s : s_grid) margin = std::min(margin, log_v(s, d, terms) - log_u(s));
    if (margin >= 0.0) {
      report.d_star = d;
      report.min_log_margin = margin;
      return report;
    }
  }
  fail(ErrorCode::DominationFailure,
       "no d <= " + format_double(d_max) + " gives u <= v_K on the sample grid");
}

std::optional<UDomination> dominate_by_u(const PhiSpec& phi, const std::vector<double>& s_grid) {
  if (s_grid.empty()) return std::nullopt;
  const double median = s_grid[s_grid.size() / 2];
  for (int ja = 1; ja <= 16; ++ja) {
    const double a = std::ldexp(1.0, ja);
    for (int js = 1; js <= 10; ++js) {
      const double s_cut = std::ldexp(1.0, js);
      if (s_cut >= median) break;
      bool ok = true;
      for (double s : s_grid) {
        if (s <= s_cut) continue;
        if (log_phi(phi, s) > log_u(a * s)) {
          ok = false;
          break;
        }
      }
      if (ok) return UDomination{a, s_cut};
    }
  }
  return std::nullopt;
}

}  // namespace summa
