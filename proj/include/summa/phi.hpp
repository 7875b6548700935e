#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace summa {

/// Continuous increasing growth function with Phi(0) = 0.
struct PhiSpec {
  enum class Family { Power, ExpLinear, ExpPower, ExpSqrtLogLog };

  Family family = Family::Power;
  double a = 1.0;      ///< power: exponent p; exp families: rate a
  double alpha = 1.0;  ///< exp_power only

  static PhiSpec power(double p) { return {Family::Power, p, 1.0}; }
  static PhiSpec exp_linear(double a) { return {Family::ExpLinear, a, 1.0}; }
  static PhiSpec exp_power(double a, double alpha) { return {Family::ExpPower, a, alpha}; }
  static PhiSpec exp_sqrt_loglog(double a) { return {Family::ExpSqrtLogLog, a, 1.0}; }

  /// Compact form, e.g. "exp_power:1,0.5". Round-trips through parse_phi.
  std::string name() const;
};

/// Parses "family:param[,param]". Throws InvalidArgument on malformed input.
PhiSpec parse_phi(std::string_view text);

/// Parses "exp_linear:1,exp_power:1,0.5": a token without ':' continues the
/// parameter list of the preceding spec.
std::vector<PhiSpec> parse_phi_list(std::string_view text);

/// Phi(t). Throws DomainError for t < 0.
double phi_eval(const PhiSpec& phi, double t);

/// ln Phi(t) for t > 0, evaluated without forming Phi(t) (no overflow).
double log_phi(const PhiSpec& phi, double t);

/// n points log-spaced on [lo, hi].
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

enum class Trend { Bounded, Growing };

struct ConditionEstimate {
  std::string condition;      ///< "rodin", "t4" or "t6"
  double max_tail_ratio = 0;  ///< max of the ratio over the tail half of the grid
  double tail_growth = 0;     ///< ratio(last) / ratio(first tail point)
  Trend sampled = Trend::Bounded;
  Trend analytic = Trend::Bounded;
  bool agrees() const noexcept { return sampled == analytic; }
};

/// Sampled-tail estimate of the three growth conditions
///   rodin: ln Phi(t) / t,  t4: ln Phi(t) / sqrt(t / ln ln t),  t6: ln Phi(t) / sqrt(t).
/// A ratio is flagged growing when it rises by more than kGrowthFactor across
/// the tail half of the grid. This is a heuristic; the closed-form answer is
/// reported alongside it.
struct GrowthReport {
  std::string label = "sampled-tail estimate";
  std::vector<ConditionEstimate> conditions;
  const ConditionEstimate& find(std::string_view condition) const;
};

inline constexpr double kGrowthFactor = 1.05;

GrowthReport classify_growth(const PhiSpec& phi, const std::vector<double>& s_grid);

/// ln u(s) = sqrt(s / ln ln(s + 2)).
double log_u(double s);

/// ln v_K(s) for the given d, summed in log space.
double log_v(double s, double d, int terms);

/// k(s) = floor(sqrt(s / ln ln(s+2))) + 1.
long k_of_s(double s);

struct UvReport {
  double d_star = 0;
  int terms = 0;
  double min_log_margin = 0;  ///< min over s of ln v - ln u at d_star
  bool bracketing_holds = true;
  std::size_t samples = 0;
};

/// Smallest d on {1, 1.5, ..., d_max} with u <= v_K on every s in s_grid.
/// Throws DominationFailure when no such d exists.
UvReport u_v_domination(const std::vector<double>& s_grid, int terms, double d_max = 32.0);

struct UDomination {
  double a = 0;
  double s = 0;
};

/// Smallest A in {2, 4, ..., 2^16} (then smallest S in {2, ..., 2^10}, S below the
/// grid median) with Phi(s) <= u(A s) for every grid s > S; nullopt otherwise.
std::optional<UDomination> dominate_by_u(const PhiSpec& phi, const std::vector<double>& s_grid);

}  // namespace summa
