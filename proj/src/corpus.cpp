#include "summa/corpus.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <random>

#include "summa/error.hpp"

namespace summa {

namespace {

constexpr int kClipSubsamples = 64;

// Uniform in [-1, 1) from the raw 64-bit stream; independent of the standard
// library's distribution implementation.
double signed_unit(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

double leading(std::mt19937_64& rng) {
  const double u = signed_unit(rng);
  return u < 0.0 ? -0.5 + 0.5 * u : 0.5 + 0.5 * u;
}

std::complex<double> cos_weight(int m) { return m == 0 ? 1.0 : 0.5; }

std::complex<double> sin_weight(int m) {
  if (m == 0) return 0.0;
  return m > 0 ? std::complex<double>(0.0, -0.5) : std::complex<double>(0.0, 0.5);
}

struct ParsedName {
  std::string family;
  std::vector<double> args;
};

[[noreturn]] void unknown(std::string_view name) {
  fail(ErrorCode::UnknownCorpusEntry, "unknown corpus entry '" + std::string(name) + "'");
}

ParsedName parse_term(std::string_view text) {
  ParsedName out;
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    out.family = std::string(text);
    return out;
  }
  if (text.back() != ')') unknown(text);
  out.family = std::string(text.substr(0, open));
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    std::string_view tok = inner.substr(0, comma);
    // seed=7 style keyword arguments are accepted; the key is ignored.
    if (const auto eq = tok.find('='); eq != std::string_view::npos) tok = tok.substr(eq + 1);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) unknown(text);
    out.args.push_back(v);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return out;
}

int as_int(double v, std::string_view name) {
  if (v < 0.0 || v != std::floor(v)) unknown(name);
  return static_cast<int>(v);
}

// Replaces the value at a singular grid point with the midpoint-rule average
// over the symmetric cell [x - h/2, x + h/2).
double clipped_average(const std::function<double(double)>& f, double x, double h) {
  double s = 0.0;
  for (int k = 0; k < kClipSubsamples; ++k) {
    const double t = x - 0.5 * h + (k + 0.5) * h / kClipSubsamples;
    s += f(t);
  }
  return s / kClipSubsamples;
}

double log_singular(double x) { return std::log(kTwoPi / std::abs(x)); }

double l1_only(double x) {
  const double l = std::log(kTwoPi / std::abs(x));
  return 1.0 / (std::abs(x) * l * l);
}

struct Entry1D {
  CorpusInfo info;
  std::function<double(double)> closed_form;
  bool singular_at_origin = false;
};

Entry1D resolve_1d(std::string_view name) {
  const ParsedName p = parse_term(name);
  Entry1D e;
  e.info.name = std::string(name);
  e.info.dims = 1;
  if (p.family == "constant" && p.args.size() == 1) {
    const double c = p.args[0];
    e.closed_form = [c](double) { return c; };
    e.info.tags = {.continuous = true, .trig_poly = true, .degree1 = 0, .llogl = true};
  } else if (p.family == "cosine" && p.args.size() == 1) {
    const int k = as_int(p.args[0], name);
    e.closed_form = [k](double x) { return std::cos(k * x); };
    e.info.tags = {.continuous = true, .trig_poly = true, .degree1 = k, .llogl = true};
  } else if (p.family == "random-trigpoly" && p.args.size() == 2) {
    const int s = as_int(p.args[0], name);
    auto poly = random_trig_poly_1d(s, static_cast<std::uint64_t>(as_int(p.args[1], name)));
    e.closed_form = [poly = std::move(poly)](double x) { return poly(x); };
    e.info.tags = {.continuous = true, .trig_poly = true, .degree1 = s, .llogl = true};
  } else if (p.family == "box" && (p.args.size() == 2 || p.args.size() == 3)) {
    const double a = p.args[0];
    const double b = p.args[1];
    const double height = p.args.size() == 3 ? p.args[2] : 1.0;
    if (!(a < b)) unknown(name);
    e.closed_form = [a, b, height](double x) { return (x >= a && x < b) ? height : 0.0; };
    e.info.tags = {.llogl = true};
  } else if (p.family == "log-singular" && p.args.empty()) {
    e.closed_form = log_singular;
    e.singular_at_origin = true;
    e.info.tags = {.llogl = true};
  } else if (p.family == "l1-only" && p.args.empty()) {
    e.closed_form = l1_only;
    e.singular_at_origin = true;
    e.info.tags = {.l1_only = true};
  } else {
    unknown(name);
  }
  if (e.singular_at_origin) {
    e.info.singular_x1 = 0.0;
    e.info.clipping =
        "value at x=0 replaced by the 64-point midpoint average over [-h/2, h/2)";
  }
  return e;
}

std::vector<double> sample_1d(const Entry1D& e, const PeriodicGrid& grid) {
  std::vector<double> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.point(j);
    if (e.singular_at_origin && x == 0.0) {
      v[j] = clipped_average(e.closed_form, x, grid.step());
    } else {
      v[j] = e.closed_form(x);
    }
  }
  return v;
}

std::vector<std::string_view> split_tensor(std::string_view name) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '(') ++depth;
    if (name[i] == ')') --depth;
    if (name[i] == '*' && depth == 0) {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(name.substr(start));
  return parts;
}

}  // namespace

double TrigPoly1D::operator()(double x) const {
  double s = a[0];
  for (int k = 1; k <= degree(); ++k) s += a[k] * std::cos(k * x) + b[k] * std::sin(k * x);
  return s;
}

std::complex<double> TrigPoly1D::coefficient(int m) const {
  const int k = std::abs(m);
  if (k > degree()) return 0.0;
  return a[k] * cos_weight(m) + b[k] * sin_weight(m);
}

double TrigPoly2D::operator()(double x1, double x2) const {
  double s = 0.0;
  for (int k1 = 0; k1 <= s1; ++k1) {
    const double c1 = std::cos(k1 * x1);
    const double n1 = std::sin(k1 * x1);
    for (int k2 = 0; k2 <= s2; ++k2) {
      const double c2 = std::cos(k2 * x2);
      const double n2 = std::sin(k2 * x2);
      const std::size_t i = static_cast<std::size_t>(k1 * (s2 + 1) + k2);
      s += cc[i] * c1 * c2 + cs[i] * c1 * n2 + sc[i] * n1 * c2 + ss[i] * n1 * n2;
    }
  }
  return s;
}

std::complex<double> TrigPoly2D::coefficient(int m1, int m2) const {
  const int k1 = std::abs(m1);
  const int k2 = std::abs(m2);
  if (k1 > s1 || k2 > s2) return 0.0;
  const std::size_t i = static_cast<std::size_t>(k1 * (s2 + 1) + k2);
  return cc[i] * cos_weight(m1) * cos_weight(m2) + cs[i] * cos_weight(m1) * sin_weight(m2) +
         sc[i] * sin_weight(m1) * cos_weight(m2) + ss[i] * sin_weight(m1) * sin_weight(m2);
}

TrigPoly1D random_trig_poly_1d(int degree, std::uint64_t seed) {
  if (degree < 0) fail(ErrorCode::InvalidArgument, "degree must be non-negative");
  std::mt19937_64 rng(seed);
  TrigPoly1D p;
  p.a.assign(static_cast<std::size_t>(degree) + 1, 0.0);
  p.b.assign(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int k = 0; k <= degree; ++k) {
    p.a[k] = k == degree ? leading(rng) : signed_unit(rng);
    if (k > 0) p.b[k] = signed_unit(rng);
  }
  return p;
}

TrigPoly2D random_trig_poly_2d(int s1, int s2, std::uint64_t seed) {
  if (s1 < 0 || s2 < 0) fail(ErrorCode::InvalidArgument, "degree must be non-negative");
  std::mt19937_64 rng(seed);
  TrigPoly2D p;
  p.s1 = s1;
  p.s2 = s2;
  const std::size_t n = static_cast<std::size_t>((s1 + 1) * (s2 + 1));
  p.cc.assign(n, 0.0);
  p.cs.assign(n, 0.0);
  p.sc.assign(n, 0.0);
  p.ss.assign(n, 0.0);
  for (int k1 = 0; k1 <= s1; ++k1) {
    for (int k2 = 0; k2 <= s2; ++k2) {
      const std::size_t i = static_cast<std::size_t>(k1 * (s2 + 1) + k2);
      // Corner terms pin the degree in both variables.
      const bool pin = (k1 == s1 && k2 == 0) || (k1 == 0 && k2 == s2);
      p.cc[i] = pin ? leading(rng) : signed_unit(rng);
      if (k2 > 0) p.cs[i] = signed_unit(rng);
      if (k1 > 0) p.sc[i] = signed_unit(rng);
      if (k1 > 0 && k2 > 0) p.ss[i] = signed_unit(rng);
    }
  }
  return p;
}

CorpusInfo corpus_info(std::string_view name) {
  const auto parts = split_tensor(name);
  if (parts.size() == 2) {
    const CorpusInfo a = resolve_1d(parts[0]).info;
    const CorpusInfo b = resolve_1d(parts[1]).info;
    CorpusInfo info;
    info.name = std::string(name);
    info.dims = 2;
    info.tags.continuous = a.tags.continuous && b.tags.continuous;
    info.tags.trig_poly = a.tags.trig_poly && b.tags.trig_poly;
    if (info.tags.trig_poly) {
      info.tags.degree1 = a.tags.degree1;
      info.tags.degree2 = b.tags.degree1;
    }
    // A tensor of L log L factors is in L log L(T^2); an L^1-only factor drops it.
    info.tags.llogl = a.tags.llogl && b.tags.llogl;
    info.tags.l1_only = !info.tags.llogl;
    info.singular_x1 = a.singular_x1;
    info.singular_x2 = b.singular_x1;
    if (!a.clipping.empty() || !b.clipping.empty()) {
      info.clipping = "factorwise: " + (a.clipping.empty() ? b.clipping : a.clipping);
    }
    return info;
  }
  if (parts.size() != 1) unknown(name);

  const ParsedName p = parse_term(name);
  if (p.family == "product-log-singular" && p.args.empty()) {
    CorpusInfo info = corpus_info("log-singular*log-singular");
    info.name = std::string(name);
    return info;
  }
  if (p.family == "random-trigpoly" && p.args.size() == 3) {
    CorpusInfo info;
    info.name = std::string(name);
    info.dims = 2;
    info.tags = {.continuous = true,
                 .trig_poly = true,
                 .degree1 = as_int(p.args[0], name),
                 .degree2 = as_int(p.args[1], name),
                 .llogl = true};
    return info;
  }
  return resolve_1d(name).info;
}

SampledFunction1D corpus_1d(std::string_view name, const PeriodicGrid& grid) {
  return SampledFunction1D(grid, sample_1d(resolve_1d(name), grid));
}

SampledFunction2D corpus_2d(std::string_view name, const PeriodicGrid& grid1,
                            const PeriodicGrid& grid2) {
  const std::size_t n1 = grid1.size();
  const std::size_t n2 = grid2.size();
  std::vector<double> v(n1 * n2);
  const auto parts = split_tensor(name);

  auto tensor = [&](std::string_view a, std::string_view b) {
    const auto va = sample_1d(resolve_1d(a), grid1);
    const auto vb = sample_1d(resolve_1d(b), grid2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) v[i * n2 + j] = va[i] * vb[j];
  };

  if (parts.size() == 2) {
    tensor(parts[0], parts[1]);
    return SampledFunction2D(grid1, grid2, std::move(v));
  }
  if (parts.size() != 1) unknown(name);
  const ParsedName p = parse_term(name);
  if (p.family == "product-log-singular" && p.args.empty()) {
    tensor("log-singular", "log-singular");
  } else if (p.family == "constant" && p.args.size() == 1) {
    std::fill(v.begin(), v.end(), p.args[0]);
  } else if (p.family == "random-trigpoly" && p.args.size() == 3) {
    const auto poly = random_trig_poly_2d(as_int(p.args[0], name), as_int(p.args[1], name),
                                          static_cast<std::uint64_t>(as_int(p.args[2], name)));
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) v[i * n2 + j] = poly(grid1.point(i), grid2.point(j));
  } else {
    unknown(name);
  }
  return SampledFunction2D(grid1, grid2, std::move(v));
}

std::vector<std::string> default_corpus_1d() {
  return {"constant(3)",          "cosine(3)", "random-trigpoly(5,11)", "box(-0.5,0.5)",
          "log-singular",         "l1-only"};
}

std::vector<std::string> default_corpus_2d() {
  return {"constant(3)", "cosine(1)*cosine(2)", "random-trigpoly(3,4,7)",
          "product-log-singular", "box(-0.5,0.5)*log-singular"};
}

}  // namespace summa
