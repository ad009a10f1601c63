#include "gsep/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "gsep/errors.hpp"
#include "gsep/separability.hpp"

namespace gsep {

namespace {

constexpr double kWaveguideStep = 0.01;

int sign_of(double v, double zero_tol) {
  if (std::abs(v) <= zero_tol || std::isnan(v)) return 0;
  return v < 0.0 ? -1 : 1;
}

// Brent's method on [a, b] with fa, fb of strictly opposite sign.
ThresholdResult brent(const std::function<double(double)>& f, double a, double b, double fa,
                      double fb, const RootOptions& opt) {
  const Bracket used{a, b};
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = b, fc = fb;
  double d = b - a, e = d;

  for (int iter = 1; iter <= opt.max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * opt.tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return {b, fb, iter, used};

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, or secant when only two points differ.
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw NonConvergence("root finder exceeded " + std::to_string(opt.max_iterations) +
                       " iterations");
}

// Moves an endpoint outward by `step`, stopping halfway to an open domain edge.
double step_down(double lo, double step, double domain_lo) {
  const double next = lo - step;
  return next > domain_lo ? next : 0.5 * (lo + domain_lo);
}

double step_up(double hi, double step, double domain_hi) {
  const double next = hi + step;
  return next < domain_hi ? next : 0.5 * (hi + domain_hi);
}

RootOptions scan_options(const ScanSpec& spec) {
  RootOptions opt;
  opt.tol = spec.tol;
  opt.domain_lo = 0.0;
  opt.zero_tol = kEntangledTol;
  return opt;
}

}  // namespace

std::string Criterion::label() const {
  return kind == Kind::Ppt ? "ppt" : "q=" + q.label();
}

double criterion_value(const FamilyParams& params, const Criterion& criterion) {
  const CovarianceMatrix v = build_state(params);
  const ModePartition split = ModePartition::two_mode();
  if (criterion.kind == Criterion::Kind::Ppt) return ppt_min_symplectic(v, split) - 0.5;
  const auto global = symplectic_spectrum(v);
  const auto local = symplectic_spectrum(reduce(v, split.a()));
  return conditional_q_entropy(global, local, criterion.q).criterion();
}

ScanVariable scan_variable(Family f) noexcept {
  return f == Family::Waveguide ? ScanVariable::Theta : ScanVariable::Temperature;
}

std::string_view scan_variable_name(ScanVariable v) noexcept {
  return v == ScanVariable::Theta ? "theta" : "T";
}

FamilyParams with_scan_value(FamilyParams params, double x) {
  std::visit(
      [x](auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, WaveguideParams>) p.theta = x;
        else p.T = x;
      },
      params);
  return params;
}

Bracket default_bracket(Family f) noexcept {
  return f == Family::Waveguide ? Bracket{1e-4, 0.5} : Bracket{1e-3, 200.0};
}

ThresholdResult find_root(const std::function<double(double)>& f, Bracket bracket,
                          const RootOptions& options) {
  if (!(bracket.lo < bracket.hi)) throw InvalidParameter("bracket must satisfy lo < hi");
  double lo = bracket.lo, hi = bracket.hi;
  double flo = f(lo), fhi = f(hi);
  for (int k = 0; sign_of(flo, options.zero_tol) * sign_of(fhi, options.zero_tol) >= 0; ++k) {
    if (k == options.max_expansions) {
      std::ostringstream msg;
      msg << "no sign change in [" << lo << ", " << hi << "] after " << options.max_expansions
          << " bracket expansions";
      throw NoSignChange(msg.str());
    }
    const double half = 0.5 * (hi - lo);
    lo = step_down(lo, half, options.domain_lo);
    hi = step_up(hi, half, options.domain_hi);
    flo = f(lo);
    fhi = f(hi);
  }
  return brent(f, lo, hi, flo, fhi, options);
}

ThresholdResult threshold(const ScanSpec& spec) {
  const Family fam = family_of(spec.base);
  const Bracket bracket = spec.bracket.value_or(default_bracket(fam));
  if (!(bracket.lo < bracket.hi) || bracket.lo <= 0.0) {
    throw InvalidParameter("scan bracket must satisfy 0 < lo < hi");
  }
  const auto f = [&](double x) { return criterion_value(with_scan_value(spec.base, x), spec.criterion); };
  const RootOptions opt = scan_options(spec);

  if (fam != Family::Waveguide) return find_root(f, bracket, opt);

  // First crossing only: the waveguide criteria oscillate in theta.
  double x0 = bracket.lo;
  double f0 = f(x0);
  while (x0 < bracket.hi) {
    const double x1 = std::min(x0 + kWaveguideStep, bracket.hi);
    const double f1 = f(x1);
    if (sign_of(f0, opt.zero_tol) * sign_of(f1, opt.zero_tol) < 0) {
      RootOptions local = opt;
      local.max_expansions = 0;
      return find_root(f, {x0, x1}, local);
    }
    x0 = x1;
    f0 = f1;
  }
  std::ostringstream msg;
  msg << "criterion " << spec.criterion.label() << " has no crossing for theta in ["
      << bracket.lo << ", " << bracket.hi << "]";
  throw NoSignChange(msg.str());
}

std::vector<SweepRow> q_sweep(const FamilyParams& base, std::span<const double> q_grid,
                              std::optional<Bracket> bracket, double tol) {
  std::vector<QIndex> qs;
  qs.reserve(q_grid.size() + 1);
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    if (q_grid[i] < 1.0) throw InvalidParameter("q grid values must be >= 1");
    if (i > 0 && q_grid[i] < q_grid[i - 1]) throw InvalidParameter("q grid must be ascending");
    qs.push_back(QIndex::of(q_grid[i]));
  }
  qs.push_back(QIndex::infinite());

  std::vector<std::future<std::optional<ThresholdResult>>> jobs;
  jobs.reserve(qs.size());
  for (const QIndex& q : qs) {
    jobs.push_back(std::async(std::launch::async, [&base, q, bracket, tol] {
      try {
        return std::optional(threshold({base, Criterion::entropy(q), bracket, tol}));
      } catch (const NoSignChange&) {
        return std::optional<ThresholdResult>();
      }
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) rows.push_back({qs[i], jobs[i].get()});
  return rows;
}

std::vector<std::pair<double, double>> entropy_vs_T_curve(const FamilyParams& base, QIndex q,
                                                          std::span<const double> grid) {
  const Criterion c = Criterion::entropy(q);
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  for (double x : grid) out.emplace_back(x, criterion_value(with_scan_value(base, x), c));
  return out;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  if (!(lo > 0.0 && hi > lo)) throw InvalidParameter("log_spaced needs 0 < lo < hi");
  std::vector<double> out(n);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace gsep
