#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsep/entropy.hpp"
#include "gsep/families.hpp"

namespace gsep {

/// Criterion whose sign change marks a separability threshold. Every
/// criterion is negative on the entangled side:
///   entropy, finite q / q = 1 : S_q(B|A)
///   entropy, q = inf          : W_inf
///   PPT                       : nu~_min - 1/2
struct Criterion {
  enum class Kind { Entropy, Ppt };
  Kind kind = Kind::Ppt;
  QIndex q = QIndex::von_neumann();

  static Criterion entropy(QIndex q) { return {Kind::Entropy, q}; }
  static Criterion ppt() { return {Kind::Ppt, QIndex::von_neumann()}; }
  std::string label() const;
};

/// Criterion value for a two-mode family state, conditioned on mode 0, via the
/// generic numeric pipeline (constructor, symplectic spectra, entropy / PPT).
double criterion_value(const FamilyParams& params, const Criterion& criterion);

/// Temperature for the two thermal families, scaled time theta for the waveguide.
enum class ScanVariable { Temperature, Theta };
ScanVariable scan_variable(Family f) noexcept;
std::string_view scan_variable_name(ScanVariable v) noexcept;

/// Copy of `params` with its scan variable set to x.
FamilyParams with_scan_value(FamilyParams params, double x);

struct Bracket {
  double lo;
  double hi;
};

/// T in (1e-3, 200); theta in (1e-4, 0.5).
Bracket default_bracket(Family f) noexcept;

struct RootOptions {
  double tol = 1e-9;
  int max_iterations = 200;
  int max_expansions = 60;
  /// Bracket growth never leaves (domain_lo, domain_hi).
  double domain_lo = -std::numeric_limits<double>::infinity();
  double domain_hi = std::numeric_limits<double>::infinity();
  /// |f| <= zero_tol counts as no sign.
  double zero_tol = 0.0;
};

struct ThresholdResult {
  double critical_value;
  double criterion_value_at_root;
  int iterations;
  Bracket bracket_used;
};

/// Brent's method on a sign-changing bracket. The bracket is first doubled
/// outward (at most max_expansions times) until f(lo) f(hi) < 0.
/// Throws NoSignChange or NonConvergence.
ThresholdResult find_root(const std::function<double(double)>& f, Bracket bracket,
                          const RootOptions& options = {});

struct ScanSpec {
  FamilyParams base;  // the scan variable's value here is ignored
  Criterion criterion;
  std::optional<Bracket> bracket;
  double tol = 1e-9;
};

/// Zero crossing of the criterion along the family's scan variable. For the
/// waveguide this is the first crossing in theta: the bracket is walked from
/// its lower end in steps of 0.01 and the first sign-changing step refined.
ThresholdResult threshold(const ScanSpec& spec);

struct SweepRow {
  QIndex q;
  std::optional<ThresholdResult> result;  // empty when there is no crossing
};

/// Thresholds for each q in q_grid (ascending, >= 1), plus a final q = inf
/// row. Rows are solved concurrently; output order follows q_grid.
std::vector<SweepRow> q_sweep(const FamilyParams& base, std::span<const double> q_grid,
                              std::optional<Bracket> bracket = std::nullopt, double tol = 1e-9);

/// (x, criterion) over a grid of the family's scan variable (T or theta).
/// For q = inf the tabulated value is W_inf.
std::vector<std::pair<double, double>> entropy_vs_T_curve(const FamilyParams& base, QIndex q,
                                                          std::span<const double> grid);

/// n points log-spaced from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

}  // namespace gsep
