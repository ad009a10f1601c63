#include "cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gsep/errors.hpp"
#include "gsep/families.hpp"
#include "gsep/separability.hpp"
#include "gsep/state_io.hpp"
#include "gsep/thresholds.hpp"
#include "json.hpp"

namespace gsep::cli {

using nlohmann::json;

namespace {

constexpr const char* kUnitsNote =
    "All parameters are dimensionless: hbar, the oscillator frequency and the "
    "Boltzmann constant are set to one, so beta = 1/T and the vacuum variance is 1/2.";

struct FamilyOptions {
  std::string family;
  double r = 0.0;
  double eta = 0.0;
  double T = 1.0;
  double gamma_over_J = 0.0;
  double theta = 0.0;
};

void add_family_options(CLI::App& cmd, FamilyOptions& o) {
  cmd.add_option("--family", o.family, "State family")
      ->check(CLI::IsMember({"squeezed-thermal", "beam-splitter", "waveguide"}));
  cmd.add_option("--r", o.r, "Two-mode squeezing r (squeezed-thermal, waveguide)");
  cmd.add_option("--eta", o.eta, "Single-mode squeezing eta (beam-splitter)");
  cmd.add_option("--T", o.T, "Temperature T > 0 (squeezed-thermal, beam-splitter)");
  cmd.add_option("--gamma-over-j", o.gamma_over_J, "Loss-to-coupling ratio gamma/J (waveguide)");
  cmd.add_option("--theta", o.theta, "Scaled time theta = J t / pi (waveguide)");
}

FamilyParams family_params(const FamilyOptions& o) {
  if (o.family == "squeezed-thermal") return SqueezedThermalParams{o.r, o.T};
  if (o.family == "beam-splitter") return BeamSplitterMixParams{o.eta, o.T};
  if (o.family == "waveguide") return WaveguideParams{o.r, o.gamma_over_J, o.theta};
  throw InvalidInput("--family is required");
}

std::vector<QIndex> parse_q_list(const std::string& text) {
  std::vector<QIndex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(QIndex::parse(tok));
  }
  if (out.empty()) throw InvalidParameter("empty q list");
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidParameter("cannot parse number '" + tok + "'");
    }
    out.push_back(x);
  }
  return out;
}

double root_tolerance() {
  const char* env = std::getenv("GSEP_TOL");
  if (env == nullptr || *env == '\0') return 1e-9;
  const std::string_view s(env);
  double tol = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), tol);
  if (ec != std::errc() || ptr != s.data() + s.size() || !(tol > 0.0)) {
    throw InvalidParameter("GSEP_TOL must be a positive number, got '" + std::string(s) + "'");
  }
  return tol;
}

json q_json(const QIndex& q) {
  if (q.is_infinite()) return "inf";
  return q.value();
}

json report_json(const SeparabilityReport& r, const ModePartition& p) {
  json sq = json::array();
  for (const auto& e : r.sq_values) {
    json row = {{"q", q_json(e.q)}, {"entangled", e.entangled}};
    if (e.q.is_infinite()) row["witness"] = e.witness;
    else row["value"] = e.value;
    sq.push_back(std::move(row));
  }
  return {
      {"partition", {{"A", p.a()}, {"B", p.b()}}},
      {"global_spectrum", r.global_spectrum.values()},
      {"local_spectrum", r.local_spectrum.values()},
      {"ppt_min_nu", r.ppt_min_nu},
      {"ppt_entangled", r.ppt_entangled},
      {"s1_value", r.s1_value},
      {"s1_negative", r.s1_negative},
      {"w_inf", r.w_inf},
      {"w_inf_negative", r.w_inf_negative},
      {"sq_values", std::move(sq)},
      {"log_negativity", r.log_negativity},
  };
}

void report_csv(std::ostream& out, const SeparabilityReport& r) {
  const auto flag = [](bool b) { return b ? "1" : "0"; };
  out << "quantity,value\n";
  out << "ppt_min_nu," << format_number(r.ppt_min_nu) << "\n";
  out << "ppt_entangled," << flag(r.ppt_entangled) << "\n";
  out << "s1_value," << format_number(r.s1_value) << "\n";
  out << "s1_negative," << flag(r.s1_negative) << "\n";
  out << "w_inf," << format_number(r.w_inf) << "\n";
  out << "w_inf_negative," << flag(r.w_inf_negative) << "\n";
  for (const auto& e : r.sq_values) {
    out << "S_q[" << e.q.label() << "]," << format_number(e.criterion()) << "\n";
  }
  out << "log_negativity," << format_number(r.log_negativity) << "\n";
}

std::string critical_column(Family f) {
  return std::string(scan_variable_name(scan_variable(f))) + "_c";
}

void sweep_csv(std::ostream& out, Family f, const std::vector<SweepRow>& rows) {
  out << "q," << critical_column(f) << "\n";
  for (const auto& row : rows) {
    out << row.q.label() << ",";
    if (row.result) out << format_number(row.result->critical_value);
    out << "\n";
  }
}

std::vector<double> default_q_grid() { return log_spaced(1.0, 1000.0, 31); }

void write_figure(int id, std::ostream& out) {
  if (id == 1) {
    const auto grid = default_q_grid();
    sweep_csv(out, Family::SqueezedThermal, q_sweep(SqueezedThermalParams{2.0, 1.0}, grid));
  } else if (id == 3) {
    const auto grid = default_q_grid();
    sweep_csv(out, Family::Waveguide, q_sweep(WaveguideParams{1.8, 0.1, 0.0}, grid));
  } else {
    const FamilyParams base = BeamSplitterMixParams{4.0, 1.0};
    std::vector<double> temps;
    for (int i = 2; i <= 200; ++i) temps.push_back(i / 10.0);
    const std::array qs{QIndex::von_neumann(), QIndex::of(1.5), QIndex::of(2.0), QIndex::of(5.0),
                        QIndex::infinite()};
    std::vector<std::vector<std::pair<double, double>>> columns;
    for (const auto& q : qs) columns.push_back(entropy_vs_T_curve(base, q, temps));
    out << "T,S_1,S_1.5,S_2,S_5,W_inf\n";
    for (std::size_t i = 0; i < temps.size(); ++i) {
      out << format_number(temps[i]);
      for (const auto& col : columns) out << "," << format_number(col[i].second);
      out << "\n";
    }
  }
}

int exit_code_for(ErrorKind kind) {
  if (kind == ErrorKind::NoSignChange) return kNoThreshold;
  if (is_numerical_failure(kind)) return kNumericalFailure;
  return kInvalidInput;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{std::string("Entanglement criteria for Gaussian states from covariance matrices.\n") +
               kUnitsNote};
  app.require_subcommand(1);

  // analyze
  FamilyOptions analyze_family;
  std::string analyze_matrix, analyze_q = "1,2,inf", analyze_format = "json", dump_path, a_modes;
  auto* analyze = app.add_subcommand("analyze", "Evaluate every separability criterion on one state");
  add_family_options(*analyze, analyze_family);
  analyze->add_option("--matrix", analyze_matrix, "Covariance-matrix JSON file");
  analyze->add_option("--q", analyze_q, "Comma-separated q values; 'inf' selects q -> infinity");
  analyze->add_option("--a-modes", a_modes, "Comma-separated modes of side A (default: JSON partition or {0})");
  analyze->add_option("--format", analyze_format)->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--dump-matrix", dump_path, "Also write the analyzed state as JSON");

  // validate
  std::string validate_matrix;
  auto* validate_cmd = app.add_subcommand("validate", "Check physicality of a covariance-matrix file");
  validate_cmd->add_option("--matrix", validate_matrix, "Covariance-matrix JSON file")->required();

  // threshold
  FamilyOptions threshold_family;
  std::string criterion = "q-entropy", threshold_q = "1", scan, threshold_format = "json";
  std::optional<double> lo, hi;
  auto* threshold_cmd = app.add_subcommand("threshold", "Solve for the separability threshold of a family");
  add_family_options(*threshold_cmd, threshold_family);
  threshold_cmd->add_option("--criterion", criterion)->check(CLI::IsMember({"q-entropy", "ppt"}));
  threshold_cmd->add_option("--q", threshold_q, "q for --criterion q-entropy ('inf' allowed)");
  threshold_cmd->add_option("--scan", scan, "Scan variable; must match the family")
      ->check(CLI::IsMember({"T", "theta"}));
  threshold_cmd->add_option("--lo", lo, "Lower end of the scan bracket");
  threshold_cmd->add_option("--hi", hi, "Upper end of the scan bracket");
  threshold_cmd->add_option("--format", threshold_format)->check(CLI::IsMember({"json", "csv"}));

  // sweep
  FamilyOptions sweep_family;
  std::string q_grid_text, sweep_format = "csv";
  double q_min = 1.0, q_max = 1000.0;
  std::size_t q_points = 31;
  std::optional<double> sweep_lo, sweep_hi;
  auto* sweep = app.add_subcommand("sweep", "Threshold as a function of q, plus the q -> infinity row");
  add_family_options(*sweep, sweep_family);
  sweep->add_option("--q-grid", q_grid_text, "Explicit ascending comma-separated q values >= 1");
  sweep->add_option("--q-min", q_min);
  sweep->add_option("--q-max", q_max);
  sweep->add_option("--q-points", q_points, "Number of log-spaced q values");
  sweep->add_option("--lo", sweep_lo);
  sweep->add_option("--hi", sweep_hi);
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"json", "csv"}));

  // figure
  int figure_id = 1;
  std::string figure_out = "-";
  auto* figure = app.add_subcommand("figure", "Write the data behind figure 1, 2 or 3 as CSV");
  figure->add_option("--id", figure_id)->required()->check(CLI::IsMember({1, 2, 3}));
  figure->add_option("--out", figure_out, "Output path, '-' for stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (analyze->parsed()) {
      if (analyze_matrix.empty() == analyze_family.family.empty()) {
        throw InvalidInput("analyze needs exactly one of --family or --matrix");
      }
      std::optional<StateDocument> doc;
      if (!analyze_matrix.empty()) {
        doc = read_state_document(analyze_matrix);
      } else {
        doc = StateDocument{build_state(family_params(analyze_family)), ModePartition::two_mode()};
      }
      if (doc->state.n_modes() < 2) throw InvalidInput("analyze needs at least two modes");
      ModePartition partition = doc->partition.value_or(ModePartition::with_a(doc->state.n_modes(), {0}));
      if (!a_modes.empty()) {
        std::vector<std::size_t> modes;
        for (double m : parse_number_list(a_modes)) {
          if (m < 0 || m != std::floor(m)) throw InvalidInput("--a-modes takes mode indices");
          modes.push_back(static_cast<std::size_t>(m));
        }
        partition = ModePartition::with_a(doc->state.n_modes(), std::move(modes));
        if (partition.n_modes() != doc->state.n_modes()) throw InvalidInput("--a-modes out of range");
      }
      doc->partition = partition;
      if (!dump_path.empty()) write_state_document(dump_path, *doc);

      const auto qs = parse_q_list(analyze_q);
      const auto report = full_report(doc->state, partition, qs);
      if (analyze_format == "csv") report_csv(out, report);
      else out << report_json(report, partition).dump(2) << "\n";
      return kOk;
    }

    if (validate_cmd->parsed()) {
      const auto doc = read_state_document(validate_matrix);
      const auto v = validate_state(doc.state);
      out << json{{"n_modes", doc.state.n_modes()},
                  {"min_nu", v.min_nu},
                  {"positive_definite", v.positive_definite},
                  {"physical", v.physical}}
                 .dump(2)
          << "\n";
      if (!v.physical) {
        err << "error: unphysical state (min symplectic eigenvalue " << format_number(v.min_nu)
            << ")\n";
        return kInvalidInput;
      }
      return kOk;
    }

    if (threshold_cmd->parsed()) {
      const FamilyParams base = family_params(threshold_family);
      const Family fam = family_of(base);
      if (!scan.empty() && scan != scan_variable_name(scan_variable(fam))) {
        throw InvalidInput("family " + std::string(family_name(fam)) + " scans " +
                           std::string(scan_variable_name(scan_variable(fam))));
      }
      const Criterion c = criterion == "ppt" ? Criterion::ppt()
                                             : Criterion::entropy(QIndex::parse(threshold_q));
      std::optional<Bracket> bracket;
      if (lo || hi) {
        const Bracket d = default_bracket(fam);
        bracket = Bracket{lo.value_or(d.lo), hi.value_or(d.hi)};
      }
      const auto res = threshold({base, c, bracket, root_tolerance()});
      if (threshold_format == "csv") {
        out << "family,criterion,scan_variable,critical_value,criterion_value_at_root,iterations,"
               "bracket_lo,bracket_hi\n";
        out << family_name(fam) << "," << c.label() << "," << scan_variable_name(scan_variable(fam))
            << "," << format_number(res.critical_value) << ","
            << format_number(res.criterion_value_at_root) << "," << res.iterations << ","
            << format_number(res.bracket_used.lo) << "," << format_number(res.bracket_used.hi)
            << "\n";
      } else {
        out << json{{"family", family_name(fam)},
                    {"criterion", c.label()},
                    {"scan_variable", scan_variable_name(scan_variable(fam))},
                    {"critical_value", res.critical_value},
                    {"criterion_value_at_root", res.criterion_value_at_root},
                    {"iterations", res.iterations},
                    {"bracket_used", {res.bracket_used.lo, res.bracket_used.hi}}}
                   .dump(2)
            << "\n";
      }
      return kOk;
    }

    if (sweep->parsed()) {
      const FamilyParams base = family_params(sweep_family);
      const Family fam = family_of(base);
      const auto grid = q_grid_text.empty() ? log_spaced(q_min, q_max, q_points)
                                            : parse_number_list(q_grid_text);
      std::optional<Bracket> bracket;
      if (sweep_lo || sweep_hi) {
        const Bracket d = default_bracket(fam);
        bracket = Bracket{sweep_lo.value_or(d.lo), sweep_hi.value_or(d.hi)};
      }
      const auto rows = q_sweep(base, grid, bracket, root_tolerance());
      if (sweep_format == "csv") {
        sweep_csv(out, fam, rows);
      } else {
        json arr = json::array();
        for (const auto& row : rows) {
          arr.push_back({{"q", q_json(row.q)},
                         {critical_column(fam), row.result ? json(row.result->critical_value) : json()}});
        }
        out << arr.dump(2) << "\n";
      }
      return kOk;
    }

    if (figure->parsed()) {
      if (figure_out == "-") {
        write_figure(figure_id, out);
      } else {
        std::ofstream file(figure_out);
        if (!file) throw InvalidInput("cannot write " + figure_out);
        write_figure(figure_id, file);
        if (!file) throw InvalidInput("error writing " + figure_out);
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kInvalidInput;
}

}  // namespace gsep::cli
