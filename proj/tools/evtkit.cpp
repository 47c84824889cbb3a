// evtkit: block-maxima extreme value analysis from the command line.
//
//   evtkit fit            --input FILE [--dist all|gumbel|frechet|weibull|gev]
//   evtkit gof            --input FILE [--dist ...] [--params a,b[,c]] [--alpha A]
//   evtkit return-levels  (--input FILE | --params a,b[,c]) [--dist gev] [--periods ...]
//   evtkit report         --input FILE [--out-dir DIR] [--periods ...] [--alpha A]
//   evtkit simulate       --dist D --params a,b[,c] --n N --seed S [--output FILE]
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 no family converged.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "evt/dataset.hpp"
#include "evt/diagnostics.hpp"
#include "evt/errors.hpp"
#include "evt/fitting.hpp"
#include "evt/json_io.hpp"
#include "evt/plot_data.hpp"
#include "evt/report.hpp"
#include "evt/return_levels.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string dist = "all";
  std::vector<double> params;
  std::vector<double> periods = evt::kDefaultReturnPeriods;
  double alpha = evt::kDefaultAlpha;
  std::optional<double> criticalValue;
  std::string format = "text";
  std::string outDir;
  std::string output;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  evt::OptimizerConfig optimizer;
};

std::vector<evt::Family> selected_families(const std::string& dist) {
  if (dist == "all") return {evt::kAllFamilies.begin(), evt::kAllFamilies.end()};
  const auto f = evt::parse_family(dist);
  if (!f) throw UsageError("unknown distribution '" + dist + "'");
  return {*f};
}

evt::Family single_family(const std::string& dist) {
  const auto families = selected_families(dist);
  if (families.size() != 1) throw UsageError("--dist must name a single family here");
  return families.front();
}

evt::FamilyParams params_for(evt::Family family, const std::vector<double>& values) {
  try {
    return evt::make_params(family, values);
  } catch (const evt::DomainError& e) {
    throw UsageError(std::string("--params: ") + e.what());
  }
}

evt::Dataset load_input(const Options& o) {
  if (o.input.empty()) throw UsageError("--input is required");
  return evt::load_csv(o.input);
}

std::string params_text(const evt::FamilyParams& fp) {
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, evt::GumbelParams>) {
          return fmt::format("location={:.4f} scale={:.4f}", p.location, p.scale);
        } else if constexpr (std::is_same_v<T, evt::FrechetParams>) {
          return fmt::format("shape={:.4f} scale={:.4f} location={:.4f}", p.shape, p.scale,
                             p.location);
        } else if constexpr (std::is_same_v<T, evt::WeibullParams>) {
          return fmt::format("shape={:.4f} scale={:.4f}", p.shape, p.scale);
        } else {
          return fmt::format("location={:.4f} scale={:.4f} shape={:.4f}", p.location, p.scale,
                             p.shape);
        }
      },
      fp);
}

int run_fit(const Options& o) {
  const evt::ReportFormat format = evt::parse_report_format(o.format);
  const auto families = selected_families(o.dist);
  const evt::Dataset ds = load_input(o);

  std::vector<evt::FitEntry> entries;
  if (families.size() == evt::kAllFamilies.size()) {
    entries = evt::fit_all(ds.sample, o.optimizer);
  } else {
    evt::FitEntry e{families.front(), std::nullopt, {}};
    e.fit = evt::fit_mle(families.front(), ds.sample, o.optimizer);
    entries.push_back(std::move(e));
  }

  bool converged = false;
  if (format == evt::ReportFormat::Json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) out.push_back(evt::fit_entry_to_json(e));
    std::cout << out.dump(2) << "\n";
  }
  for (const auto& e : entries) {
    converged = converged || (e.fit && e.fit->converged);
    if (format != evt::ReportFormat::Text) continue;
    if (e.fit) {
      std::cout << fmt::format("{:<12} {}  loglik={:.4f}  converged={}  iterations={}\n",
                               evt::display_name(e.family), params_text(e.fit->params),
                               e.fit->logLikelihood, e.fit->converged ? "yes" : "no",
                               e.fit->iterations);
    } else {
      std::cout << fmt::format("{:<12} ERROR: {}\n", evt::display_name(e.family), e.error);
    }
  }
  return converged ? 0 : kExitNumerical;
}

int run_gof(const Options& o) {
  const evt::ReportFormat format = evt::parse_report_format(o.format);
  const evt::Dataset ds = load_input(o);

  std::vector<evt::GofEntry> entries;
  if (!o.params.empty()) {
    const evt::Family family = single_family(o.dist);
    const auto fp = params_for(family, o.params);
    entries.push_back({family, evt::anderson_darling(ds.sample, fp, o.alpha, o.criticalValue), {}});
  } else {
    const auto families = selected_families(o.dist);
    for (evt::Family family : families) {
      evt::GofEntry g{family, std::nullopt, {}};
      try {
        const evt::FitResult fit = evt::fit_mle(family, ds.sample, o.optimizer);
        g.gof = evt::anderson_darling(ds.sample, fit.params, o.alpha, o.criticalValue);
      } catch (const evt::DomainError&) {
        throw;
      } catch (const evt::Error& e) {
        g.error = e.what();
      }
      entries.push_back(std::move(g));
    }
  }

  if (format == evt::ReportFormat::Json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) out.push_back(evt::gof_entry_to_json(e));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << fmt::format("{:<12}{:>10} {:>10} {:>8}\n", "Family", "Statistic", "Crit. Val.",
                           "Result");
  for (const auto& e : entries) {
    if (e.gof) {
      std::cout << fmt::format("{:<12}{:>10.3f} {:>10.3f} {:>8}\n", evt::display_name(e.family),
                               e.gof->statistic, e.gof->criticalValue,
                               e.gof->pass ? "PASS" : "FAIL");
    } else {
      std::cout << fmt::format("{:<12}{:>10} {:>10} {:>8}  {}\n", evt::display_name(e.family),
                               "---", "---", "ERROR", e.error);
    }
  }
  return 0;
}

int run_return_levels(const Options& o) {
  const evt::ReportFormat format = evt::parse_report_format(o.format);
  const evt::Family family = single_family(o.dist == "all" ? "gev" : o.dist);
  const evt::ReturnSpec spec(o.periods);

  evt::FamilyParams fp;
  if (!o.params.empty()) {
    fp = params_for(family, o.params);
  } else {
    fp = evt::fit_mle(family, load_input(o).sample, o.optimizer).params;
  }
  const evt::ReturnLevelTable table = evt::return_level_table(fp, spec);

  if (format == evt::ReportFormat::Json) {
    nlohmann::json out{{"family", evt::to_string(family)},
                       {"params", evt::params_to_json(fp)},
                       {"return_levels", evt::return_levels_to_json(table)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << fmt::format("{} {}\n", evt::display_name(family), params_text(fp));
  std::cout << fmt::format("{:>10} {:>12}\n", "Period", "Level");
  for (const auto& rl : table) {
    std::cout << fmt::format("{:>10} {:>12.2f}\n", fmt::format("{:g}", rl.period), rl.level);
  }
  return 0;
}

int run_report(const Options& o) {
  const evt::ReportFormat format = evt::parse_report_format(o.format);
  const evt::Dataset ds = load_input(o);
  evt::PipelineOptions opts;
  opts.returnSpec = evt::ReturnSpec(o.periods);
  opts.alpha = o.alpha;
  opts.criticalValue = o.criticalValue;
  opts.optimizer = o.optimizer;

  const evt::AnalysisReport report = evt::run_pipeline(ds, opts);
  std::cout << evt::emit_report(report, format);
  if (!o.outDir.empty()) {
    evt::emit_plot_data(report, ds, o.outDir);
    const auto name = format == evt::ReportFormat::Json ? "report.json" : "report.txt";
    evt::write_file_atomic(std::filesystem::path(o.outDir) / name,
                           evt::emit_report(report, format));
  }
  return evt::any_converged(report) ? 0 : kExitNumerical;
}

int run_simulate(const Options& o) {
  const evt::Family family = single_family(o.dist);
  if (o.params.empty()) throw UsageError("--params is required");
  const auto fp = params_for(family, o.params);
  const std::string text = evt::format_values(evt::sample(fp, o.n, o.seed));
  if (o.output.empty()) {
    std::cout << text;
  } else {
    evt::write_file_atomic(o.output, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block-maxima extreme value analysis"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--input,-i", o.input, "CSV of annual maxima (value or year,value)");
    if (required) opt->required();
  };
  auto add_dist = [&](CLI::App* cmd, const std::string& def) {
    o.dist = def;
    cmd->add_option("--dist,-d", o.dist, "gumbel|frechet|weibull|gev|all")
        ->check(CLI::IsMember({"all", "gumbel", "frechet", "weibull", "gev"}))
        ->capture_default_str();
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--params,-p", o.params,
                    "gumbel: loc,scale  frechet: shape,scale[,loc]  weibull: shape,scale  "
                    "gev: loc,scale,shape")
        ->delimiter(',');
  };
  auto add_periods = [&](CLI::App* cmd) {
    cmd->add_option("--periods", o.periods, "Return periods in years")
        ->delimiter(',')
        ->capture_default_str();
  };
  auto add_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", o.alpha, "Significance level")->capture_default_str();
    cmd->add_option("--critical-value", o.criticalValue,
                    "A-D critical value (required unless alpha = 0.05)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format,-f", o.format, "text|json")->capture_default_str();
  };
  auto add_optimizer = [&](CLI::App* cmd) {
    cmd->add_option("--max-iterations", o.optimizer.maxIterations)->capture_default_str();
    cmd->add_option("--ftol", o.optimizer.functionTolerance)->capture_default_str();
    cmd->add_option("--xtol", o.optimizer.parameterTolerance)->capture_default_str();
  };

  auto* fit = app.add_subcommand("fit", "Maximum-likelihood fit");
  add_input(fit, true);
  add_dist(fit, "all");
  add_format(fit);
  add_optimizer(fit);

  auto* gof = app.add_subcommand("gof", "Anderson-Darling goodness of fit");
  add_input(gof, true);
  add_params(gof);
  add_alpha(gof);
  add_format(gof);
  add_optimizer(gof);
  gof->add_option("--dist,-d", o.dist, "gumbel|frechet|weibull|gev|all")
      ->check(CLI::IsMember({"all", "gumbel", "frechet", "weibull", "gev"}))
      ->capture_default_str();

  auto* rl = app.add_subcommand("return-levels", "Return levels of one family");
  add_input(rl, false);
  add_params(rl);
  add_periods(rl);
  add_format(rl);
  add_optimizer(rl);
  rl->add_option("--dist,-d", o.dist, "gumbel|frechet|weibull|gev")
      ->check(CLI::IsMember({"all", "gumbel", "frechet", "weibull", "gev"}));

  auto* report = app.add_subcommand("report", "Full analysis: statistics, fits, A-D, return levels");
  add_input(report, true);
  add_periods(report);
  add_alpha(report);
  add_format(report);
  add_optimizer(report);
  report->add_option("--out-dir,-o", o.outDir, "Directory for plot-data CSV files");

  auto* simulate = app.add_subcommand("simulate", "Draw a synthetic sample");
  simulate->add_option("--dist,-d", o.dist, "gumbel|frechet|weibull|gev")
      ->required()
      ->check(CLI::IsMember({"gumbel", "frechet", "weibull", "gev"}));
  add_params(simulate);
  simulate->add_option("--n", o.n, "Sample size")->required();
  simulate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  simulate->add_option("--output", o.output, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*fit) return run_fit(o);
    if (*gof) return run_gof(o);
    if (*rl) return run_return_levels(o);
    if (*report) return run_report(o);
    if (*simulate) return run_simulate(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const evt::UnsupportedFormat& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const evt::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const evt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
