#include "evt/report.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "evt/errors.hpp"
#include "evt/json_io.hpp"

namespace evt {
namespace {

using nlohmann::json;

// --- structured output ------------------------------------------------------

Family family_from_json(const json& j) {
  const auto f = parse_family(j.get<std::string>());
  if (!f) throw ParseError(0, "unknown family '" + j.get<std::string>() + "'");
  return *f;
}

json to_json(const AnalysisReport& r) {
  const DescriptiveStats& d = r.descriptive;
  json out;
  out["label"] = r.label;
  out["descriptive"] = {{"n", d.n},
                        {"range", json_number(d.range)},
                        {"mean", json_number(d.mean)},
                        {"variance", json_number(d.variance)},
                        {"std_dev", json_number(d.stdDev)},
                        {"coef_variation_pct", json_number(d.coefVariationPct)},
                        {"std_error", json_number(d.stdError)},
                        {"skewness", json_number(d.skewness)},
                        {"excess_kurtosis", json_number(d.excessKurtosis)}};

  out["fits"] = json::array();
  for (const FitEntry& e : r.fits) out["fits"].push_back(fit_entry_to_json(e));

  out["gof"] = json::array();
  for (const GofEntry& e : r.gofs) out["gof"].push_back(gof_entry_to_json(e));

  out["best_family"] = to_string(r.best.family);
  out["best_passed"] = r.best.passed;
  out["return_levels"] = return_levels_to_json(r.returnLevels);
  return out;
}

AnalysisReport from_json(const json& j) {
  AnalysisReport r;
  r.label = j.at("label").get<std::string>();
  const json& d = j.at("descriptive");
  r.descriptive = DescriptiveStats{
      .n = d.at("n").get<std::size_t>(),
      .range = json_read_number(d.at("range")),
      .mean = json_read_number(d.at("mean")),
      .variance = json_read_number(d.at("variance")),
      .stdDev = json_read_number(d.at("std_dev")),
      .coefVariationPct = json_read_number(d.at("coef_variation_pct")),
      .stdError = json_read_number(d.at("std_error")),
      .skewness = json_read_number(d.at("skewness")),
      .excessKurtosis = json_read_number(d.at("excess_kurtosis")),
  };

  for (const json& f : j.at("fits")) {
    FitEntry e{family_from_json(f.at("family")), std::nullopt, {}};
    if (f.at("status") == "ok") {
      e.fit = FitResult{params_from_json(e.family, f.at("params")),
                        json_read_number(f.at("log_likelihood")), f.at("converged").get<bool>(),
                        f.at("iterations").get<std::size_t>(),
                        params_from_json(e.family, f.at("initial_params"))};
    } else {
      e.error = f.at("error").get<std::string>();
    }
    r.fits.push_back(std::move(e));
  }

  for (const json& g : j.at("gof")) {
    GofEntry e{family_from_json(g.at("family")), std::nullopt, {}};
    if (g.at("status") == "ok") {
      e.gof = GofResult{e.family, json_read_number(g.at("statistic")), g.at("alpha").get<double>(),
                        g.at("critical_value").get<double>(), g.at("pass").get<bool>()};
    } else {
      e.error = g.at("error").get<std::string>();
    }
    r.gofs.push_back(std::move(e));
  }

  r.best = {family_from_json(j.at("best_family")), j.at("best_passed").get<bool>()};
  for (const json& rl : j.at("return_levels")) {
    r.returnLevels.push_back({rl.at("period").get<double>(), json_read_number(rl.at("level"))});
  }
  return r;
}

// --- text output ------------------------------------------------------------

std::string fixed2(double v) { return std::isfinite(v) ? fmt::format("{:.2f}", v) : "---"; }

std::string params_cells(const FamilyParams& fp) {
  // Location | Shape | Scale, blank where the family has no such parameter.
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GumbelParams>) {
          return fmt::format("{:>10} {:>10} {:>10}", fixed2(p.location), "---", fixed2(p.scale));
        } else if constexpr (std::is_same_v<T, FrechetParams>) {
          return fmt::format("{:>10} {:>10} {:>10}",
                             p.location == 0.0 ? std::string("---") : fixed2(p.location),
                             fixed2(p.shape), fixed2(p.scale));
        } else if constexpr (std::is_same_v<T, WeibullParams>) {
          return fmt::format("{:>10} {:>10} {:>10}", "---", fixed2(p.shape), fixed2(p.scale));
        } else {
          return fmt::format("{:>10} {:>10} {:>10}", fixed2(p.location), fixed2(p.shape),
                             fixed2(p.scale));
        }
      },
      fp);
}

std::string to_text(const AnalysisReport& r) {
  std::string out;
  auto line = [&out](const std::string& s) {
    out += s;
    out += '\n';
  };
  const DescriptiveStats& d = r.descriptive;

  line(fmt::format("Dataset: {}", r.label));
  line("");
  line("Descriptive statistics");
  line(fmt::format("  {:<26}{:>10}", "Sample Size", d.n));
  line(fmt::format("  {:<26}{:>10}", "Range", fixed2(d.range)));
  line(fmt::format("  {:<26}{:>10}", "Mean", fixed2(d.mean)));
  line(fmt::format("  {:<26}{:>10}", "Variance", fixed2(d.variance)));
  line(fmt::format("  {:<26}{:>10}", "Standard Deviation", fixed2(d.stdDev)));
  line(fmt::format("  {:<26}{:>10}", "Coefficient of Variation", fixed2(d.coefVariationPct)));
  line(fmt::format("  {:<26}{:>10}", "Standard Error", fixed2(d.stdError)));
  line(fmt::format("  {:<26}{:>10}", "Skewness",
                   std::isfinite(d.skewness) ? fmt::format("{:.3f}", d.skewness) : "---"));
  line(fmt::format("  {:<26}{:>10}", "Kurtosis",
                   std::isfinite(d.excessKurtosis) ? fmt::format("{:.3f}", d.excessKurtosis)
                                                   : "---"));
  line("");

  line("Fitted parameters (maximum likelihood)");
  line(fmt::format("  {:<12}{:>10} {:>10} {:>10} {:>14} {:>10}", "Family", "Location", "Shape",
                   "Scale", "LogLik", "Converged"));
  for (const FitEntry& e : r.fits) {
    if (e.fit) {
      line(fmt::format("  {:<12}{} {:>14} {:>10}", display_name(e.family),
                       params_cells(e.fit->params), fixed2(e.fit->logLikelihood),
                       e.fit->converged ? "yes" : "no"));
    } else {
      line(fmt::format("  {:<12}ERROR: {}", display_name(e.family), e.error));
    }
  }
  line("");

  line("Goodness of fit (Anderson-Darling)");
  line(fmt::format("  {:<12}{:>10} {:>10} {:>8}", "Family", "Statistic", "Crit. Val.", "Result"));
  for (const GofEntry& e : r.gofs) {
    if (e.gof) {
      line(fmt::format("  {:<12}{:>10} {:>10} {:>8}", display_name(e.family),
                       fmt::format("{:.3f}", e.gof->statistic),
                       fmt::format("{:.3f}", e.gof->criticalValue),
                       e.gof->pass ? "PASS" : "FAIL"));
    } else {
      line(fmt::format("  {:<12}{:>10} {:>10} {:>8}", display_name(e.family), "---", "---",
                       "ERROR"));
    }
  }
  line("");

  line(fmt::format("Best family: {}{}", display_name(r.best.family),
                   r.best.passed ? "" : " (no family passed)"));
  line("");

  line(fmt::format("Return levels ({})", display_name(r.best.family)));
  line(fmt::format("  {:>10} {:>12}", "Period", "Level"));
  for (const ReturnLevel& rl : r.returnLevels) {
    line(fmt::format("  {:>10} {:>12}", fmt::format("{:g}", rl.period), fixed2(rl.level)));
  }
  return out;
}

}  // namespace

AnalysisReport run_pipeline(const Dataset& ds, const PipelineOptions& opts) {
  const Sample& s = ds.sample;
  if (s.size() < 3) throw DegenerateSample("the pipeline needs at least three observations");

  AnalysisReport r;
  r.label = ds.label;
  r.descriptive = describe(s);
  r.fits = fit_all(s, opts.optimizer);

  std::vector<GofResult> available;
  for (const FitEntry& e : r.fits) {
    GofEntry g{e.family, std::nullopt, e.error};
    if (e.fit) {
      try {
        g.gof = anderson_darling(s, e.fit->params, opts.alpha, opts.criticalValue);
        available.push_back(*g.gof);
      } catch (const DomainError&) {
        // Invalid alpha/critical value affects every family alike.
        throw;
      } catch (const Error& ex) {
        g.error = ex.what();
      }
    }
    r.gofs.push_back(std::move(g));
  }

  if (available.empty()) throw NumericalFailure("no family could be fitted to " + ds.label);
  r.best = select_best(available);
  for (const FitEntry& e : r.fits) {
    if (e.family == r.best.family) {
      r.returnLevels = return_level_table(e.fit->params, opts.returnSpec);
    }
  }
  return r;
}

bool any_converged(const AnalysisReport& r) noexcept {
  for (const FitEntry& e : r.fits) {
    if (e.fit && e.fit->converged) return true;
  }
  return false;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  throw UnsupportedFormat("unsupported report format '" + std::string(name) + "'");
}

std::string emit_report(const AnalysisReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return to_text(r);
    case ReportFormat::Json: return to_json(r).dump(2) + "\n";
  }
  throw UnsupportedFormat("unsupported report format");
}

AnalysisReport parse_report_json(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
}

}  // namespace evt
