#include "evt/plot_data.hpp"

#include <charconv>
#include <string>

#include "evt/diagnostics.hpp"
#include "evt/errors.hpp"

namespace evt {
namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

void append_row(std::string& out, std::initializer_list<double> cells) {
  bool first = true;
  for (double c : cells) {
    if (!first) out.push_back(',');
    append_number(out, c);
    first = false;
  }
  out.push_back('\n');
}

}  // namespace

std::vector<std::filesystem::path> emit_plot_data(const AnalysisReport& r, const Dataset& ds,
                                                  const std::filesystem::path& outDir) {
  std::error_code ec;
  std::filesystem::create_directories(outDir, ec);
  if (ec) throw IoError("cannot create output directory " + outDir.string());

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const std::string& contents) {
    const auto path = outDir / name;
    write_file_atomic(path, contents);
    written.push_back(path);
  };

  const Sample& s = ds.sample;
  {
    std::string csv = "year,value\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double year = ds.years ? static_cast<double>((*ds.years)[i])
                                   : static_cast<double>(i + 1);
      append_row(csv, {year, s[i]});
    }
    emit("timeseries.csv", csv);
  }

  const double lo = s.min();
  const double hi = s.max();
  const double pad = 0.1 * (hi - lo);
  const double gridLo = lo - pad;
  const double gridHi = hi + pad;

  for (const FitEntry& e : r.fits) {
    if (!e.fit) continue;
    const FamilyParams& fp = e.fit->params;
    const std::string family(to_string(e.family));

    std::string density = "x,pdf\n";
    for (std::size_t i = 0; i < kPdfGridPoints; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(kPdfGridPoints - 1);
      const double x = i + 1 == kPdfGridPoints ? gridHi : gridLo + t * (gridHi - gridLo);
      append_row(density, {x, pdf(fp, x)});
    }
    emit("pdf_" + family + ".csv", density);

    std::string qq = "p,theoretical,observed\n";
    for (const QqPoint& q : qq_series(s, fp)) append_row(qq, {q.p, q.theoretical, q.observed});
    emit("qq_" + family + ".csv", qq);

    std::string diff = "x,diff\n";
    for (const DiffPoint& d : probability_difference(s, fp)) append_row(diff, {d.x, d.diff});
    emit("probdiff_" + family + ".csv", diff);
  }

  for (const FitEntry& e : r.fits) {
    if (e.family != r.best.family || !e.fit) continue;
    std::string curve = "period,level\n";
    for (const ReturnLevel& rl : return_curve(e.fit->params, kReturnCurveMinPeriod,
                                              kReturnCurveMaxPeriod, kReturnCurvePoints)) {
      append_row(curve, {rl.period, rl.level});
    }
    emit("return_curve.csv", curve);
  }
  return written;
}

}  // namespace evt
