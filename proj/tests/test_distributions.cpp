#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "evt/distributions.hpp"
#include "evt/errors.hpp"
#include "oracles.hpp"

using namespace evt;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fitted values reported for the 1956-2006 Ranchi annual maxima.
const FamilyParams kGumbel = GumbelParams{93.61, 32.02};
const FamilyParams kFrechet = FrechetParams{3.37, 88.16, 0.0};
const FamilyParams kWeibull = WeibullParams{3.34, 122.27};
const FamilyParams kGev = GevParams{92.41, 30.85, 0.06};
const std::vector<FamilyParams> kTableParams = {kGumbel, kFrechet, kWeibull, kGev};

double scale_of(const FamilyParams& fp) {
  return std::visit([](const auto& p) { return p.scale; }, fp);
}

}  // namespace

TEST_CASE("support") {
  CHECK(support(kGumbel) == Interval{-kInf, kInf});
  const Interval gev = support(kGev);
  CHECK(gev.lower == doctest::Approx(-421.756666666667).epsilon(1e-12));
  CHECK(gev.upper == kInf);
  CHECK(support(GevParams{92.41, 30.85, 0.0}) == Interval{-kInf, kInf});
  CHECK(support(kWeibull).lower == 0.0);
  CHECK(support(FrechetParams{2.0, 1.0, 5.0}).lower == 5.0);

  const Interval bounded = support(GevParams{0.0, 1.0, -0.5});
  CHECK(bounded.lower == -kInf);
  CHECK(bounded.upper == doctest::Approx(2.0));
  CHECK(cdf(GevParams{0.0, 1.0, -0.5}, 2.5) == 1.0);
  CHECK(cdf(kGev, -500.0) == 0.0);
}

TEST_CASE("cdf reference values") {
  CHECK(cdf(kGev, 92.41) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(cdf(kGumbel, 93.61) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  // mpmath, 40 digits: 0.98999930403232
  CHECK(std::abs(cdf(kGev, 255.84) - 0.99) < 1e-4);
  CHECK(cdf(kGev, 255.84) == doctest::Approx(0.98999930403232).epsilon(1e-12));
  CHECK(cdf(kWeibull, 0.0) == 0.0);
  CHECK(cdf(kFrechet, -1.0) == 0.0);
}

TEST_CASE("cdf matches the direct pow() form") {
  for (double x = -400.0; x < 2000.0; x += 7.3) {
    CHECK(cdf(kGev, x) == doctest::Approx(oracle::gev_cdf(92.41, 30.85, 0.06, x)).epsilon(1e-12));
  }
}

TEST_CASE("pdf and log_pdf reference values") {
  CHECK(pdf(kGumbel, 93.61) == doctest::Approx(0.0114890518791831).epsilon(1e-13));
  CHECK(log_pdf(kGumbel, 93.61) == doctest::Approx(-4.46636070756857).epsilon(1e-13));
  CHECK(pdf(kWeibull, 0.0) == 0.0);
  CHECK(log_pdf(kGev, -500.0) == -kInf);
  CHECK(pdf(kGev, -500.0) == 0.0);

  const FamilyParams nearGumbel = GevParams{92.41, 30.85, 1e-13};
  const FamilyParams gumbel = GumbelParams{92.41, 30.85};
  for (double x = -100.0; x < 600.0; x += 3.1) {
    CHECK(std::abs(pdf(nearGumbel, x) - pdf(gumbel, x)) < 1e-8);
  }
}

TEST_CASE("exp(log_pdf) equals pdf in support") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.0005, 0.9995);
  for (const auto& fp : kTableParams) {
    for (int i = 0; i < 1000; ++i) {
      const double x = quantile(fp, unif(rng));
      const double p = pdf(fp, x);
      REQUIRE(p > 0.0);
      CHECK(std::abs(std::exp(log_pdf(fp, x)) - p) / p < 1e-12);
    }
  }
}

TEST_CASE("log_pdf stays finite far in the tails") {
  // The density underflows to zero here; its logarithm does not.
  const double x = 93.61 - 32.02 * 7.0;
  const double lp = log_pdf(kGumbel, x);
  CHECK(pdf(kGumbel, x) == 0.0);
  CHECK(lp == doctest::Approx(-std::log(32.02) + 7.0 - std::exp(7.0)).epsilon(1e-14));
  CHECK(std::isfinite(log_pdf(kGev, 1e12)));
}

TEST_CASE("quantile reference values") {
  CHECK(quantile(kGumbel, std::exp(-1.0)) == doctest::Approx(93.61).epsilon(1e-14));
  // mpmath closed form and bisection agree: 255.842843686322
  CHECK(std::abs(quantile(kGev, 0.99) - 255.84) < 0.01);
  const double byBisection = oracle::bisect(
      [](double x) { return oracle::gev_cdf(92.41, 30.85, 0.06, x); }, 0.99, -400.0, 2000.0);
  CHECK(quantile(kGev, 0.99) == doctest::Approx(byBisection).epsilon(1e-12));

  for (double x : {50.0, 112.09, 264.4}) {
    CHECK(std::abs(quantile(kGev, cdf(kGev, x)) - x) < 1e-9);
  }
}

TEST_CASE("quantile rejects probabilities outside (0,1)") {
  for (double p : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    CHECK_THROWS_AS((void)quantile(kGev, p), DomainError);
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS((void)cdf(GumbelParams{0.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS((void)cdf(GevParams{0.0, -1.0, 0.1}, 1.0), DomainError);
  CHECK_THROWS_AS((void)pdf(FrechetParams{0.0, 1.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS((void)pdf(WeibullParams{1.0, std::nan("")}, 1.0), DomainError);
  CHECK_THROWS_AS((void)support(GevParams{0.0, 1.0, kInf}), DomainError);
}

TEST_CASE("make_params") {
  const std::vector<double> three = {92.41, 30.85, 0.06};
  CHECK(make_params(Family::Gev, three) == kGev);
  const std::vector<double> two = {3.37, 88.16};
  CHECK(make_params(Family::Frechet, two) == kFrechet);
  CHECK_THROWS_AS((void)make_params(Family::Gev, two), DomainError);
  CHECK_THROWS_AS((void)make_params(Family::Gumbel, three), DomainError);
  const std::vector<double> bad = {1.0, -2.0};
  CHECK_THROWS_AS((void)make_params(Family::Weibull, bad), DomainError);
}

TEST_CASE("family names round-trip") {
  for (Family f : kAllFamilies) CHECK(parse_family(to_string(f)) == f);
  CHECK_FALSE(parse_family("normal").has_value());
  CHECK(family_of(kFrechet) == Family::Frechet);
}

TEST_CASE("reversed Weibull as negative-shape GEV") {
  const double shape = 2.5, scale = 40.0, upper = 300.0;
  const FamilyParams gev = reversed_weibull(shape, scale, upper);
  CHECK(std::get<GevParams>(gev).shape < 0.0);
  CHECK(support(gev).upper == doctest::Approx(upper));
  for (double x = 150.0; x < upper; x += 4.7) {
    const double expected = std::exp(-std::pow((upper - x) / scale, shape));
    CHECK(cdf(gev, x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("sample is deterministic and in support") {
  const Sample a = sample(kGev, 5, 42);
  const Sample b = sample(kGev, 5, 42);
  CHECK(a == b);
  CHECK_FALSE(a == sample(kGev, 5, 43));
  CHECK_THROWS_AS((void)sample(kGev, 0, 42), DomainError);

  for (const auto& fp : kTableParams) {
    const Interval sup = support(fp);
    const Sample s = sample(fp, 2000, 9);
    for (double x : s.values()) CHECK(sup.contains(x));
  }
}

TEST_CASE("sampled empirical cdf tracks the cdf") {
  for (const auto& fp : kTableParams) {
    const Sample s = sample(fp, 100000, 2024);
    const auto values = s.values();
    const double d = oracle::ks_distance({values.begin(), values.end()},
                                         [&](double x) { return cdf(fp, x); });
    CHECK(d < 0.01);
  }
}

TEST_CASE("cdf is monotone over the support") {
  for (const auto& fp : kTableParams) {
    const double lo = quantile(fp, 1e-6);
    const double hi = quantile(fp, 1.0 - 1e-6);
    double prev = -1.0;
    for (int i = 0; i < 10000; ++i) {
      const double x = lo + (hi - lo) * i / 9999.0;
      const double c = cdf(fp, x);
      CHECK(c >= prev);
      prev = c;
    }
  }
}

TEST_CASE("pdf integrates to one") {
  // Hand-picked ranges whose omitted tail mass is far below 1e-6.
  struct Case {
    FamilyParams fp;
    double a, b;
  };
  const std::vector<Case> cases = {
      {kGumbel, -500.0, 3000.0},
      {kFrechet, 0.0, 1e5},
      {kWeibull, 0.0, 1000.0},
      {kGev, -421.756666666667, 1e5},
      {GevParams{0.0, 1.0, -0.3}, -20.0, 1.0 / 0.3},
  };
  for (const auto& c : cases) {
    const double total = oracle::simpson([&](double x) { return pdf(c.fp, x); }, c.a, c.b, 400000);
    CHECK(std::abs(total - 1.0) < 1e-6);
  }
}

TEST_CASE("pdf is the derivative of cdf") {
  for (const auto& fp : kTableParams) {
    const double h = 1e-5 * scale_of(fp);
    for (int i = 1; i <= 100; ++i) {
      const double x = quantile(fp, i / 101.0);
      const double numeric = (cdf(fp, x + h) - cdf(fp, x - h)) / (2.0 * h);
      CHECK(std::abs(numeric - pdf(fp, x)) < 1e-5);
    }
  }
}

TEST_CASE("GEV near zero shape agrees with Gumbel") {
  const FamilyParams gumbel = GumbelParams{92.41, 30.85};
  for (double k : {1e-12, -1e-12, 5e-9, -5e-9}) {
    const FamilyParams gev = GevParams{92.41, 30.85, k};
    for (int i = 1; i < 100; ++i) {
      const double p = i / 100.0;
      const double x = quantile(gumbel, p);
      CHECK(std::abs(cdf(gev, x) - cdf(gumbel, x)) < 1e-8);
      CHECK(std::abs(pdf(gev, x) - pdf(gumbel, x)) < 1e-8);
      CHECK(std::abs(quantile(gev, p) - x) < 1e-6);
    }
  }
}

TEST_CASE("GEV just above the Gumbel threshold is continuous with it") {
  const FamilyParams gumbel = GumbelParams{0.0, 1.0};
  const FamilyParams gev = GevParams{0.0, 1.0, 2e-8};
  for (double x = -3.0; x < 10.0; x += 0.25) {
    CHECK(std::abs(cdf(gev, x) - cdf(gumbel, x)) < 1e-6);
  }
}

TEST_CASE("quantile and cdf are inverse on a probability grid") {
  for (const auto& fp : kTableParams) {
    double prev = -kInf;
    for (int i = 1; i <= 999; ++i) {
      const double p = i / 1000.0;
      const double x = quantile(fp, p);
      CHECK(std::abs(cdf(fp, x) - p) < 1e-10);
      CHECK(x > prev);
      prev = x;
    }
  }
}
