#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "grid.hpp"
#include "oracle.hpp"
#include "pgdus/distribution.hpp"
#include "pgdus/error.hpp"
#include "pgdus/gof.hpp"
#include "pgdus/sample.hpp"

using namespace pgdus;

namespace {

// Hazard written as pdf over the survival expression, in long double.
double hazard_direct(const Params& p, double t) {
  const long double z = std::pow(static_cast<long double>(t) / p.theta, -static_cast<long double>(p.lambda));
  const long double F = std::exp(-z);
  const long double f = p.lambda / static_cast<long double>(t) * z * F;
  const long double g = p.gamma;
  const long double num = g * f * std::exp(F) * std::pow(std::expm1(F), g - 1);
  const long double den = std::pow(oracle::kE - 1, g) - std::pow(std::expm1(F), g);
  return static_cast<double>(num / den);
}

}  // namespace

TEST_SUITE("distribution") {

TEST_CASE("cdf at t = theta for unit parameters") {
  // (e^{1/e} - 1)/(e - 1), mpmath at 40 digits
  CHECK(pgdusiw_cdf({1, 1, 1}, 1.0) == doctest::Approx(0.25878633740109104995).epsilon(1e-14));
  const double expected = std::pow(std::expm1(std::exp(-1.0)) / (std::numbers::e - 1.0), 0.3);
  CHECK(pgdusiw_cdf({2, 0.6, 0.3}, 0.6) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(pgdusiw_cdf({2, 0.6, 0.3}, 0.6) == doctest::Approx(0.66662623799224538737).epsilon(1e-14));
}

TEST_CASE("cdf at t = theta agrees with the sampled frequency") {
  const Params p{2, 0.6, 0.3};
  const Sample s = sample(p, 1000000, 11);
  const double freq = ecdf(s, 0.6);
  const double f = pgdusiw_cdf(p, 0.6);
  CHECK(std::abs(freq - f) < 4.0 * std::sqrt(f * (1 - f) / 1e6));
}

TEST_CASE("support limits") {
  const Params p{1, 0.6, 0.3};
  CHECK(pgdusiw_cdf(p, -1.0) == 0.0);
  CHECK(pgdusiw_cdf(p, 0.0) == 0.0);
  CHECK(pgdusiw_pdf(p, -1.0) == 0.0);
  CHECK(pgdusiw_pdf(p, 0.0) == 0.0);
  CHECK(pgdusiw_sf(p, -1.0) == 1.0);
  CHECK(pgdusiw_sf(p, 0.0) == 1.0);
  CHECK(pgdusiw_hazard(p, -1.0) == 0.0);
  CHECK(pgdusiw_cdf({1, 1, 1}, 1e300) == doctest::Approx(1.0));
  CHECK(pgdusiw_sf({1, 1, 1}, std::numeric_limits<double>::infinity()) == 0.0);
  // inner exponent underflows: exactly 0, not NaN
  for (double t : {1e-3, 1e-8, 1e-100, 5e-324}) {
    const double d = pgdusiw_pdf({2, 1, 0.3}, t);
    CHECK_FALSE(std::isnan(d));
    CHECK(d == 0.0);
  }
}

TEST_CASE("density integrates to one (quadrature oracle)") {
  for (const Params& p : testgrid::params_grid()) {
    const double total = oracle::integrate_half_line(
        [&](double t) { return pgdusiw_pdf(p, t); }, p.theta);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("density matches the direct formula and the cdf derivative") {
  const Params p{1, 0.6, 0.3};
  CHECK(pgdusiw_pdf(p, 1.5) == doctest::Approx(0.092045268513600167786).epsilon(1e-13));
  CHECK(pgdusiw_pdf({3, 1, 2}, 0.7) == doctest::Approx(0.026951868956690890065).epsilon(1e-13));
  const double h = 1e-5;
  const double fd = (pgdusiw_cdf(p, 1.5 + h) - pgdusiw_cdf(p, 1.5 - h)) / (2 * h);
  CHECK(fd == doctest::Approx(pgdusiw_pdf(p, 1.5)).epsilon(1e-6));
  for (const Params& q : testgrid::params_grid()) {
    for (double u : {0.01, 0.2, 0.5, 0.8, 0.99}) {
      const double t = pgdusiw_quantile(q, u);
      CHECK(pgdusiw_pdf(q, t) == doctest::Approx(oracle::pdf(q.lambda, q.theta, q.gamma, t)).epsilon(1e-11));
      CHECK(pgdusiw_cdf(q, t) == doctest::Approx(oracle::cdf(q.lambda, q.theta, q.gamma, t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("log forms agree with their exponentials") {
  for (const Params& p : testgrid::params_grid()) {
    for (double u : {1e-6, 0.1, 0.5, 0.9, 1 - 1e-6}) {
      const double t = pgdusiw_quantile(p, u);
      CHECK(std::exp(pgdusiw_log_pdf(p, t)) == doctest::Approx(pgdusiw_pdf(p, t)).epsilon(1e-12));
      CHECK(std::exp(pgdusiw_log_cdf(p, t)) == doctest::Approx(pgdusiw_cdf(p, t)).epsilon(1e-12));
      CHECK(std::exp(pgdusiw_log_sf(p, t)) == doctest::Approx(pgdusiw_sf(p, t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("survival complements the cdf") {
  const Params p{1, 0.6, 0.3};
  for (int i = 1; i <= 100; ++i) {
    const double t = 0.05 * i;
    CHECK(std::abs(pgdusiw_sf(p, t) + pgdusiw_cdf(p, t) - 1.0) < 1e-12);
  }
  // far upper tail: sf keeps relative precision where 1 - cdf would not
  const double t = pgdusiw_quantile_sf(p, 1e-14);
  CHECK(pgdusiw_sf(p, t) == doctest::Approx(1e-14).epsilon(1e-9));
}

TEST_CASE("hazard identities") {
  for (const Params& p : testgrid::params_grid()) {
    for (double u : {0.01, 0.1, 0.5, 0.9, 0.99}) {
      const double t = pgdusiw_quantile(p, u);
      const double h = pgdusiw_hazard(p, t);
      CHECK(h == doctest::Approx(pgdusiw_pdf(p, t) / pgdusiw_sf(p, t)).epsilon(1e-10));
      CHECK(h == doctest::Approx(hazard_direct(p, t)).epsilon(1e-10));
      CHECK(h * pgdusiw_sf(p, t) == doctest::Approx(pgdusiw_pdf(p, t)).epsilon(1e-10));
    }
  }
}

TEST_CASE("hazard shapes") {
  auto scan = [](const Params& p) {
    std::vector<double> h;
    for (int i = 1; i <= 1000; ++i) h.push_back(pgdusiw_hazard(p, 0.01 * i));
    return h;
  };
  const auto up_down = scan({3, 1, 2});
  const auto peak = std::max_element(up_down.begin(), up_down.end()) - up_down.begin();
  CHECK(peak > 0);
  CHECK(peak < 999);
  CHECK(std::is_sorted(up_down.begin(), up_down.begin() + peak + 1));
  CHECK(std::is_sorted(up_down.begin() + peak, up_down.end(), std::greater<>()));

  const auto decreasing = scan({0.5, 1, 0.3});
  CHECK(std::is_sorted(decreasing.begin(), decreasing.end(), std::greater<>()));
}

TEST_CASE("quantile inverts the cdf") {
  for (const Params& p : testgrid::params_grid()) {
    for (double u : {0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999}) {
      CHECK(std::abs(pgdusiw_cdf(p, pgdusiw_quantile(p, u)) - u) < 1e-9);
    }
    CHECK(pgdusiw_quantile(p, 0.3) < pgdusiw_quantile(p, 0.7));
    for (double c : {0.1, 1.0, 10.0}) {
      const double t = c * p.theta;
      const double u = pgdusiw_cdf(p, t);
      if (u > 0.0 && u < 1.0) CHECK(pgdusiw_quantile(p, u) == doctest::Approx(t).epsilon(1e-8));
    }
  }
  CHECK(pgdusiw_quantile({1, 1, 1}, 0.25878633740109104995) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(pgdusiw_quantile({1, 1, 1}, 0.0), DomainError);
  CHECK_THROWS_AS(pgdusiw_quantile({1, 1, 1}, 1.0), DomainError);
  CHECK_THROWS_AS(pgdusiw_quantile({1, 1, 1}, -0.5), DomainError);
  CHECK_THROWS_AS(pgdusiw_quantile({1, 1, 1}, std::nan("")), DomainError);
}

TEST_CASE("cdf is monotone and bounded") {
  for (const Params& p : testgrid::params_grid()) {
    double prev = 0.0;
    for (int i = 1; i <= 400; ++i) {
      const double t = 0.025 * i * p.theta;
      const double f = pgdusiw_cdf(p, t);
      CHECK(f >= prev);
      CHECK(f <= 1.0);
      prev = f;
    }
  }
}

TEST_CASE("power closure: maximum of n draws stays in the family") {
  for (const Params& p : testgrid::params_grid()) {
    for (int n : {2, 5}) {
      for (int i = 1; i <= 100; ++i) {
        const double t = p.theta * std::pow(10.0, -1.0 + 2.0 * i / 100.0);
        const double lhs = std::pow(pgdusiw_cdf(p, t), n);
        const double rhs = pgdusiw_cdf({p.lambda, p.theta, n * p.gamma}, t);
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    }
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(pgdusiw_cdf({1, 1, 0}, 1.0), ParameterError);
  CHECK_THROWS_AS(pgdusiw_pdf({-1, 1, 1}, 1.0), ParameterError);
  CHECK_THROWS_AS(pgdusiw_sf({1, std::nan(""), 1}, 1.0), ParameterError);
  CHECK_THROWS_AS(pgdus_cdf(Baseline::weibull(1, 1), -2.0, 1.0), ParameterError);
  CHECK_THROWS_AS(Baseline::lomax(0.0, 1.0), ParameterError);
}

TEST_CASE("sampling") {
  const Params p{1, 0.6, 0.3};
  CHECK_THROWS_AS(sample(p, 0, 1), SampleError);
  const Sample a = sample(p, 1000, 42);
  const Sample b = sample(p, 1000, 42);
  const Sample c = sample(p, 1000, 43);
  CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  CHECK_FALSE(std::equal(a.values().begin(), a.values().end(), c.values().begin()));
  const Sample big = sample(p, 100000, 7);
  CHECK(ks_statistic(big, p) < 0.01);
}

}  // TEST_SUITE

TEST_SUITE("generic transform") {

TEST_CASE("baseline limits map to 0 and 1") {
  for (const Baseline& b : {Baseline::inverse_weibull(2, 1), Baseline::weibull(1.5, 2), Baseline::lomax(3, 1),
                            Baseline::inverse_kumaraswamy(2, 3), Baseline::exponential(0.5)}) {
    CHECK(pgdus_cdf(b, 1.7, std::numeric_limits<double>::infinity()) == 1.0);
    CHECK(pgdus_cdf(b, 1.7, 0.0) == 0.0);
    CHECK(pgdus_cdf(b, 1.7, -3.0) == 0.0);
    CHECK(pgdus_sf(b, 1.7, -3.0) == 1.0);
  }
}

TEST_CASE("gamma = 1 is the DUS transform") {
  for (const Baseline& b : {Baseline::weibull(1.5, 2), Baseline::lomax(3, 1), Baseline::inverse_kumaraswamy(2, 3),
                            Baseline::exponential(0.5), Baseline::inverse_weibull(1, 2)}) {
    for (double t : {0.1, 0.5, 1.0, 2.0, 7.0}) {
      const double F = b.cdf(t);
      CHECK(pgdus_cdf(b, 1.0, t) == doctest::Approx(std::expm1(F) / (std::numbers::e - 1.0)).epsilon(1e-14));
    }
  }
  // DUS-E written out
  for (double t : {0.1, 1.0, 3.0}) {
    const double expected = (std::exp(1.0 - std::exp(-0.7 * t)) - 1.0) / (std::numbers::e - 1.0);
    CHECK(pgdus_cdf(Baseline::exponential(0.7), 1.0, t) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("inverse Weibull baseline reproduces the closed forms") {
  const Params p{2, 0.6, 0.3};
  const Baseline b = Baseline::inverse_weibull(2, 0.6);
  for (double t : {0.1, 0.6, 1.0, 5.0}) {
    CHECK(pgdus_cdf(b, 0.3, t) == doctest::Approx(pgdusiw_cdf(p, t)).epsilon(1e-13));
    CHECK(pgdus_pdf(b, 0.3, t) == doctest::Approx(pgdusiw_pdf(p, t)).epsilon(1e-12));
    CHECK(pgdus_hazard(b, 0.3, t) == doctest::Approx(pgdusiw_hazard(p, t)).epsilon(1e-12));
  }
}

TEST_CASE("competitor densities integrate to one") {
  const std::vector<std::pair<Baseline, double>> models{
      {Baseline::weibull(1.5, 2), 0.3},          {Baseline::weibull(0.7, 1), 2.7},
      {Baseline::lomax(3, 1), 0.3},              {Baseline::lomax(1.5, 2), 2.7},
      {Baseline::inverse_kumaraswamy(2, 3), 1.0}, {Baseline::inverse_kumaraswamy(4, 0.5), 2.7},
      {Baseline::exponential(0.5), 0.3},         {Baseline::exponential(2), 2.7}};
  for (const auto& [b, g] : models) {
    const double total = oracle::integrate_half_line([&](double t) { return pgdus_pdf(b, g, t); }, 1.0);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("Weibull with unit shape is the exponential") {
  for (double t : {0.01, 0.3, 1.0, 4.0, 20.0}) {
    CHECK(std::abs(pgdus_cdf(Baseline::weibull(1, 2), 1.3, t) - pgdus_cdf(Baseline::exponential(0.5), 1.3, t)) <
          1e-12);
    CHECK(std::abs(pgdus_pdf(Baseline::weibull(1, 2), 1.3, t) - pgdus_pdf(Baseline::exponential(0.5), 1.3, t)) <
          1e-12);
  }
}

TEST_CASE("generic quantile inverts the generic cdf") {
  for (const Baseline& b : {Baseline::weibull(1.5, 2), Baseline::lomax(3, 1), Baseline::inverse_kumaraswamy(2, 3),
                            Baseline::exponential(0.5)}) {
    for (double u : {0.001, 0.1, 0.5, 0.9, 0.999}) {
      CHECK(std::abs(pgdus_cdf(b, 0.3, pgdus_quantile(b, 0.3, u)) - u) < 1e-9);
    }
  }
}

TEST_CASE("quantiles stay finite for a small gamma") {
  // p^(1/gamma) is far below the double range here, even for p > 1/2
  for (const Baseline& b : {Baseline::inverse_weibull(5, 4.8), Baseline::weibull(1.5, 2), Baseline::lomax(3, 1),
                            Baseline::inverse_kumaraswamy(2, 3), Baseline::exponential(0.5)}) {
    for (double u : {0.3, 0.6, 0.9}) {
      const double t = pgdus_quantile(b, 0.01, u);
      CHECK(t > 0.0);
      CHECK(std::isfinite(t));
      CHECK(std::abs(pgdus_cdf(b, 0.01, t) - u) < 1e-9);
    }
  }
  const Params p{5.1866, 4.81953, 0.00164094};
  for (double u : {0.01, 0.3, 0.6, 0.99}) {
    const double t = pgdusiw_quantile(p, u);
    CHECK(t > 0.0);
    CHECK(std::abs(pgdusiw_cdf(p, t) - u) < 1e-9);
  }
  const Sample s = PgdusModel(p).sample(200, 3);
  CHECK(std::all_of(s.values().begin(), s.values().end(), [](double v) { return v > 0.0 && std::isfinite(v); }));
}

TEST_CASE("baseline quantile from the log probability") {
  for (const Baseline& b : {Baseline::inverse_weibull(2, 1), Baseline::weibull(1.5, 2), Baseline::lomax(3, 1),
                            Baseline::inverse_kumaraswamy(2, 3), Baseline::exponential(0.5)}) {
    CHECK(b.quantile_log(std::log(0.25)) == doctest::Approx(b.quantile(0.25)).epsilon(1e-14));
    for (double log_u : {-31.0, -100.0, -600.0}) {
      const double t = b.quantile_log(log_u);
      CHECK(t > 0.0);
      CHECK(std::log(b.cdf(t)) == doctest::Approx(log_u).epsilon(1e-12));
    }
    CHECK_THROWS_AS(b.quantile_log(0.0), DomainError);
  }
}

TEST_CASE("model objects") {
  const std::vector<double> packed{1.5, 2.0, 0.7};
  const PgdusModel m(BaselineKind::weibull, packed);
  CHECK(m.name() == "pgdus-w");
  CHECK(m.param_count() == 3);
  CHECK(m.packed() == packed);
  CHECK(m.cdf(1.0) == pgdus_cdf(Baseline::weibull(1.5, 2.0), 0.7, 1.0));
  CHECK_THROWS(m.iw_params());
  CHECK(parse_model_name("PGDUS-IK") == BaselineKind::inverse_kumaraswamy);
  CHECK(parse_model_name("iw") == BaselineKind::inverse_weibull);
  CHECK_THROWS_AS(parse_model_name("pgdus-x"), ParameterError);
  const std::vector<double> wrong{1.0};
  CHECK_THROWS_AS(PgdusModel(BaselineKind::lomax, wrong), ParameterError);
}

}  // TEST_SUITE
