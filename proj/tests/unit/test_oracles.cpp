#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "ginicor/error.hpp"
#include "ginicor/oracles.hpp"

using namespace ginicor;

namespace {

MixtureSpec two(Component a, Component b, double p) { return {{a, b}, {p, 1.0 - p}}; }

double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }
double big_phi(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace

TEST_CASE("exponential mixture values") {
    const auto c = exp_mixture_corrs(0.5, 1.0, 4.0);
    CHECK(c.rho_g == doctest::Approx(2.25 / 14.75).epsilon(1e-13));
    CHECK(std::abs(c.rho_g - 0.1525) < 5e-5);
    CHECK(c.delta_12 == doctest::Approx(17.0 / 5.0).epsilon(1e-13));
    CHECK(c.dcov_xy == doctest::Approx(2.0 * 0.0625 * 9.0 / 5.0).epsilon(1e-13));
    // Between-group variance 0.25 * 9 over total variance 0.5 * (2 + 32) - 6.25.
    CHECK(c.rho_p2 == doctest::Approx(2.25 / 10.75).epsilon(1e-13));
}

TEST_CASE("printed exponential dcov_xx differs from its integral definition") {
    const auto c = exp_mixture_corrs(0.5, 1.0, 4.0);
    const double quad = exp_mixture_dcov_xx_quadrature(0.5, 1.0, 4.0);
    CHECK(c.dcov_xx_integral == doctest::Approx(quad).epsilon(1e-8));
    CHECK(c.dcov_xx_integral == doctest::Approx(2.929166666667).epsilon(1e-10));
    CHECK(c.dcov_xx_printed == doctest::Approx(3.569166666667).epsilon(1e-10));
    CHECK(std::abs(c.rho_d - 0.1191) < 5e-5);
    CHECK(c.rho_d_consistent ==
          doctest::Approx(c.dcov_xy / (std::sqrt(c.dcov_xx_integral) * 0.5)).epsilon(1e-13));
}

TEST_CASE("integral dcov_xx matches quadrature across parameters") {
    const std::vector<std::array<double, 3>> cases = {{0.3, 1.0, 2.0}, {0.7, 2.0, 0.5}, {0.5, 1.0, 1.0}};
    for (const auto& [p, theta, beta] : cases) {
        const auto c = exp_mixture_corrs(p, theta, beta);
        CHECK(c.dcov_xx_integral ==
              doctest::Approx(exp_mixture_dcov_xx_quadrature(p, theta, beta)).epsilon(1e-7));
    }
}

TEST_CASE("equal exponential scales give zero correlations") {
    const auto c = exp_mixture_corrs(0.3, 2.0, 2.0);
    CHECK(c.rho_g == doctest::Approx(0.0));
    CHECK(c.rho_d == doctest::Approx(0.0));
    CHECK(c.rho_p2 == doctest::Approx(0.0));
}

TEST_CASE("property: swapping exponential components leaves the correlation unchanged") {
    for (double p : {0.1, 0.35, 0.5, 0.8}) {
        for (auto [theta, beta] : {std::pair{1.0, 4.0}, {0.5, 3.0}, {2.0, 1.5}}) {
            CHECK(exp_mixture_corrs(p, theta, beta).rho_g ==
                  doctest::Approx(exp_mixture_corrs(1.0 - p, beta, theta).rho_g).epsilon(1e-13));
            CHECK(exp_mixture_corrs(p, theta, beta).rho_p2 ==
                  doctest::Approx(exp_mixture_corrs(1.0 - p, beta, theta).rho_p2).epsilon(1e-13));
        }
    }
}

TEST_CASE("normal location values") {
    const auto c = normal_location_corrs(0.5, 3.0);
    CHECK(std::abs(c.rho_g - 0.4556) < 5e-5);
    CHECK(c.rho_p2 == doctest::Approx(2.25 / 3.25).epsilon(1e-13));
    // E|a + sqrt2 Z| for standard normal Z.
    const double a = 1.7, s = std::numbers::sqrt2;
    const double folded = s * std::sqrt(2.0 / std::numbers::pi) * std::exp(-a * a / (2 * s * s)) +
                          a * (1.0 - 2.0 * big_phi(-a / s));
    CHECK(normal_location_g(a) == doctest::Approx(folded).epsilon(1e-13));
    CHECK(2.0 * a * big_phi(a / s) + 2.0 * s * phi(a / s) - a == doctest::Approx(folded));
    const auto zero = normal_location_corrs(0.3, 0.0);
    CHECK(zero.rho_g == 0.0);
    CHECK(zero.rho_p2 == 0.0);
}

TEST_CASE("normal scale values") {
    CHECK(std::abs(normal_scale_gcor(0.5, 3.0) - 0.0557) < 5e-5);
    CHECK(normal_scale_gcor(0.4, 1.0) == doctest::Approx(0.0));
    const double r = 2.0, root = std::sqrt(2.0 * (1.0 + r * r));
    const double direct = 0.25 * (root - 1.0 - r) / (0.25 + 0.25 * r + 0.25 * root);
    CHECK(normal_scale_gcor(0.5, r) == doctest::Approx(direct).epsilon(1e-13));
    const auto spec = two(Component::normal(0, 1), Component::normal(0, 2), 0.5);
    CHECK(gcor_by_quadrature(spec) == doctest::Approx(direct).epsilon(1e-8));
}

TEST_CASE("property: closed forms agree with direct quadrature") {
    for (double p : {0.25, 0.5, 0.7}) {
        for (double beta : {2.0, 4.0}) {
            const auto spec = two(Component::exponential(1.0), Component::exponential(beta), p);
            CHECK(std::abs(gcor_by_quadrature(spec) - exp_mixture_corrs(p, 1.0, beta).rho_g) < 1e-6);
        }
        for (double a : {0.5, 3.0}) {
            const auto spec = two(Component::normal(0, 1.5), Component::normal(1.5 * a, 1.5), p);
            CHECK(std::abs(gcor_by_quadrature(spec) - normal_location_corrs(p, a).rho_g) < 1e-6);
        }
        for (double r : {1.5, 3.0}) {
            const auto spec = two(Component::normal(1, 1), Component::normal(1, r), p);
            CHECK(std::abs(gcor_by_quadrature(spec) - normal_scale_gcor(p, r)) < 1e-6);
        }
    }
}

TEST_CASE("property: oracle correlations lie in the unit interval") {
    for (double p = 0.05; p < 1.0; p += 0.15) {
        for (double x : {0.2, 1.0, 2.5, 9.0}) {
            const auto e = exp_mixture_corrs(p, 1.0, x);
            for (double v : {e.rho_g, e.rho_d, e.rho_p2}) {
                CHECK(v >= -1e-15);
                CHECK(v <= 1.0);
            }
            const auto l = normal_location_corrs(p, x);
            CHECK(l.rho_g >= 0.0);
            CHECK(l.rho_g <= 1.0);
            const double s = normal_scale_gcor(p, x);
            CHECK(s >= -1e-15);
            CHECK(s <= 1.0);
        }
    }
}

TEST_CASE("monotone increase along the shape parameter") {
    const std::vector<double> a = {0.5, 1, 1.5, 2, 2.5, 3, 3.5, 4};
    CHECK(monotonicity_probe(2, 0.5, a).strictly_increasing);
    std::vector<double> r;
    for (double v = 1.1; v <= 5.0 + 1e-9; v += 0.1) r.push_back(v);
    CHECK(monotonicity_probe(3, 0.25, r).strictly_increasing);
    std::vector<double> ratio;
    for (double v = 1.2; v <= 5.0 + 1e-9; v += 0.2) ratio.push_back(v);
    const auto report = monotonicity_probe(1, 0.5, ratio);
    CHECK(report.strictly_increasing);
    CHECK(report.values.size() == ratio.size());
    const std::vector<double> bad = {2.0, 1.5};
    CHECK_THROWS_AS(monotonicity_probe(2, 0.5, bad), Error);
    const std::vector<double> below = {0.5, 2.0};
    CHECK_THROWS_AS(monotonicity_probe(3, 0.5, below), Error);
    CHECK_THROWS_AS(monotonicity_probe(4, 0.5, a), Error);
}

TEST_CASE("oracle dispatch by design") {
    CHECK(*oracle_gcor(two(Component::exponential(1), Component::exponential(4), 0.5)) ==
          doctest::Approx(2.25 / 14.75));
    CHECK(*oracle_gcor(two(Component::normal(0, 2), Component::normal(6, 2), 0.5)) ==
          doctest::Approx(normal_location_corrs(0.5, 3.0).rho_g));
    CHECK(*oracle_gcor(two(Component::normal(0, 1), Component::normal(0, 3), 0.5)) ==
          doctest::Approx(normal_scale_gcor(0.5, 3.0)));
    CHECK(*oracle_gcor(two(Component::normal(0, 3), Component::normal(0, 1), 0.3)) ==
          doctest::Approx(normal_scale_gcor(0.7, 3.0)));
    CHECK(*oracle_gcor(two(Component::cauchy(0, 1), Component::cauchy(0, 1), 0.5)) == 0.0);
    CHECK_FALSE(oracle_gcor(two(Component::cauchy(0, 1), Component::cauchy(1, 1), 0.5)));
    CHECK_FALSE(oracle_gcor(two(Component::normal(0, 1), Component::normal(1, 2), 0.5)));
}

TEST_CASE("invalid mixture specifications") {
    CHECK_THROWS_AS((MixtureSpec{{Component::normal(0, 1)}, {0.9}}).validate(), Error);
    CHECK_THROWS_AS((MixtureSpec{{Component::normal(0, 1), Component::normal(0, 1)}, {1.0, 0.0}}).validate(),
                    Error);
    CHECK_THROWS_AS((MixtureSpec{{Component::normal(0, 1), Component::standard_mv_normal(2)}, {0.5, 0.5}})
                        .validate(),
                    Error);
    CHECK_THROWS_AS((MixtureSpec{{Component::exponential(-1)}, {1.0}}).validate(), Error);
    CHECK_NOTHROW((MixtureSpec{{Component::normal(0, 1)}, {1.0}}).validate());
    CHECK_THROWS_AS(exp_mixture_corrs(1.0, 1.0, 2.0), Error);
    CHECK_THROWS_AS(normal_location_corrs(0.5, -1.0), Error);
    CHECK_THROWS_AS(normal_scale_gcor(0.5, 0.0), Error);
}
