#include "ginicor/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ginicor/error.hpp"
#include "ginicor/inference.hpp"

namespace ginicor {

namespace {

constexpr double kWeightTolerance = 1e-12;

void require_probability(double p) {
    if (!(p > 0.0 && p < 1.0)) throw_usage("mixing proportion p must lie in (0, 1)");
}

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw_usage(std::string(name) + " must be a positive finite number");
    }
}

double normal_density(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

std::string format_number(double value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

double integrate(const std::function<double(double)>& f, double lo, double hi, double tol) {
    using Integrator = boost::math::quadrature::gauss_kronrod<double, 61>;
    return Integrator::integrate(f, lo, hi, 15, tol);
}

/// Integrates over consecutive breakpoints so kinks and bulk sit on segment ends.
double integrate_segments(const std::function<double(double)>& f, std::vector<double> points,
                          double tol) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        total += integrate(f, points[i], points[i + 1], tol);
    }
    return total;
}

double component_cdf(const Component& c, double x) {
    switch (c.family) {
        case Family::exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-x / c.first);
        case Family::normal:
            return normal_cdf((x - c.first) / c.second);
        default:
            throw_usage("quadrature oracle supports exponential and normal components only");
    }
}

/// Interval holding all but a negligible tail of the component's mass.
std::pair<double, double> component_support(const Component& c) {
    if (c.family == Family::exponential) return {0.0, 40.0 * c.first};
    return {c.first - 10.0 * c.second, c.first + 10.0 * c.second};
}

}  // namespace

std::string Component::describe() const {
    switch (family) {
        case Family::exponential:
            return "Exp(" + format_number(first) + ")";
        case Family::normal:
            return "N(" + format_number(first) + "," + format_number(second) + ")";
        case Family::cauchy:
            return "Cauchy(" + format_number(first) + "," + format_number(second) + ")";
        case Family::standard_mv_normal:
            return "MVN" + std::to_string(dim) + "(0,I)";
    }
    return "unknown";
}

void MixtureSpec::validate() const {
    if (components.empty()) throw_usage("a mixture needs at least one component");
    if (weights.size() != components.size()) {
        throw_usage("mixture has " + std::to_string(components.size()) + " components but " +
                    std::to_string(weights.size()) + " weights");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) throw_usage("mixture weights must be positive");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightTolerance) throw_usage("mixture weights must sum to 1");
    for (const Component& c : components) {
        if (c.dim != components.front().dim) {
            throw_usage("all mixture components must share one dimension");
        }
        switch (c.family) {
            case Family::exponential:
                require_positive(c.first, "exponential scale");
                break;
            case Family::normal:
            case Family::cauchy:
                if (!std::isfinite(c.first)) throw_usage("location must be finite");
                require_positive(c.second, "scale");
                break;
            case Family::standard_mv_normal:
                if (c.dim == 0) throw_usage("dimension must be positive");
                break;
        }
    }
}

std::size_t MixtureSpec::dims() const {
    return components.empty() ? 0 : components.front().dims();
}

std::string MixtureSpec::describe() const {
    std::string out;
    for (std::size_t k = 0; k < components.size(); ++k) {
        if (k > 0) out += " + ";
        out += format_number(weights[k]) + " " + components[k].describe();
    }
    return out;
}

ExpMixtureCorrs exp_mixture_corrs(double p, double theta, double beta) {
    require_probability(p);
    require_positive(theta, "theta");
    require_positive(beta, "beta");
    const double q = 1.0 - p;
    const double diff2 = (theta - beta) * (theta - beta);
    const double sum = theta + beta;

    ExpMixtureCorrs out;
    out.delta_12 = (theta * theta + beta * beta) / sum;
    out.rho_g = p * q * diff2 /
                ((2.0 * p - p * p) * theta * theta + (1.0 - p * p) * beta * beta +
                 (1.0 - 2.0 * p + 2.0 * p * p) * theta * beta);
    out.rho_p2 = p * q * diff2 / (p * theta * theta + q * beta * beta + p * q * diff2);
    out.dcov_xy = 2.0 * p * p * q * q * diff2 / sum;

    // Term by term as published.
    const double t2 = theta * theta, b2 = beta * beta;
    const double p2 = p * p, q2 = q * q, p3 = p2 * p, q3 = q2 * q;
    const double lead = p2 * theta + q2 * beta;
    out.dcov_xx_printed = 2.0 * p2 * t2 + 2.0 * q2 * b2 + lead * lead - 8.0 / 3.0 * p3 * t2 -
                          8.0 / 3.0 * q3 * b2 + 16.0 * p * q * t2 * b2 / (sum * sum) +
                          32.0 * p2 * q2 * t2 * b2 / (sum * sum) + 8.0 * p3 * q * t2 * beta / sum +
                          8.0 * p * q3 * theta * b2 / sum -
                          8.0 * p * q2 * theta * b2 * (5.0 * theta + beta) /
                              ((2.0 * theta + beta) * sum) -
                          8.0 * p2 * q * t2 * beta * (theta + 5.0 * beta) /
                              ((theta + 2.0 * beta) * sum);
    out.rho_d = p * q * diff2 / (2.0 * sum * std::sqrt(out.dcov_xx_printed));

    // 8 int int_{x<z} F(x)^2 (1 - F(z))^2 in closed form. With
    // G = 1 - F = p e^{-x/theta} + q e^{-x/beta}, both F^2 = 1 - 2G + G^2 and
    // G^2 are exponential sums, so the double integral is a finite sum of
    // a_i c_j / (lambda_j (mu_i + lambda_j)).
    const std::array<double, 3> c = {p2, 2.0 * p * q, q2};
    const std::array<double, 3> lambda = {2.0 / theta, 1.0 / theta + 1.0 / beta, 2.0 / beta};
    const std::array<double, 6> a = {1.0, -2.0 * p, -2.0 * q, p2, 2.0 * p * q, q2};
    const std::array<double, 6> mu = {0.0,         1.0 / theta,  1.0 / beta,
                                      2.0 / theta, lambda[1],    2.0 / beta};
    double integral = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            integral += a[i] * c[j] / (lambda[j] * (mu[i] + lambda[j]));
        }
    }
    out.dcov_xx_integral = 8.0 * integral;
    out.rho_d_consistent = out.dcov_xy / (std::sqrt(out.dcov_xx_integral) * 2.0 * p * q);
    return out;
}

double normal_location_g(double a) {
    const double s = a / std::numbers::sqrt2;
    return 2.0 * a * normal_cdf(s) + 2.0 * std::numbers::sqrt2 * normal_density(s) - a;
}

NormalLocationCorrs normal_location_corrs(double p, double a) {
    require_probability(p);
    if (!(a >= 0.0) || !std::isfinite(a)) throw_usage("a must be a nonnegative finite number");
    const double q = 1.0 - p;
    const double g = normal_location_g(a);
    const double inv_sqrt_pi = std::numbers::inv_sqrtpi;
    NormalLocationCorrs out;
    out.rho_g = p * q * (g - 2.0 * inv_sqrt_pi) / ((p * p + q * q) * inv_sqrt_pi + p * q * g);
    // g(0) = 2/sqrt(pi) exactly in theory; keep the independent case at zero.
    if (a == 0.0) out.rho_g = 0.0;
    out.rho_p2 = p * q * a * a / (1.0 + p * q * a * a);
    return out;
}

double normal_scale_gcor(double p, double r) {
    require_probability(p);
    require_positive(r, "r");
    const double q = 1.0 - p;
    const double root = std::sqrt(2.0 * (1.0 + r * r));
    return p * q * (root - 1.0 - r) / (p * p + q * q * r + p * q * root);
}

MonotonicityReport monotonicity_probe(int design, double p, std::span<const double> grid) {
    require_probability(p);
    if (grid.size() < 2) throw_usage("monotonicity probe needs at least two grid points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const bool in_domain = design == 2 ? grid[i] > 0.0 : grid[i] > 1.0;
        if (!in_domain || !std::isfinite(grid[i])) {
            throw_usage(design == 2 ? "grid values must be positive"
                                     : "grid values must exceed 1");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) throw_usage("grid must be strictly increasing");
    }

    MonotonicityReport report;
    report.grid.assign(grid.begin(), grid.end());
    for (double x : grid) {
        switch (design) {
            case 1:
                report.values.push_back(exp_mixture_corrs(p, 1.0, x).rho_g);
                break;
            case 2:
                report.values.push_back(normal_location_corrs(p, x).rho_g);
                break;
            case 3:
                report.values.push_back(normal_scale_gcor(p, x));
                break;
            default:
                throw_usage("design must be 1, 2 or 3");
        }
    }
    report.strictly_increasing = true;
    for (std::size_t i = 1; i < report.values.size(); ++i) {
        if (!(report.values[i] > report.values[i - 1])) report.strictly_increasing = false;
    }
    return report;
}

std::optional<double> oracle_gcor(const MixtureSpec& spec) {
    spec.validate();
    const auto& cs = spec.components;
    const bool all_equal = std::all_of(cs.begin(), cs.end(), [&](const Component& c) {
        return c.family == cs.front().family && c.first == cs.front().first &&
               c.second == cs.front().second && c.dim == cs.front().dim;
    });
    if (all_equal) return 0.0;
    if (cs.size() != 2 || cs[0].family != cs[1].family) return std::nullopt;

    const double p = spec.weights[0];
    switch (cs[0].family) {
        case Family::exponential:
            return exp_mixture_corrs(p, cs[0].first, cs[1].first).rho_g;
        case Family::normal:
            if (cs[0].second == cs[1].second) {
                return normal_location_corrs(p, std::abs(cs[0].first - cs[1].first) / cs[0].second)
                    .rho_g;
            }
            if (cs[0].first == cs[1].first) return normal_scale_gcor(p, cs[1].second / cs[0].second);
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

double gcor_by_quadrature(const MixtureSpec& spec) {
    spec.validate();
    if (spec.dims() != 1) throw_usage("quadrature oracle needs univariate components");
    std::vector<double> points;
    for (const Component& c : spec.components) {
        if (c.family != Family::exponential && c.family != Family::normal) {
            throw_usage("quadrature oracle supports exponential and normal components only");
        }
        const auto [lo, hi] = component_support(c);
        points.push_back(lo);
        points.push_back(hi);
        if (c.family == Family::normal) points.push_back(c.first);
    }
    const double lo = *std::min_element(points.begin(), points.end());
    const double hi = *std::max_element(points.begin(), points.end());
    if (lo < 0.0 && hi > 0.0) points.push_back(0.0);

    auto mixture_cdf = [&](double x) {
        double f = 0.0;
        for (std::size_t k = 0; k < spec.components.size(); ++k) {
            f += spec.weights[k] * component_cdf(spec.components[k], x);
        }
        return f;
    };
    const double between = integrate_segments(
        [&](double x) {
            const double f = mixture_cdf(x);
            double s = 0.0;
            for (std::size_t k = 0; k < spec.components.size(); ++k) {
                const double d = component_cdf(spec.components[k], x) - f;
                s += spec.weights[k] * d * d;
            }
            return s;
        },
        points, 1e-10);
    const double total = integrate_segments(
        [&](double x) {
            const double f = mixture_cdf(x);
            return f * (1.0 - f);
        },
        points, 1e-10);
    if (!(total > 0.0)) throw_numeric("degenerate mixture: zero Gini mean difference");
    return between / total;
}

double exp_mixture_dcov_xx_quadrature(double p, double theta, double beta) {
    require_probability(p);
    require_positive(theta, "theta");
    require_positive(beta, "beta");
    const double q = 1.0 - p;
    const double upper = 40.0 * std::max(theta, beta);
    auto survival = [&](double x) { return p * std::exp(-x / theta) + q * std::exp(-x / beta); };
    auto inner = [&](double x) {
        const double tail = integrate(
            [&](double z) {
                const double s = survival(z);
                return s * s;
            },
            x, upper, 1e-9);
        const double f = 1.0 - survival(x);
        return f * f * tail;
    };
    return 8.0 * integrate(inner, 0.0, upper, 1e-9);
}

}  // namespace ginicor
