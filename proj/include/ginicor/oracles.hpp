#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ginicor {

enum class Family { exponential, normal, cauchy, standard_mv_normal };

/// One mixture component.
///   exponential:        first = scale (mean)
///   normal:             first = mean, second = sd
///   cauchy:             first = location, second = scale
///   standard_mv_normal: dim = dimension
struct Component {
    Family family = Family::normal;
    double first = 0.0;
    double second = 1.0;
    std::size_t dim = 1;

    static Component exponential(double scale) { return {Family::exponential, scale, 0.0, 1}; }
    static Component normal(double mean, double sd) { return {Family::normal, mean, sd, 1}; }
    static Component cauchy(double location, double scale) {
        return {Family::cauchy, location, scale, 1};
    }
    static Component standard_mv_normal(std::size_t dim) {
        return {Family::standard_mv_normal, 0.0, 1.0, dim};
    }

    std::size_t dims() const noexcept { return dim; }
    std::string describe() const;
};

/// K-component mixture; the component index is the class label.
struct MixtureSpec {
    std::vector<Component> components;
    std::vector<double> weights;

    /// Throws a usage error unless weights are positive, sum to 1 within
    /// 1e-12, match the component count, and all components share a dimension.
    void validate() const;
    std::size_t dims() const;
    std::string describe() const;
};

/// Two-component exponential mixture p Exp(theta) + (1-p) Exp(beta).
struct ExpMixtureCorrs {
    double rho_g = 0.0;
    double rho_d = 0.0;  // printed formula with the printed dCov(X,X)
    double rho_p2 = 0.0;
    double delta_12 = 0.0;
    double dcov_xy = 0.0;           // 2 p^2 (1-p)^2 (theta - beta)^2 / (theta + beta)
    double dcov_xx_printed = 0.0;   // long closed form, term by term as published
    double dcov_xx_integral = 0.0;  // exact value of 8 int int_{x<z} F(x)^2 (1-F(z))^2
    double rho_d_consistent = 0.0;  // dcov_xy / (sqrt(dcov_xx_integral) * 2p(1-p))
};

ExpMixtureCorrs exp_mixture_corrs(double p, double theta, double beta);

/// p N(mu1, s^2) + (1-p) N(mu2, s^2) with a = |mu1 - mu2| / s.
struct NormalLocationCorrs {
    double rho_g = 0.0;
    double rho_p2 = 0.0;
};

NormalLocationCorrs normal_location_corrs(double p, double a);

/// p N(mu, s1^2) + (1-p) N(mu, s2^2) with r = s2 / s1.
double normal_scale_gcor(double p, double r);

/// E|Z| shift term 2a Phi(a/sqrt 2) + 2 sqrt2 phi(a/sqrt 2) - a.
double normal_location_g(double a);

struct MonotonicityReport {
    bool strictly_increasing = false;
    std::vector<double> grid;
    std::vector<double> values;
};

/// Evaluates rho_g along a grid of a design's shape parameter and checks
/// strict increase. Design 1 (exponential) varies r = beta/theta with
/// theta = 1, design 2 (normal location) varies a, design 3 (normal scale)
/// varies r = s2/s1.
MonotonicityReport monotonicity_probe(int design, double p, std::span<const double> grid);

/// Population Gini correlation (alpha = 1) for two-component univariate
/// designs covered by the closed forms: exponential/exponential, normals
/// with equal sd, normals with equal mean. Empty otherwise.
std::optional<double> oracle_gcor(const MixtureSpec& spec);

// Quadrature cross-checks. Independent of the closed forms above: they
// integrate the CDF definition sum_k p_k int (F_k - F)^2 / int F (1 - F)
// directly.

/// rho_g by adaptive quadrature for a univariate mixture of exponential and
/// normal components (any K).
double gcor_by_quadrature(const MixtureSpec& spec);

/// 8 int int_{x<z} F(x)^2 (1 - F(z))^2 dz dx for the exponential mixture, by
/// nested adaptive quadrature.
double exp_mixture_dcov_xx_quadrature(double p, double theta, double beta);

}  // namespace ginicor
