#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "renewal/law.hpp"

namespace renewal {

// Closed-form Laplace transforms of the pair of first marked epochs (r0, r1),
// plus the residuals of the three equivalent functional equations whose
// vanishing characterizes their independence. All formulas are algebraic in
// fii := laplace(t1, .) and phi := laplace(t2, .); denominators stay >= p and
// >= 1-p, so nothing here can blow up for p inside (0,1).

inline double marginal_lt_r1(const ExtendedLaw& t1, const ExtendedLaw& t2, double p,
                             double lambda) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
    return p * laplace(t1, lambda) / (1.0 - (1.0 - p) * laplace(t2, lambda));
}

inline double marginal_lt_r0(const ExtendedLaw& t1, const ExtendedLaw& t2, double p,
                             double mu) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
    return (1.0 - p) * laplace(t1, mu) / (1.0 - p * laplace(t2, mu));
}

// E[e^{-lambda*r1 - mu*r0}; both finite].
inline double joint_lt(const ExtendedLaw& t1, const ExtendedLaw& t2, double p,
                       double lambda, double mu) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
    const double phi_l = laplace(t2, lambda);
    const double phi_m = laplace(t2, mu);
    return laplace(t1, lambda + mu) * p * (1.0 - p) *
           (phi_l + phi_m - phi_l * phi_m) /
           ((1.0 - (1.0 - p) * phi_l) * (1.0 - p * phi_m));
}

// Joint transform minus the product of the marginals.
inline double residual_eq1(const ExtendedLaw& t1, const ExtendedLaw& t2, double p,
                           double lambda, double mu) {
    return joint_lt(t1, t2, p, lambda, mu) -
           marginal_lt_r1(t1, t2, p, lambda) * marginal_lt_r0(t1, t2, p, mu);
}

// The p-free form: fii(l+m)[phi(l)+phi(m)-phi(l)phi(m)] - fii(l)fii(m).
inline double residual_eq2(const ExtendedLaw& t1, const ExtendedLaw& t2, double lambda,
                           double mu) {
    const double phi_l = laplace(t2, lambda);
    const double phi_m = laplace(t2, mu);
    return laplace(t1, lambda + mu) * (phi_l + phi_m - phi_l * phi_m) -
           laplace(t1, lambda) * laplace(t1, mu);
}

// Residual of the additive form in psi := 1/xi - 1 with
// xi := (phi - (1-q0))/q0 and q0 := P(t2 > 0). Defined only when q0 > 0 and
// the defect of t2 stays below q0 (so xi > 0 everywhere).
inline double residual_eq3(const ExtendedLaw& t2, double lambda, double mu) {
    const double q0 = 1.0 - mass_at(t2, 0.0);
    if (!(q0 > 0.0))
        throw std::domain_error("residual_eq3 requires P(t2 > 0) > 0");
    if (!(mass_at_infinity(t2) < q0))
        throw std::domain_error("residual_eq3 requires P(t2 = inf) < P(t2 > 0)");
    const auto psi = [&](double x) {
        // phi(x) - (1-q0) evaluated as the transform of the positive part;
        // the direct subtraction loses most of its digits for large x
        const double xi = laplace_positive_part(t2, x) / q0;
        return 1.0 / xi - 1.0;
    };
    return psi(lambda + mu) - psi(lambda) - psi(mu) -
           psi(lambda) * psi(mu) * (1.0 - q0 * q0);
}

enum class Equation { Eq1, Eq2, Eq3 };

inline const char* to_string(Equation eq) {
    switch (eq) {
        case Equation::Eq1: return "eq1";
        case Equation::Eq2: return "eq2";
        default: return "eq3";
    }
}

struct GridSpec {
    double lambda_min = 0.0;
    double lambda_max = 5.0;
    int lambda_points = 21;
    double mu_min = 0.0;
    double mu_max = 5.0;
    int mu_points = 21;
    int diagonal_points = 101; // refinement of lambda == mu used by scans
};

struct LTGrid {
    std::vector<double> lambdas;
    std::vector<double> mus;
    std::vector<std::vector<double>> values; // values[i][j] at (lambdas[i], mus[j])
};

struct GridSummary {
    double max_abs = 0.0;
    double argmax_lambda = 0.0;
    double argmax_mu = 0.0;
};

struct GridScanResult {
    LTGrid grid;
    GridSummary summary;
};

namespace detail {

inline double equation_residual(const ExtendedLaw& t1, const ExtendedLaw& t2, Equation eq,
                                std::optional<double> p, double lambda, double mu) {
    switch (eq) {
        case Equation::Eq1:
            if (!p) throw std::invalid_argument("eq1 residual needs the marking probability p");
            return residual_eq1(t1, t2, *p, lambda, mu);
        case Equation::Eq2:
            return residual_eq2(t1, t2, lambda, mu);
        default:
            return residual_eq3(t2, lambda, mu);
    }
}

inline std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
        throw std::invalid_argument("grid bounds must be finite and ordered");
    std::vector<double> out(points);
    for (int i = 0; i < points; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    return out;
}

} // namespace detail

inline GridScanResult grid_scan(const ExtendedLaw& t1, const ExtendedLaw& t2,
                                const GridSpec& spec, Equation eq,
                                std::optional<double> p = std::nullopt) {
    GridScanResult result;
    result.grid.lambdas = detail::linspace(spec.lambda_min, spec.lambda_max, spec.lambda_points);
    result.grid.mus = detail::linspace(spec.mu_min, spec.mu_max, spec.mu_points);
    result.grid.values.assign(result.grid.lambdas.size(), {});
    for (std::size_t i = 0; i < result.grid.lambdas.size(); ++i) {
        auto& row = result.grid.values[i];
        row.resize(result.grid.mus.size());
        for (std::size_t j = 0; j < result.grid.mus.size(); ++j) {
            const double r = detail::equation_residual(t1, t2, eq, p, result.grid.lambdas[i],
                                                       result.grid.mus[j]);
            row[j] = r;
            if (std::abs(r) > result.summary.max_abs) {
                result.summary.max_abs = std::abs(r);
                result.summary.argmax_lambda = result.grid.lambdas[i];
                result.summary.argmax_mu = result.grid.mus[j];
            }
        }
    }
    return result;
}

// Max |residual| along the refined diagonal lambda == mu.
inline GridSummary diagonal_scan(const ExtendedLaw& t1, const ExtendedLaw& t2,
                                 const GridSpec& spec, Equation eq,
                                 std::optional<double> p = std::nullopt) {
    GridSummary summary;
    for (double x : detail::linspace(spec.lambda_min, spec.lambda_max, spec.diagonal_points)) {
        const double r = detail::equation_residual(t1, t2, eq, p, x, x);
        if (std::abs(r) > summary.max_abs) {
            summary.max_abs = std::abs(r);
            summary.argmax_lambda = x;
            summary.argmax_mu = x;
        }
    }
    return summary;
}

} // namespace renewal
