#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "renewal/law.hpp"

namespace renewal {

// Closed-form event probabilities at the common atom epoch for the lattice
// and atom/defect families, and the discrete stationarity identity behind
// the lattice family. Everything here is exact formula evaluation; Monte
// Carlo cross-checks live in the tests.

struct RemarkProbs {
    double b0 = 0.0;        // exactly one 0-marked arrival by the atom epoch
    double b1 = 0.0;        // exactly one 1-marked arrival
    double b0_and_b1 = 0.0;
    double a0 = 0.0;        // no 0-marked arrival
    double a0_and_b1 = 0.0;
};

inline RemarkProbs remark3_probs(double q0, double p) {
    if (!(q0 > 0.0 && q0 < 1.0) || !(p > 0.0 && p < 1.0))
        throw std::invalid_argument("remark3_probs needs q0, p strictly inside (0,1)");
    const double s = 1.0 - q0 * q0;
    RemarkProbs out;
    out.b0 = q0 * s * (1.0 - p) / std::pow(1.0 - (1.0 - q0) * p, 2);
    out.b1 = q0 * s * p / std::pow(1.0 - (1.0 - q0) * (1.0 - p), 2);
    out.b0_and_b1 = 2.0 * s * (1.0 - q0) * q0 * p * (1.0 - p);
    out.a0 = q0 * (q0 + p - p * q0) / (1.0 - p + p * q0);
    out.a0_and_b1 = s * p * q0;
    return out;
}

// Residuals of the two factorization identities; they never vanish together
// for q0 inside (0,1), which is what rules out independence of the whole
// marked processes in these families.
//   c1 := q0(1+q0) - 2 [q0+p-pq0]^2 [1-p+q0p]^2   (b0/b1 factorization)
//   c2 := [q0+p-pq0][1-p+q0p] - q0                (a0/b1 factorization)
inline std::pair<double, double> remark3_incompatibility(double q0, double p) {
    if (!(q0 > 0.0 && q0 < 1.0) || !(p > 0.0 && p < 1.0))
        throw std::invalid_argument("remark3_incompatibility needs interior q0, p");
    const double u = q0 + p - p * q0;
    const double v = 1.0 - p + q0 * p;
    const double c1 = q0 * (1.0 + q0) - 2.0 * u * u * v * v;
    const double c2 = u * v - q0;
    return {c1, c2};
}

// Expected number of renewals at each lattice time n <= n_max for the
// discrete renewal sequence with first step geomN0(1-q0^2) and subsequent
// steps (1-q0) delta_0 + q0 geomN(1-q0^2), computed by the convolution
// recursion (1-f(0)) v_n = f1(n) + sum_{m=1..n} f(m) v_{n-m}. The zero-step
// mass makes v_n self-referencing, hence the division by 1-f(0) = q0.
inline std::vector<double> discrete_renewal_mass(double q0, int n_max) {
    if (!(q0 > 0.0 && q0 < 1.0))
        throw std::invalid_argument("discrete_renewal_mass needs q0 in (0,1)");
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    const double s = 1.0 - q0 * q0;
    const double r = q0 * q0;

    std::vector<double> f1(n_max + 1), f(n_max + 1);
    double pow_r = 1.0;
    for (int k = 0; k <= n_max; ++k) {
        f1[k] = s * pow_r;                           // P(U1 = k)
        f[k] = k == 0 ? 1.0 - q0 : q0 * s * pow_r / r; // P(U2 = k)
        pow_r *= r;
    }

    std::vector<double> v(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        double acc = f1[n];
        for (int m = 1; m <= n; ++m) acc += f[m] * v[n - m];
        v[n] = acc / q0;
    }
    return v;
}

// Max over k <= k_max of |P(U1 = k) - P(U2 > k)/E U2|, with the tail
// probability accumulated from the pmf rather than taken in closed form.
inline double summed_tail_residual(double q0, int k_max) {
    if (!(q0 > 0.0 && q0 < 1.0))
        throw std::invalid_argument("summed_tail_residual needs q0 in (0,1)");
    if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
    const double s = 1.0 - q0 * q0;
    const double r = q0 * q0;
    const double mean_u2 = q0 / s;

    double worst = 0.0;
    double pow_r = 1.0;       // r^k
    double cdf = 1.0 - q0;    // P(U2 <= k), starts at P(U2 = 0)
    for (int k = 0; k <= k_max; ++k) {
        const double lhs = s * pow_r;
        const double rhs = (1.0 - cdf) / mean_u2;
        worst = std::max(worst, std::abs(lhs - rhs));
        pow_r *= r;
        cdf += q0 * s * pow_r / r; // add P(U2 = k+1)
    }
    return worst;
}

} // namespace renewal
