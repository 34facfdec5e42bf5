#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "renewal/rng.hpp"

namespace renewal {

// Probability laws on the extended half-line [0, inf]. A law is a finite
// mixture of parametric components; mass at infinity (defect) is an ordinary
// point-mass component located at +inf.

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PointMass {
    double x; // in [0, inf]
};

struct Exponential {
    double rate;
    double shift = 0.0; // law of shift + Exp(rate)
};

struct Erlang {
    int shape;
    double rate;
    double shift = 0.0;
};

struct Uniform {
    double lo;
    double hi;
};

// P(X = shift + scale*k) = s(1-s)^k for k >= 0 when support_start == 0, and
// s(1-s)^{k-1} for k >= 1 when support_start == 1. Both conventions carry
// total mass 1.
struct LatticeGeometric {
    double s;
    double scale;
    double shift = 0.0;
    int support_start = 0; // 0 or 1
};

using LawComponent =
    std::variant<PointMass, Exponential, Erlang, Uniform, LatticeGeometric>;

struct WeightedComponent {
    double weight;
    LawComponent component;
};

namespace detail {

inline bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

inline void validate_component(const LawComponent& c) {
    struct Checker {
        void operator()(const PointMass& pm) const {
            if (std::isnan(pm.x) || pm.x < 0.0)
                throw std::invalid_argument("point mass location must be in [0, inf]");
        }
        void operator()(const Exponential& e) const {
            if (!(std::isfinite(e.rate) && e.rate > 0.0))
                throw std::invalid_argument("exponential rate must be positive");
            if (!finite_nonneg(e.shift))
                throw std::invalid_argument("exponential shift must be nonnegative");
        }
        void operator()(const Erlang& e) const {
            if (e.shape < 1) throw std::invalid_argument("erlang shape must be >= 1");
            if (!(std::isfinite(e.rate) && e.rate > 0.0))
                throw std::invalid_argument("erlang rate must be positive");
            if (!finite_nonneg(e.shift))
                throw std::invalid_argument("erlang shift must be nonnegative");
        }
        void operator()(const Uniform& u) const {
            if (!finite_nonneg(u.lo) || !std::isfinite(u.hi) || !(u.hi > u.lo))
                throw std::invalid_argument("uniform requires 0 <= lo < hi < inf");
        }
        void operator()(const LatticeGeometric& g) const {
            if (!(g.s > 0.0 && g.s < 1.0))
                throw std::invalid_argument("geometric success parameter must be in (0,1)");
            if (!(std::isfinite(g.scale) && g.scale > 0.0))
                throw std::invalid_argument("geometric scale must be positive");
            if (!finite_nonneg(g.shift))
                throw std::invalid_argument("geometric shift must be nonnegative");
            if (g.support_start != 0 && g.support_start != 1)
                throw std::invalid_argument("geometric support must start at 0 or 1");
        }
    };
    std::visit(Checker{}, c);
}

// Ordering key for canonicalization: kind index then parameters.
inline std::vector<double> component_key(const LawComponent& c) {
    struct Key {
        std::vector<double> operator()(const PointMass& pm) const { return {0, pm.x}; }
        std::vector<double> operator()(const Exponential& e) const {
            return {1, e.rate, e.shift};
        }
        std::vector<double> operator()(const Erlang& e) const {
            return {2, static_cast<double>(e.shape), e.rate, e.shift};
        }
        std::vector<double> operator()(const Uniform& u) const { return {3, u.lo, u.hi}; }
        std::vector<double> operator()(const LatticeGeometric& g) const {
            return {4, static_cast<double>(g.support_start), g.s, g.scale, g.shift};
        }
    };
    return std::visit(Key{}, c);
}

} // namespace detail

class ExtendedLaw {
public:
    explicit ExtendedLaw(std::vector<WeightedComponent> components)
        : components_(std::move(components)) {
        if (components_.empty())
            throw std::invalid_argument("law needs at least one component");
        double total = 0.0;
        for (const auto& wc : components_) {
            if (!(wc.weight > 0.0 && wc.weight <= 1.0))
                throw std::invalid_argument("component weights must lie in (0, 1]");
            detail::validate_component(wc.component);
            total += wc.weight;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("component weights must sum to 1");
    }

    ExtendedLaw(LawComponent single) : ExtendedLaw({{1.0, std::move(single)}}) {}

    const std::vector<WeightedComponent>& components() const { return components_; }

    static ExtendedLaw point(double x) { return ExtendedLaw(PointMass{x}); }
    static ExtendedLaw exponential(double rate, double shift = 0.0) {
        return ExtendedLaw(Exponential{rate, shift});
    }
    static ExtendedLaw erlang(int shape, double rate, double shift = 0.0) {
        return ExtendedLaw(Erlang{shape, rate, shift});
    }
    static ExtendedLaw uniform(double lo, double hi) {
        return ExtendedLaw(Uniform{lo, hi});
    }
    static ExtendedLaw geometric_n0(double s, double scale, double shift = 0.0) {
        return ExtendedLaw(LatticeGeometric{s, scale, shift, 0});
    }
    static ExtendedLaw geometric_n(double s, double scale, double shift = 0.0) {
        return ExtendedLaw(LatticeGeometric{s, scale, shift, 1});
    }
    static ExtendedLaw mixture(std::vector<WeightedComponent> parts) {
        return ExtendedLaw(std::move(parts));
    }

    // Components rewritten to a normal form (shape-1 Erlangs are
    // exponentials, start-1 lattices are shifted start-0 lattices), merged
    // when exactly equal, and sorted by kind/parameters. Distinct spellings
    // of the same law therefore compare equal.
    ExtendedLaw canonical() const {
        std::vector<WeightedComponent> parts = components_;
        for (auto& wc : parts) {
            if (const auto* e = std::get_if<Erlang>(&wc.component); e && e->shape == 1)
                wc.component = Exponential{e->rate, e->shift};
            else if (const auto* g = std::get_if<LatticeGeometric>(&wc.component);
                     g && g->support_start == 1)
                wc.component = LatticeGeometric{g->s, g->scale, g->shift + g->scale, 0};
        }
        std::sort(parts.begin(), parts.end(),
                  [](const WeightedComponent& a, const WeightedComponent& b) {
                      return detail::component_key(a.component) <
                             detail::component_key(b.component);
                  });
        std::vector<WeightedComponent> merged;
        for (const auto& wc : parts) {
            if (!merged.empty() && detail::component_key(merged.back().component) ==
                                       detail::component_key(wc.component)) {
                merged.back().weight += wc.weight;
            } else {
                merged.push_back(wc);
            }
        }
        return ExtendedLaw(std::move(merged));
    }

private:
    std::vector<WeightedComponent> components_;
};

namespace detail {

inline double component_laplace(const LawComponent& c, double lambda) {
    struct Lt {
        double lambda;
        double operator()(const PointMass& pm) const {
            if (std::isinf(pm.x)) return 0.0;
            return std::exp(-lambda * pm.x);
        }
        double operator()(const Exponential& e) const {
            return std::exp(-lambda * e.shift) * e.rate / (e.rate + lambda);
        }
        double operator()(const Erlang& e) const {
            return std::exp(-lambda * e.shift) *
                   std::pow(e.rate / (e.rate + lambda), e.shape);
        }
        double operator()(const Uniform& u) const {
            if (lambda == 0.0) return 1.0;
            // e^{-la} (1 - e^{-l(b-a)}) / (l(b-a)), stable for small lambda
            const double width = lambda * (u.hi - u.lo);
            return std::exp(-lambda * u.lo) * (-std::expm1(-width)) / width;
        }
        double operator()(const LatticeGeometric& g) const {
            const double r = std::exp(-lambda * g.scale);
            const double base = g.s / (1.0 - (1.0 - g.s) * r);
            const double start = g.support_start == 1 ? r : 1.0;
            return std::exp(-lambda * g.shift) * start * base;
        }
    };
    return std::visit(Lt{lambda}, c);
}

inline double component_mass_at(const LawComponent& c, double x) {
    constexpr double tol = 1e-12;
    struct Mass {
        double x;
        double operator()(const PointMass& pm) const {
            if (std::isinf(x)) return std::isinf(pm.x) ? 1.0 : 0.0;
            if (std::isinf(pm.x)) return 0.0;
            return std::abs(pm.x - x) <= tol * std::max({1.0, std::abs(x), std::abs(pm.x)})
                       ? 1.0
                       : 0.0;
        }
        double operator()(const Exponential&) const { return 0.0; }
        double operator()(const Erlang&) const { return 0.0; }
        double operator()(const Uniform&) const { return 0.0; }
        double operator()(const LatticeGeometric& g) const {
            if (std::isinf(x)) return 0.0;
            const double k = std::round((x - g.shift) / g.scale);
            if (k < g.support_start) return 0.0;
            const double at = g.shift + g.scale * k;
            if (std::abs(at - x) > tol * std::max(1.0, std::abs(x))) return 0.0;
            const double exponent = g.support_start == 1 ? k - 1.0 : k;
            return g.s * std::pow(1.0 - g.s, exponent);
        }
    };
    return std::visit(Mass{x}, c);
}

inline double component_mean_finite(const LawComponent& c) {
    struct Mean {
        double operator()(const PointMass& pm) const { return std::isinf(pm.x) ? 0.0 : pm.x; }
        double operator()(const Exponential& e) const { return e.shift + 1.0 / e.rate; }
        double operator()(const Erlang& e) const { return e.shift + e.shape / e.rate; }
        double operator()(const Uniform& u) const { return 0.5 * (u.lo + u.hi); }
        double operator()(const LatticeGeometric& g) const {
            const double mean_k =
                g.support_start == 1 ? 1.0 / g.s : (1.0 - g.s) / g.s;
            return g.shift + g.scale * mean_k;
        }
    };
    return std::visit(Mean{}, c);
}

// laplace minus the atom mass at zero, kept in closed form per component so
// the subtraction never cancels catastrophically.
inline double component_laplace_positive_part(const LawComponent& c, double lambda) {
    if (const auto* pm = std::get_if<PointMass>(&c)) {
        if (pm->x == 0.0 || std::isinf(pm->x)) return 0.0;
        return std::exp(-lambda * pm->x);
    }
    if (const auto* g = std::get_if<LatticeGeometric>(&c)) {
        if (g->shift == 0.0 && g->support_start == 0) {
            const double r = std::exp(-lambda * g->scale);
            return g->s * (1.0 - g->s) * r / (1.0 - (1.0 - g->s) * r);
        }
    }
    return component_laplace(c, lambda);
}

inline double component_sample(const LawComponent& c, RandomStream& rng) {
    struct Draw {
        RandomStream& rng;
        double operator()(const PointMass& pm) const { return pm.x; }
        double operator()(const Exponential& e) const {
            return e.shift + rng.exponential(e.rate);
        }
        double operator()(const Erlang& e) const {
            double total = 0.0;
            for (int i = 0; i < e.shape; ++i) total += rng.exponential(e.rate);
            return e.shift + total;
        }
        double operator()(const Uniform& u) const {
            return u.lo + rng.uniform() * (u.hi - u.lo);
        }
        double operator()(const LatticeGeometric& g) const {
            const double k = rng.geometric_n0(g.s) + g.support_start;
            return g.shift + g.scale * k;
        }
    };
    return std::visit(Draw{rng}, c);
}

} // namespace detail

// Laplace transform evaluated at lambda >= 0; mass at infinity contributes 0,
// so the value at 0 equals the total finite mass.
inline double laplace(const ExtendedLaw& law, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("laplace requires lambda >= 0");
    double total = 0.0;
    for (const auto& wc : law.components())
        total += wc.weight * detail::component_laplace(wc.component, lambda);
    return total;
}

// Exact atom mass at x (x may be inf); continuous components contribute 0.
inline double mass_at(const ExtendedLaw& law, double x) {
    double total = 0.0;
    for (const auto& wc : law.components())
        total += wc.weight * detail::component_mass_at(wc.component, x);
    return total;
}

inline double mass_at_infinity(const ExtendedLaw& law) {
    return mass_at(law, kInfinity);
}

// laplace(law, lambda) - mass_at(law, 0), the transform of the strictly
// positive finite part, evaluated without the cancellation of the direct
// subtraction.
inline double laplace_positive_part(const ExtendedLaw& law, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("laplace requires lambda >= 0");
    double total = 0.0;
    for (const auto& wc : law.components())
        total += wc.weight * detail::component_laplace_positive_part(wc.component, lambda);
    return total;
}

// E[X; X < inf].
inline double mean_finite_part(const ExtendedLaw& law) {
    double total = 0.0;
    for (const auto& wc : law.components())
        total += wc.weight * detail::component_mean_finite(wc.component);
    return total;
}

inline double sample(const ExtendedLaw& law, RandomStream& rng) {
    const auto& parts = law.components();
    if (parts.size() == 1) return detail::component_sample(parts[0].component, rng);
    double u = rng.uniform();
    for (const auto& wc : parts) {
        if (u < wc.weight) return detail::component_sample(wc.component, rng);
        u -= wc.weight;
    }
    return detail::component_sample(parts.back().component, rng);
}

namespace detail {

struct Fraction {
    long long num;
    long long den;
};

// Nearest fraction with bounded denominator via continued-fraction
// convergents. The acceptance tolerance is near double precision: with the
// 1e6 denominator bound, convergents of irrational ratios stop short of it,
// so sqrt(2) and friends fail reduction while values that are rationals up
// to representation error pass.
inline std::optional<Fraction> to_fraction(double x, long long max_den = 1000000) {
    if (!(x > 0.0) || !std::isfinite(x) || x > 1e12) return std::nullopt;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        const double a = std::floor(v);
        if (a > 4e18) return std::nullopt;
        const long long ai = static_cast<long long>(a);
        if (q1 > 0 && ai > (4000000000000000000ll - 1) / std::max(1ll, q1)) break;
        const long long p2 = ai * p1 + p0;
        const long long q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double rem = v - a;
        if (rem < 1e-12) break;
        v = 1.0 / rem;
    }
    if (q1 == 0 || p1 <= 0) return std::nullopt;
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(x - approx) > 1e-12 * std::max(1.0, std::abs(x))) return std::nullopt;
    return Fraction{p1, q1};
}

inline unsigned __int128 u128_gcd(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        const unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::optional<Fraction> fraction_gcd(const Fraction& a, const Fraction& b) {
    unsigned __int128 num =
        u128_gcd(static_cast<unsigned __int128>(a.num) * b.den,
                 static_cast<unsigned __int128>(b.num) * a.den);
    unsigned __int128 den = static_cast<unsigned __int128>(a.den) * b.den;
    const unsigned __int128 g = u128_gcd(num, den);
    num /= g;
    den /= g;
    constexpr unsigned __int128 limit = 4000000000000000000ull;
    if (num > limit || den > limit) return std::nullopt;
    return Fraction{static_cast<long long>(num), static_cast<long long>(den)};
}

} // namespace detail

// Largest alpha > 0 with all finite support contained in {alpha*k : k >= 0},
// detected by rational reduction with denominator bound 1e6. Values that fail
// reduction are treated as incommensurable (law reported non-arithmetic).
// When the finite support is contained in {0} every lattice fits and there is
// no largest alpha; that degenerate case returns +inf.
inline std::optional<double> is_arithmetic_on_lattice(const ExtendedLaw& law) {
    std::vector<double> generators;
    for (const auto& wc : law.components()) {
        if (std::holds_alternative<Exponential>(wc.component) ||
            std::holds_alternative<Erlang>(wc.component) ||
            std::holds_alternative<Uniform>(wc.component))
            return std::nullopt;
        if (const auto* pm = std::get_if<PointMass>(&wc.component)) {
            if (!std::isinf(pm->x) && pm->x > 0.0) generators.push_back(pm->x);
        } else if (const auto* g = std::get_if<LatticeGeometric>(&wc.component)) {
            generators.push_back(g->scale);
            if (g->shift > 0.0) generators.push_back(g->shift);
        }
    }
    if (generators.empty()) return kInfinity;

    std::optional<detail::Fraction> acc;
    for (double v : generators) {
        const auto frac = detail::to_fraction(v);
        if (!frac) return std::nullopt;
        if (!acc) {
            acc = frac;
        } else {
            acc = detail::fraction_gcd(*acc, *frac);
            if (!acc) return std::nullopt;
        }
    }
    return static_cast<double>(acc->num) / static_cast<double>(acc->den);
}

// Structural law equality up to component order and a parameter tolerance.
inline bool laws_equal(const ExtendedLaw& a, const ExtendedLaw& b, double tol = 1e-12) {
    const auto ca = a.canonical().components();
    const auto cb = b.canonical().components();
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (std::abs(ca[i].weight - cb[i].weight) > tol) return false;
        const auto ka = detail::component_key(ca[i].component);
        const auto kb = detail::component_key(cb[i].component);
        if (ka.size() != kb.size() || ka[0] != kb[0]) return false;
        for (std::size_t j = 1; j < ka.size(); ++j) {
            if (std::isinf(ka[j]) && std::isinf(kb[j])) continue;
            if (std::abs(ka[j] - kb[j]) > tol * std::max({1.0, std::abs(ka[j]), std::abs(kb[j])}))
                return false;
        }
    }
    return true;
}

} // namespace renewal
