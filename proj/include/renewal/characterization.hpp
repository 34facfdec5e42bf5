#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "renewal/law.hpp"

namespace renewal {

// The five canonical law-pair families for which the first marked epochs are
// independent, structural classification of a pair against them, and the side
// conditions under which independence pins down a homogeneous Poisson process.

enum class CaseId { A, B, C, D, E, None };

inline const char* to_string(CaseId id) {
    switch (id) {
        case CaseId::A: return "A";
        case CaseId::B: return "B";
        case CaseId::C: return "C";
        case CaseId::D: return "D";
        case CaseId::E: return "E";
        default: return "none";
    }
}

struct CaseDescriptor {
    CaseId case_id = CaseId::None;
    double kappa = 0.0; // cases B..E
    double theta = 0.0; // case D
    double q0 = 0.0;    // cases C, E
    double alpha = 0.0; // case E

    bool operator==(const CaseDescriptor&) const = default;
};

// Canonical (t1, t2) for a descriptor:
//   A: t1 = point(inf), t2 unconstrained (defaults to point(inf))
//   B: t1 = point(kappa), t2 = point(0)
//   C: t1 = (1-q0^2) point(kappa) + q0^2 point(inf),
//      t2 = (1-q0) point(0) + q0 point(inf)
//   D: t1 = kappa + Exp(theta), t2 = Exp(theta)
//   E: t1 = kappa + alpha * geomN0(1-q0^2),
//      t2 = (1-q0) point(0) + q0 * alpha * geomN(1-q0^2)
inline std::pair<ExtendedLaw, ExtendedLaw> make_case_laws(const CaseDescriptor& d) {
    const auto need_kappa = [&] {
        if (!(std::isfinite(d.kappa) && d.kappa >= 0.0))
            throw std::invalid_argument("kappa must be finite and nonnegative");
    };
    const auto need_q0 = [&] {
        if (!(d.q0 > 0.0 && d.q0 < 1.0))
            throw std::invalid_argument("q0 must be strictly inside (0,1)");
    };
    switch (d.case_id) {
        case CaseId::A:
            return {ExtendedLaw::point(kInfinity), ExtendedLaw::point(kInfinity)};
        case CaseId::B:
            need_kappa();
            return {ExtendedLaw::point(d.kappa), ExtendedLaw::point(0.0)};
        case CaseId::C: {
            need_kappa();
            need_q0();
            const double q2 = d.q0 * d.q0;
            return {ExtendedLaw::mixture({{1.0 - q2, PointMass{d.kappa}},
                                          {q2, PointMass{kInfinity}}}),
                    ExtendedLaw::mixture({{1.0 - d.q0, PointMass{0.0}},
                                          {d.q0, PointMass{kInfinity}}})};
        }
        case CaseId::D:
            need_kappa();
            if (!(d.theta > 0.0 && std::isfinite(d.theta)))
                throw std::invalid_argument("theta must be positive");
            return {ExtendedLaw::exponential(d.theta, d.kappa),
                    ExtendedLaw::exponential(d.theta)};
        case CaseId::E: {
            need_kappa();
            need_q0();
            if (!(d.alpha > 0.0 && std::isfinite(d.alpha)))
                throw std::invalid_argument("alpha must be positive");
            const double s = 1.0 - d.q0 * d.q0;
            return {ExtendedLaw::geometric_n0(s, d.alpha, d.kappa),
                    ExtendedLaw::mixture(
                        {{1.0 - d.q0, PointMass{0.0}},
                         {d.q0, LatticeGeometric{s, d.alpha, 0.0, 1}}})};
        }
        default:
            throw std::invalid_argument("descriptor has no case");
    }
}

namespace detail {

inline bool close(double a, double b, double tol = 1e-9) {
    if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool interior01(double v, double tol = 1e-9) {
    return v > tol && v < 1.0 - tol;
}

} // namespace detail

// Structural matching with parameter recovery; a pair outside the five
// parametric shapes classifies as None rather than being approximated.
inline CaseDescriptor classify_pair(const ExtendedLaw& t1_in, const ExtendedLaw& t2_in) {
    using detail::close;
    const auto t1 = t1_in.canonical().components();
    const auto t2 = t2_in.canonical().components();

    // A: everything hinges on t1 being all defect.
    if (t1.size() == 1) {
        if (const auto* pm = std::get_if<PointMass>(&t1[0].component);
            pm && std::isinf(pm->x))
            return {CaseId::A};
    }

    // B: two deterministic atoms.
    if (t1.size() == 1 && t2.size() == 1) {
        const auto* a1 = std::get_if<PointMass>(&t1[0].component);
        const auto* a2 = std::get_if<PointMass>(&t2[0].component);
        if (a1 && a2 && !std::isinf(a1->x) && close(a2->x, 0.0))
            return {CaseId::B, a1->x};
    }

    // C: atom/defect pairs with the defect weights tied together as q0^2, q0.
    if (t1.size() == 2 && t2.size() == 2) {
        const auto* k1 = std::get_if<PointMass>(&t1[0].component);
        const auto* i1 = std::get_if<PointMass>(&t1[1].component);
        const auto* z2 = std::get_if<PointMass>(&t2[0].component);
        const auto* i2 = std::get_if<PointMass>(&t2[1].component);
        if (k1 && i1 && z2 && i2 && !std::isinf(k1->x) && std::isinf(i1->x) &&
            close(z2->x, 0.0) && std::isinf(i2->x)) {
            const double q0 = t2[1].weight;
            if (detail::interior01(q0) && close(t1[1].weight, q0 * q0) &&
                close(t1[0].weight, 1.0 - q0 * q0))
                return {CaseId::C, k1->x, 0.0, q0};
        }
    }

    // D: shifted and unshifted exponentials with equal rates.
    if (t1.size() == 1 && t2.size() == 1) {
        const auto* e1 = std::get_if<Exponential>(&t1[0].component);
        const auto* e2 = std::get_if<Exponential>(&t2[0].component);
        if (e1 && e2 && close(e2->shift, 0.0) && close(e1->rate, e2->rate))
            return {CaseId::D, e1->shift, e2->rate};
    }

    // E: lattice-geometric t1 and a zero-atom + lattice-geometric t2 sharing
    // the success parameter 1-q0^2 and the scale. In canonical form the t2
    // lattice starts at 0 with its shift equal to one scale step.
    if (t1.size() == 1 && t2.size() == 2) {
        const auto* g1 = std::get_if<LatticeGeometric>(&t1[0].component);
        const auto* z2 = std::get_if<PointMass>(&t2[0].component);
        const auto* g2 = std::get_if<LatticeGeometric>(&t2[1].component);
        if (g1 && z2 && g2 && g1->support_start == 0 && g2->support_start == 0 &&
            close(z2->x, 0.0) && close(g2->shift, g2->scale)) {
            const double q0 = t2[1].weight;
            const double s = 1.0 - q0 * q0;
            if (detail::interior01(q0) && close(g1->s, s) && close(g2->s, s) &&
                close(g1->scale, g2->scale))
                return {CaseId::E, g1->shift, 0.0, q0, g2->scale};
        }
    }

    return {CaseId::None};
}

inline bool predict_independence(const ExtendedLaw& t1, const ExtendedLaw& t2) {
    return classify_pair(t1, t2).case_id != CaseId::None;
}

struct Theorem1Report {
    bool support_near_zero = false;  // P(t1 < eps) > 0 for every eps > 0
    bool t2_non_arithmetic = false;
    bool t1_no_atom_at_zero = false;
    bool ordinary = false; // t1 == t2, no defect, no mass at 0
    bool applies = false;
    std::string note;
};

namespace detail {

// Decided structurally: some component places mass at 0 or arbitrarily close
// above it.
inline bool support_reaches_zero(const ExtendedLaw& law) {
    for (const auto& wc : law.components()) {
        struct Reaches {
            bool operator()(const PointMass& pm) const { return pm.x == 0.0; }
            bool operator()(const Exponential& e) const { return e.shift == 0.0; }
            bool operator()(const Erlang& e) const { return e.shift == 0.0; }
            bool operator()(const Uniform& u) const { return u.lo == 0.0; }
            bool operator()(const LatticeGeometric& g) const {
                return g.shift == 0.0 && g.support_start == 0;
            }
        };
        if (std::visit(Reaches{}, wc.component)) return true;
    }
    return false;
}

} // namespace detail

inline Theorem1Report theorem1_report(const ExtendedLaw& t1, const ExtendedLaw& t2) {
    Theorem1Report rep;
    rep.support_near_zero = detail::support_reaches_zero(t1);
    rep.t2_non_arithmetic = !is_arithmetic_on_lattice(t2).has_value();
    rep.t1_no_atom_at_zero = mass_at(t1, 0.0) == 0.0;
    rep.ordinary = laws_equal(t1, t2) && mass_at_infinity(t1) == 0.0 &&
                   mass_at_infinity(t2) == 0.0 && mass_at(t1, 0.0) == 0.0 &&
                   mass_at(t2, 0.0) == 0.0;
    rep.applies = (rep.support_near_zero && (rep.t2_non_arithmetic || rep.t1_no_atom_at_zero)) ||
                  rep.ordinary;
    if (rep.ordinary && !rep.support_near_zero)
        rep.note = "applies through the ordinary branch only; the delayed branch "
                   "would additionally need support of t1 near zero";
    return rep;
}

} // namespace renewal
