#pragma once

// Levi-Civita machinery on the regular region: spread vector fields, the
// covariant derivative (closed form and finite differences), the Tn field
// whose integral curves are geodesics, the three geodesic parametrization
// families, and the curvature tensor with sectional curvature.

#include <cmath>
#include <functional>
#include <utility>

#include "algebrae/projective.hpp"

namespace algebrae {

// The vector field spread from a tangent t: T_q = pi[q] o t o pi'[q].
struct SpreadField {
    Tangent source;
    explicit SpreadField(Tangent t) : source(std::move(t)) {}
};

// Evaluates the spread of t at x: vec = pi[x]( t(x) ).
inline Tangent spread_at(const SpreadField& field, const ProjPoint& x, double tol = 1e-9) {
    if (!is_regular(x, tol)) throw singular_point("spread fields live on the regular region");
    const ModuleVector tx = field.source.apply(x.rep());
    auto [par, perp] = project(x, tx, tol);
    return Tangent(x, perp, tol);
}

// Closed form of nabla_T S at x for spread fields T, S from t, s at a common
// base: [ s pi[x] t - t pi'[x] s ]_x. Vanishes at the base point.
inline Tangent nabla_spread(const Tangent& t, const Tangent& s, const ProjPoint& x,
                            double tol = 1e-9) {
    if (!t.same_base_rep(s)) throw base_mismatch("spread fields must share a base representative");
    if (!is_regular(x, tol)) throw singular_point("covariant derivative at a singular point");
    const ModuleVector tx = t.apply(x.rep());
    auto [tx_par, tx_perp] = project(x, tx, tol);
    const ModuleVector first = s.apply(tx_perp);
    const ModuleVector sx = s.apply(x.rep());
    auto [sx_par, sx_perp] = project(x, sx, tol);
    const ModuleVector second = t.apply(sx_par);
    auto [res_par, res_perp] = project(x, first - second, tol);
    return Tangent(x, res_perp, tol);
}

// Central finite difference of an arbitrary tangent field along t, projected
// back into the tangent space at the base of t. Fields must return tangents
// pinned to the representative they are handed.
inline Tangent nabla_numeric(const std::function<Tangent(const ProjPoint&)>& field,
                             const Tangent& t, double step, double tol = 1e-9) {
    if (!(step > 0.0)) throw bad_argument("finite-difference step must be positive");
    const ProjPoint& p = t.base();
    const ModuleVector dir = t.vec();
    const ProjPoint xp(p.rep() + step * dir, tol);
    const ProjPoint xm(p.rep() - step * dir, tol);
    const Tangent fp = field(xp);
    const Tangent fm = field(xm);
    // Apply the field's operators to the base representative.
    auto apply_op = [&](const Tangent& f) {
        const Scalar hinv = inverse_unchecked(form(f.base().rep(), f.base().rep()));
        return mul(form(p.rep(), f.base().rep()), hinv) * f.vec();
    };
    const ModuleVector diff = (1.0 / (2.0 * step)) * (apply_op(fp) - apply_op(fm));
    auto [par, perp] = project(p, diff, tol);
    return Tangent(p, perp, tol);
}

// Finite-difference and closed-form derivative of the projection family
// pi'[p + eps tp] applied to a probe vector: the closed form is t + t^*.
struct ProjectionDerivative {
    ModuleVector finite_difference;
    ModuleVector analytic;
};

inline ProjectionDerivative proj_derivative(const Tangent& t, const ModuleVector& probe,
                                            double step = 1e-5, double tol = 1e-9) {
    const ModuleVector& p = t.base().rep();
    auto pi_prime = [&](const ModuleVector& base, const ModuleVector& v) {
        const Scalar hinv = inverse_unchecked(form(base, base));
        return mul(form(v, base), hinv) * base;
    };
    const ModuleVector xp = p + step * t.vec();
    const ModuleVector xm = p - step * t.vec();
    ProjectionDerivative out{
        (1.0 / (2.0 * step)) * (pi_prime(xp, probe) - pi_prime(xm, probe)),
        t.apply(probe) + adjoint_apply(t, probe)};
    return out;
}

// Tn(t)(x) = T_x / ta(p, x); its integral curves are the geodesics.
inline Tangent tn_at(const Tangent& t, const ProjPoint& x, double tol = 1e-9) {
    const Scalar ta = tance(t.base(), x, tol);
    if (!is_unit(ta, tol)) throw zero_tance("Tn is undefined on the zero-tance locus");
    const Tangent spread = spread_at(SpreadField(t), x, tol);
    return Tangent(x, inverse_unchecked(ta) * spread.vec(), tol);
}

enum class GeodesicFamily { Circular, Hyperbolic, Null };

inline std::string family_name(GeodesicFamily f) {
    switch (f) {
        case GeodesicFamily::Circular: return "Circular";
        case GeodesicFamily::Hyperbolic: return "Hyperbolic";
        case GeodesicFamily::Null: return "Null";
    }
    return "?";
}

// A geodesic in normal form: |<p,p>| = 1 and <tp,tp> in {-1, 0, +1}.
struct Geodesic {
    ProjPoint base;
    Tangent dir;
    GeodesicFamily family;
    double base_norm;  // <p,p> after normalization
    double dir_norm;   // <tp,tp> after normalization
};

// Classifies and normalizes. The family is read off the signs of <p,p> and
// <tp,tp>; "null" means <tp,tp> vanishes once the tangent has unit
// coefficient norm.
inline Geodesic make_geodesic(const ProjPoint& p, const Tangent& t, double tol = 1e-9) {
    if (!is_regular(p, tol)) throw singular_point("geodesics need a regular base point");
    if (p.space().alg.tag == Tag::CxC)
        throw bad_argument("geodesic normal forms need an R-valued span form");
    const double h = real_part_sum(form(p.rep(), p.rep()));
    const ModuleVector pn = (1.0 / std::sqrt(std::abs(h))) * p.rep();
    const double cn = t.vec().coeff_norm();
    if (cn <= tol) throw zero_tangent("geodesic through a zero tangent");
    const ModuleVector unit_coeff = (1.0 / cn) * t.vec();
    const double q_unit = real_part_sum(form(unit_coeff, unit_coeff));

    const ProjPoint base(pn, tol);
    const double hn = real_part_sum(form(pn, pn));
    if (std::abs(q_unit) < 1e-10) {
        // Degenerate span: <tp, W> = 0, the straight-line family.
        const Tangent dir(base, unit_coeff, tol);
        return Geodesic{base, dir, GeodesicFamily::Null, hn, 0.0};
    }
    const ModuleVector vn = (1.0 / std::sqrt(std::abs(q_unit))) * unit_coeff;
    const Tangent dir(base, vn, tol);
    const double qn = real_part_sum(form(vn, vn));
    const GeodesicFamily family =
        hn * qn > 0.0 ? GeodesicFamily::Circular : GeodesicFamily::Hyperbolic;
    return Geodesic{base, dir, family, hn, qn};
}

// Representative of the geodesic point at parameter theta.
inline ModuleVector geodesic_rep(const Geodesic& g, double theta) {
    const ModuleVector& p = g.base.rep();
    const ModuleVector& tp = g.dir.vec();
    switch (g.family) {
        case GeodesicFamily::Circular:
            return std::cos(theta) * p + std::sin(theta) * tp;
        case GeodesicFamily::Hyperbolic:
            return std::cosh(theta) * p + std::sinh(theta) * tp;
        case GeodesicFamily::Null: return p + theta * tp;
    }
    return p;
}

inline ProjPoint geodesic_point(const Geodesic& g, double theta, double tol = 1e-9) {
    return ProjPoint(geodesic_rep(g, theta), tol);
}

// Velocity of a lifted curve at its base representative: pi[p] applied to the
// finite difference of the lift (Lemma on curve velocities).
inline Tangent curve_velocity(const ProjPoint& at, const ModuleVector& lift_derivative,
                              double tol = 1e-9) {
    auto [par, perp] = project(at, lift_derivative, tol);
    return Tangent(at, perp, tol);
}

// R(t1,t2)s = -s(t1^* t2 - t2^* t1) + (t1 t2^* - t2 t1^*) s, evaluated on the
// common base representative; returns the tangent with that value.
inline Tangent curvature(const Tangent& t1, const Tangent& t2, const Tangent& s,
                         double tol = 1e-9) {
    if (!t1.same_base_rep(t2) || !t1.same_base_rep(s))
        throw base_mismatch("curvature needs tangents at one representative");
    const ModuleVector& p = t1.base().rep();
    const Scalar hinv = inverse_unchecked(form(p, p));
    const ModuleVector& v1 = t1.vec();
    const ModuleVector& v2 = t2.vec();
    const ModuleVector& vs = s.vec();
    const Scalar c0 = mul(form(v2, v1) - form(v1, v2), hinv);
    const ModuleVector term1 = c0 * vs;
    const ModuleVector term2 = mul(form(vs, v2), hinv) * v1 - mul(form(vs, v1), hinv) * v2;
    return Tangent(t1.base(), term2 - term1, tol);
}

// Sectional curvature through both routes: the curvature-tensor quotient and
// the closed form 1 - 3 b^2 / (a1 a2), sign-adjusted by the convention.
struct SectionalCurvature {
    double tensor;
    double closed_form;
};

inline SectionalCurvature sectional(const Tangent& t1, const Tangent& t2, MetricConvention conv,
                                    double tol = 1e-9) {
    const double a1 = g_metric(t1, t1, conv, tol);
    const double a2 = g_metric(t2, t2, conv, tol);
    const double g12 = g_metric(t1, t2, conv, tol);
    const double gram = a1 * a2 - g12 * g12;
    if (std::abs(gram) < tol) throw degenerate_plane("sectional curvature is not defined");
    if (std::abs(std::abs(a1) - 1.0) > 1e-6 || std::abs(std::abs(a2) - 1.0) > 1e-6 ||
        std::abs(g12) > 1e-6)
        throw bad_argument("sectional curvature expects a g-orthonormal frame");

    const Tangent r = curvature(t1, t2, t2, tol);
    const double tensor = g_metric(r, t1, conv, tol) / gram;

    const Scalar b = herm_metric(t1, t2, conv, tol);
    const Scalar b2 = mul(b, b);
    // b^2 is real for the algebras in play; assert rather than assume.
    double nonreal = 0.0;
    {
        const auto c = b2.coeffs();
        for (std::size_t i = 1; i < c.size(); ++i) nonreal += std::abs(c[i]);
    }
    if (nonreal > 1e-10 * (1.0 + b2.coeff_norm()))
        throw error("b^2 acquired a non-real part; closed-form K does not apply");
    const double closed = conv.sign * (1.0 - 3.0 * b2.coeffs()[0] / (a1 * a2));
    return SectionalCurvature{tensor, closed};
}

}  // namespace algebrae
