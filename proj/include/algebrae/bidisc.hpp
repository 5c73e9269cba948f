#pragma once

// The projective bidisc: the C x C projective line with the signature -+
// form. The regular region splits into four balls by the sign pair of
// <u,u> in R x R; the (-,-) ball carries the product-of-Poincare-discs
// metric through the factorwise splitting Lambda.

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "algebrae/projective.hpp"

namespace algebrae {

enum class Ball { PP, PM, MP, MM, Singular };

inline std::string ball_name(Ball b) {
    switch (b) {
        case Ball::PP: return "B++";
        case Ball::PM: return "B+-";
        case Ball::MP: return "B-+";
        case Ball::MM: return "B--";
        case Ball::Singular: return "Singular";
    }
    return "?";
}

inline HermitianSpace bidisc_space() { return HermitianSpace(AlgebraId(Tag::CxC), {-1, 1}); }

// C x C scalar from its two complex components.
inline Scalar cxc_scalar(std::complex<double> a, std::complex<double> b) {
    return Scalar(AlgebraId(Tag::CxC), {a.real(), a.imag(), b.real(), b.imag()});
}

inline std::pair<std::complex<double>, std::complex<double>> cxc_parts(const Scalar& s) {
    return {{s.raw()[0], s.raw()[1]}, {s.raw()[2], s.raw()[3]}};
}

// Ball tag by the sign pair of <u,u>; Singular when <u,u> is not a unit.
inline Ball classify_ball(const ModuleVector& u, double tol = 1e-9) {
    if (!is_good(u, tol)) throw bad_point("not a good point");
    const Scalar h = form(u, u);
    if (!is_unit(h, tol)) return Ball::Singular;
    const bool first = h.raw()[0] > 0.0;
    const bool second = h.raw()[2] > 0.0;
    if (first && second) return Ball::PP;
    if (first) return Ball::PM;
    if (second) return Ball::MP;
    return Ball::MM;
}

struct BidiscPoint {
    ModuleVector rep;
    Ball ball;

    explicit BidiscPoint(ModuleVector u, double tol = 1e-9)
        : rep(std::move(u)), ball(classify_ball(rep, tol)) {}

    ProjPoint point(double tol = 1e-9) const { return ProjPoint(rep, tol); }
};

inline HermitianSpace lambda_factor_space() { return HermitianSpace(AlgebraId(Tag::C), {-1, 1}); }

// Lambda: [(a1,b1):(a2,b2)] -> ([a1:a2], [b1:b2]).
inline std::pair<ProjPoint, ProjPoint> lambda_split(const BidiscPoint& u, double tol = 1e-9) {
    const auto [a1, b1] = cxc_parts(u.rep[0]);
    const auto [a2, b2] = cxc_parts(u.rep[1]);
    const AlgebraId c(Tag::C);
    const HermitianSpace sp = lambda_factor_space();
    if ((std::abs(a1) < tol && std::abs(a2) < tol) || (std::abs(b1) < tol && std::abs(b2) < tol))
        throw bad_point("a component vector of the splitting vanishes");
    const ModuleVector first(sp, {Scalar(c, {a1.real(), a1.imag()}),
                                  Scalar(c, {a2.real(), a2.imag()})});
    const ModuleVector second(sp, {Scalar(c, {b1.real(), b1.imag()}),
                                   Scalar(c, {b2.real(), b2.imag()})});
    return {ProjPoint(first, tol), ProjPoint(second, tol)};
}

// Factorwise pushforward of a tangent along Lambda.
inline std::pair<Tangent, Tangent> lambda_split_tangent(const BidiscPoint& u, const Tangent& t,
                                                        double tol = 1e-9) {
    const auto [p1, p2] = lambda_split(u, tol);
    const auto [v1a, v1b] = cxc_parts(t.vec()[0]);
    const auto [v2a, v2b] = cxc_parts(t.vec()[1]);
    const AlgebraId c(Tag::C);
    const HermitianSpace sp = lambda_factor_space();
    const ModuleVector wa(sp, {Scalar(c, {v1a.real(), v1a.imag()}),
                               Scalar(c, {v2a.real(), v2a.imag()})});
    const ModuleVector wb(sp, {Scalar(c, {v1b.real(), v1b.imag()}),
                               Scalar(c, {v2b.real(), v2b.imag()})});
    return {Tangent(p1, wa, tol), Tangent(p2, wb, tol)};
}

// Riemannian metric on B--: real part of the minus-convention C x C
// Hermitian metric, with the two R x R coordinates summed.
inline double bidisc_metric(const BidiscPoint& base, const Tangent& t1, const Tangent& t2,
                            double tol = 1e-9) {
    if (base.ball != Ball::MM) throw bad_argument("the bidisc metric lives on B--");
    return g_metric(t1, t2, MetricConvention::minus(), tol);
}

// The same number computed through the two hyperbolic factors.
inline double bidisc_metric_via_factors(const BidiscPoint& base, const Tangent& t1,
                                        const Tangent& t2, double tol = 1e-9) {
    if (base.ball != Ball::MM) throw bad_argument("the bidisc metric lives on B--");
    const auto [s1a, s1b] = lambda_split_tangent(base, t1, tol);
    const auto [s2a, s2b] = lambda_split_tangent(base, t2, tol);
    return g_metric(s1a, s2a, MetricConvention::minus(), tol) +
           g_metric(s1b, s2b, MetricConvention::minus(), tol);
}

// A 2x2 matrix over C x C acting on the bidisc module.
struct CxCMatrix2 {
    std::array<Scalar, 4> m;  // row major

    static CxCMatrix2 identity() {
        const AlgebraId f(Tag::CxC);
        return {{Scalar::one(f), Scalar::zero(f), Scalar::zero(f), Scalar::one(f)}};
    }

    const Scalar& operator()(int i, int j) const { return m[2 * i + j]; }
};

inline ModuleVector apply(const CxCMatrix2& m, const ModuleVector& u) {
    return ModuleVector(u.space(), {mul(m(0, 0), u[0]) + mul(m(0, 1), u[1]),
                                    mul(m(1, 0), u[0]) + mul(m(1, 1), u[1])});
}

// Assembles a C x C matrix from its two complex component matrices.
inline CxCMatrix2 assemble(const std::array<std::complex<double>, 4>& a,
                           const std::array<std::complex<double>, 4>& b) {
    CxCMatrix2 out;
    for (int i = 0; i < 4; ++i) out.m[i] = cxc_scalar(a[i], b[i]);
    return out;
}

// T is unitary iff both complex component matrices satisfy M^* J M = J with
// J = diag(-1, 1).
inline bool unitary_check(const CxCMatrix2& m, double tol = 1e-9) {
    for (int comp = 0; comp < 2; ++comp) {
        std::array<std::complex<double>, 4> c;
        for (int i = 0; i < 4; ++i) {
            const auto [a, b] = cxc_parts(m.m[i]);
            c[i] = comp == 0 ? a : b;
        }
        // M^* J M with J = diag(-1, 1).
        const std::complex<double> j00 =
            -std::conj(c[0]) * c[0] + std::conj(c[2]) * c[2];
        const std::complex<double> j01 = -std::conj(c[0]) * c[1] + std::conj(c[2]) * c[3];
        const std::complex<double> j10 = -std::conj(c[1]) * c[0] + std::conj(c[3]) * c[2];
        const std::complex<double> j11 = -std::conj(c[1]) * c[1] + std::conj(c[3]) * c[3];
        if (std::abs(j00 + 1.0) > tol || std::abs(j11 - 1.0) > tol || std::abs(j01) > tol ||
            std::abs(j10) > tol)
            return false;
    }
    return true;
}

// The coordinate swap tau: [(a1,b1):(a2,b2)] -> [(b1,a1):(b2,a2)].
inline BidiscPoint tau(const BidiscPoint& u, double tol = 1e-9) {
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < u.rep.size(); ++i) {
        const auto [a, b] = cxc_parts(u.rep[i]);
        entries.push_back(cxc_scalar(b, a));
    }
    return BidiscPoint(ModuleVector(u.rep.space(), std::move(entries)), tol);
}

// The two real components of the C x C valued tance.
inline std::pair<double, double> tance_pair(const BidiscPoint& u, const BidiscPoint& v,
                                            double tol = 1e-9) {
    const Scalar ta = tance(u.point(tol), v.point(tol), tol);
    if (std::abs(ta.raw()[1]) + std::abs(ta.raw()[3]) > 1e-9 * (1.0 + ta.coeff_norm()))
        throw error("tance acquired a non-real part");
    return {ta.raw()[0], ta.raw()[2]};
}

}  // namespace algebrae
