#pragma once

// The three oriented-geodesic-space correspondences: points of the complex
// projective line as oriented great circles of the sphere, points of the
// dual-number projective line as oriented Euclidean lines, regular points of
// the split-complex projective line as oriented hyperbolic geodesics (with
// the double cover onto the de Sitter plane), plus the transition embeddings
// into the split-quaternionic projective line.

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "algebrae/connection.hpp"

namespace algebrae {

// ---------------------------------------------------------------------------
// Sphere: P^1_C with the standard ++ form.

struct OrientedGreatCircle {
    std::array<double, 3> pole;  // unit vector; the circle is its equator,
                                 // counterclockwise as seen from the pole
};

inline std::complex<double> entry_as_complex(const Scalar& s) {
    if (s.algebra().tag != Tag::C) throw algebra_mismatch("expected a complex scalar");
    return {s.raw()[0], s.raw()[1]};
}

// n([z0:z1]) = (2 Re z0 conj(z1), 2 Im z0 conj(z1), |z0|^2 - |z1|^2) / (|z0|^2 + |z1|^2).
inline std::array<double, 3> hopf(const ProjPoint& p) {
    if (p.space().alg.tag != Tag::C || p.space().n != 2)
        throw bad_argument("hopf expects a point of the complex projective line");
    const std::complex<double> z0 = entry_as_complex(p.rep()[0]);
    const std::complex<double> z1 = entry_as_complex(p.rep()[1]);
    const double denom = std::norm(z0) + std::norm(z1);
    const std::complex<double> w = z0 * std::conj(z1);
    return {2.0 * w.real() / denom, 2.0 * w.imag() / denom,
            (std::norm(z0) - std::norm(z1)) / denom};
}

// Inverse of hopf: [1+z : x-iy], or [0:1] at the south pole.
inline ProjPoint point_from_pole(const std::array<double, 3>& n, double tol = 1e-9) {
    const HermitianSpace c2 = HermitianSpace::standard(AlgebraId(Tag::C), 2);
    const AlgebraId alg(Tag::C);
    if (std::abs(1.0 + n[2]) < tol)
        return ProjPoint(ModuleVector(c2, {Scalar::zero(alg), Scalar::one(alg)}));
    return ProjPoint(
        ModuleVector(c2, {Scalar(alg, {1.0 + n[2], 0.0}), Scalar(alg, {n[0], -n[1]})}));
}

inline OrientedGreatCircle circle_of(const ProjPoint& p) { return {hopf(p)}; }

// Angle between the poles, in (0, pi); parallel or antiparallel poles have
// no well-defined angle.
inline double circle_angle(const OrientedGreatCircle& a, const OrientedGreatCircle& b,
                           double tol = 1e-9) {
    double dot = 0.0;
    for (int i = 0; i < 3; ++i) dot += a.pole[i] * b.pole[i];
    if (dot >= 1.0 - tol) throw bad_argument("coincident oriented circles");
    if (dot <= -1.0 + tol)
        throw bad_argument("orientation-reversed pair of one circle");
    return std::acos(dot);
}

// ---------------------------------------------------------------------------
// Euclidean plane: P^1_D over V = C + eps C, carried as D^2 in the basis
// {1, i}: a + eps b  ->  (Re a + eps Re b, Im a + eps Im b).

struct OrientedLineE2 {
    std::complex<double> e;  // unit direction
    double s = 0.0;          // offset: the line is c(t) = s*i*e + e*t
};

inline ModuleVector pd1_vector(std::complex<double> a, std::complex<double> b) {
    const HermitianSpace d2 = HermitianSpace::standard(AlgebraId(Tag::D), 2);
    const AlgebraId alg(Tag::D);
    return ModuleVector(
        d2, {Scalar(alg, {a.real(), b.real()}), Scalar(alg, {a.imag(), b.imag()})});
}

inline std::pair<std::complex<double>, std::complex<double>> pd1_parts(const ModuleVector& u) {
    return {{u[0].raw()[0], u[1].raw()[0]}, {u[0].raw()[1], u[1].raw()[1]}};
}

// [e + k eps i e] -> (e^2, 2k): normalizes the representative and reads off
// the line. Good points of P^1_D always have a nonzero complex part.
inline OrientedLineE2 line_from_pd1(const ProjPoint& u, double tol = 1e-9) {
    if (u.space().alg.tag != Tag::D || u.space().n != 2)
        throw bad_argument("expected a point of the dual-number projective line");
    const auto [a, b] = pd1_parts(u.rep());
    if (std::abs(a) < tol) throw bad_point("representative has no invertible part");
    const std::complex<double> ratio = b / a;
    const double k = ratio.imag();
    const std::complex<double> e2 = (a / std::abs(a)) * (a / std::abs(a));
    return {e2, 2.0 * k};
}

inline ProjPoint pd1_from_line(const OrientedLineE2& line) {
    const std::complex<double> e = std::sqrt(line.e);
    const double k = line.s / 2.0;
    return ProjPoint(pd1_vector(e, k * std::complex<double>(0, 1) * e));
}

// Incidence with the point a + ib: the pencil through it is the plane
// s = b Re e - a Im e cut out of the cylinder.
inline bool passes_through(const OrientedLineE2& line, double a, double b, double tol = 1e-9) {
    return std::abs(line.s - (b * line.e.real() - a * line.e.imag())) <= tol;
}

// The pencil of lines through a + ib at angle theta.
inline OrientedLineE2 pencil_line(double a, double b, double theta) {
    return {std::polar(1.0, theta), -a * std::sin(theta) + b * std::cos(theta)};
}

// ---------------------------------------------------------------------------
// Hyperbolic plane: P^1_Cs, boundary points, and the double cover onto dS^2.

// Cross product for the Minkowski -++ metric: e1 x e2 = e3, e2 x e3 = -e1,
// e3 x e1 = e2.
inline std::array<double, 3> mink_cross(const std::array<double, 3>& u,
                                        const std::array<double, 3>& v) {
    return {-(u[1] * v[2] - u[2] * v[1]), u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline HermitianSpace minkowski_r3() { return HermitianSpace(AlgebraId(Tag::R), {-1, 1, 1}); }

inline ModuleVector r3_vector(const std::array<double, 3>& x) {
    const AlgebraId alg(Tag::R);
    return ModuleVector(minkowski_r3(), {Scalar(alg, {x[0]}), Scalar(alg, {x[1]}),
                                         Scalar(alg, {x[2]})});
}

inline std::array<double, 3> r3_coords(const ModuleVector& v) {
    return {v[0].raw()[0], v[1].raw()[0], v[2].raw()[0]};
}

struct OrientedGeodesicH2 {
    ProjPoint A;         // forward ideal endpoint
    ProjPoint B;         // backward ideal endpoint; the geodesic runs B -> A
    ProjPoint ds_point;  // [A x B] in the de Sitter plane
};

// Split coordinates (a, a', b, b') of a Cs^2 vector.
inline std::array<double, 4> pcs1_split_coords(const ModuleVector& u) {
    const auto [a, ap] = cs_split(u[0]);
    const auto [b, bp] = cs_split(u[1]);
    return {a, ap, b, bp};
}

inline ModuleVector pcs1_from_split(double a, double ap, double b, double bp) {
    const HermitianSpace cs2 = HermitianSpace::standard(AlgebraId(Tag::Cs), 2);
    return ModuleVector(cs2, {cs_join(a, ap), cs_join(b, bp)});
}

// A(a,b) = [a^2+b^2 : a^2-b^2 : 2ab] and B(a',b') = [a'^2+b'^2 : -a'^2+b'^2 : -2a'b'].
inline std::array<double, 3> ideal_point_a(double a, double b) {
    return {a * a + b * b, a * a - b * b, 2.0 * a * b};
}

inline std::array<double, 3> ideal_point_b(double ap, double bp) {
    return {ap * ap + bp * bp, -ap * ap + bp * bp, -2.0 * ap * bp};
}

inline OrientedGeodesicH2 h2_from_pcs1(const ProjPoint& u, double tol = 1e-9) {
    if (u.space().alg.tag != Tag::Cs || u.space().n != 2)
        throw bad_argument("expected a point of the split-complex projective line");
    if (!is_regular(u, tol)) throw singular_point("oriented geodesics come from regular points");
    const auto [a, ap, b, bp] = pcs1_split_coords(u.rep());
    const auto A = ideal_point_a(a, b);
    const auto B = ideal_point_b(ap, bp);
    return {ProjPoint(r3_vector(A), tol), ProjPoint(r3_vector(B), tol),
            ProjPoint(r3_vector(mink_cross(A, B)), tol)};
}

// f([(a,a'):(b,b')]) = [ab'-a'b : ab'+a'b : -aa'+bb'], the double cover onto
// the de Sitter plane.
inline ProjPoint double_cover_f(const ProjPoint& u, double tol = 1e-9) {
    if (!is_regular(u, tol)) throw singular_point("the double cover is defined on R(V)");
    const auto [a, ap, b, bp] = pcs1_split_coords(u.rep());
    return ProjPoint(
        r3_vector({a * bp - ap * b, a * bp + ap * b, -a * ap + b * bp}), tol);
}

// Deck transformation: orientation reversal [(a,a'):(b,b')] -> [(b',b):(-a',-a)].
// Swaps the boundary points A and B.
inline ProjPoint rev(const ProjPoint& u, double tol = 1e-9) {
    if (!is_regular(u, tol)) throw singular_point("rev is defined on R(V)");
    const auto [a, ap, b, bp] = pcs1_split_coords(u.rep());
    return ProjPoint(pcs1_from_split(bp, b, -ap, -a), tol);
}

// Inverse of h2_from_pcs1 up to unit rescaling: recovers (a,b) from A and
// (a',b') from B, normalized so that A0, B0 > 0.
inline ProjPoint pcs1_from_endpoints(const std::array<double, 3>& A_in,
                                     const std::array<double, 3>& B_in, double tol = 1e-9) {
    auto halves = [&](const std::array<double, 3>& X, bool flip) {
        // [x^2+y^2 : x^2-y^2 : 2xy] -> (x, y) with x >= 0; `flip` negates
        // both the middle coordinate and the product term, which is the B
        // pattern with (x, y) = (b', a').
        std::array<double, 3> Y = X;
        if (Y[0] < 0.0)
            for (double& v : Y) v = -v;
        if (flip) {
            Y[1] = -Y[1];
            Y[2] = -Y[2];
        }
        const double x2 = (Y[0] + Y[1]) / 2.0;
        const double y2 = (Y[0] - Y[1]) / 2.0;
        if (x2 < -tol || y2 < -tol) throw bad_argument("endpoint is not a null direction");
        const double x = std::sqrt(std::max(x2, 0.0));
        const double y = x > tol ? Y[2] / (2.0 * x) : std::sqrt(std::max(y2, 0.0));
        return std::pair{x, y};
    };
    const auto [a, b] = halves(A_in, false);
    const auto [ap, bp] = halves(B_in, true);
    return ProjPoint(pcs1_from_split(a, ap, b, bp), tol);
}

// ---------------------------------------------------------------------------
// Pushforward metric checks for the two explicit maps.

struct MetricPair {
    double pulled;  // target metric on the pushed-forward tangents
    double source;  // source metric on the originals
};

// H^2 cover: source metric on P^1_Cs with the plus convention, target the
// de Sitter metric (minus convention on the -++ form). The lifted curve
// through the quadratic map is differentiated exactly by polarization.
inline MetricPair h2_cover_metric_pair(const ProjPoint& u, const Tangent& t1, const Tangent& t2,
                                       double tol = 1e-9) {
    auto f_coords = [](const ModuleVector& v) {
        const auto [a, ap] = cs_split(v[0]);
        const auto [b, bp] = cs_split(v[1]);
        return std::array<double, 3>{a * bp - ap * b, a * bp + ap * b, -a * ap + b * bp};
    };
    const ModuleVector& up = u.rep();
    const ProjPoint q(r3_vector(f_coords(up)), tol);
    auto push = [&](const Tangent& t) {
        const ModuleVector plus = up + t.vec();
        const ModuleVector minus = up - t.vec();
        const auto fp = f_coords(plus);
        const auto fm = f_coords(minus);
        std::array<double, 3> w;
        for (int i = 0; i < 3; ++i) w[i] = (fp[i] - fm[i]) / 2.0;
        return curve_velocity(q, r3_vector(w), tol);
    };
    const Tangent s1 = push(t1);
    const Tangent s2 = push(t2);
    return {g_metric(s1, s2, MetricConvention::minus(), tol),
            g_metric(t1, t2, MetricConvention::plus(), tol)};
}

// Euclidean map: source metric on P^1_D with the plus convention, target the
// cylinder metric g((u1,s1),(u2,s2)) = Re u1 conj(u2).
inline MetricPair e2_map_metric_pair(const ProjPoint& u, const Tangent& t1, const Tangent& t2,
                                     double tol = 1e-9) {
    const auto [a, b] = pd1_parts(u.rep());
    if (std::abs(a) < tol) throw bad_point("representative has no invertible part");
    auto push = [&](const Tangent& t) {
        const auto [wa, wb] = pd1_parts(t.vec());
        // d(a/conj a) and d(2 Im(b/a)) along the lift.
        const std::complex<double> ca = std::conj(a);
        const std::complex<double> de = (wa * ca - a * std::conj(wa)) / (ca * ca);
        const double ds = 2.0 * ((wb * a - b * wa) / (a * a)).imag();
        return std::pair{de, ds};
    };
    const auto [de1, ds1] = push(t1);
    const auto [de2, ds2] = push(t2);
    (void)ds1;
    (void)ds2;
    return {(de1 * std::conj(de2)).real(), g_metric(t1, t2, MetricConvention::plus(), tol)};
}

// ---------------------------------------------------------------------------
// Transition embeddings P^n_{K_t} -> P^n_{Hs}.

inline ModuleVector transition_embed_vector(double t, const ModuleVector& u) {
    if (u.space().alg.tag != Tag::Kt || u.space().alg.t != t)
        throw bad_argument("vector does not live over Kt(t)");
    const HermitianSpace target(AlgebraId(Tag::Hs), u.space().signature);
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < u.size(); ++i) entries.push_back(kt_embed(t, u[i]));
    return ModuleVector(target, std::move(entries));
}

inline ProjPoint transition_embed(double t, const ProjPoint& u, double tol = 1e-9) {
    return ProjPoint(transition_embed_vector(t, u.rep()), tol);
}

}  // namespace algebrae
