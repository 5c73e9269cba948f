#pragma once

// Projective points over an algebra, equality up to units, regular/singular
// classification, tangent vectors as one-vector data in p-perp, projections,
// tance, and the Hermitian / pseudo-Riemannian metrics.

#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebrae/hermitian.hpp"

namespace algebrae {

enum class Regularity { Regular, Singular };

class ProjPoint {
public:
    explicit ProjPoint(ModuleVector rep, double tol = 1e-9) : rep_(std::move(rep)) {
        if (!is_good(rep_, tol)) throw bad_point("representative is not a good point");
    }

    const ModuleVector& rep() const { return rep_; }
    const HermitianSpace& space() const { return rep_.space(); }

private:
    ModuleVector rep_;
};

inline Regularity classify(const ProjPoint& p, double tol = 1e-9) {
    return is_unit(form(p.rep(), p.rep()), tol) ? Regularity::Regular : Regularity::Singular;
}

inline bool is_regular(const ProjPoint& p, double tol = 1e-9) {
    return classify(p, tol) == Regularity::Regular;
}

// True iff some unit alpha carries q's representative onto p's. The witness
// is produced by the good-point solve <q,h> = 1, alpha := <p,h>.
inline bool equal(const ProjPoint& p, const ProjPoint& q, double tol = 1e-9) {
    if (!(p.space() == q.space())) return false;
    const ModuleVector h = pairing_solve(q.rep(), Scalar::one(p.space().alg));
    const Scalar alpha = form(p.rep(), h);
    if (!is_unit(alpha, tol)) return false;
    const ModuleVector diff = alpha * q.rep() - p.rep();
    return diff.coeff_norm() <= tol * (1.0 + p.rep().coeff_norm() + q.rep().coeff_norm());
}

// Splits v into the component along p and the component in p-perp.
inline std::pair<ModuleVector, ModuleVector> project(const ProjPoint& p, const ModuleVector& v,
                                                     double tol = 1e-9) {
    if (!is_regular(p, tol)) throw singular_point("projection requires a regular base point");
    const Scalar hinv = inverse(form(p.rep(), p.rep()), tol);
    const ModuleVector par = mul(form(v, p.rep()), hinv) * p.rep();
    return {par, v - par};
}

// A tangent vector at a regular point, pinned to one representative p:
// the linear map alpha p -> alpha vec with vec in p-perp.
class Tangent {
public:
    Tangent(ProjPoint base, ModuleVector vec, double tol = 1e-9)
        : base_(std::move(base)), vec_(std::move(vec)) {
        if (!is_regular(base_, tol)) throw singular_point("tangents require a regular base");
        const double scale = 1.0 + base_.rep().coeff_norm() * vec_.coeff_norm();
        if (form(vec_, base_.rep()).coeff_norm() > 1e-7 * scale)
            throw bad_argument("tangent vector is not orthogonal to the base representative");
    }

    const ProjPoint& base() const { return base_; }
    const ModuleVector& vec() const { return vec_; }

    // The underlying linear map applied to an arbitrary module vector.
    ModuleVector apply(const ModuleVector& v) const {
        const Scalar hinv = inverse(form(base_.rep(), base_.rep()));
        return mul(form(v, base_.rep()), hinv) * vec_;
    }

    bool same_base_rep(const Tangent& o) const {
        return (base_.rep() - o.base_.rep()).coeff_norm() == 0.0;
    }

private:
    ProjPoint base_;
    ModuleVector vec_;
};

// Tangent at p determined by an ambient vector w (its p-perp part).
inline Tangent tangent(const ProjPoint& p, const ModuleVector& w, double tol = 1e-9) {
    auto [par, perp] = project(p, w, tol);
    return Tangent(p, perp, tol);
}

inline Tangent zero_tangent_at(const ProjPoint& p) {
    return Tangent(p, ModuleVector::zero(p.space()));
}

// Rescales the pinned representative: t(alpha p) = alpha t(p).
inline Tangent rescale_representative(const Tangent& t, const Scalar& alpha, double tol = 1e-9) {
    if (!is_unit(alpha, tol)) throw not_a_unit("representative rescaling needs a unit");
    return Tangent(ProjPoint(alpha * t.base().rep(), tol), alpha * t.vec(), tol);
}

// Adjoint t^* v = (<v, tp>/<p,p>) p.
inline ModuleVector adjoint_apply(const Tangent& t, const ModuleVector& v) {
    const ModuleVector& p = t.base().rep();
    const Scalar hinv = inverse(form(p, p));
    return mul(form(v, t.vec()), hinv) * p;
}

struct MetricConvention {
    double sign = 1.0;
    static MetricConvention plus() { return {+1.0}; }
    static MetricConvention minus() { return {-1.0}; }
};

namespace detail {
inline void require_same_base(const Tangent& a, const Tangent& b, double tol) {
    if (a.same_base_rep(b)) return;
    if (!equal(a.base(), b.base(), tol))
        throw base_mismatch("tangents live at distinct projective points");
    throw base_mismatch("tangents are pinned to different representatives; rescale first");
}
}  // namespace detail

// Hermitian metric <t1,t2> = sign * <t1(p), t2(p)> / <p,p>.
inline Scalar herm_metric(const Tangent& t1, const Tangent& t2,
                          MetricConvention conv = MetricConvention::plus(), double tol = 1e-9) {
    detail::require_same_base(t1, t2, tol);
    const ModuleVector& p = t1.base().rep();
    const Scalar hinv = inverse(form(p, p), tol);
    return conv.sign * mul(form(t1.vec(), t2.vec()), hinv);
}

// Pseudo-Riemannian metric: real part of the Hermitian metric (CxC sums the
// two components).
inline double g_metric(const Tangent& t1, const Tangent& t2,
                       MetricConvention conv = MetricConvention::plus(), double tol = 1e-9) {
    return real_part_sum(herm_metric(t1, t2, conv, tol));
}

// ta(p,q) = <p,q><q,p> / (<p,p><q,q>).
inline Scalar tance(const ProjPoint& p, const ProjPoint& q, double tol = 1e-9) {
    const Scalar hp = form(p.rep(), p.rep());
    const Scalar hq = form(q.rep(), q.rep());
    if (!is_unit(hp, tol) || !is_unit(hq, tol))
        throw singular_point("tance requires regular points");
    const Scalar num = mul(form(p.rep(), q.rep()), form(q.rep(), p.rep()));
    return mul(num, inverse_unchecked(mul(hp, hq)));
}

// Real tangent frame at p: algebra-basis multiples of a perp basis.
inline std::vector<Tangent> tangent_frame(const ProjPoint& p, double tol = 1e-9) {
    std::vector<Tangent> frame;
    for (const ModuleVector& b : perp_basis(p.rep(), tol))
        for (const Scalar& z : detail::algebra_basis(p.space().alg))
            frame.emplace_back(p, z * b, tol);
    return frame;
}

inline ModuleVector random_module_vector(const HermitianSpace& sp, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<Scalar> e;
    for (std::size_t i = 0; i < sp.n; ++i) {
        std::vector<double> c(sp.alg.dim());
        for (double& x : c) x = dist(rng);
        e.emplace_back(sp.alg, std::span<const double>(c.data(), c.size()));
    }
    return ModuleVector(sp, std::move(e));
}

inline ProjPoint random_regular_point(const HermitianSpace& sp, std::mt19937_64& rng,
                                      double tol = 1e-9) {
    for (int attempt = 0; attempt < 4096; ++attempt) {
        const ModuleVector v = random_module_vector(sp, rng);
        if (!is_good(v, tol)) continue;
        ProjPoint p(v, tol);
        if (is_regular(p, tol)) return p;
    }
    throw error("failed to sample a regular point");
}

// Eigenvalue sign pattern of the tangent-space Gram matrix, sampled at
// random regular points; must be constant across the samples.
inline std::string signature_of_metric(const HermitianSpace& sp, MetricConvention conv,
                                       int samples, unsigned seed = 1, double tol = 1e-9) {
    std::mt19937_64 rng(seed);
    std::string pattern;
    for (int s = 0; s < samples; ++s) {
        const ProjPoint p = random_regular_point(sp, rng, tol);
        const Scalar hinv = inverse(form(p.rep(), p.rep()), tol);
        std::vector<ModuleVector> frame;
        for (const ModuleVector& b : perp_basis(p.rep(), tol))
            for (const Scalar& z : detail::algebra_basis(sp.alg)) frame.push_back(z * b);
        detail::Mat g(frame.size(), frame.size());
        for (std::size_t i = 0; i < frame.size(); ++i)
            for (std::size_t j = 0; j < frame.size(); ++j)
                g(i, j) = conv.sign * real_part_sum(mul(form(frame[i], frame[j]), hinv));
        for (std::size_t i = 0; i < frame.size(); ++i)
            for (std::size_t j = i + 1; j < frame.size(); ++j) {
                const double v = 0.5 * (g(i, j) + g(j, i));
                g(i, j) = g(j, i) = v;
            }
        const auto ev = detail::symmetric_eigenvalues(g);
        double top = 1.0;
        for (double l : ev) top = std::max(top, std::abs(l));
        std::string pat;
        for (double l : ev)
            pat += (l > tol * top) ? '+' : (l < -tol * top ? '-' : '0');
        if (pattern.empty())
            pattern = pat;
        else if (pattern != pat)
            throw error("metric signature is not constant across sample points");
    }
    return pattern;
}

}  // namespace algebrae
