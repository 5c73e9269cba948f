// Acceptance suite: every headline identity of the library checked end to
// end at its stated tolerance, one pass/fail line per criterion. The last
// criterion drives the CLI binary, whose path comes in as argv[1].
//
//   ./acceptance /path/to/algebrae_cli

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algebrae/algebrae.hpp"

using namespace algebrae;

namespace {

struct Checker {
    int failures = 0;

    void criterion(int number, const std::string& label, bool ok, const std::string& detail = "") {
        std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
};

std::vector<AlgebraId> acceptance_algebras() {
    std::vector<AlgebraId> out = {AlgebraId(Tag::R),  AlgebraId(Tag::C),  AlgebraId(Tag::D),
                                  AlgebraId(Tag::Cs), AlgebraId(Tag::H),  AlgebraId(Tag::Hs),
                                  AlgebraId(Tag::CxC)};
    for (double t : {0.0, 0.2, 0.4, 0.5, 0.6, 0.8, 1.0}) out.push_back(AlgebraId::kt(t));
    return out;
}

Scalar random_scalar(const AlgebraId& alg, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> c(alg.dim());
    for (double& x : c) x = dist(rng);
    return Scalar(alg, std::span<const double>(c.data(), c.size()));
}

ProjPoint comfortable_point(const HermitianSpace& sp, std::mt19937_64& rng, double floor = 0.3) {
    for (;;) {
        const ProjPoint p = random_regular_point(sp, rng);
        if (std::abs(real_part_sum(form(p.rep(), p.rep()))) > floor) return p;
    }
}

Tangent unit_tangent(const ProjPoint& p, std::mt19937_64& rng) {
    for (;;) {
        const Tangent t = tangent(p, random_module_vector(p.space(), rng));
        const double n = t.vec().coeff_norm();
        if (n > 1e-3) return Tangent(p, (1.0 / n) * t.vec());
    }
}

// Real Gram-Schmidt in g; fails on degenerate planes.
std::optional<std::pair<Tangent, Tangent>> g_orthonormal_pair(const ProjPoint& p,
                                                              std::mt19937_64& rng,
                                                              MetricConvention conv) {
    const Tangent u = tangent(p, random_module_vector(p.space(), rng));
    const double a = g_metric(u, u, conv);
    if (std::abs(a) < 1e-6) return std::nullopt;
    const Tangent t1(p, (1.0 / std::sqrt(std::abs(a))) * u.vec());
    const Tangent v = tangent(p, random_module_vector(p.space(), rng));
    const ModuleVector w =
        v.vec() - (g_metric(v, t1, conv) / g_metric(t1, t1, conv)) * t1.vec();
    const double b = g_metric(Tangent(p, w), Tangent(p, w), conv);
    if (std::abs(b) < 1e-6) return std::nullopt;
    return std::pair{t1, Tangent(p, (1.0 / std::sqrt(std::abs(b))) * w)};
}

// --------------------------------------------------------------------------
// 1. Algebra laws.

void criterion_algebra_laws(Checker& out) {
    std::mt19937_64 rng(1001);
    bool ok = true;
    std::string detail;
    for (const auto& alg : acceptance_algebras()) {
        for (int rep = 0; rep < 1000 && ok; ++rep) {
            const Scalar a = random_scalar(alg, rng);
            const Scalar b = random_scalar(alg, rng);
            const Scalar c = random_scalar(alg, rng);
            const double scale = 1.0 + a.coeff_norm() * b.coeff_norm() * c.coeff_norm();
            if ((mul(mul(a, b), c) - mul(a, mul(b, c))).coeff_norm() > 1e-12 * scale) {
                ok = false;
                detail = "associativity failed over " + alg.name();
            }
            if ((conj(mul(a, b)) - mul(conj(b), conj(a))).coeff_norm() != 0.0) {
                ok = false;
                detail = "involution antiautomorphism failed over " + alg.name();
            }
            if (is_unit(a)) {
                if ((mul(a, inverse(a)) - Scalar::one(alg)).coeff_norm() > 1e-9) {
                    ok = false;
                    detail = "inverse failed over " + alg.name();
                }
            } else {
                const Scalar w = zero_divisor_witness(a);
                if (std::abs(w.coeff_norm() - 1.0) > 1e-9 ||
                    mul(a, w).coeff_norm() > 1e-9 * (1.0 + a.coeff_norm())) {
                    ok = false;
                    detail = "zero-divisor witness failed over " + alg.name();
                }
            }
        }
    }
    out.criterion(1, "algebra laws (associativity, involution, dichotomy), 1000/algebra", ok,
                  detail);
}

// --------------------------------------------------------------------------
// 2. Signature table of the projective lines.

void criterion_signature_table(Checker& out) {
    const std::vector<std::pair<Tag, std::string>> table = {
        {Tag::R, "+"},  {Tag::D, "+0"},   {Tag::C, "++"},
        {Tag::Cs, "+-"}, {Tag::H, "++++"}, {Tag::Hs, "++--"},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [tag, want] : table) {
        const std::string got = signature_of_metric(
            HermitianSpace::standard(AlgebraId(tag), 2), MetricConvention::plus(), 100, 2001,
            1e-9);
        if (got != want) {
            ok = false;
            detail = tag_name(tag) + ": got " + got + ", want " + want;
            break;
        }
    }
    out.criterion(2, "projective-line signature table, 100 samples each", ok, detail);
}

// --------------------------------------------------------------------------
// 3. Curvature constants.

void criterion_curvature(Checker& out) {
    std::mt19937_64 rng(3001);
    bool ok = true;
    std::string detail;

    // Split projective lines: K = 4 on 100 random frames each.
    for (Tag tag : {Tag::Cs, Tag::Hs}) {
        const HermitianSpace sp = HermitianSpace::standard(AlgebraId(tag), 2);
        int found = 0;
        while (found < 100 && ok) {
            const ProjPoint p = comfortable_point(sp, rng);
            const auto pair = g_orthonormal_pair(p, rng, MetricConvention::plus());
            if (!pair) continue;
            ++found;
            const auto K = sectional(pair->first, pair->second, MetricConvention::plus());
            if (std::abs(K.tensor - 4.0) > 1e-9 || std::abs(K.closed_form - 4.0) > 1e-9) {
                ok = false;
                detail = "split line K != 4 over " + tag_name(tag);
            }
        }
    }

    // The three theta-families over both split algebras, 21-point grids.
    for (Tag tag : {Tag::Cs, Tag::Hs}) {
        const AlgebraId alg(tag);
        const HermitianSpace sp = HermitianSpace::standard(alg, 3);
        const ProjPoint p(ModuleVector::basis(sp, 0));
        const ModuleVector e1 = ModuleVector::basis(sp, 1);
        const ModuleVector e2 = ModuleVector::basis(sp, 2);
        const Scalar j = tag == Tag::Cs ? Scalar(alg, {0, 1}) : Scalar(alg, {0, 0, 1, 0});
        const Tangent t1(p, e1);
        for (int n = 0; n <= 20 && ok; ++n) {
            const double th = -1.0 + 2.0 * n / 20.0;
            const double K1 =
                sectional(t1, Tangent(p, std::sinh(th) * (j * e1) + std::cosh(th) * e2),
                          MetricConvention::plus())
                    .tensor;
            const double K2 =
                sectional(t1, Tangent(p, std::cosh(th) * (j * e1) + std::sinh(th) * e2),
                          MetricConvention::plus())
                    .tensor;
            const double phi = M_PI * n / 20.0;
            const double K3 =
                sectional(t1, Tangent(p, j * (std::cos(phi) * e1 + std::sin(phi) * e2)),
                          MetricConvention::plus())
                    .tensor;
            if (std::abs(K1 - (1.0 - 3.0 * std::sinh(th) * std::sinh(th))) > 1e-9 ||
                std::abs(K2 - (1.0 + 3.0 * std::cosh(th) * std::cosh(th))) > 1e-9 ||
                std::abs(K3 - (1.0 + 3.0 * std::cos(phi) * std::cos(phi))) > 1e-9) {
                ok = false;
                detail = "theta-family mismatch over " + tag_name(tag);
            }
        }
    }

    // Dual projective plane: K = 1 on nondegenerate planes.
    {
        const HermitianSpace d3 = HermitianSpace::standard(AlgebraId(Tag::D), 3);
        int found = 0;
        while (found < 100 && ok) {
            const ProjPoint p = comfortable_point(d3, rng);
            const auto pair = g_orthonormal_pair(p, rng, MetricConvention::plus());
            if (!pair) continue;
            ++found;
            const auto K = sectional(pair->first, pair->second, MetricConvention::plus());
            if (std::abs(K.tensor - 1.0) > 1e-9) {
                ok = false;
                detail = "dual plane K != 1";
            }
        }
    }

    // Complex hyperbolic plane: pinched in [-4, -1], both ends approached.
    {
        const HermitianSpace sp(AlgebraId(Tag::C), {-1, 1, 1});
        double kmin = 0.0, kmax = -10.0;
        int found = 0;
        while (found < 1000 && ok) {
            const ProjPoint p = random_regular_point(sp, rng);
            if (real_part_sum(form(p.rep(), p.rep())) >= -0.2) continue;
            const auto pair = g_orthonormal_pair(p, rng, MetricConvention::minus());
            if (!pair) continue;
            ++found;
            const double K =
                sectional(pair->first, pair->second, MetricConvention::minus()).tensor;
            if (K < -4.0 - 1e-9 || K > -1.0 + 1e-9) {
                ok = false;
                detail = "complex hyperbolic K outside [-4,-1]";
            }
            kmin = std::min(kmin, K);
            kmax = std::max(kmax, K);
        }
        if (ok && (kmin > -4.0 + 0.05 || kmax < -1.0 - 0.05)) {
            ok = false;
            detail = "endpoints not attained: kmin=" + std::to_string(kmin) +
                     " kmax=" + std::to_string(kmax);
        }
    }

    out.criterion(3, "curvature constants (K=4 lines, theta-families, K=1 dual, pinching)", ok,
                  detail);
}

// --------------------------------------------------------------------------
// 4. Connection identities.

void criterion_connection(Checker& out) {
    // Constants pinned at 100x the observed finite-difference constants on
    // the calibration runs (unit tangents, |<p,p>| > 0.3).
    const double C_METRIC = 40.0;
    const double C_TORSION = 800.0;
    std::mt19937_64 rng(4001);
    bool ok = true;
    std::string detail;
    for (const auto& alg : acceptance_algebras()) {
        const HermitianSpace sp(alg, {1, 1, 1});
        for (int rep = 0; rep < 5 && ok; ++rep) {
            const ProjPoint p = comfortable_point(sp, rng);
            const Tangent t1 = unit_tangent(p, rng);
            const Tangent t2 = unit_tangent(p, rng);
            const Tangent s = unit_tangent(p, rng);
            for (double step : {1e-4, 1e-5}) {
                auto value = [&](const ModuleVector& rep_at) {
                    const ProjPoint x(rep_at);
                    return herm_metric(spread_at(SpreadField(t1), x),
                                       spread_at(SpreadField(t2), x));
                };
                const double metric_defect =
                    ((1.0 / (2.0 * step)) *
                     (value(p.rep() + step * s.vec()) - value(p.rep() - step * s.vec())))
                        .coeff_norm();
                if (metric_defect > C_METRIC * step * step) {
                    ok = false;
                    detail = "metric-compatibility defect " + std::to_string(metric_defect) +
                             " at step " + std::to_string(step) + " over " + alg.name();
                }
                auto f1 = [&](const ProjPoint& x) { return spread_at(SpreadField(t1), x); };
                auto f2 = [&](const ProjPoint& x) { return spread_at(SpreadField(t2), x); };
                const double torsion_defect =
                    (nabla_numeric(f2, t1, step).vec() - nabla_numeric(f1, t2, step).vec())
                        .coeff_norm();
                if (torsion_defect > C_TORSION * step * step) {
                    ok = false;
                    detail = "torsion defect " + std::to_string(torsion_defect) + " at step " +
                             std::to_string(step) + " over " + alg.name();
                }
            }
            // Analytic nabla of a spread field vanishes at the base point.
            if (nabla_spread(t1, t2, p).vec().coeff_norm() > 1e-13) {
                ok = false;
                detail = "analytic nabla at base point nonzero over " + alg.name();
            }
            // Derivative of the projection family matches t + t^*.
            const ModuleVector probe = random_module_vector(sp, rng);
            const auto d = proj_derivative(t1, probe, 1e-5);
            if ((d.finite_difference - d.analytic).coeff_norm() >
                1e-8 * (1.0 + probe.coeff_norm())) {
                ok = false;
                detail = "projection-derivative mismatch over " + alg.name();
            }
        }
    }
    out.criterion(4, "connection identities (compatibility, torsion, projection derivative)", ok,
                  detail);
}

// --------------------------------------------------------------------------
// 5. Geodesic ODE across families and algebras.

void criterion_geodesics(Checker& out) {
    struct Setting {
        Tag tag;
        std::vector<double> sig;
        std::vector<std::vector<double>> p;
        std::vector<std::vector<double>> tp;
    };
    const std::vector<Setting> settings = {
        {Tag::R, {1, 1}, {{1}, {0}}, {{0}, {1}}},
        {Tag::C, {1, 1}, {{1, 0}, {0, 0}}, {{0, 0}, {0.6, 0.8}}},
        {Tag::D, {1, 1}, {{1, 0}, {0, 0}}, {{0, 0}, {1, 0.3}}},
        {Tag::Cs, {1, 1}, {{1, 0}, {0, 0}}, {{0, 0}, {1, 0.3}}},
        {Tag::Hs, {1, 1}, {{1, 0, 0, 0}, {0, 0, 0, 0}}, {{0, 0, 0, 0}, {1, 0.2, 0.3, 0.1}}},
        {Tag::R, {-1, 1}, {{1}, {0}}, {{0}, {1}}},
        {Tag::C, {-1, 1}, {{1, 0}, {0, 0}}, {{0, 0}, {0.6, 0.8}}},
        {Tag::D, {-1, 1}, {{1, 0}, {0, 0}}, {{0, 0}, {1, 0.3}}},
        {Tag::Cs, {-1, 1}, {{1, 0}, {0, 0}}, {{0, 0}, {1, 0.3}}},
        {Tag::Hs, {-1, 1}, {{1, 0, 0, 0}, {0, 0, 0, 0}}, {{0, 0, 0, 0}, {1, 0.2, 0.3, 0.1}}},
        {Tag::R, {-1, 1, 1}, {{0}, {0}, {1}}, {{1}, {1}, {0}}},
        {Tag::C, {-1, 1, 1}, {{0, 0}, {0, 0}, {1, 0}}, {{1, 0}, {1, 0}, {0, 0}}},
        {Tag::D, {1, 1}, {{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}},
        {Tag::Cs, {1, 1}, {{1, 0}, {0, 0}}, {{0, 0}, {1, 1}}},
        {Tag::Hs, {1, 1}, {{1, 0, 0, 0}, {0, 0, 0, 0}}, {{0, 0, 0, 0}, {0, 1, 1, 0}}},
    };
    bool ok = true;
    std::string detail;
    int families[3] = {0, 0, 0};
    for (const auto& sset : settings) {
        const HermitianSpace sp(AlgebraId(sset.tag), sset.sig);
        std::vector<Scalar> pe, te;
        for (const auto& c : sset.p) pe.emplace_back(sp.alg, std::span<const double>(c.data(), c.size()));
        for (const auto& c : sset.tp) te.emplace_back(sp.alg, std::span<const double>(c.data(), c.size()));
        const ProjPoint p{ModuleVector(sp, pe)};
        const Geodesic g = make_geodesic(p, tangent(p, ModuleVector(sp, te)));
        families[static_cast<int>(g.family)]++;
        const double h = 1e-4;
        for (double theta : {-0.9, -0.3, 0.2, 0.45, 1.1}) {
            const ProjPoint x(geodesic_rep(g, theta));
            const ModuleVector lift_dot =
                (1.0 / (2.0 * h)) * (geodesic_rep(g, theta + h) - geodesic_rep(g, theta - h));
            const Tangent vel = curve_velocity(x, lift_dot);
            const Tangent tn = tn_at(g.dir, x);
            if ((vel.vec() - tn.vec()).coeff_norm() > 1e-6) {
                ok = false;
                detail = "velocity != Tn over " + tag_name(sset.tag);
            }
        }
    }
    if (families[0] != 5 || families[1] != 5 || families[2] != 5) {
        ok = false;
        detail = "family coverage incomplete";
    }
    out.criterion(5, "geodesic ODE: curve velocity equals Tn in all families and algebras", ok,
                  detail);
}

// --------------------------------------------------------------------------
// 6. Double cover of the de Sitter plane.

void criterion_double_cover(Checker& out) {
    const HermitianSpace cs2 = HermitianSpace::standard(AlgebraId(Tag::Cs), 2);
    std::mt19937_64 rng(6001);
    bool ok = true;
    std::string detail;
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        // Points are held at relative distance >= 0.05 from the singular
        // set; the pushforward conditioning degrades like 1/<u,u>^2.
        ProjPoint u = random_regular_point(cs2, rng);
        while (std::abs(real_part_sum(form(u.rep(), u.rep()))) <
               0.05 * u.rep().coeff_norm() * u.rep().coeff_norm())
            u = random_regular_point(cs2, rng);
        const Tangent t1 = unit_tangent(u, rng);
        const Tangent t2 = unit_tangent(u, rng);
        const auto m = h2_cover_metric_pair(u, t1, t2);
        if (std::abs(m.pulled + 4.0 * m.source) > 1e-8 * (1.0 + std::abs(m.source))) {
            ok = false;
            detail = "metric ratio != -4";
        }
        const auto geo = h2_from_pcs1(u);
        if (!equal(double_cover_f(u), geo.ds_point)) {
            ok = false;
            detail = "f != [A x B]";
        }
        const ProjPoint r = rev(u);
        if (equal(r, u) || !equal(rev(r), u) || !equal(double_cover_f(r), double_cover_f(u))) {
            ok = false;
            detail = "rev is not a fixed-point-free deck transformation";
        }
    }
    out.criterion(6, "de Sitter double cover: ratio -4, f = [AxB], rev deck map", ok, detail);
}

// --------------------------------------------------------------------------
// 7. Euclidean map.

void criterion_euclidean(Checker& out) {
    const HermitianSpace d2 = HermitianSpace::standard(AlgebraId(Tag::D), 2);
    std::mt19937_64 rng(7001);
    bool ok = true;
    std::string detail;
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        const ProjPoint u = random_regular_point(d2, rng);
        const Tangent t1 = tangent(u, random_module_vector(d2, rng));
        const Tangent t2 = tangent(u, random_module_vector(d2, rng));
        const auto m = e2_map_metric_pair(u, t1, t2);
        if (std::abs(m.pulled - 4.0 * m.source) > 1e-8 * (1.0 + std::abs(m.source))) {
            ok = false;
            detail = "metric ratio != +4";
        }
    }
    std::normal_distribution<double> dist(0.0, 2.0);
    for (int rep = 0; rep < 100 && ok; ++rep) {
        const double a = dist(rng), b = dist(rng);
        for (int k = 0; k < 100; ++k) {
            if (!passes_through(pencil_line(a, b, 2.0 * M_PI * k / 100.0), a, b)) {
                ok = false;
                detail = "pencil incidence failed";
            }
        }
    }
    out.criterion(7, "euclidean map: ratio +4 and pencil incidence 100x100", ok, detail);
}

// --------------------------------------------------------------------------
// 8. Sphere duality.

void criterion_sphere(Checker& out) {
    const HermitianSpace c2 = HermitianSpace::standard(AlgebraId(Tag::C), 2);
    std::mt19937_64 rng(8001);
    bool ok = true;
    std::string detail;
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        const ProjPoint p = random_regular_point(c2, rng);
        const ProjPoint q = random_regular_point(c2, rng);
        const auto np = hopf(p), nq = hopf(q);
        const double dot = np[0] * nq[0] + np[1] * nq[1] + np[2] * nq[2];
        if (std::abs(dot - (2.0 * real_part_sum(tance(p, q)) - 1.0)) > 1e-9) {
            ok = false;
            detail = "pole product != 2 ta - 1";
        }
    }
    out.criterion(8, "sphere duality: hopf(p).hopf(q) = 2 ta(p,q) - 1, 1000 pairs", ok, detail);
}

// --------------------------------------------------------------------------
// 9. Transition exactness.

void criterion_transition(Checker& out) {
    std::mt19937_64 rng(9001);
    bool ok = true;
    std::string detail;
    for (int grid = 0; grid <= 20 && ok; ++grid) {
        const double t = grid / 20.0;
        const AlgebraId kt = AlgebraId::kt(t);
        const HermitianSpace sp = HermitianSpace::standard(kt, 2);
        for (int rep = 0; rep < 100; ++rep) {
            const ProjPoint p = comfortable_point(sp, rng, 0.1);
            const ProjPoint q = comfortable_point(sp, rng, 0.1);
            const Scalar ta_kt = tance(p, q);
            const Scalar ta_hs = tance(transition_embed(t, p), transition_embed(t, q));
            if (!(ta_kt.raw() == ta_hs.raw())) {
                ok = false;
                detail = "tance not bit-identical at t=" + std::to_string(t);
                break;
            }
        }
        const double sq = mul(sigma(t), sigma(t)).raw()[0];
        if ((t < 0.5 && sq >= 0.0) || (t > 0.5 && sq <= 0.0) || (t == 0.5 && sq != 0.0)) {
            ok = false;
            detail = "sigma(t)^2 sign pattern broken at t=" + std::to_string(t);
        }
    }
    out.criterion(9, "transition: tance preserved exactly on 21-grid x 100 pairs", ok, detail);
}

// --------------------------------------------------------------------------
// 10. Bidisc.

void criterion_bidisc(Checker& out) {
    std::mt19937_64 rng(10001);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::normal_distribution<double> radius(0.0, 0.7);
    auto random_u11 = [&] {
        const double r = radius(rng);
        const std::complex<double> alpha = std::polar(std::cosh(r), angle(rng));
        const std::complex<double> beta = std::polar(std::sinh(r), angle(rng));
        const std::complex<double> phase = std::polar(1.0, angle(rng));
        return std::array<std::complex<double>, 4>{phase * alpha, phase * beta,
                                                   phase * std::conj(beta),
                                                   phase * std::conj(alpha)};
    };
    bool ok = true;
    std::string detail;
    int metric_checked = 0;
    while (metric_checked < 1000 && ok) {
        const ModuleVector uv = random_module_vector(bidisc_space(), rng);
        if (!is_good(uv)) continue;
        const BidiscPoint u(uv);
        if (u.ball != Ball::MM) continue;
        ++metric_checked;
        const ProjPoint p = u.point();
        const Tangent t1 = tangent(p, random_module_vector(bidisc_space(), rng));
        const Tangent t2 = tangent(p, random_module_vector(bidisc_space(), rng));
        const double direct = bidisc_metric(u, t1, t2);
        if (std::abs(direct - bidisc_metric_via_factors(u, t1, t2)) >
            1e-12 * (1.0 + std::abs(direct))) {
            ok = false;
            detail = "Lambda metric additivity failed";
        }
    }
    for (int rep = 0; rep < 300 && ok; ++rep) {
        const CxCMatrix2 m = assemble(random_u11(), random_u11());
        if (!unitary_check(m)) {
            ok = false;
            detail = "assembled U(1,1) x U(1,1) failed unitary_check";
            break;
        }
        const ModuleVector uv = random_module_vector(bidisc_space(), rng);
        const ModuleVector vv = random_module_vector(bidisc_space(), rng);
        if (!is_good(uv) || !is_good(vv)) continue;
        const BidiscPoint u(uv), v(vv);
        if (u.ball == Ball::Singular || v.ball == Ball::Singular) continue;
        const BidiscPoint mu(apply(m, uv)), mv(apply(m, vv));
        if (mu.ball != u.ball || mv.ball != v.ball) {
            ok = false;
            detail = "unitary action moved a ball tag";
        }
        const auto [a, b] = tance_pair(u, v);
        const auto [a2, b2] = tance_pair(mu, mv);
        if (std::abs(a - a2) > 1e-9 * (1.0 + std::abs(a)) ||
            std::abs(b - b2) > 1e-9 * (1.0 + std::abs(b))) {
            ok = false;
            detail = "unitary action moved a tance pair";
        }
        const auto [sa, sb] = tance_pair(tau(u), tau(v));
        if (std::abs(sa - b) > 1e-10 * (1.0 + std::abs(b)) ||
            std::abs(sb - a) > 1e-10 * (1.0 + std::abs(a))) {
            ok = false;
            detail = "tau did not swap the tance pair";
        }
        const BidiscPoint tt = tau(tau(u));
        if (!(tt.rep.flat_coeffs() == uv.flat_coeffs())) {
            ok = false;
            detail = "tau is not an involution";
        }
    }
    out.criterion(10, "bidisc: Lambda additivity, U(1,1)^2 invariance, tau involution", ok,
                  detail);
}

// --------------------------------------------------------------------------
// 11. CLI golden outputs.

std::string run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    pclose(pipe);
    return out;
}

// Pulls the "chart":[x,y,z] array out of one trace line.
std::optional<std::array<double, 3>> parse_chart(const std::string& line) {
    const auto pos = line.find("\"chart\":[");
    if (pos == std::string::npos) return std::nullopt;
    std::istringstream in(line.substr(pos + 9));
    std::array<double, 3> v{};
    char sep;
    if (!(in >> v[0] >> sep >> v[1] >> sep >> v[2])) return std::nullopt;
    return v;
}

void criterion_cli(Checker& out, const std::string& cli) {
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<std::string, std::string>> goldens = {
        {"algebra mul --alg Hs --a 0,1,0,0 --b 0,0,1,0", "{\"result\":[0,0,0,1]}\n"},
        {"algebra inv --alg D --a 1,5", "{\"result\":[1,-5]}\n"},
        {"algebra unit --alg Cs --a 1,1", "{\"unit\":false}\n"},
        {"curvature --space ps1-split", "{\"K\":4.0}\n"},
        {"signature --space pd1", "{\"signature\":\"+0\"}\n"},
        {"convert h2 --point \"(1,1),(0,0)\"",
         "{\"A\":[1,1,0],\"B\":[1,-1,0],\"ds\":[0,0,1]}\n"},
        {"geodesic-trace --alg R --sig ++ --p \"1;0\" --tp \"0;1\" --range "
         "0,1.5707963267948966 --steps 1",
         "{\"theta\":1.5707963267948966,\"point\":[0,1],\"family\":\"Circular\",\"sign\":"
         "\"positive\"}\n"},
    };
    for (const auto& [args, want] : goldens) {
        const std::string got = run_cli(cli, args);
        if (got != want) {
            ok = false;
            detail = "mismatch for `" + args + "`: got " + got;
            break;
        }
        if (run_cli(cli, args) != want) {
            ok = false;
            detail = "output not byte-stable for `" + args + "`";
            break;
        }
    }

    // Chart constraints: split-complex traces on the torus, dual traces on
    // the cylinder, residual below 1e-9.
    if (ok) {
        const std::string cs_trace = run_cli(
            cli, "geodesic-trace --alg Cs --sig ++ --p \"1,0;0,0\" --tp \"0,0;1,0.3\" --steps 40");
        std::istringstream in(cs_trace);
        std::string line;
        int seen = 0;
        while (std::getline(in, line)) {
            const auto chart = parse_chart(line);
            if (!chart) continue;
            ++seen;
            const auto& c = *chart;
            const double rad = std::sqrt(c[0] * c[0] + c[1] * c[1]) - 2.0;
            const double residual = std::abs(rad * rad + c[2] * c[2] - 1.0);
            if (residual > 1e-9) {
                ok = false;
                detail = "torus residual " + std::to_string(residual);
            }
        }
        if (seen != 40) {
            ok = false;
            detail = "missing torus chart coordinates";
        }
    }
    if (ok) {
        const std::string d_trace = run_cli(
            cli,
            "geodesic-trace --alg D --sig ++ --p \"1,0;0,0\" --tp \"0,0;0,1\" --range 0,3 "
            "--steps 40");
        std::istringstream in(d_trace);
        std::string line;
        int seen = 0;
        double prev_s = 0.0;
        bool first = true;
        bool linear = true;
        double step_s = 0.0;
        while (std::getline(in, line)) {
            const auto chart = parse_chart(line);
            if (!chart) continue;
            ++seen;
            const auto& c = *chart;
            const double residual = std::abs(c[0] * c[0] + c[1] * c[1] - 1.0);
            if (residual > 1e-9) {
                ok = false;
                detail = "cylinder residual " + std::to_string(residual);
            }
            // Null trace: the fiber coordinate moves linearly in theta.
            if (!first) {
                const double ds = c[2] - prev_s;
                if (step_s == 0.0)
                    step_s = ds;
                else if (std::abs(ds - step_s) > 1e-9)
                    linear = false;
            }
            prev_s = c[2];
            first = false;
        }
        if (seen != 40 || !linear) {
            ok = false;
            if (detail.empty()) detail = "cylinder ruling not linear in theta";
        }
    }
    out.criterion(11, "CLI golden outputs byte-stable with chart residuals < 1e-9", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    Checker out;
    criterion_algebra_laws(out);
    criterion_signature_table(out);
    criterion_curvature(out);
    criterion_connection(out);
    criterion_geodesics(out);
    criterion_double_cover(out);
    criterion_euclidean(out);
    criterion_sphere(out);
    criterion_transition(out);
    criterion_bidisc(out);
    if (argc > 1) {
        criterion_cli(out, argv[1]);
    } else {
        out.criterion(11, "CLI golden outputs (pass the CLI path as argv[1])", false,
                      "no CLI binary given");
    }
    if (out.failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", out.failures);
    return 1;
}
