#pragma once

// Free modules F^n carrying a diagonal +-1 Hermitian form
// <u,v> = sum_i c_i u_i v_i^*, together with good-point tests,
// orthonormalization and orthogonal complements.

#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "algebrae/algebra.hpp"
#include "algebrae/detail/linalg.hpp"
#include "algebrae/errors.hpp"

namespace algebrae {

struct HermitianSpace {
    AlgebraId alg;
    std::size_t n = 0;
    std::vector<double> signature;  // n entries, each +1 or -1

    HermitianSpace() = default;
    HermitianSpace(AlgebraId a, std::vector<double> sig)
        : alg(a), n(sig.size()), signature(std::move(sig)) {
        for (double c : signature)
            if (c != 1.0 && c != -1.0)
                throw bad_argument("signature coefficients must be +1 or -1");
        if (n == 0) throw bad_argument("empty module");
    }

    static HermitianSpace standard(AlgebraId a, std::size_t n) {
        return HermitianSpace(a, std::vector<double>(n, 1.0));
    }

    friend bool operator==(const HermitianSpace& a, const HermitianSpace& b) {
        return a.alg == b.alg && a.signature == b.signature;
    }
};

class ModuleVector {
public:
    ModuleVector() = default;
    ModuleVector(HermitianSpace space, std::vector<Scalar> entries)
        : space_(std::move(space)), entries_(std::move(entries)) {
        if (entries_.size() != space_.n) throw bad_argument("entry count does not match rank");
        for (const Scalar& e : entries_)
            if (!(e.algebra() == space_.alg))
                throw algebra_mismatch("entry algebra does not match module algebra");
    }

    static ModuleVector zero(const HermitianSpace& space) {
        return ModuleVector(space, std::vector<Scalar>(space.n, Scalar::zero(space.alg)));
    }

    static ModuleVector basis(const HermitianSpace& space, std::size_t i) {
        ModuleVector v = zero(space);
        v.entries_[i] = Scalar::one(space.alg);
        return v;
    }

    const HermitianSpace& space() const { return space_; }
    std::size_t size() const { return entries_.size(); }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    double coeff_norm() const {
        double s = 0.0;
        for (const Scalar& e : entries_) {
            const double n = e.coeff_norm();
            s += n * n;
        }
        return std::sqrt(s);
    }

    // External-basis coefficients of all entries, flattened.
    std::vector<double> flat_coeffs() const {
        std::vector<double> out;
        out.reserve(space_.n * space_.alg.dim());
        for (const Scalar& e : entries_)
            for (double c : e.coeffs()) out.push_back(c);
        return out;
    }

    friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
        check_same(a, b);
        std::vector<Scalar> e;
        e.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) e.push_back(a[i] + b[i]);
        return ModuleVector(a.space_, std::move(e));
    }

    friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
        check_same(a, b);
        std::vector<Scalar> e;
        e.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) e.push_back(a[i] - b[i]);
        return ModuleVector(a.space_, std::move(e));
    }

    friend ModuleVector operator-(const ModuleVector& a) {
        std::vector<Scalar> e;
        e.reserve(a.size());
        for (const Scalar& x : a.entries_) e.push_back(-x);
        return ModuleVector(a.space_, std::move(e));
    }

    // Left module action z * u.
    friend ModuleVector operator*(const Scalar& z, const ModuleVector& a) {
        std::vector<Scalar> e;
        e.reserve(a.size());
        for (const Scalar& x : a.entries_) e.push_back(mul(z, x));
        return ModuleVector(a.space_, std::move(e));
    }

    friend ModuleVector operator*(double s, const ModuleVector& a) {
        std::vector<Scalar> e;
        e.reserve(a.size());
        for (const Scalar& x : a.entries_) e.push_back(s * x);
        return ModuleVector(a.space_, std::move(e));
    }

    static void check_same(const ModuleVector& a, const ModuleVector& b) {
        if (!(a.space_ == b.space_)) throw space_mismatch("module vectors live in different spaces");
    }

private:
    HermitianSpace space_;
    std::vector<Scalar> entries_;
};

// <u,v> = sum_i c_i u_i v_i^*.
inline Scalar form(const ModuleVector& u, const ModuleVector& v) {
    ModuleVector::check_same(u, v);
    Scalar acc = Scalar::zero(u.space().alg);
    for (std::size_t i = 0; i < u.size(); ++i)
        acc = acc + u.space().signature[i] * mul(u[i], conj(v[i]));
    return acc;
}

namespace detail {

// External basis elements of the algebra as scalars.
inline std::vector<Scalar> algebra_basis(const AlgebraId& alg) {
    std::vector<Scalar> out;
    const std::size_t d = alg.dim();
    for (std::size_t m = 0; m < d; ++m) {
        std::vector<double> c(d, 0.0);
        c[m] = 1.0;
        out.emplace_back(alg, std::span<const double>(c.data(), c.size()));
    }
    return out;
}

// Real matrix of the map h |-> <u,h> from V (dim n*d) to F (dim d).
inline Mat pairing_matrix(const ModuleVector& u) {
    const AlgebraId alg = u.space().alg;
    const std::size_t d = alg.dim();
    const std::size_t n = u.size();
    const auto basis = algebra_basis(alg);
    Mat m(d, n * d);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            const Scalar val = u.space().signature[j] * mul(u[j], conj(basis[k]));
            const auto c = val.coeffs();
            for (std::size_t r = 0; r < d; ++r) m(r, j * d + k) = c[r];
        }
    return m;
}

// Rows are the flattened coefficients of the given vectors.
inline Mat stack_coeffs(const std::vector<ModuleVector>& vs) {
    if (vs.empty()) return Mat(0, 0);
    const std::size_t w = vs[0].flat_coeffs().size();
    Mat m(vs.size(), w);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto c = vs[i].flat_coeffs();
        for (std::size_t j = 0; j < w; ++j) m(i, j) = c[j];
    }
    return m;
}

}  // namespace detail

// u is good iff h |-> <u,h> hits all of F, i.e. the pairing matrix has full
// rank dim_R F.
inline bool is_good(const ModuleVector& u, double tol = 1e-9) {
    const std::size_t d = u.space().alg.dim();
    return detail::rank(detail::pairing_matrix(u), tol) == d;
}

// Solves <u,h> = target for h (least squares; exact when u is good).
inline ModuleVector pairing_solve(const ModuleVector& u, const Scalar& target) {
    const auto rhs = target.coeffs();
    const std::vector<double> h =
        detail::lstsq(detail::pairing_matrix(u), std::vector<double>(rhs.begin(), rhs.end()));
    const AlgebraId alg = u.space().alg;
    const std::size_t d = alg.dim();
    std::vector<Scalar> entries;
    for (std::size_t j = 0; j < u.size(); ++j)
        entries.emplace_back(alg, std::span<const double>(h.data() + j * d, d));
    return ModuleVector(u.space(), std::move(entries));
}

// Real span dimension of the module multiples {z*v : z in F} of all vs.
inline std::size_t real_rank(const std::vector<ModuleVector>& vs, double tol = 1e-9) {
    if (vs.empty()) return 0;
    const AlgebraId alg = vs[0].space().alg;
    std::vector<ModuleVector> mult;
    for (const auto& v : vs)
        for (const Scalar& z : detail::algebra_basis(alg)) mult.push_back(z * v);
    return detail::rank(detail::stack_coeffs(mult), tol);
}

// Pairwise-orthogonal spanning list with <b,b> = +-1 where achievable.
// Pivoting: take the remaining vector with the largest |<v,v>|; when all
// self-products vanish, split the pair with the largest |<p,q>| into
// p + z q and p - z q along the dominant basis coefficient z of <p,q>.
inline std::vector<ModuleVector> orthonormalize(std::vector<ModuleVector> vs,
                                                double tol = 1e-9) {
    if (vs.empty()) return {};
    const AlgebraId alg = vs[0].space().alg;
    if (detail::rank(detail::stack_coeffs(vs), tol) < vs.size())  // independence over R
        throw bad_argument("orthonormalize: input vectors are linearly dependent");

    // Normalizability score of <v,v>: the real part for the real-valued
    // algebras, the weaker R x R component for CxC.
    auto self_score = [](const Scalar& q) {
        if (q.algebra().tag == Tag::CxC)
            return std::min(std::abs(q.raw()[0]), std::abs(q.raw()[2]));
        return std::abs(q.raw()[0]);
    };
    auto unit_normalize = [](const ModuleVector& v, const Scalar& q) {
        if (q.algebra().tag == Tag::CxC) {
            const Scalar a(q.algebra(), {1.0 / std::sqrt(std::abs(q.raw()[0])), 0.0,
                                         1.0 / std::sqrt(std::abs(q.raw()[2])), 0.0});
            return a * v;
        }
        return (1.0 / std::sqrt(std::abs(q.raw()[0]))) * v;
    };

    std::vector<ModuleVector> basis;
    std::vector<ModuleVector> rem = std::move(vs);
    const std::size_t want = rem.size();
    std::size_t guard = 0;
    while (basis.size() < want) {
        if (++guard > 4 * want + 16) throw degenerate_span("orthonormalize failed to progress");
        // Scan for the best self-product.
        std::size_t best = 0;
        double best_val = -1.0;
        for (std::size_t i = 0; i < rem.size(); ++i) {
            const double v = self_score(form(rem[i], rem[i]));
            if (v > best_val) {
                best_val = v;
                best = i;
            }
        }
        const double scale = 1.0 + rem[best].coeff_norm() * rem[best].coeff_norm();
        if (best_val > tol * scale) {
            ModuleVector b = unit_normalize(rem[best], form(rem[best], rem[best]));
            rem.erase(rem.begin() + best);
            const Scalar bb_inv = inverse(form(b, b), tol);
            for (auto& r : rem) {
                const Scalar coeff = mul(form(r, b), bb_inv);
                r = r - coeff * b;
            }
            basis.push_back(std::move(b));
            continue;
        }
        // All remaining vectors are isotropic: split the strongest pair.
        if (rem.size() < 2) throw degenerate_span("no vector of nonzero self-product");
        std::size_t bi = 0, bj = 1;
        double best_pair = -1.0;
        for (std::size_t i = 0; i < rem.size(); ++i)
            for (std::size_t j = i + 1; j < rem.size(); ++j) {
                const double v = form(rem[i], rem[j]).coeff_norm();
                if (v > best_pair) {
                    best_pair = v;
                    bi = i;
                    bj = j;
                }
            }
        const double pair_scale = 1.0 + rem[bi].coeff_norm() * rem[bj].coeff_norm();
        if (best_pair <= tol * pair_scale)
            throw degenerate_span("no vector of nonzero self-product in the remaining span");
        const Scalar beta = form(rem[bi], rem[bj]);
        // Pick the basis coefficient of beta with the largest magnitude so
        // that <p + zq, p + zq> = 2 Re(beta z^*) is safely nonzero.
        const auto bc = beta.coeffs();
        std::size_t m = 0;
        for (std::size_t i = 1; i < bc.size(); ++i)
            if (std::abs(bc[i]) > std::abs(bc[m])) m = i;
        const Scalar z = detail::algebra_basis(alg)[m];
        const ModuleVector p = rem[bi], q = rem[bj];
        rem[bi] = p + z * q;
        rem[bj] = p - z * q;
    }
    return basis;
}

// Basis of p's orthogonal complement: projections of the canonical basis,
// thinned to n-1 module generators by real rank. Requires <p,p> to be a unit.
inline std::vector<ModuleVector> perp_basis(const ModuleVector& p, double tol = 1e-9) {
    const Scalar h = form(p, p);
    if (!is_unit(h, tol)) throw isotropic_base("perp_basis: <p,p> is not a unit");
    const Scalar hinv = inverse(h, tol);
    const HermitianSpace& sp = p.space();
    const std::size_t n = sp.n;
    const std::size_t d = sp.alg.dim();
    if (n == 1) return {};

    auto project_off_p = [&](const ModuleVector& v) {
        return v - mul(form(v, p), hinv) * p;
    };

    std::vector<ModuleVector> candidates;
    for (std::size_t i = 0; i < n; ++i)
        candidates.push_back(project_off_p(ModuleVector::basis(sp, i)));

    std::vector<ModuleVector> out;
    std::size_t cur_rank = 0;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int attempt = 0; attempt < 256 && out.size() < n - 1; ++attempt) {
        bool advanced = false;
        for (const auto& c : candidates) {
            std::vector<ModuleVector> trial = out;
            trial.push_back(c);
            const std::size_t r = real_rank(trial, tol);
            if (r == cur_rank + d) {
                out.push_back(c);
                cur_rank = r;
                advanced = true;
                if (out.size() == n - 1) break;
            }
        }
        if (out.size() == n - 1) break;
        if (!advanced) {
            // Random recombination of the candidates; succeeds generically.
            ModuleVector mix = ModuleVector::zero(sp);
            for (const auto& c : candidates) mix = mix + dist(rng) * c;
            candidates.push_back(project_off_p(mix));
        }
    }
    if (out.size() != n - 1) throw degenerate_span("perp_basis: could not span the complement");
    return out;
}

// Real Gram matrix sign * Re<v_i, v_j> (CxC sums the two components).
inline detail::Mat gram_real(const std::vector<ModuleVector>& vs, double sign) {
    detail::Mat g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            g(i, j) = sign * real_part_sum(form(vs[i], vs[j]));
    // Symmetric up to rounding; make it exact for the eigensolver.
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const double s = 0.5 * (g(i, j) + g(j, i));
            g(i, j) = g(j, i) = s;
        }
    return g;
}

}  // namespace algebrae
