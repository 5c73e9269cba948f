#pragma once

// Arithmetic over the involutive real algebras used throughout the library:
// the reals, complex numbers, dual numbers, split-complex numbers,
// quaternions, split-quaternions, C x C, and the transition subalgebras
// K_t = R + sigma(t) R inside the split-quaternions, sigma(t) = (1-t) i + t j.
//
// Elements are fixed-length real coefficient vectors against a declared basis:
//   C   : 1, i                    D   : 1, eps          Cs : 1, j
//   H/Hs: 1, i, j, k              CxC : Re a, Im a, Re b, Im b
//   Kt  : 1, sigma(t)
//
// K_t elements are carried internally in split-quaternion coordinates so that
// every K_t operation runs bit-for-bit the same arithmetic as the embedded
// split-quaternion computation; the (1, sigma(t)) basis stays the external
// interface. See Scalar for the coordinate conventions.

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "algebrae/detail/linalg.hpp"
#include "algebrae/errors.hpp"

namespace algebrae {

enum class Tag { R, C, D, Cs, H, Hs, CxC, Kt };

inline std::string tag_name(Tag t) {
    switch (t) {
        case Tag::R: return "R";
        case Tag::C: return "C";
        case Tag::D: return "D";
        case Tag::Cs: return "Cs";
        case Tag::H: return "H";
        case Tag::Hs: return "Hs";
        case Tag::CxC: return "CxC";
        case Tag::Kt: return "Kt";
    }
    return "?";
}

struct AlgebraId {
    Tag tag = Tag::R;
    double t = 0.0;  // transition parameter, meaningful only for Tag::Kt

    AlgebraId() = default;
    AlgebraId(Tag tg) : tag(tg) {
        if (tg == Tag::Kt) throw bad_argument("Kt requires a parameter t");
    }
    static AlgebraId kt(double t_) {
        if (!(t_ >= 0.0 && t_ <= 1.0)) throw bad_argument("Kt parameter must lie in [0,1]");
        AlgebraId id;
        id.tag = Tag::Kt;
        id.t = t_;
        return id;
    }

    // Length of the coefficient vector in the external basis.
    std::size_t dim() const {
        switch (tag) {
            case Tag::R: return 1;
            case Tag::C:
            case Tag::D:
            case Tag::Cs:
            case Tag::Kt: return 2;
            default: return 4;
        }
    }

    bool commutative() const { return tag != Tag::H && tag != Tag::Hs && tag != Tag::Kt; }

    friend bool operator==(const AlgebraId& a, const AlgebraId& b) {
        return a.tag == b.tag && (a.tag != Tag::Kt || a.t == b.t);
    }

    std::string name() const {
        if (tag == Tag::Kt) return "Kt(" + std::to_string(t) + ")";
        return tag_name(tag);
    }
};

namespace detail {

// Basis product e_i * e_j = sign * e_k, with sign in {-1, 0, +1}.
struct Term {
    int k;
    double sign;
};
using Table4 = std::array<std::array<Term, 4>, 4>;

inline const Table4& mul_table(Tag tag) {
    static const Table4 tab_r = {{{{{0, 1}, {0, 0}, {0, 0}, {0, 0}}},
                                  {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}},
                                  {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}},
                                  {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}}};
    static const Table4 tab_c = {{{{{0, 1}, {1, 1}, {0, 0}, {0, 0}}},
                                  {{{1, 1}, {0, -1}, {0, 0}, {0, 0}}},
                                  {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}},
                                  {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}}};
    static const Table4 tab_d = {{{{{0, 1}, {1, 1}, {0, 0}, {0, 0}}},
                                  {{{1, 1}, {0, 0}, {0, 0}, {0, 0}}},
                                  {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}},
                                  {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}}};
    static const Table4 tab_cs = {{{{{0, 1}, {1, 1}, {0, 0}, {0, 0}}},
                                   {{{1, 1}, {0, 1}, {0, 0}, {0, 0}}},
                                   {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}},
                                   {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}}};
    // Quaternions: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
    static const Table4 tab_h = {{{{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
                                  {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},
                                  {{{2, 1}, {3, -1}, {0, -1}, {1, 1}}},
                                  {{{3, 1}, {2, 1}, {1, -1}, {0, -1}}}}};
    // Split-quaternions: i^2 = -1, j^2 = k^2 = 1, ij = k, jk = -i, ki = j.
    static const Table4 tab_hs = {{{{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
                                   {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},
                                   {{{2, 1}, {3, -1}, {0, 1}, {1, -1}}},
                                   {{{3, 1}, {2, 1}, {1, 1}, {0, 1}}}}};
    // C x C multiplies componentwise: basis (1,0), (i,0), (0,1), (0,i).
    static const Table4 tab_cxc = {{{{{0, 1}, {1, 1}, {0, 0}, {0, 0}}},
                                    {{{1, 1}, {0, -1}, {0, 0}, {0, 0}}},
                                    {{{0, 0}, {0, 0}, {2, 1}, {3, 1}}},
                                    {{{0, 0}, {0, 0}, {3, 1}, {2, -1}}}}};
    switch (tag) {
        case Tag::R: return tab_r;
        case Tag::C: return tab_c;
        case Tag::D: return tab_d;
        case Tag::Cs: return tab_cs;
        case Tag::H: return tab_h;
        case Tag::CxC: return tab_cxc;
        default: return tab_hs;  // Hs, and Kt through its mirror coordinates
    }
}

// Signs applied to internal coordinates by the involution.
inline std::array<double, 4> conj_signs(Tag tag) {
    switch (tag) {
        case Tag::R: return {1, 1, 1, 1};
        case Tag::C:
        case Tag::D:
        case Tag::Cs: return {1, -1, 1, 1};
        case Tag::CxC: return {1, -1, 1, -1};
        default: return {1, -1, -1, -1};  // H, Hs, Kt mirror
    }
}

// Internal coordinate count (Kt mirrors into 4 split-quaternion coordinates).
inline std::size_t internal_dim(const AlgebraId& a) {
    return a.tag == Tag::Kt ? 4 : a.dim();
}

}  // namespace detail

// An element of one of the supported algebras: an algebra id plus the real
// coefficient vector. Immutable value type.
class Scalar {
public:
    Scalar() = default;

    Scalar(AlgebraId alg, std::span<const double> coeffs) : alg_(alg) {
        if (coeffs.size() != alg.dim())
            throw bad_argument("coefficient list length does not match algebra dimension");
        if (alg.tag == Tag::Kt) {
            // Mirror (x, y) as x + y*sigma(t) in split-quaternion coordinates.
            const double u = 1.0 - alg.t;
            c_ = {coeffs[0], coeffs[1] * u, coeffs[1] * alg.t, 0.0};
        } else {
            for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = coeffs[i];
        }
    }

    Scalar(AlgebraId alg, std::initializer_list<double> coeffs)
        : Scalar(alg, std::span<const double>(coeffs.begin(), coeffs.size())) {}

    static Scalar zero(AlgebraId alg) {
        Scalar s;
        s.alg_ = alg;
        return s;
    }

    static Scalar one(AlgebraId alg) {
        Scalar s = zero(alg);
        s.c_[0] = 1.0;
        if (alg.tag == Tag::CxC) s.c_[2] = 1.0;  // unit of C x C is (1,1)
        return s;
    }

    static Scalar from_real(AlgebraId alg, double x) {
        Scalar s = one(alg);
        s.c_[0] *= x;
        if (alg.tag == Tag::CxC) s.c_[2] *= x;
        return s;
    }

    const AlgebraId& algebra() const { return alg_; }

    // Coefficients in the external basis.
    std::vector<double> coeffs() const {
        const std::size_t d = alg_.dim();
        std::vector<double> out(d);
        if (alg_.tag == Tag::Kt) {
            out[0] = c_[0];
            if (alg_.t < 0.5)
                out[1] = c_[1] / (1.0 - alg_.t);
            else if (alg_.t > 0.5)
                out[1] = c_[2] / alg_.t;
            else
                out[1] = 2.0 * c_[2];
        } else {
            for (std::size_t i = 0; i < d; ++i) out[i] = c_[i];
        }
        return out;
    }

    // Raw internal coordinates (split-quaternion mirror for Kt).
    const std::array<double, 4>& raw() const { return c_; }

    double coeff_norm() const {
        double s = 0.0;
        for (double x : c_) s += x * x;
        return std::sqrt(s);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        Scalar r = a;
        for (std::size_t i = 0; i < 4; ++i) r.c_[i] += b.c_[i];
        return r;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        Scalar r = a;
        for (std::size_t i = 0; i < 4; ++i) r.c_[i] -= b.c_[i];
        return r;
    }

    friend Scalar operator-(const Scalar& a) {
        Scalar r = a;
        for (double& x : r.c_) x = -x;
        return r;
    }

    friend Scalar operator*(double s, const Scalar& a) {
        Scalar r = a;
        for (double& x : r.c_) x *= s;
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.alg_ == b.alg_ && a.c_ == b.c_;
    }

    static void check_same(const Scalar& a, const Scalar& b) {
        if (!(a.alg_ == b.alg_)) throw algebra_mismatch("scalar algebras differ");
    }

    friend Scalar mul(const Scalar& a, const Scalar& b);
    friend Scalar conj(const Scalar& a);

private:
    AlgebraId alg_;
    std::array<double, 4> c_{};
};

// Product via the structure-constant table. Contributions are accumulated per
// unordered basis pair, which makes conj(mul(a,b)) == mul(conj(b), conj(a))
// hold exactly in floating point, not just up to rounding.
inline Scalar mul(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    const std::size_t d = detail::internal_dim(a.algebra());
    const detail::Table4& tab = detail::mul_table(a.algebra().tag);
    Scalar r = Scalar::zero(a.algebra());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const detail::Term tij = tab[i][j];
            if (i == j) {
                if (tij.sign != 0.0) r.c_[tij.k] += tij.sign * (a.c_[i] * b.c_[i]);
                continue;
            }
            const detail::Term tji = tab[j][i];
            if (tij.sign == 0.0 && tji.sign == 0.0) continue;
            // Both orders of a basis pair land on the same basis element.
            const int k = tij.sign != 0.0 ? tij.k : tji.k;
            r.c_[k] += tij.sign * (a.c_[i] * b.c_[j]) + tji.sign * (a.c_[j] * b.c_[i]);
        }
    }
    return r;
}

inline Scalar conj(const Scalar& a) {
    const auto signs = detail::conj_signs(a.algebra().tag);
    Scalar r = a;
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] *= signs[i];
    return r;
}

// N(a) = a a*.
inline Scalar norm_form(const Scalar& a) { return mul(a, conj(a)); }

// Self-adjoint part (a + a*)/2.
inline Scalar re(const Scalar& a) {
    const Scalar s = a + conj(a);
    return 0.5 * s;
}

// The self-adjoint part collapsed to one real number; for C x C this sums the
// two real components.
inline double real_part_sum(const Scalar& a) {
    const Scalar r = re(a);
    double v = r.raw()[0];
    if (a.algebra().tag == Tag::CxC) v += r.raw()[2];
    return v;
}

inline bool is_selfadjoint(const Scalar& a, double tol = 1e-12) {
    const Scalar d = a - conj(a);
    return d.coeff_norm() <= tol * (1.0 + a.coeff_norm());
}

// Matrix of x -> a*x in the external basis.
inline detail::Mat left_mult_matrix(const Scalar& a) {
    const std::size_t d = a.algebra().dim();
    detail::Mat m(d, d);
    if (a.algebra().tag == Tag::Kt) {
        const auto v = a.coeffs();
        const Scalar sq = mul(Scalar(a.algebra(), {0.0, 1.0}), Scalar(a.algebra(), {0.0, 1.0}));
        const double s = sq.raw()[0];  // sigma(t)^2
        m(0, 0) = v[0];
        m(0, 1) = v[1] * s;
        m(1, 0) = v[1];
        m(1, 1) = v[0];
        return m;
    }
    const detail::Table4& tab = detail::mul_table(a.algebra().tag);
    const auto v = a.coeffs();
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            const detail::Term t = tab[i][j];
            if (t.sign != 0.0) m(t.k, j) += t.sign * v[i];
        }
    return m;
}

// Unit test per the zero-divisor dichotomy: a is a unit iff det(T_a) is
// nonzero, with a threshold relative to the element's size so that large
// elements are not misclassified.
inline bool is_unit(const Scalar& a, double tol = 1e-9) {
    double n2 = 0.0;
    for (double x : a.coeffs()) n2 += x * x;
    return std::abs(detail::det(left_mult_matrix(a))) > tol * (1.0 + n2);
}

// Inverse by linear solve without the unit threshold; callers must have
// established invertibility themselves.
inline Scalar inverse_unchecked(const Scalar& a) {
    const Scalar e = Scalar::one(a.algebra());
    std::vector<double> rhs = e.coeffs();
    std::vector<double> x = detail::solve(left_mult_matrix(a), rhs);
    return Scalar(a.algebra(), std::span<const double>(x.data(), x.size()));
}

// Multiplicative inverse by solving T_a x = 1.
inline Scalar inverse(const Scalar& a, double tol = 1e-9) {
    if (!is_unit(a, tol)) throw not_a_unit("inverse of a non-unit");
    return inverse_unchecked(a);
}

// For a non-unit, a unit-coefficient-norm b with a*b ~ 0 (kernel of T_a).
inline Scalar zero_divisor_witness(const Scalar& a) {
    std::vector<double> v = detail::smallest_singular_vector(left_mult_matrix(a));
    return Scalar(a.algebra(), std::span<const double>(v.data(), v.size()));
}

// sigma(t) = (1-t) i + t j as a split-quaternion.
inline Scalar sigma(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw bad_argument("sigma parameter must lie in [0,1]");
    return Scalar(AlgebraId(Tag::Hs), {0.0, 1.0 - t, t, 0.0});
}

// Embeds x + y*sigma(t) into the split-quaternions. The identity on internal
// coordinates, so embedded arithmetic is bit-identical to K_t arithmetic.
inline Scalar kt_embed(double t, const Scalar& a) {
    if (a.algebra().tag != Tag::Kt || a.algebra().t != t)
        throw bad_argument("kt_embed: scalar does not belong to Kt(t)");
    const auto& c = a.raw();
    return Scalar(AlgebraId(Tag::Hs), {c[0], c[1], c[2], c[3]});
}

// Ring isomorphism Cs -> R x R, x + j y -> (x + y, x - y), and its inverse.
inline std::pair<double, double> cs_split(const Scalar& a) {
    if (a.algebra().tag != Tag::Cs) throw algebra_mismatch("cs_split expects a Cs scalar");
    return {a.raw()[0] + a.raw()[1], a.raw()[0] - a.raw()[1]};
}

inline Scalar cs_join(double p, double q) {
    return Scalar(AlgebraId(Tag::Cs), {(p + q) / 2.0, (p - q) / 2.0});
}

}  // namespace algebrae
