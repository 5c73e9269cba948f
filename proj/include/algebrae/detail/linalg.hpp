#pragma once

// Small dense real-matrix kernels used by the algebra and module layers.
// Sizes here are tiny (at most ~16x16), so plain O(n^3) routines with
// Jacobi-style iterations are accurate enough and keep the library
// dependency-free.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace algebrae::detail {

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<double> col(std::size_t j) const {
        std::vector<double> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

inline Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("linalg: shape mismatch");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline std::vector<double> mat_vec(const Mat& a, const std::vector<double>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("linalg: shape mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

// Determinant by LU with partial pivoting.
inline double det(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("linalg: det of non-square");
    const std::size_t n = m.rows();
    double d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        if (m(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            d = -d;
        }
        d *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

// Solves the square system m*x = b by Gaussian elimination with partial
// pivoting. Throws when the pivot collapses.
inline std::vector<double> solve(Mat m, std::vector<double> b) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n) throw std::invalid_argument("linalg: shape mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        if (std::abs(m(piv, k)) < 1e-300) throw std::runtime_error("linalg: singular system");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            std::swap(b[piv], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
        x[i] = s / m(i, i);
    }
    return x;
}

// Eigenvalues of a symmetric matrix via cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(Mat m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("linalg: eig of non-square");
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += m(p, q) * m(p, q);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (m(p, q) == 0.0) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = m(i, i);
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

// Thin SVD A = U * diag(sv) * V^T computed by one-sided Jacobi on the columns
// of A. V has shape cols x cols; U keeps A's shape with zero columns where the
// singular value vanishes.
struct Svd {
    Mat u;
    std::vector<double> sv;
    Mat v;
};

inline Svd svd(Mat a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    Mat v = Mat::identity(cols);
    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < cols; ++p)
            for (std::size_t q = p + 1; q < cols; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < rows; ++i) {
                    alpha += a(i, p) * a(i, p);
                    beta += a(i, q) * a(i, q);
                    gamma += a(i, p) * a(i, q);
                }
                if (std::abs(gamma) <= 1e-32 + 1e-16 * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < rows; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < cols; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        if (!rotated) break;
    }
    Svd out;
    out.sv.resize(cols);
    out.u = Mat(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double norm = 0.0;
        for (std::size_t i = 0; i < rows; ++i) norm += a(i, j) * a(i, j);
        norm = std::sqrt(norm);
        out.sv[j] = norm;
        if (norm > 0.0)
            for (std::size_t i = 0; i < rows; ++i) out.u(i, j) = a(i, j) / norm;
    }
    out.v = v;
    return out;
}

// Numerical rank with a cutoff relative to the largest singular value.
inline std::size_t rank(const Mat& a, double rel_tol = 1e-9) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    const Svd s = svd(a);
    const double top = *std::max_element(s.sv.begin(), s.sv.end());
    if (top == 0.0) return 0;
    std::size_t r = 0;
    for (double x : s.sv)
        if (x > rel_tol * top) ++r;
    return r;
}

// Minimum-norm least squares solution of a*x = b through the SVD.
inline std::vector<double> lstsq(const Mat& a, const std::vector<double>& b,
                                 double rel_tol = 1e-12) {
    if (a.rows() != b.size()) throw std::invalid_argument("linalg: shape mismatch");
    const Svd s = svd(a);
    const double top = s.sv.empty() ? 0.0 : *std::max_element(s.sv.begin(), s.sv.end());
    std::vector<double> x(a.cols(), 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (top == 0.0 || s.sv[j] <= rel_tol * top) continue;
        double utb = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) utb += s.u(i, j) * b[i];
        const double f = utb / s.sv[j];
        for (std::size_t i = 0; i < a.cols(); ++i) x[i] += f * s.v(i, j);
    }
    return x;
}

// Unit right-singular vector for the smallest singular value of a.
inline std::vector<double> smallest_singular_vector(const Mat& a) {
    const Svd s = svd(a);
    std::size_t jmin = 0;
    for (std::size_t j = 1; j < s.sv.size(); ++j)
        if (s.sv[j] < s.sv[jmin]) jmin = j;
    return s.v.col(jmin);
}

}  // namespace algebrae::detail
