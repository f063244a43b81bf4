#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qtem/dense.hpp"
#include "qtem/errors.hpp"

namespace qtem {

struct EigenResult {
    std::vector<double> eigenvalues;    // ascending
    DenseMatrix eigenvectors;           // column i pairs with eigenvalue i
    std::vector<double> residuals;      // ||A x - lambda B x|| / (||A||_F ||x||)
};

// Cholesky factor L with M = L L^T. Throws if M is not numerically
// symmetric positive definite.
inline DenseMatrix cholesky(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw InvalidDimensions("cholesky: matrix not square");
    DenseMatrix L(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
        if (!(d > 0.0))
            throw NotPositiveDefinite("cholesky: matrix not positive definite");
        L(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            L(i, j) = s / L(j, j);
        }
    }
    return L;
}

namespace detail {

// Forward substitution: solves L y = b with L lower triangular, in place.
inline void forward_solve(const DenseMatrix& L, std::vector<double>& b) {
    const std::size_t n = L.rows();
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * b[k];
        b[i] = s / L(i, i);
    }
}

// Backward substitution: solves L^T y = b, in place.
inline void transpose_solve(const DenseMatrix& L, std::vector<double>& b) {
    const std::size_t n = L.rows();
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= L(k, i) * b[k];
        b[i] = s / L(i, i);
    }
}

inline double off_diagonal_norm(const DenseMatrix& c) {
    double s = 0.0;
    const std::size_t n = c.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) s += c(i, j) * c(i, j);
        }
    }
    return std::sqrt(s);
}

// Cyclic Jacobi diagonalization of a symmetric matrix. On return c is
// (numerically) diagonal and v holds the accumulated rotations, so the
// original matrix equals v diag(c) v^T.
inline void jacobi_diagonalize(DenseMatrix& c, DenseMatrix& v) {
    const std::size_t n = c.rows();
    v = DenseMatrix::identity(n);
    if (n < 2) return;
    const double tol = 1e-13 * std::max(frobenius_norm(c), 1e-300);
    const int max_sweeps = 50;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(c) <= tol) return;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = c(p, q);
                if (apq == 0.0) continue;
                const double theta = (c(q, q) - c(p, p)) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                const double app = c(p, p), aqq = c(q, q);
                c(p, p) = app - t * apq;
                c(q, q) = aqq + t * apq;
                c(p, q) = 0.0;
                c(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != p && k != q) {
                        const double akp = c(k, p), akq = c(k, q);
                        c(k, p) = cs * akp - sn * akq;
                        c(p, k) = c(k, p);
                        c(k, q) = sn * akp + cs * akq;
                        c(q, k) = c(k, q);
                    }
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = cs * vkp - sn * vkq;
                    v(k, q) = sn * vkp + cs * vkq;
                }
            }
        }
    }
    if (off_diagonal_norm(c) > tol)
        throw NoConvergence("jacobi_diagonalize: sweep limit reached");
}

} // namespace detail

// Solves A x = lambda B x for symmetric A and symmetric positive definite B
// by reduction to the standard problem with the Cholesky factor of B.
// Eigenvalues come back ascending and eigenvectors B-orthonormal.
inline EigenResult solve_generalized(const DenseMatrix& A,
                                     const DenseMatrix& B) {
    const std::size_t n = A.rows();
    if (A.cols() != n || B.rows() != n || B.cols() != n)
        throw InvalidDimensions("solve_generalized: dimension mismatch");
    const DenseMatrix L = cholesky(B);

    // C = L^{-1} A L^{-T}, built column by column and then symmetrized to
    // shed roundoff asymmetry.
    DenseMatrix X(n, n);
    std::vector<double> colbuf(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) colbuf[i] = A(i, j);
        detail::forward_solve(L, colbuf);
        for (std::size_t i = 0; i < n; ++i) X(i, j) = colbuf[i];
    }
    DenseMatrix C(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) colbuf[i] = X(j, i);
        detail::forward_solve(L, colbuf);
        for (std::size_t i = 0; i < n; ++i) C(i, j) = colbuf[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (C(i, j) + C(j, i));
            C(i, j) = avg;
            C(j, i) = avg;
        }
    }

    DenseMatrix V;
    detail::jacobi_diagonalize(C, V);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return C(a, a) < C(b, b);
    });

    EigenResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        res.eigenvalues[j] = C(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) colbuf[i] = V(i, order[j]);
        detail::transpose_solve(L, colbuf);
        for (std::size_t i = 0; i < n; ++i) res.eigenvectors(i, j) = colbuf[i];
    }

    const double anorm = std::max(frobenius_norm(A), 1e-300);
    res.residuals.resize(n);
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) x[i] = res.eigenvectors(i, j);
        const std::vector<double> ax = matvec(A, x);
        const std::vector<double> bx = matvec(B, x);
        double rnorm = 0.0, xnorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ri = ax[i] - res.eigenvalues[j] * bx[i];
            rnorm += ri * ri;
            xnorm += x[i] * x[i];
        }
        res.residuals[j] =
            std::sqrt(rnorm) / (anorm * std::max(std::sqrt(xnorm), 1e-300));
    }
    return res;
}

// Eigenvalues of a symmetric matrix, ascending.
inline std::vector<double> symmetric_eigenvalues(DenseMatrix c) {
    if (c.cols() != c.rows())
        throw InvalidDimensions("symmetric_eigenvalues: matrix not square");
    DenseMatrix v;
    detail::jacobi_diagonalize(c, v);
    std::vector<double> ev(c.rows());
    for (std::size_t i = 0; i < c.rows(); ++i) ev[i] = c(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace qtem
