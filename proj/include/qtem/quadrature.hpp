#pragma once

#include <cmath>
#include <vector>

#include "qtem/area_poly.hpp"
#include "qtem/errors.hpp"
#include "qtem/geometry.hpp"
#include "qtem/mat6.hpp"
#include "qtem/rational.hpp"
#include "qtem/shape.hpp"

namespace qtem {

// Symmetric quadrature rule in area coordinates. Weights are normalized to
// sum to one, so an integral over a physical triangle is
// area * sum_q w_q f(L_q).
struct QuadratureRule {
    int degree = 0; // highest total polynomial degree integrated exactly
    std::vector<Vec3> points;
    std::vector<double> weights;
};

namespace detail {

// Gauss-Legendre nodes and weights on [0, 1] via Newton iteration on the
// Legendre polynomial, evaluated with the three-term recurrence.
inline void gauss_legendre_unit(int n, std::vector<double>& x,
                                std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int k = 0; k < n; ++k) {
        long double t = std::cos(3.141592653589793238462643L * (k + 0.75L) /
                                 (n + 0.5L));
        long double dp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L, p1 = t;
            for (int j = 2; j <= n; ++j) {
                const long double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0L);
            const long double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-19L) break;
        }
        x[k] = static_cast<double>((t + 1.0L) / 2.0L);
        w[k] = static_cast<double>(1.0L / ((1.0L - t * t) * dp * dp));
    }
}

// Verifies the rule against exact monomial integrals for every monomial of
// total degree up to the advertised one, and that all points lie inside the
// closed triangle.
inline void validate_rule(const QuadratureRule& r) {
    double wsum = 0.0;
    for (std::size_t q = 0; q < r.points.size(); ++q) {
        const Vec3& L = r.points[q];
        for (double Lk : L) {
            if (!(Lk >= -1e-14 && Lk <= 1.0 + 1e-14))
                throw InvariantViolation("quadrature point outside triangle");
        }
        wsum += r.weights[q];
    }
    if (std::abs(wsum - 1.0) > 1e-14)
        throw InvariantViolation("quadrature weights do not sum to one");
    for (int i = 0; i <= r.degree; ++i) {
        for (int j = 0; i + j <= r.degree; ++j) {
            for (int k = 0; i + j + k <= r.degree; ++k) {
                double acc = 0.0;
                for (std::size_t q = 0; q < r.points.size(); ++q) {
                    const Vec3& L = r.points[q];
                    acc += r.weights[q] * std::pow(L[0], i) *
                           std::pow(L[1], j) * std::pow(L[2], k);
                }
                const double ref = to_double(integrate_monomial(i, j, k));
                if (std::abs(acc - ref) > 1e-14 * std::max(1.0, std::abs(ref)))
                    throw InvariantViolation(
                        "quadrature rule fails monomial self check");
            }
        }
    }
}

} // namespace detail

// Builds a rule exact for polynomials of total degree >= min_degree.
// Degrees up to 2 use the classic interior three point rule, up to 5 the
// seven point rule, and up to 10 a tensor Gauss-Legendre rule collapsed onto
// the triangle. Higher degrees are not provided.
inline QuadratureRule make_rule(int min_degree) {
    if (min_degree < 0 || min_degree > 10)
        throw UnsupportedDegree("make_rule: degree must be between 0 and 10");
    QuadratureRule r;
    if (min_degree <= 2) {
        r.degree = 2;
        const double a = 2.0 / 3.0, b = 1.0 / 6.0, w = 1.0 / 3.0;
        r.points = {{a, b, b}, {b, a, b}, {b, b, a}};
        r.weights = {w, w, w};
    } else if (min_degree <= 5) {
        r.degree = 5;
        const double s = std::sqrt(15.0);
        const double b1 = (6.0 - s) / 21.0, a1 = 1.0 - 2.0 * b1;
        const double b2 = (6.0 + s) / 21.0, a2 = 1.0 - 2.0 * b2;
        const double w0 = 9.0 / 40.0;
        const double w1 = (155.0 - s) / 1200.0;
        const double w2 = (155.0 + s) / 1200.0;
        const double c = 1.0 / 3.0;
        r.points = {{c, c, c},    {a1, b1, b1}, {b1, a1, b1}, {b1, b1, a1},
                    {a2, b2, b2}, {b2, a2, b2}, {b2, b2, a2}};
        r.weights = {w0, w1, w1, w1, w2, w2, w2};
    } else {
        // Collapsed product rule: L2 = u, L3 = (1 - u) t with u, t
        // Gauss-Legendre on [0, 1]. The Jacobian factor (1 - u) raises the
        // u-degree by one, so n = 6 (exact through degree 11 per axis)
        // covers total degree 10.
        r.degree = 10;
        std::vector<double> gx, gw;
        detail::gauss_legendre_unit(6, gx, gw);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                const double L2 = gx[i];
                const double L3 = (1.0 - gx[i]) * gx[j];
                r.points.push_back({1.0 - L2 - L3, L2, L3});
                r.weights.push_back(2.0 * gw[i] * gw[j] * (1.0 - gx[i]));
            }
        }
    }
    detail::validate_rule(r);
    return r;
}

// Integrates the product of two six-component fields over the triangle:
// M(i, j) = area * sum_q w_q row(L_q)[i] * col(L_q)[j]. The callables take a
// point in area coordinates and return the six per-basis values there.
template <class RowEval, class ColEval>
Mat6d integrate_bilinear(const QuadratureRule& r, double area, RowEval&& row,
                         ColEval&& col) {
    Mat6d m{};
    for (std::size_t q = 0; q < r.points.size(); ++q) {
        const Vec6 f = row(r.points[q]);
        const Vec6 g = col(r.points[q]);
        const double w = area * r.weights[q];
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) m(i, j) += w * f[i] * g[j];
        }
    }
    return m;
}

} // namespace qtem
