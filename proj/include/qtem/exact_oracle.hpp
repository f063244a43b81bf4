#pragma once

#include <array>

#include "qtem/area_poly.hpp"
#include "qtem/geometry.hpp"
#include "qtem/mat6.hpp"
#include "qtem/matrix_kind.hpp"
#include "qtem/shape.hpp"

namespace qtem {

struct RationalPoint {
    Rational x{0}, y{0};
};

// Rational analogue of TriangleGeometry. Edge lengths are irrational in
// general, so the exact route works with the edge factors stripped (every
// signed edge length replaced by one); the full matrix is recovered by
// scaling rows/columns of edge-based families with the signed lengths.
struct RationalTriangle {
    std::array<RationalPoint, 3> corners{};
    std::array<Rational, 3> a{}, b{}, c{};
    Rational area{0};
};

inline RationalTriangle rational_geometry(std::array<RationalPoint, 3> corners) {
    auto twice_area = [](const std::array<RationalPoint, 3>& p) {
        return (p[1].x - p[0].x) * (p[2].y - p[0].y) -
               (p[2].x - p[0].x) * (p[1].y - p[0].y);
    };
    Rational det = twice_area(corners);
    if (det < 0) {
        std::swap(corners[1], corners[2]);
        det = twice_area(corners);
    }
    if (det == 0) {
        throw DegenerateTriangle("rational_geometry: corners are collinear or coincident");
    }
    RationalTriangle t;
    t.corners = corners;
    for (int k = 0; k < 3; ++k) {
        const int l = (k + 1) % 3, m = (k + 2) % 3;
        t.a[k] = corners[l].x * corners[m].y - corners[m].x * corners[l].y;
        t.b[k] = corners[l].y - corners[m].y;
        t.c[k] = corners[m].x - corners[l].x;
    }
    t.area = det / 2;
    return t;
}

// Convenience overload: exact conversion of binary floating point corners.
inline RationalTriangle rational_geometry(const std::array<Point2, 3>& corners) {
    std::array<RationalPoint, 3> rc;
    for (int k = 0; k < 3; ++k)
        rc[k] = {rational_from_double(corners[k].x),
                 rational_from_double(corners[k].y)};
    return rational_geometry(rc);
}

namespace detail {

// The six scalar shapes as area coordinate polynomials.
inline std::array<AreaPolynomial, 6> shape_polys() {
    using P = AreaPolynomial;
    std::array<P, 6> N;
    N[0] = P::monomial(2, 0, 0, Rational(2)) + P::monomial(1, 0, 0, Rational(-1));
    N[1] = P::monomial(0, 2, 0, Rational(2)) + P::monomial(0, 1, 0, Rational(-1));
    N[2] = P::monomial(0, 0, 2, Rational(2)) + P::monomial(0, 0, 1, Rational(-1));
    N[3] = P::monomial(1, 1, 0, Rational(4));
    N[4] = P::monomial(0, 1, 1, Rational(4));
    N[5] = P::monomial(1, 0, 1, Rational(4));
    return N;
}

// dN_i/dL_k as polynomials, same layout as the numeric grad_N table.
inline std::array<std::array<AreaPolynomial, 3>, 6> shape_poly_partials() {
    using P = AreaPolynomial;
    std::array<std::array<P, 3>, 6> d;
    d[0][0] = P::monomial(1, 0, 0, Rational(4)) + P::constant(Rational(-1));
    d[1][1] = P::monomial(0, 1, 0, Rational(4)) + P::constant(Rational(-1));
    d[2][2] = P::monomial(0, 0, 1, Rational(4)) + P::constant(Rational(-1));
    d[3][0] = P::monomial(0, 1, 0, Rational(4));
    d[3][1] = P::monomial(1, 0, 0, Rational(4));
    d[4][1] = P::monomial(0, 0, 1, Rational(4));
    d[4][2] = P::monomial(0, 1, 0, Rational(4));
    d[5][0] = P::monomial(0, 0, 1, Rational(4));
    d[5][2] = P::monomial(1, 0, 0, Rational(4));
    return d;
}

// All seven field families of one triangle as polynomials, with edge factors
// stripped. dUy and dVx are degree zero but kept as polynomials so every
// matrix kind integrates through the same code path.
struct FamilyPolys {
    std::array<AreaPolynomial, 6> N, dNx, dNy, U, V, dUy, dVx;

    const std::array<AreaPolynomial, 6>& of(FieldFamily f) const {
        switch (f) {
            case FieldFamily::N:   return N;
            case FieldFamily::dNx: return dNx;
            case FieldFamily::dNy: return dNy;
            case FieldFamily::U:   return U;
            case FieldFamily::V:   return V;
            case FieldFamily::dUy: return dUy;
            case FieldFamily::dVx: return dVx;
        }
        throw UnsupportedKind("FamilyPolys::of: unknown family");
    }
};

inline FamilyPolys build_family_polys(const RationalTriangle& t) {
    FamilyPolys f;
    f.N = shape_polys();

    const auto dNdL = shape_poly_partials();
    const Rational inv2A = Rational(1) / (2 * t.area);
    for (int i = 0; i < 6; ++i) {
        AreaPolynomial gx, gy;
        for (int k = 0; k < 3; ++k) {
            gx += dNdL[i][k] * (t.b[k] * inv2A);
            gy += dNdL[i][k] * (t.c[k] * inv2A);
        }
        f.dNx[i] = gx;
        f.dNy[i] = gy;
    }

    const Rational inv4A2 = inv2A * inv2A;
    for (int i = 0; i < 6; ++i) {
        const int s = basis_coef[i], bt = basis_bary[i];
        const Rational sgn(basis_sign[i] > 0 ? 1 : -1);
        auto mono = [&](const Rational& coef) {
            return AreaPolynomial::monomial(bt == 0 ? 1 : 0, bt == 1 ? 1 : 0, bt == 2 ? 1 : 0,
                                            coef);
        };
        f.U[i] = mono(sgn * t.b[s] * inv2A);
        f.V[i] = mono(sgn * t.c[s] * inv2A);
        // d(L_t)/dy = c_t / 2A and d(L_t)/dx = b_t / 2A
        f.dUy[i] = AreaPolynomial::constant(sgn * t.b[s] * t.c[bt] * inv4A2);
        f.dVx[i] = AreaPolynomial::constant(sgn * t.c[s] * t.b[bt] * inv4A2);
    }
    return f;
}

} // namespace detail

// Precomputable family polynomials, shared when several kinds are checked on
// the same triangle.
using ExactFamilyTable = detail::FamilyPolys;

inline ExactFamilyTable build_family_table(const RationalTriangle& t) {
    return detail::build_family_polys(t);
}

// Exact element matrix of one kind: entry (i, j) is the integral of
// row_family_i times col_family_j over the triangle, computed symbolically
// and integrated with the closed-form monomial integrals. Edge length
// factors are stripped (replaced by one) so everything stays rational.
inline Mat6<Rational> exact_element_matrix(MatrixKind kind,
                                           const RationalTriangle& t,
                                           const ExactFamilyTable& fams) {
    const KindFamilies kf = kind_families(kind);
    const auto& rows = fams.of(kf.row);
    const auto& cols = fams.of(kf.col);
    Mat6<Rational> m;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            m(i, j) = integrate_poly(rows[i] * cols[j]) * t.area;
        }
    }
    return m;
}

inline Mat6<Rational> exact_element_matrix(MatrixKind kind,
                                           const RationalTriangle& t) {
    return exact_element_matrix(kind, t, build_family_table(t));
}

} // namespace qtem
