#pragma once

#include <array>
#include <cstdint>

#include "qtem/geometry.hpp"
#include "qtem/mat6.hpp"
#include "qtem/matrix_kind.hpp"
#include "qtem/shape.hpp"

namespace qtem {

// Coefficient bundle the closed forms are evaluated over. The scalar type is
// a template parameter so the same transcription runs in double precision for
// production and in exact rational arithmetic (with the irrational edge
// lengths replaced by one) for the exact cross checks.
template <class T>
struct ElementCoeffs {
    std::array<T, 3> b{}, c{}, l{};
    T area{};
};

inline ElementCoeffs<double> element_coeffs(const TriangleGeometry& g) {
    ElementCoeffs<double> ec;
    for (int k = 0; k < 3; ++k) {
        ec.b[k] = g.b[k];
        ec.c[k] = g.c[k];
        ec.l[k] = g.signed_edge_len(k);
    }
    ec.area = g.area;
    return ec;
}

namespace detail {

// The tables below are verbatim transcriptions of the published closed
// forms. Several matrices of the set are stated as one table plus a symbol
// substitution (b for c, or the row and column coefficient families chosen
// independently); those appear here once, parameterized on the substituted
// arrays, and are instantiated per kind. Entries are intentionally kept in
// the exact shape they are published in, with no algebraic simplification,
// so the verification sweep certifies the printed expressions themselves.

template <class T>
Mat6<T> scale(Mat6<T> m, const T& s) {
    for (auto& x : m.e) x = x * s;
    return m;
}

// (N, N) products: constant integer table times area / 180.
template <class T>
Mat6<T> mass_table(const ElementCoeffs<T>& ec) {
    constexpr int t[36] = {
        6,  -1, -1, 0,  -4, 0,   //
        -1, 6,  -1, 0,  0,  -4,  //
        -1, -1, 6,  -4, 0,  0,   //
        0,  0,  -4, 32, 16, 16,  //
        -4, 0,  0,  16, 32, 16,  //
        0,  -4, 0,  16, 16, 32,
    };
    Mat6<T> m;
    for (int i = 0; i < 36; ++i) m.e[i] = T(t[i]) * ec.area / 180;
    return m;
}

// Same-direction stiffness (dNx with dNx uses d = b, dNy with dNy uses
// d = c), prefactor 1 / (3 area).
template <class T>
Mat6<T> stiff_same_table(const std::array<T, 3>& d, const T& area) {
    const T &d1 = d[0], &d2 = d[1], &d3 = d[2];
    Mat6<T> m;
    m(0, 0) = 3 * d1 * d1 / 4;
    m(0, 1) = -d1 * d2 / 4;
    m(0, 2) = -d1 * d3 / 4;
    m(0, 3) = d1 * d2;
    m(0, 4) = T(0);
    m(0, 5) = d1 * d3;
    m(1, 0) = -d1 * d2 / 4;
    m(1, 1) = 3 * d2 * d2 / 4;
    m(1, 2) = -d2 * d3 / 4;
    m(1, 3) = d1 * d2;
    m(1, 4) = d2 * d3;
    m(1, 5) = T(0);
    m(2, 0) = -d1 * d3 / 4;
    m(2, 1) = -d2 * d3 / 4;
    m(2, 2) = 3 * d3 * d3 / 4;
    m(2, 3) = T(0);
    m(2, 4) = d2 * d3;
    m(2, 5) = d1 * d3;
    m(3, 0) = d1 * d2;
    m(3, 1) = d1 * d2;
    m(3, 2) = T(0);
    m(3, 3) = 2 * (d1 * d1 + d2 * d2 + d1 * d2);
    m(3, 4) = 2 * d1 * d3;
    m(3, 5) = 2 * d2 * d3;
    m(4, 0) = T(0);
    m(4, 1) = d2 * d3;
    m(4, 2) = d2 * d3;
    m(4, 3) = 2 * d1 * d3;
    m(4, 4) = 2 * (d2 * d2 + d3 * d3 + d2 * d3);
    m(4, 5) = 2 * d1 * d2;
    m(5, 0) = d1 * d3;
    m(5, 1) = T(0);
    m(5, 2) = d1 * d3;
    m(5, 3) = 2 * d2 * d3;
    m(5, 4) = 2 * d1 * d2;
    m(5, 5) = 2 * (d1 * d1 + d3 * d3 + d1 * d3);
    return scale(m, T(1) / (3 * area));
}

// (dNy, dNx) products, prefactor 1 / (3 area).
template <class T>
Mat6<T> stiff_cross_table(const ElementCoeffs<T>& ec) {
    const T &b1 = ec.b[0], &b2 = ec.b[1], &b3 = ec.b[2];
    const T &c1 = ec.c[0], &c2 = ec.c[1], &c3 = ec.c[2];
    Mat6<T> m;
    m(0, 0) = 3 * b1 * c1 / 4;
    m(0, 1) = -b2 * c1 / 4;
    m(0, 2) = -b3 * c1 / 4;
    m(0, 3) = b2 * c1;
    m(0, 4) = T(0);
    m(0, 5) = b3 * c1;
    m(1, 0) = -b1 * c2 / 4;
    m(1, 1) = 3 * b2 * c2 / 4;
    m(1, 2) = -b3 * c2 / 4;
    m(1, 3) = b1 * c2;
    m(1, 4) = b3 * c2;
    m(1, 5) = T(0);
    m(2, 0) = -b1 * c3 / 4;
    m(2, 1) = -b2 * c3 / 4;
    m(2, 2) = 3 * b3 * c3 / 4;
    m(2, 3) = T(0);
    m(2, 4) = b2 * c3;
    m(2, 5) = b1 * c3;
    m(3, 0) = b1 * c2;
    m(3, 1) = b2 * c1;
    m(3, 2) = T(0);
    m(3, 3) = b1 * c1 + b2 * c2 + b3 * c3;
    m(3, 4) = b3 * c1 + b1 * c3;
    m(3, 5) = b3 * c2 + b2 * c3;
    m(4, 0) = T(0);
    m(4, 1) = b2 * c3;
    m(4, 2) = b3 * c2;
    m(4, 3) = b1 * c3 + b3 * c1;
    m(4, 4) = b1 * c1 + b2 * c2 + b3 * c3;
    m(4, 5) = b1 * c2 + b2 * c1;
    m(5, 0) = b1 * c3;
    m(5, 1) = T(0);
    m(5, 2) = b3 * c1;
    m(5, 3) = b2 * c3 + b3 * c2;
    m(5, 4) = b2 * c1 + b1 * c2;
    m(5, 5) = b1 * c1 + b2 * c2 + b3 * c3;
    return scale(m, T(1) / (3 * ec.area));
}

// (N, dNx) products with d = b, (N, dNy) with d = c; prefactor 1/30.
template <class T>
Mat6<T> n_dn_table(const std::array<T, 3>& d) {
    const T &d1 = d[0], &d2 = d[1], &d3 = d[2];
    Mat6<T> m;
    m(0, 0) = 2 * d1;
    m(0, 1) = -d2;
    m(0, 2) = -d3;
    m(0, 3) = -d1 + 2 * d2;
    m(0, 4) = -d2 - d3;
    m(0, 5) = -d1 + 2 * d3;
    m(1, 0) = -d1;
    m(1, 1) = 2 * d2;
    m(1, 2) = -d3;
    m(1, 3) = -d2 + 2 * d1;
    m(1, 4) = -d2 + 2 * d3;
    m(1, 5) = -d1 - d3;
    m(2, 0) = -d1;
    m(2, 1) = -d2;
    m(2, 2) = 2 * d3;
    m(2, 3) = -d1 - d2;
    m(2, 4) = -d3 + 2 * d2;
    m(2, 5) = -d3 + 2 * d1;
    m(3, 0) = 3 * d1;
    m(3, 1) = 3 * d2;
    m(3, 2) = -d3;
    m(3, 3) = 8 * (d1 + d2);
    m(3, 4) = 4 * (d2 + 2 * d3);
    m(3, 5) = 4 * (d1 + 2 * d3);
    m(4, 0) = -d1;
    m(4, 1) = 3 * d2;
    m(4, 2) = 3 * d3;
    m(4, 3) = 4 * (d2 + 2 * d1);
    m(4, 4) = 8 * (d2 + d3);
    m(4, 5) = 4 * (d3 + 2 * d1);
    m(5, 0) = 3 * d1;
    m(5, 1) = -d2;
    m(5, 2) = 3 * d3;
    m(5, 3) = 4 * (d1 + 2 * d2);
    m(5, 4) = 4 * (d3 + 2 * d2);
    m(5, 5) = 8 * (d1 + d3);
    return scale(m, T(1) / 30);
}

// Vector component against scalar partial. r is the coefficient family of
// the vector side (b for U rows, c for V rows) and q the family of the
// scalar side (b for dNx columns, c for dNy columns); prefactor 1/(12 area).
// The q entries in the first three columns come from the scalar side as
// published, i.e. column k of the corner block pairs with q_k.
template <class T>
Mat6<T> vec_dn_table(const std::array<T, 3>& r, const std::array<T, 3>& q,
                     const std::array<T, 3>& l, const T& area) {
    const T &r1 = r[0], &r2 = r[1], &r3 = r[2];
    const T &q1 = q[0], &q2 = q[1], &q3 = q[2];
    const T &l1 = l[0], &l2 = l[1], &l3 = l[2];
    Mat6<T> m;
    m(0, 0) = l1 * q1 * r2;
    m(0, 1) = T(0);
    m(0, 2) = T(0);
    m(0, 3) = l1 * r2 * (q1 + 2 * q2);
    m(0, 4) = l1 * r2 * (q2 + q3);
    m(0, 5) = l1 * r2 * (q1 + 2 * q3);
    m(1, 0) = T(0);
    m(1, 1) = l2 * q2 * r3;
    m(1, 2) = T(0);
    m(1, 3) = l2 * r3 * (q2 + 2 * q1);
    m(1, 4) = l2 * r3 * (q2 + 2 * q3);
    m(1, 5) = l2 * r3 * (q1 + q3);
    m(2, 0) = T(0);
    m(2, 1) = T(0);
    m(2, 2) = l3 * q3 * r1;
    m(2, 3) = l3 * r1 * (q1 + q2);
    m(2, 4) = l3 * r1 * (q3 + 2 * q2);
    m(2, 5) = l3 * r1 * (q3 + 2 * q1);
    m(3, 0) = T(0);
    m(3, 1) = -l1 * q2 * r1;
    m(3, 2) = T(0);
    m(3, 3) = -l1 * r1 * (q2 + 2 * q1);
    m(3, 4) = -l1 * r1 * (q2 + 2 * q3);
    m(3, 5) = -l1 * r1 * (q1 + q3);
    m(4, 0) = T(0);
    m(4, 1) = T(0);
    m(4, 2) = -l2 * q3 * r2;
    m(4, 3) = -l2 * r2 * (q1 + q2);
    m(4, 4) = -l2 * r2 * (q3 + 2 * q2);
    m(4, 5) = -l2 * r2 * (q3 + 2 * q1);
    m(5, 0) = -l3 * q1 * r3;
    m(5, 1) = T(0);
    m(5, 2) = T(0);
    m(5, 3) = -l3 * r3 * (q1 + 2 * q2);
    m(5, 4) = -l3 * r3 * (q2 + q3);
    m(5, 5) = -l3 * r3 * (q1 + 2 * q3);
    return scale(m, T(1) / (12 * area));
}

// Vector component against vector component. r is the coefficient family of
// the rows, q of the columns: (b, b) gives the UU table, (c, c) the VV table
// and (b, c) the UV table; prefactor 1/(48 area).
template <class T>
Mat6<T> vec_vec_table(const std::array<T, 3>& r, const std::array<T, 3>& q,
                      const std::array<T, 3>& l, const T& area) {
    const T &r1 = r[0], &r2 = r[1], &r3 = r[2];
    const T &q1 = q[0], &q2 = q[1], &q3 = q[2];
    const T &l1 = l[0], &l2 = l[1], &l3 = l[2];
    Mat6<T> m;
    m(0, 0) = 2 * l1 * l1 * r2 * q2;
    m(0, 1) = l1 * l2 * r2 * q3;
    m(0, 2) = l1 * l3 * r2 * q1;
    m(0, 3) = -l1 * l1 * r2 * q1;
    m(0, 4) = -l1 * l2 * r2 * q2;
    m(0, 5) = -2 * l1 * l3 * r2 * q3;
    m(1, 0) = l1 * l2 * r3 * q2;
    m(1, 1) = 2 * l2 * l2 * r3 * q3;
    m(1, 2) = l2 * l3 * r3 * q1;
    m(1, 3) = -2 * l1 * l2 * r3 * q1;
    m(1, 4) = -l2 * l2 * r3 * q2;
    m(1, 5) = -l2 * l3 * r3 * q3;
    m(2, 0) = l1 * l3 * r1 * q2;
    m(2, 1) = l2 * l3 * r1 * q3;
    m(2, 2) = 2 * l3 * l3 * r1 * q1;
    m(2, 3) = -l1 * l3 * r1 * q1;
    m(2, 4) = -2 * l2 * l3 * r1 * q2;
    m(2, 5) = -l3 * l3 * r1 * q3;
    m(3, 0) = -l1 * l1 * r1 * q2;
    m(3, 1) = -2 * l1 * l2 * r1 * q3;
    m(3, 2) = -l1 * l3 * r1 * q1;
    m(3, 3) = 2 * l1 * l1 * r1 * q1;
    m(3, 4) = l1 * l2 * r1 * q2;
    m(3, 5) = l1 * l3 * r1 * q3;
    m(4, 0) = -l1 * l2 * r2 * q2;
    m(4, 1) = -l2 * l2 * r2 * q3;
    m(4, 2) = -2 * l2 * l3 * r2 * q1;
    m(4, 3) = l1 * l2 * r2 * q1;
    m(4, 4) = 2 * l2 * l2 * r2 * q2;
    m(4, 5) = l2 * l3 * r2 * q3;
    m(5, 0) = -2 * l1 * l3 * r3 * q2;
    m(5, 1) = -l2 * l3 * r3 * q3;
    m(5, 2) = -l3 * l3 * r3 * q1;
    m(5, 3) = l1 * l3 * r3 * q1;
    m(5, 4) = l2 * l3 * r3 * q2;
    m(5, 5) = 2 * l3 * l3 * r3 * q3;
    return scale(m, T(1) / (48 * area));
}

// Cross-partial products of one component with itself. (p, q) = (b, c) gives
// the (dUy, dUy) table; the (dVx, dVx) table is published as the same table
// under the exchange of b and c, so it is produced here by swapping the
// arguments. Prefactor 1/(16 area^3); the table itself is symmetric.
template <class T>
Mat6<T> dpart_same_table(const std::array<T, 3>& p, const std::array<T, 3>& q,
                         const std::array<T, 3>& l, const T& area) {
    const T &p1 = p[0], &p2 = p[1], &p3 = p[2];
    const T &q1 = q[0], &q2 = q[1], &q3 = q[2];
    const T &l1 = l[0], &l2 = l[1], &l3 = l[2];
    Mat6<T> m;
    m(0, 0) = l1 * l1 * p2 * p2 * q1 * q1;
    m(0, 1) = l1 * l2 * p2 * p3 * q1 * q2;
    m(0, 2) = l1 * l3 * p1 * p2 * q1 * q3;
    m(0, 3) = -l1 * l1 * p1 * p2 * q1 * q2;
    m(0, 4) = -l1 * l2 * p2 * p2 * q1 * q3;
    m(0, 5) = -l1 * l3 * p2 * p3 * q1 * q1;
    m(1, 1) = l2 * l2 * p3 * p3 * q2 * q2;
    m(1, 2) = l2 * l3 * p1 * p3 * q2 * q3;
    m(1, 3) = -l1 * l2 * p1 * p3 * q2 * q2;
    m(1, 4) = -l2 * l2 * p2 * p3 * q2 * q3;
    m(1, 5) = -l2 * l3 * p3 * p3 * q1 * q2;
    m(2, 2) = l3 * l3 * p1 * p1 * q3 * q3;
    m(2, 3) = -l1 * l3 * p1 * p1 * q2 * q3;
    m(2, 4) = -l2 * l3 * p1 * p2 * q3 * q3;
    m(2, 5) = -l3 * l3 * p1 * p3 * q1 * q3;
    m(3, 3) = l1 * l1 * p1 * p1 * q2 * q2;
    m(3, 4) = l1 * l2 * p1 * p2 * q2 * q3;
    m(3, 5) = l1 * l3 * p1 * p3 * q1 * q2;
    m(4, 4) = l2 * l2 * p2 * p2 * q3 * q3;
    m(4, 5) = l2 * l3 * p2 * p3 * q1 * q3;
    m(5, 5) = l3 * l3 * p3 * p3 * q1 * q1;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < i; ++j) m(i, j) = m(j, i);
    }
    return scale(m, T(1) / (16 * area * area * area));
}

// (dUy, dVx) products, full nonsymmetric table, prefactor 1/(16 area^3).
template <class T>
Mat6<T> dpart_cross_table(const ElementCoeffs<T>& ec) {
    const T &b1 = ec.b[0], &b2 = ec.b[1], &b3 = ec.b[2];
    const T &c1 = ec.c[0], &c2 = ec.c[1], &c3 = ec.c[2];
    const T &l1 = ec.l[0], &l2 = ec.l[1], &l3 = ec.l[2];
    Mat6<T> m;
    m(0, 0) = l1 * l1 * b1 * b2 * c1 * c2;
    m(0, 1) = l1 * l2 * b2 * b2 * c1 * c3;
    m(0, 2) = l1 * l3 * b2 * b3 * c1 * c1;
    m(0, 3) = -l1 * l1 * b2 * b2 * c1 * c1;
    m(0, 4) = -l1 * l2 * b2 * b3 * c1 * c2;
    m(0, 5) = -l1 * l3 * b1 * b2 * c1 * c3;
    m(1, 0) = l1 * l2 * b1 * b3 * c2 * c2;
    m(1, 1) = l2 * l2 * b2 * b3 * c2 * c3;
    m(1, 2) = l2 * l3 * b3 * b3 * c1 * c2;
    m(1, 3) = -l1 * l2 * b2 * b3 * c1 * c2;
    m(1, 4) = -l2 * l2 * b3 * b3 * c2 * c2;
    m(1, 5) = -l2 * l3 * b1 * b3 * c2 * c3;
    m(2, 0) = l1 * l3 * b1 * b1 * c2 * c3;
    m(2, 1) = l2 * l3 * b1 * b2 * c3 * c3;
    m(2, 2) = l3 * l3 * b1 * b3 * c1 * c3;
    m(2, 3) = -l1 * l3 * b1 * b2 * c1 * c3;
    m(2, 4) = -l2 * l3 * b1 * b3 * c2 * c3;
    m(2, 5) = -l3 * l3 * b1 * b1 * c3 * c3;
    m(3, 0) = -l1 * l1 * b1 * b1 * c2 * c2;
    m(3, 1) = -l1 * l2 * b1 * b2 * c2 * c3;
    m(3, 2) = -l1 * l3 * b1 * b3 * c1 * c2;
    m(3, 3) = l1 * l1 * b1 * b2 * c1 * c2;
    m(3, 4) = l1 * l2 * b1 * b3 * c2 * c2;
    m(3, 5) = l1 * l3 * b1 * b1 * c2 * c3;
    m(4, 0) = -l1 * l2 * b1 * b2 * c2 * c3;
    m(4, 1) = -l2 * l2 * b2 * b2 * c3 * c3;
    m(4, 2) = -l2 * l3 * b2 * b3 * c1 * c3;
    m(4, 3) = l1 * l2 * b2 * b2 * c1 * c3;
    m(4, 4) = l2 * l2 * b2 * b3 * c2 * c3;
    m(4, 5) = l2 * l3 * b1 * b2 * c3 * c3;
    m(5, 0) = -l1 * l3 * b1 * b3 * c1 * c2;
    m(5, 1) = -l2 * l3 * b2 * b3 * c1 * c3;
    m(5, 2) = -l3 * l3 * b3 * b3 * c1 * c1;
    m(5, 3) = l1 * l3 * b2 * b3 * c1 * c1;
    m(5, 4) = l2 * l3 * b3 * b3 * c1 * c2;
    m(5, 5) = l3 * l3 * b1 * b3 * c1 * c3;
    return scale(m, T(1) / (16 * ec.area * ec.area * ec.area));
}

} // namespace detail

// Closed-form element matrix of one kind over an arbitrary scalar type.
template <class T>
Mat6<T> element_matrix_t(MatrixKind kind, const ElementCoeffs<T>& ec) {
    using namespace detail;
    switch (kind) {
        case MatrixKind::mass_NN:  return mass_table(ec);
        case MatrixKind::stiff_xx: return stiff_same_table(ec.b, ec.area);
        case MatrixKind::stiff_yy: return stiff_same_table(ec.c, ec.area);
        case MatrixKind::stiff_yx: return stiff_cross_table(ec);
        case MatrixKind::N_dNx:    return n_dn_table(ec.b);
        case MatrixKind::N_dNy:    return n_dn_table(ec.c);
        case MatrixKind::U_dNx:    return vec_dn_table(ec.b, ec.b, ec.l, ec.area);
        case MatrixKind::V_dNx:    return vec_dn_table(ec.c, ec.b, ec.l, ec.area);
        case MatrixKind::U_dNy:    return vec_dn_table(ec.b, ec.c, ec.l, ec.area);
        case MatrixKind::V_dNy:    return vec_dn_table(ec.c, ec.c, ec.l, ec.area);
        case MatrixKind::UU:       return vec_vec_table(ec.b, ec.b, ec.l, ec.area);
        case MatrixKind::VV:       return vec_vec_table(ec.c, ec.c, ec.l, ec.area);
        case MatrixKind::UV:       return vec_vec_table(ec.b, ec.c, ec.l, ec.area);
        case MatrixKind::dUy_dUy:  return dpart_same_table(ec.b, ec.c, ec.l, ec.area);
        case MatrixKind::dVx_dVx:  return dpart_same_table(ec.c, ec.b, ec.l, ec.area);
        case MatrixKind::dUy_dVx:  return dpart_cross_table(ec);
    }
    throw UnsupportedKind("element_matrix_t: unknown matrix kind");
}

// The widely circulated variant of the (3, 3) entry of dVx_dVx, which keeps
// the b factors of the dUy_dUy table instead of exchanging them with c. The
// verification report evaluates both candidates against the integration
// oracles and records which one they confirm.
template <class T>
T dvx_dvx_variant_entry_33(const ElementCoeffs<T>& ec) {
    const T num = ec.l[2] * ec.l[2] * ec.b[0] * ec.b[0] * ec.c[2] * ec.c[2];
    return num / (16 * ec.area * ec.area * ec.area);
}

struct ElementMatrix {
    MatrixKind kind{};
    Mat6d entries{};
    std::uint64_t fingerprint = 0;
};

inline ElementMatrix element_matrix(MatrixKind kind, const TriangleGeometry& g) {
    ElementMatrix em;
    em.kind = kind;
    em.entries = element_matrix_t(kind, element_coeffs(g));
    em.fingerprint = geometry_fingerprint(g);
    return em;
}

// Curl-curl matrix: the scalar curls are constant per basis function, so the
// matrix is area times the outer product of the curl vector (rank one and
// positive semidefinite by construction).
inline Mat6d curl_curl_matrix(const TriangleGeometry& g) {
    const Vec6 curl = curl_UV(g);
    Mat6d m;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) m(i, j) = g.area * curl[i] * curl[j];
    }
    return m;
}

// Vector mass matrix: sum of the UU and VV closed forms.
inline Mat6d vector_mass_matrix(const TriangleGeometry& g) {
    const ElementCoeffs<double> ec = element_coeffs(g);
    const Mat6d uu = element_matrix_t(MatrixKind::UU, ec);
    const Mat6d vv = element_matrix_t(MatrixKind::VV, ec);
    Mat6d m;
    for (int i = 0; i < 36; ++i) m.e[i] = uu.e[i] + vv.e[i];
    return m;
}

// Representation of the scalar gradients in the vector basis: column j holds
// the coefficients g_ij with grad N_j = sum_i g_ij (U_i, V_i) pointwise. The
// expansion follows from L1 + L2 + L3 = 1, which lets every L_t grad L_s
// term of grad N_j be matched with one basis function; the signed edge
// lengths divide out because each basis function carries exactly one.
inline Mat6d local_gradient_matrix(const TriangleGeometry& g) {
    const double l1 = g.signed_edge_len(0);
    const double l2 = g.signed_edge_len(1);
    const double l3 = g.signed_edge_len(2);
    Mat6d m{};
    // corner shapes
    m(0, 0) = -3.0 / l1;
    m(2, 0) = -1.0 / l3;
    m(3, 0) = 1.0 / l1;
    m(5, 0) = 3.0 / l3;
    m(0, 1) = -1.0 / l1;
    m(1, 1) = -3.0 / l2;
    m(3, 1) = 3.0 / l1;
    m(4, 1) = 1.0 / l2;
    m(1, 2) = -1.0 / l2;
    m(2, 2) = -3.0 / l3;
    m(4, 2) = 3.0 / l2;
    m(5, 2) = 1.0 / l3;
    // midside shapes
    m(0, 3) = 4.0 / l1;
    m(3, 3) = -4.0 / l1;
    m(1, 4) = 4.0 / l2;
    m(4, 4) = -4.0 / l2;
    m(2, 5) = 4.0 / l3;
    m(5, 5) = -4.0 / l3;
    return m;
}

} // namespace qtem
