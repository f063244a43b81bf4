#pragma once

#include <array>

#include "qtem/geometry.hpp"

namespace qtem {

using Vec6 = std::array<double, 6>;
using Grad6 = std::array<std::array<double, 2>, 6>;

// Construction tables of the six edge vector basis functions. Component i is
//   U_i = basis_sign[i] * l_e * b[basis_coef[i]] * L[basis_bary[i]] / (2 area)
// with e = basis_edge[i] and V_i the same with c in place of b. Bases 1..3
// are the first family of edges 1..3, bases 4..6 the second family.
inline constexpr int basis_edge[6] = {0, 1, 2, 0, 1, 2};
inline constexpr int basis_coef[6] = {1, 2, 0, 0, 1, 2};
inline constexpr int basis_bary[6] = {0, 1, 2, 1, 2, 0};
inline constexpr double basis_sign[6] = {1.0, 1.0, 1.0, -1.0, -1.0, -1.0};

// Quadratic scalar shape values: corners carry L(2L - 1), midside nodes 4LL.
inline Vec6 eval_N(const Vec3& L) {
    return {
        L[0] * (2.0 * L[0] - 1.0),
        L[1] * (2.0 * L[1] - 1.0),
        L[2] * (2.0 * L[2] - 1.0),
        4.0 * L[0] * L[1],
        4.0 * L[1] * L[2],
        4.0 * L[2] * L[0],
    };
}

// Cartesian gradients of the scalar shapes by the chain rule through the
// area coordinates (dL_k/dx = b_k / 2A, dL_k/dy = c_k / 2A).
inline Grad6 grad_N(const TriangleGeometry& g, const Vec3& L) {
    // dN_i/dL_k, row i, column k
    const double dNdL[6][3] = {
        {4.0 * L[0] - 1.0, 0.0, 0.0},
        {0.0, 4.0 * L[1] - 1.0, 0.0},
        {0.0, 0.0, 4.0 * L[2] - 1.0},
        {4.0 * L[1], 4.0 * L[0], 0.0},
        {0.0, 4.0 * L[2], 4.0 * L[1]},
        {4.0 * L[2], 0.0, 4.0 * L[0]},
    };
    const double inv = 1.0 / (2.0 * g.area);
    Grad6 out;
    for (int i = 0; i < 6; ++i) {
        double gx = 0.0, gy = 0.0;
        for (int k = 0; k < 3; ++k) {
            gx += dNdL[i][k] * g.b[k];
            gy += dNdL[i][k] * g.c[k];
        }
        out[i] = {gx * inv, gy * inv};
    }
    return out;
}

struct UVEval {
    Vec6 u{}; // x components
    Vec6 v{}; // y components
};

// Edge vector basis evaluated at one point, with the signed edge factors.
inline UVEval eval_UV(const TriangleGeometry& g, const Vec3& L) {
    const double inv = 1.0 / (2.0 * g.area);
    UVEval out;
    for (int i = 0; i < 6; ++i) {
        const double le = g.signed_edge_len(basis_edge[i]);
        const double common = basis_sign[i] * le * L[basis_bary[i]] * inv;
        out.u[i] = common * g.b[basis_coef[i]];
        out.v[i] = common * g.c[basis_coef[i]];
    }
    return out;
}

// Scalar curl dV_i/dx - dU_i/dy of each vector basis function. Both partials
// are constants, so the curl is one number per basis function.
inline Vec6 curl_UV(const TriangleGeometry& g) {
    const double inv4A2 = 1.0 / (4.0 * g.area * g.area);
    Vec6 out;
    for (int i = 0; i < 6; ++i) {
        const double le = g.signed_edge_len(basis_edge[i]);
        const int s = basis_coef[i], t = basis_bary[i];
        out[i] = basis_sign[i] * le * (g.c[s] * g.b[t] - g.b[s] * g.c[t]) * inv4A2;
    }
    return out;
}

// Everything at one point, for callers that want the whole bundle.
struct ShapeEval {
    Vec6 N{};
    Grad6 dN{};
    Vec6 U{}, V{};
    Vec6 curl{};
};

inline ShapeEval evaluate_shapes(const TriangleGeometry& g, const Vec3& L) {
    ShapeEval s;
    s.N = eval_N(L);
    s.dN = grad_N(g, L);
    const UVEval uv = eval_UV(g, L);
    s.U = uv.u;
    s.V = uv.v;
    s.curl = curl_UV(g);
    return s;
}

} // namespace qtem
