#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "qtem/dof_map.hpp"
#include "qtem/mesh.hpp"
#include "qtem/shape.hpp"

// Two triangles sharing one edge, with the four corner node ids assigned by
// a permutation. Relabeling the corners exercises every relative orientation
// the edge dof map has to reconcile: the shared edge flips direction, and
// the edges around it change their global order.
namespace two_triangle {

inline const std::array<qtem::Point2, 4>& quad_points() {
    static const std::array<qtem::Point2, 4> pts = {
        {{0.0, 0.0}, {1.3, -0.2}, {0.9, 1.1}, {-0.3, 0.8}}};
    return pts;
}

// perm[k] is the global node id of quad corner k; the five edge midpoints
// take ids 4..8. The shared edge runs corner 0 to corner 2.
inline qtem::Mesh build_mesh(const std::array<int, 4>& perm) {
    const auto& P = quad_points();
    const auto mid = [&P](int a, int b) -> qtem::Point2 {
        return {0.5 * (P[a].x + P[b].x), 0.5 * (P[a].y + P[b].y)};
    };
    qtem::Mesh m;
    m.nodes.resize(9);
    for (int k = 0; k < 4; ++k) m.nodes[perm[k]] = P[k];
    m.nodes[4] = mid(0, 1);
    m.nodes[5] = mid(1, 2);
    m.nodes[6] = mid(0, 2);
    m.nodes[7] = mid(2, 3);
    m.nodes[8] = mid(3, 0);
    const auto id = [&perm](int k) { return static_cast<std::size_t>(perm[k]); };
    m.elements.push_back({id(0), id(1), id(2), 4, 5, 6});
    m.elements.push_back({id(0), id(2), id(3), 6, 7, 8});
    m.boundary = {id(0), id(1), id(2), id(3), 4, 5, 7, 8};
    std::sort(m.boundary.begin(), m.boundary.end());
    qtem::validate_mesh(m);
    return m;
}

// Orientation signature: how the relabeling orders the shared edge and the
// two edges flanking it. Eight values are possible.
inline int signature(const std::array<int, 4>& perm) {
    return (perm[0] < perm[2] ? 1 : 0) | (perm[0] < perm[1] ? 2 : 0) |
           (perm[0] < perm[3] ? 4 : 0);
}

// Worst tangential-trace mismatch across the shared edge for a random
// global coefficient vector.
inline double trace_mismatch(const qtem::Mesh& mesh, std::uint64_t seed) {
    using namespace qtem;
    const DofMap dm = make_edge_dof_map(mesh, /*eliminate_boundary=*/false);
    std::mt19937_64 rng(seed);
    std::vector<double> x(dm.n_dofs);
    for (double& v : x)
        v = (static_cast<double>(rng() % 2001u) - 1000.0) / 1000.0;

    const auto& P = quad_points();
    const double tx0 = P[2].x - P[0].x, ty0 = P[2].y - P[0].y;
    const double len = std::hypot(tx0, ty0);
    const double tx = tx0 / len, ty = ty0 / len;

    double worst = 0.0;
    for (double s : {0.1, 0.35, 0.6, 0.85}) {
        const Point2 p = {P[0].x + s * tx0, P[0].y + s * ty0};
        std::array<double, 2> trace{};
        for (std::size_t e = 0; e < 2; ++e) {
            const TriangleGeometry g = element_geometry(mesh, e);
            const UVEval uv = eval_UV(g, area_coordinates(g, p));
            double acc = 0.0;
            for (int i = 0; i < 6; ++i) {
                const DofEntry& de = dm.element_dofs[e][i];
                acc += de.sign * x[static_cast<std::size_t>(de.dof)] *
                       (uv.u[i] * tx + uv.v[i] * ty);
            }
            trace[e] = acc;
        }
        worst = std::max(worst, std::abs(trace[0] - trace[1]));
    }
    return worst;
}

} // namespace two_triangle
