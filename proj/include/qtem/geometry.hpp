#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>

#include "qtem/errors.hpp"

namespace qtem {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

using Vec3 = std::array<double, 3>;

// Precomputed data of one straight-sided triangle.
//
// a, b, c are the affine coefficients of the area (barycentric) coordinates:
// L_k = (a_k + b_k x + c_k y) / (2 area). They obey, for cyclic (k, l, m),
//   a_k = x_l y_m - x_m y_l,  b_k = y_l - y_m,  c_k = x_m - x_l,
// so b and c each sum to zero and the a_k sum to twice the area.
//
// edge_len[k] is the unsigned length of edge k, where edge 1 runs corner 1 ->
// corner 2, edge 2 runs 2 -> 3 and edge 3 runs 3 -> 1. Equivalently
// edge_len[k] = sqrt(b_m^2 + c_m^2) with m the third cyclic index after k.
// edge_sign[k] holds the +-1 orientation factor the vector basis attaches to
// that edge; standalone triangles default to +1 and assembly applies the
// global orientation through the DOF map instead.
struct TriangleGeometry {
    std::array<Point2, 3> corners{};
    Vec3 a{}, b{}, c{};
    double area = 0.0;
    Vec3 edge_len{};
    std::array<int, 3> edge_sign{1, 1, 1};

    double signed_edge_len(int k) const { return edge_sign[k] * edge_len[k]; }
};

// Corner order is normalized to counterclockwise by swapping corners 2 and 3
// when the signed area comes out negative. Throws DegenerateTriangle when the
// area is zero within 1e-14 of the squared longest edge.
inline TriangleGeometry compute_geometry(std::array<Point2, 3> corners) {
    auto twice_area = [](const std::array<Point2, 3>& p) {
        return (p[1].x - p[0].x) * (p[2].y - p[0].y) -
               (p[2].x - p[0].x) * (p[1].y - p[0].y);
    };
    double det = twice_area(corners);
    if (det < 0.0) {
        std::swap(corners[1], corners[2]);
        det = twice_area(corners);
    }

    double longest_sq = 0.0;
    for (int k = 0; k < 3; ++k) {
        const Point2& p = corners[k];
        const Point2& q = corners[(k + 1) % 3];
        const double dx = q.x - p.x, dy = q.y - p.y;
        longest_sq = std::max(longest_sq, dx * dx + dy * dy);
    }
    if (!(det > 1e-14 * longest_sq)) {
        throw DegenerateTriangle("compute_geometry: corners are collinear or coincident");
    }

    TriangleGeometry g;
    g.corners = corners;
    for (int k = 0; k < 3; ++k) {
        const int l = (k + 1) % 3, m = (k + 2) % 3;
        g.a[k] = corners[l].x * corners[m].y - corners[m].x * corners[l].y;
        g.b[k] = corners[l].y - corners[m].y;
        g.c[k] = corners[m].x - corners[l].x;
    }
    g.area = 0.5 * det;
    for (int k = 0; k < 3; ++k) {
        const int m = (k + 2) % 3; // corner opposite the edge's far end
        g.edge_len[k] = std::sqrt(g.b[m] * g.b[m] + g.c[m] * g.c[m]);
    }
    return g;
}

inline TriangleGeometry with_edge_signs(TriangleGeometry g, std::array<int, 3> signs) {
    g.edge_sign = signs;
    return g;
}

// Area coordinates of an arbitrary point; points outside the triangle give
// values outside [0, 1], which is fine (the map is affine on the whole plane).
inline Vec3 area_coordinates(const TriangleGeometry& g, Point2 p) {
    const double inv = 1.0 / (2.0 * g.area);
    Vec3 L;
    for (int k = 0; k < 3; ++k) {
        L[k] = (g.a[k] + g.b[k] * p.x + g.c[k] * p.y) * inv;
    }
    return L;
}

inline Point2 point_at(const TriangleGeometry& g, const Vec3& L) {
    Point2 p;
    p.x = L[0] * g.corners[0].x + L[1] * g.corners[1].x + L[2] * g.corners[2].x;
    p.y = L[0] * g.corners[0].y + L[1] * g.corners[1].y + L[2] * g.corners[2].y;
    return p;
}

// Cheap content hash so cached element matrices can be checked against the
// geometry they were computed from.
inline std::uint64_t geometry_fingerprint(const TriangleGeometry& g) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* data, std::size_t n) {
        const unsigned char* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= bytes[i];
            h *= 1099511628211ull;
        }
    };
    mix(g.corners.data(), sizeof(g.corners));
    mix(g.edge_sign.data(), sizeof(g.edge_sign));
    return h;
}

} // namespace qtem
