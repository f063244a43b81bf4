#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtem/errors.hpp"
#include "qtem/geometry.hpp"

namespace qtem {

// Six-node triangle mesh. Element connectivity lists the three corners
// counterclockwise followed by the midside nodes of edges (1,2), (2,3) and
// (3,1) in that order. boundary holds ids of nodes on the domain boundary.
struct Mesh {
    std::vector<Point2> nodes;
    std::vector<std::array<std::size_t, 6>> elements;
    std::vector<std::size_t> boundary;
};

inline TriangleGeometry element_geometry(const Mesh& mesh, std::size_t e) {
    const auto& el = mesh.elements[e];
    return compute_geometry(
        {mesh.nodes[el[0]], mesh.nodes[el[1]], mesh.nodes[el[2]]});
}

// Structural checks: ids in range, corners wound counterclockwise, midside
// nodes at the midpoints of their edges, boundary ids in range.
inline void validate_mesh(const Mesh& mesh) {
    const std::size_t n = mesh.nodes.size();
    for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
        const auto& el = mesh.elements[e];
        for (std::size_t k = 0; k < 6; ++k) {
            if (el[k] >= n)
                throw InvariantViolation("element " + std::to_string(e) +
                                         " references missing node");
        }
        const Point2 p1 = mesh.nodes[el[0]];
        const Point2 p2 = mesh.nodes[el[1]];
        const Point2 p3 = mesh.nodes[el[2]];
        const double det =
            (p2.x - p1.x) * (p3.y - p1.y) - (p3.x - p1.x) * (p2.y - p1.y);
        if (!(det > 0.0))
            throw InvariantViolation("element " + std::to_string(e) +
                                     " corners not counterclockwise");
        const std::array<std::array<std::size_t, 3>, 3> mids = {
            {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}}};
        for (const auto& mk : mids) {
            const Point2 a = mesh.nodes[el[mk[0]]];
            const Point2 b = mesh.nodes[el[mk[1]]];
            const Point2 m = mesh.nodes[el[mk[2]]];
            const double ex = b.x - a.x, ey = b.y - a.y;
            const double tol = 1e-9 * (std::hypot(ex, ey) + 1e-30);
            if (std::hypot(m.x - 0.5 * (a.x + b.x), m.y - 0.5 * (a.y + b.y)) >
                tol)
                throw InvariantViolation("element " + std::to_string(e) +
                                         " midside node off its edge midpoint");
        }
    }
    for (std::size_t id : mesh.boundary) {
        if (id >= n)
            throw InvariantViolation("boundary list references missing node");
    }
}

// Structured mesh of a width x height rectangle with nx x ny cells, each
// split into two triangles along the lower-left to upper-right diagonal.
// Nodes sit on the full half-step grid, so corner and midside nodes are
// shared exactly between neighboring elements.
inline Mesh gen_rect_mesh(double width, double height, int nx, int ny) {
    if (!(width > 0.0) || !(height > 0.0) || nx < 1 || ny < 1)
        throw InvalidDimensions("gen_rect_mesh: need positive size and cells");
    Mesh mesh;
    const int gx = 2 * nx + 1, gy = 2 * ny + 1;
    const auto gid = [gx](int ix, int iy) {
        return static_cast<std::size_t>(iy) * gx + ix;
    };
    mesh.nodes.reserve(static_cast<std::size_t>(gx) * gy);
    for (int iy = 0; iy < gy; ++iy) {
        for (int ix = 0; ix < gx; ++ix) {
            mesh.nodes.push_back(
                {width * ix / (2.0 * nx), height * iy / (2.0 * ny)});
        }
    }
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int x0 = 2 * i, y0 = 2 * j;
            mesh.elements.push_back({gid(x0, y0), gid(x0 + 2, y0),
                                     gid(x0 + 2, y0 + 2), gid(x0 + 1, y0),
                                     gid(x0 + 2, y0 + 1), gid(x0 + 1, y0 + 1)});
            mesh.elements.push_back({gid(x0, y0), gid(x0 + 2, y0 + 2),
                                     gid(x0, y0 + 2), gid(x0 + 1, y0 + 1),
                                     gid(x0 + 1, y0 + 2), gid(x0, y0 + 1)});
        }
    }
    for (int iy = 0; iy < gy; ++iy) {
        for (int ix = 0; ix < gx; ++ix) {
            if (ix == 0 || ix == gx - 1 || iy == 0 || iy == gy - 1)
                mesh.boundary.push_back(gid(ix, iy));
        }
    }
    validate_mesh(mesh);
    return mesh;
}

namespace detail {

inline std::string format_coord(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct MeshLineReader {
    std::istream& in;
    int line_no = 0;

    // Returns the next line with comments stripped, skipping blanks.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            const auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            bool blank = true;
            for (char ch : raw) {
                if (!std::isspace(static_cast<unsigned char>(ch))) {
                    blank = false;
                    break;
                }
            }
            if (blank) continue;
            out = raw;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(line_no) + ": " + what);
    }
};

} // namespace detail

inline void write_mesh(std::ostream& out, const Mesh& mesh) {
    out << "qtmesh 1\n";
    out << "nodes " << mesh.nodes.size() << "\n";
    for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
        out << i << " " << detail::format_coord(mesh.nodes[i].x) << " "
            << detail::format_coord(mesh.nodes[i].y) << "\n";
    }
    out << "elements " << mesh.elements.size() << "\n";
    for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
        out << e;
        for (std::size_t id : mesh.elements[e]) out << " " << id;
        out << "\n";
    }
    out << "boundary " << mesh.boundary.size() << "\n";
    for (std::size_t id : mesh.boundary) out << id << "\n";
}

inline void write_mesh_file(const std::string& path, const Mesh& mesh) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_mesh(out, mesh);
}

inline Mesh read_mesh(std::istream& in) {
    detail::MeshLineReader reader{in};
    std::string line;

    const auto expect_section = [&](const char* name) -> std::size_t {
        if (!reader.next(line)) reader.fail(std::string("expected '") + name +
                                            "' section before end of input");
        std::istringstream ls(line);
        std::string key;
        long long count = -1;
        if (!(ls >> key >> count) || key != name || count < 0)
            reader.fail(std::string("expected '") + name + " <count>'");
        std::string extra;
        if (ls >> extra) reader.fail("trailing tokens after section header");
        return static_cast<std::size_t>(count);
    };

    if (!reader.next(line)) reader.fail("empty input, expected 'qtmesh 1'");
    {
        std::istringstream ls(line);
        std::string magic;
        int version = 0;
        if (!(ls >> magic >> version) || magic != "qtmesh")
            reader.fail("expected header 'qtmesh 1'");
        if (version != 1)
            reader.fail("unsupported format version " +
                        std::to_string(version));
    }

    Mesh mesh;
    const std::size_t n_nodes = expect_section("nodes");
    mesh.nodes.reserve(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) {
        if (!reader.next(line)) reader.fail("unexpected end in node list");
        std::istringstream ls(line);
        std::size_t id = 0;
        double x = 0.0, y = 0.0;
        if (!(ls >> id >> x >> y)) reader.fail("expected 'id x y'");
        if (id != i)
            reader.fail("node ids must be sequential, expected " +
                        std::to_string(i));
        std::string extra;
        if (ls >> extra) reader.fail("trailing tokens after node entry");
        mesh.nodes.push_back({x, y});
    }

    const std::size_t n_elems = expect_section("elements");
    mesh.elements.reserve(n_elems);
    for (std::size_t e = 0; e < n_elems; ++e) {
        if (!reader.next(line)) reader.fail("unexpected end in element list");
        std::istringstream ls(line);
        std::size_t id = 0;
        std::array<std::size_t, 6> conn{};
        if (!(ls >> id)) reader.fail("expected element id");
        if (id != e)
            reader.fail("element ids must be sequential, expected " +
                        std::to_string(e));
        for (std::size_t k = 0; k < 6; ++k) {
            if (!(ls >> conn[k])) reader.fail("expected six node ids");
        }
        std::string extra;
        if (ls >> extra) reader.fail("trailing tokens after element entry");
        mesh.elements.push_back(conn);
    }

    const std::size_t n_bnd = expect_section("boundary");
    mesh.boundary.reserve(n_bnd);
    for (std::size_t i = 0; i < n_bnd; ++i) {
        if (!reader.next(line)) reader.fail("unexpected end in boundary list");
        std::istringstream ls(line);
        std::size_t id = 0;
        if (!(ls >> id)) reader.fail("expected boundary node id");
        std::string extra;
        if (ls >> extra) reader.fail("trailing tokens after boundary entry");
        mesh.boundary.push_back(id);
    }
    if (reader.next(line)) reader.fail("unexpected content after boundary list");

    validate_mesh(mesh);
    return mesh;
}

inline Mesh read_mesh_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return read_mesh(in);
}

} // namespace qtem
