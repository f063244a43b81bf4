#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qtem/errors.hpp"
#include "qtem/mesh.hpp"

namespace qtem {

enum class FieldType { nodal, edge };

// One slot of an element-to-global scatter: the global dof (or no_dof for an
// eliminated one) and the orientation sign applied on scatter.
struct DofEntry {
    std::ptrdiff_t dof = -1;
    double sign = 1.0;
};

inline constexpr std::ptrdiff_t no_dof = -1;

struct DofMap {
    FieldType field = FieldType::nodal;
    std::size_t n_dofs = 0;
    std::vector<std::array<DofEntry, 6>> element_dofs;

    // nodal field: global node id to dof
    std::vector<std::ptrdiff_t> node_dof;

    // edge field: per mesh edge the endpoint node ids (smaller first) and the
    // two dofs (tangential hat anchored at the smaller, then the larger id)
    std::vector<std::array<std::size_t, 2>> edge_nodes;
    std::vector<std::array<std::ptrdiff_t, 2>> edge_dofs;
};

// Scalar field, one dof per node. With eliminate_boundary the nodes in the
// mesh boundary list are dropped (homogeneous essential conditions).
inline DofMap make_nodal_dof_map(const Mesh& mesh, bool eliminate_boundary) {
    DofMap dm;
    dm.field = FieldType::nodal;
    std::vector<char> on_boundary(mesh.nodes.size(), 0);
    if (eliminate_boundary) {
        for (std::size_t id : mesh.boundary) on_boundary[id] = 1;
    }
    dm.node_dof.assign(mesh.nodes.size(), no_dof);
    for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
        if (!on_boundary[i])
            dm.node_dof[i] = static_cast<std::ptrdiff_t>(dm.n_dofs++);
    }
    dm.element_dofs.resize(mesh.elements.size());
    for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
        for (std::size_t k = 0; k < 6; ++k)
            dm.element_dofs[e][k] = {dm.node_dof[mesh.elements[e][k]], 1.0};
    }
    return dm;
}

// Tangential vector field, two dofs per edge. Global edge direction runs
// from the smaller to the larger endpoint id; the first dof is the
// tangential hat anchored at the smaller id, the second at the larger. A
// local edge traversed against that direction picks up swapped slots and a
// flipped sign, which makes tangential traces match across elements. With
// eliminate_boundary, edges incident to exactly one element are dropped.
inline DofMap make_edge_dof_map(const Mesh& mesh, bool eliminate_boundary) {
    DofMap dm;
    dm.field = FieldType::edge;

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
    std::vector<int> incidence;
    for (const auto& el : mesh.elements) {
        for (std::size_t k = 0; k < 3; ++k) {
            const std::size_t p = el[k], q = el[(k + 1) % 3];
            const auto key = std::minmax(p, q);
            const auto [it, inserted] =
                edge_index.try_emplace(key, dm.edge_nodes.size());
            if (inserted) {
                dm.edge_nodes.push_back({key.first, key.second});
                incidence.push_back(0);
            }
            ++incidence[it->second];
        }
    }

    dm.edge_dofs.assign(dm.edge_nodes.size(), {no_dof, no_dof});
    for (std::size_t ei = 0; ei < dm.edge_nodes.size(); ++ei) {
        if (eliminate_boundary && incidence[ei] == 1) continue;
        dm.edge_dofs[ei][0] = static_cast<std::ptrdiff_t>(dm.n_dofs++);
        dm.edge_dofs[ei][1] = static_cast<std::ptrdiff_t>(dm.n_dofs++);
    }

    dm.element_dofs.resize(mesh.elements.size());
    for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
        const auto& el = mesh.elements[e];
        for (std::size_t k = 0; k < 3; ++k) {
            const std::size_t p = el[k], q = el[(k + 1) % 3];
            const auto key = std::minmax(p, q);
            const std::size_t ei = edge_index.at(key);
            const auto& dofs = dm.edge_dofs[ei];
            if (p < q) {
                dm.element_dofs[e][k] = {dofs[0], 1.0};
                dm.element_dofs[e][k + 3] = {dofs[1], 1.0};
            } else {
                dm.element_dofs[e][k] = {dofs[1], -1.0};
                dm.element_dofs[e][k + 3] = {dofs[0], -1.0};
            }
        }
    }
    return dm;
}

} // namespace qtem
