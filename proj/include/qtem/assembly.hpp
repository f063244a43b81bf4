#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include "qtem/dense.hpp"
#include "qtem/dof_map.hpp"
#include "qtem/element_matrices.hpp"
#include "qtem/errors.hpp"
#include "qtem/mesh.hpp"

namespace qtem {

// Compressed sparse row matrix produced by assembly.
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> row_ptr, col_idx;
    std::vector<double> vals;
};

inline DenseMatrix to_dense(const SparseMatrix& s) {
    DenseMatrix m(s.rows, s.cols);
    for (std::size_t i = 0; i < s.rows; ++i) {
        for (std::size_t k = s.row_ptr[i]; k < s.row_ptr[i + 1]; ++k)
            m(i, s.col_idx[k]) = s.vals[k];
    }
    return m;
}

// Matrices assembled from combinations of the elementary ones.
enum class DerivedKind { curl_curl, vector_mass };

struct WeightedTerm {
    double weight = 1.0;
    std::variant<MatrixKind, DerivedKind> kind;
};

namespace detail {

struct Triplet {
    std::size_t r, c;
    double v;
};

inline SparseMatrix triplets_to_csr(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet>& trips,
                                    bool add_duplicates) {
    std::sort(trips.begin(), trips.end(), [](const Triplet& a, const Triplet& b) {
        return a.r != b.r ? a.r < b.r : a.c < b.c;
    });
    SparseMatrix s;
    s.rows = rows;
    s.cols = cols;
    s.row_ptr.assign(rows + 1, 0);
    for (std::size_t i = 0; i < trips.size();) {
        std::size_t j = i + 1;
        double acc = trips[i].v;
        while (j < trips.size() && trips[j].r == trips[i].r &&
               trips[j].c == trips[i].c) {
            if (add_duplicates) {
                acc += trips[j].v;
            } else {
                // set semantics: contributions from different elements must
                // agree, up to roundoff in the geometric factors
                const double scale =
                    std::max({std::abs(acc), std::abs(trips[j].v), 1.0});
                if (std::abs(trips[j].v - acc) > 1e-9 * scale)
                    throw InvariantViolation(
                        "conflicting entries in single-valued assembly");
            }
            ++j;
        }
        s.col_idx.push_back(trips[i].c);
        s.vals.push_back(acc);
        ++s.row_ptr[trips[i].r + 1];
        i = j;
    }
    for (std::size_t r = 0; r < rows; ++r) s.row_ptr[r + 1] += s.row_ptr[r];
    return s;
}

inline FieldType term_row_field(const std::variant<MatrixKind, DerivedKind>& k) {
    if (std::holds_alternative<DerivedKind>(k)) return FieldType::edge;
    const KindFamilies fam = kind_families(std::get<MatrixKind>(k));
    return is_edge_family(fam.row) ? FieldType::edge : FieldType::nodal;
}

inline FieldType term_col_field(const std::variant<MatrixKind, DerivedKind>& k) {
    if (std::holds_alternative<DerivedKind>(k)) return FieldType::edge;
    const KindFamilies fam = kind_families(std::get<MatrixKind>(k));
    return is_edge_family(fam.col) ? FieldType::edge : FieldType::nodal;
}

inline Mat6d term_local_matrix(const std::variant<MatrixKind, DerivedKind>& k,
                               const TriangleGeometry& g) {
    if (std::holds_alternative<DerivedKind>(k)) {
        return std::get<DerivedKind>(k) == DerivedKind::curl_curl
                   ? curl_curl_matrix(g)
                   : vector_mass_matrix(g);
    }
    return element_matrix(std::get<MatrixKind>(k), g).entries;
}

} // namespace detail

// Assembles sum_t weight_t * M_t over the mesh, scattering rows through
// row_map and columns through col_map. Local matrices are computed in the
// element-local basis (positive edge orientation) and the dof map signs
// translate them to the shared global basis.
inline SparseMatrix assemble(const Mesh& mesh, const DofMap& row_map,
                             const DofMap& col_map,
                             const std::vector<WeightedTerm>& terms) {
    for (const auto& t : terms) {
        if (detail::term_row_field(t.kind) != row_map.field ||
            detail::term_col_field(t.kind) != col_map.field)
            throw KindFieldMismatch(
                "assemble: term field types do not match the dof maps");
    }
    std::vector<detail::Triplet> trips;
    for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
        const TriangleGeometry g = element_geometry(mesh, e);
        Mat6d local{};
        for (const auto& t : terms) {
            const Mat6d m = detail::term_local_matrix(t.kind, g);
            for (int i = 0; i < 36; ++i) local.e[i] += t.weight * m.e[i];
        }
        const auto& rdofs = row_map.element_dofs[e];
        const auto& cdofs = col_map.element_dofs[e];
        for (int i = 0; i < 6; ++i) {
            if (rdofs[i].dof == no_dof) continue;
            for (int j = 0; j < 6; ++j) {
                if (cdofs[j].dof == no_dof) continue;
                trips.push_back({static_cast<std::size_t>(rdofs[i].dof),
                                 static_cast<std::size_t>(cdofs[j].dof),
                                 rdofs[i].sign * cdofs[j].sign * local(i, j)});
            }
        }
    }
    return detail::triplets_to_csr(row_map.n_dofs, col_map.n_dofs, trips, true);
}

inline SparseMatrix assemble(const Mesh& mesh, const DofMap& dof_map,
                             const std::vector<WeightedTerm>& terms) {
    return assemble(mesh, dof_map, dof_map, terms);
}

// Global coefficient matrix of the scalar gradients in the edge basis:
// column j (a scalar dof) holds the expansion of grad N_j over the global
// vector dofs. Entries are single valued, so elements sharing an edge must
// produce the same coefficient; that is checked during the merge.
inline SparseMatrix assemble_gradient(const Mesh& mesh, const DofMap& edge_map,
                                      const DofMap& nodal_map) {
    if (edge_map.field != FieldType::edge ||
        nodal_map.field != FieldType::nodal)
        throw KindFieldMismatch("assemble_gradient: expected edge and nodal maps");
    std::vector<detail::Triplet> trips;
    for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
        const TriangleGeometry g = element_geometry(mesh, e);
        const Mat6d gm = local_gradient_matrix(g);
        const auto& rdofs = edge_map.element_dofs[e];
        const auto& cdofs = nodal_map.element_dofs[e];
        for (int i = 0; i < 6; ++i) {
            if (rdofs[i].dof == no_dof) continue;
            for (int j = 0; j < 6; ++j) {
                if (cdofs[j].dof == no_dof || gm(i, j) == 0.0) continue;
                trips.push_back({static_cast<std::size_t>(rdofs[i].dof),
                                 static_cast<std::size_t>(cdofs[j].dof),
                                 rdofs[i].sign * gm(i, j)});
            }
        }
    }
    return detail::triplets_to_csr(edge_map.n_dofs, nodal_map.n_dofs, trips,
                                   false);
}

} // namespace qtem
