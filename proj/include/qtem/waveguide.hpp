#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qtem/assembly.hpp"
#include "qtem/dof_map.hpp"
#include "qtem/eigensolver.hpp"
#include "qtem/errors.hpp"
#include "qtem/mesh.hpp"

namespace qtem {

enum class ModeType { tm, te };

struct CutoffResult {
    std::size_t n_dofs = 0;
    std::vector<double> kc;        // cutoff wavenumbers, ascending
    std::vector<double> lambda;    // the eigenvalues kc^2
    std::vector<double> residuals; // eigensolver residuals for these modes
};

// Cutoff wavenumbers of a hollow waveguide with the given cross-section
// mesh. The longitudinal field solves the scalar eigenproblem S u = kc^2 M u
// with the field clamped on the wall for tm modes and free for te modes; the
// spurious constant solution of the free problem is dropped.
inline CutoffResult waveguide_cutoffs(const Mesh& mesh, ModeType mode,
                                      std::size_t n_modes) {
    const DofMap dm =
        make_nodal_dof_map(mesh, /*eliminate_boundary=*/mode == ModeType::tm);
    if (dm.n_dofs == 0)
        throw InvalidDimensions("waveguide_cutoffs: no unknowns left");
    const std::vector<WeightedTerm> stiff = {{1.0, MatrixKind::stiff_xx},
                                             {1.0, MatrixKind::stiff_yy}};
    const std::vector<WeightedTerm> mass = {{1.0, MatrixKind::mass_NN}};
    const DenseMatrix S = to_dense(assemble(mesh, dm, stiff));
    const DenseMatrix M = to_dense(assemble(mesh, dm, mass));
    const EigenResult eig = solve_generalized(S, M);

    CutoffResult out;
    out.n_dofs = dm.n_dofs;
    const double lam_max =
        eig.eigenvalues.empty() ? 0.0 : std::abs(eig.eigenvalues.back());
    const double zero_tol = 1e-9 * std::max(lam_max, 1.0);
    for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
        const double lam = eig.eigenvalues[i];
        if (mode == ModeType::te && lam < zero_tol) continue;
        out.lambda.push_back(lam);
        out.kc.push_back(std::sqrt(std::max(lam, 0.0)));
        out.residuals.push_back(eig.residuals[i]);
        if (out.kc.size() == n_modes) break;
    }
    return out;
}

// Analytic cutoffs of the width x height rectangle: pi * hypot(m/w, n/h)
// over the admissible index pairs, ascending.
inline std::vector<double> analytic_cutoffs(double width, double height,
                                            ModeType mode, std::size_t n) {
    if (!(width > 0.0) || !(height > 0.0))
        throw InvalidDimensions("analytic_cutoffs: need positive size");
    const double pi = 3.14159265358979323846;
    std::vector<double> all;
    const int cap = 64;
    for (int m = 0; m <= cap; ++m) {
        for (int k = 0; k <= cap; ++k) {
            if (mode == ModeType::te && m == 0 && k == 0) continue;
            if (mode == ModeType::tm && (m == 0 || k == 0)) continue;
            all.push_back(pi * std::hypot(m / width, k / height));
        }
    }
    std::sort(all.begin(), all.end());
    if (all.size() > n) all.resize(n);
    return all;
}

struct ConvergenceLevel {
    int cells = 0;          // cells per side of the unit square
    double h = 0.0;         // mesh size 1 / cells
    std::size_t n_dofs = 0;
    double lambda1 = 0.0;   // lowest (nonzero for te) eigenvalue
    double rel_err = 0.0;   // against the analytic eigenvalue
};

struct ConvergenceStudy {
    ModeType mode = ModeType::tm;
    double exact_lambda = 0.0;
    std::vector<ConvergenceLevel> levels;
    std::vector<double> orders; // log2(err_k / err_{k+1}) between levels
};

// Refinement study on the unit square, halving the mesh size per level
// starting from base_cells per side: lowest eigenvalue of the given mode
// family against the analytic value, with observed convergence orders
// between consecutive levels.
inline ConvergenceStudy convergence_study(ModeType mode, int n_levels,
                                          int base_cells = 4) {
    if (n_levels < 1 || base_cells < 1)
        throw InvalidDimensions("convergence_study: need at least one level");
    const double pi = 3.14159265358979323846;
    ConvergenceStudy st;
    st.mode = mode;
    st.exact_lambda = mode == ModeType::tm ? 2.0 * pi * pi : pi * pi;
    int cells = base_cells;
    for (int level = 0; level < n_levels; ++level, cells *= 2) {
        const Mesh mesh = gen_rect_mesh(1.0, 1.0, cells, cells);
        const CutoffResult res = waveguide_cutoffs(mesh, mode, 1);
        ConvergenceLevel lv;
        lv.cells = cells;
        lv.h = 1.0 / cells;
        lv.n_dofs = res.n_dofs;
        lv.lambda1 = res.lambda.empty() ? 0.0 : res.lambda[0];
        lv.rel_err = std::abs(lv.lambda1 - st.exact_lambda) / st.exact_lambda;
        st.levels.push_back(lv);
    }
    for (std::size_t k = 0; k + 1 < st.levels.size(); ++k) {
        const double e0 = st.levels[k].rel_err;
        const double e1 = st.levels[k + 1].rel_err;
        st.orders.push_back(std::log2(e0 / std::max(e1, 1e-300)));
    }
    return st;
}

} // namespace qtem
