#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "qtem/errors.hpp"

namespace qtem {

// The sixteen closed-form element matrices. Each kind is the integral over
// one triangle of a product of two field families:
//   N        scalar quadratic shape values
//   dNx, dNy Cartesian partials of the scalar shapes
//   U, V     x and y components of the edge vector basis
//   dUy, dVx the (constant) cross partials of those components
// mass_NN pairs (N, N); stiff_yx pairs (dNy, dNx); U_dNx pairs (U, dNx);
// dUy_dVx pairs (dUy, dVx); and so on.
enum class MatrixKind {
    mass_NN,
    stiff_xx,
    stiff_yy,
    stiff_yx,
    N_dNx,
    N_dNy,
    U_dNx,
    V_dNx,
    U_dNy,
    V_dNy,
    UU,
    VV,
    UV,
    dUy_dUy,
    dVx_dVx,
    dUy_dVx,
};

inline constexpr std::array<MatrixKind, 16> all_matrix_kinds = {
    MatrixKind::mass_NN,  MatrixKind::stiff_xx, MatrixKind::stiff_yy, MatrixKind::stiff_yx,
    MatrixKind::N_dNx,    MatrixKind::N_dNy,    MatrixKind::U_dNx,    MatrixKind::V_dNx,
    MatrixKind::U_dNy,    MatrixKind::V_dNy,    MatrixKind::UU,       MatrixKind::VV,
    MatrixKind::UV,       MatrixKind::dUy_dUy,  MatrixKind::dVx_dVx,  MatrixKind::dUy_dVx,
};

enum class FieldFamily { N, dNx, dNy, U, V, dUy, dVx };

inline constexpr bool is_scalar_family(FieldFamily f) {
    return f == FieldFamily::N || f == FieldFamily::dNx || f == FieldFamily::dNy;
}

// Families built on the edge basis carry one signed edge length factor; this
// is what the diagonal l-scaling in the exact comparisons acts on.
inline constexpr bool is_edge_family(FieldFamily f) { return !is_scalar_family(f); }

struct KindFamilies {
    FieldFamily row;
    FieldFamily col;
};

inline constexpr KindFamilies kind_families(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::mass_NN:  return {FieldFamily::N, FieldFamily::N};
        case MatrixKind::stiff_xx: return {FieldFamily::dNx, FieldFamily::dNx};
        case MatrixKind::stiff_yy: return {FieldFamily::dNy, FieldFamily::dNy};
        case MatrixKind::stiff_yx: return {FieldFamily::dNy, FieldFamily::dNx};
        case MatrixKind::N_dNx:    return {FieldFamily::N, FieldFamily::dNx};
        case MatrixKind::N_dNy:    return {FieldFamily::N, FieldFamily::dNy};
        case MatrixKind::U_dNx:    return {FieldFamily::U, FieldFamily::dNx};
        case MatrixKind::V_dNx:    return {FieldFamily::V, FieldFamily::dNx};
        case MatrixKind::U_dNy:    return {FieldFamily::U, FieldFamily::dNy};
        case MatrixKind::V_dNy:    return {FieldFamily::V, FieldFamily::dNy};
        case MatrixKind::UU:       return {FieldFamily::U, FieldFamily::U};
        case MatrixKind::VV:       return {FieldFamily::V, FieldFamily::V};
        case MatrixKind::UV:       return {FieldFamily::U, FieldFamily::V};
        case MatrixKind::dUy_dUy:  return {FieldFamily::dUy, FieldFamily::dUy};
        case MatrixKind::dVx_dVx:  return {FieldFamily::dVx, FieldFamily::dVx};
        case MatrixKind::dUy_dVx:  return {FieldFamily::dUy, FieldFamily::dVx};
    }
    throw UnsupportedKind("kind_families: unknown matrix kind");
}

inline constexpr bool kind_is_symmetric(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::mass_NN:
        case MatrixKind::stiff_xx:
        case MatrixKind::stiff_yy:
        case MatrixKind::UU:
        case MatrixKind::VV:
        case MatrixKind::dUy_dUy:
        case MatrixKind::dVx_dVx:
            return true;
        default:
            return false;
    }
}

inline constexpr std::string_view kind_name(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::mass_NN:  return "mass_NN";
        case MatrixKind::stiff_xx: return "stiff_xx";
        case MatrixKind::stiff_yy: return "stiff_yy";
        case MatrixKind::stiff_yx: return "stiff_yx";
        case MatrixKind::N_dNx:    return "N_dNx";
        case MatrixKind::N_dNy:    return "N_dNy";
        case MatrixKind::U_dNx:    return "U_dNx";
        case MatrixKind::V_dNx:    return "V_dNx";
        case MatrixKind::U_dNy:    return "U_dNy";
        case MatrixKind::V_dNy:    return "V_dNy";
        case MatrixKind::UU:       return "UU";
        case MatrixKind::VV:       return "VV";
        case MatrixKind::UV:       return "UV";
        case MatrixKind::dUy_dUy:  return "dUy_dUy";
        case MatrixKind::dVx_dVx:  return "dVx_dVx";
        case MatrixKind::dUy_dVx:  return "dUy_dVx";
    }
    throw UnsupportedKind("kind_name: unknown matrix kind");
}

inline std::optional<MatrixKind> parse_kind(std::string_view name) {
    for (MatrixKind k : all_matrix_kinds) {
        if (kind_name(k) == name) return k;
    }
    return std::nullopt;
}

} // namespace qtem
