#pragma once

#include <stdexcept>
#include <string>

namespace qtem {

// Geometry with (numerically) collinear corners.
struct DegenerateTriangle : std::runtime_error {
    explicit DegenerateTriangle(const std::string& what) : std::runtime_error(what) {}
};

// Matrix kind outside the supported set.
struct UnsupportedKind : std::runtime_error {
    explicit UnsupportedKind(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature degree outside the supported table range.
struct UnsupportedDegree : std::runtime_error {
    explicit UnsupportedDegree(const std::string& what) : std::runtime_error(what) {}
};

// Nonpositive extent or cell count passed to the mesh generator.
struct InvalidDimensions : std::runtime_error {
    explicit InvalidDimensions(const std::string& what) : std::runtime_error(what) {}
};

// Malformed mesh file; message carries the offending line number.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input describing an inconsistent mesh.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

// Matrix kind assembled against a DOF map of the wrong field type.
struct KindFieldMismatch : std::runtime_error {
    explicit KindFieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Right-hand matrix of a generalized eigenproblem is not positive definite.
struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

// Iterative eigensolver exceeded its sweep budget.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qtem
