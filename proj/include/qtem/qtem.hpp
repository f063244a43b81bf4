#pragma once

#include "qtem/area_poly.hpp"
#include "qtem/assembly.hpp"
#include "qtem/dense.hpp"
#include "qtem/dof_map.hpp"
#include "qtem/eigensolver.hpp"
#include "qtem/element_matrices.hpp"
#include "qtem/errors.hpp"
#include "qtem/exact_oracle.hpp"
#include "qtem/geometry.hpp"
#include "qtem/mat6.hpp"
#include "qtem/matrix_kind.hpp"
#include "qtem/mesh.hpp"
#include "qtem/quadrature.hpp"
#include "qtem/rational.hpp"
#include "qtem/shape.hpp"
#include "qtem/verify.hpp"
#include "qtem/waveguide.hpp"
