#ifndef QGAUSS_LINSOLVE_HPP
#define QGAUSS_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "qgauss/scalar.hpp"

namespace qg {

/// Solve A x = b exactly over the scalar field. Returns the particular
/// solution with all free variables set to zero, or nullopt when the system
/// is inconsistent. Deterministic: pivots are chosen first-nonzero in order.
std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> A,
                                                std::vector<Scalar> b,
                                                const ScalarField& field);

}  // namespace qg

#endif
