#pragma once

#include <variant>
#include <vector>

#include "g2solv/matrix.hpp"

namespace g2solv {

/// Runtime-typed coefficient, used where matrices arrive from outside the
/// type system (files, CLI, tests of the mixed-input contract).
using Scalar = std::variant<Rational, QuadExt, double>;

using ScalarGrid = std::vector<std::vector<Scalar>>;

/// Kernel basis in the field the input was promoted to.
using KernelBasis =
    std::variant<std::vector<Vector<Rational>>, std::vector<Vector<QuadExt>>, std::vector<Vector<double>>>;

/// Kernel of a runtime-typed matrix. Rational entries mixed with QuadExt are
/// promoted to QuadExt; any mix of exact and double entries is rejected.
KernelBasis kernel(const ScalarGrid& grid);

}  // namespace g2solv
