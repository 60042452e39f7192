// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace denseplan {

/// Numerical failure (non-convergence, NaN from a callback, unstable evaluation).
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// A requested deployment target cannot be met within the search limits.
struct infeasible_error : std::runtime_error {
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace denseplan
