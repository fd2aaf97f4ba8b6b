#pragma once

#include <span>

#include "gyro/ball.hpp"

namespace gyro {

/// sigma_2 / sigma_1 of a matrix (0 when it has fewer than two singular
/// values or is identically zero).
double singular_value_ratio(const Matrix& m);

/// Number of singular values above rel_threshold * sigma_1.
int numerical_rank(const Matrix& m, double rel_threshold);

/// Collinearity defect of a point set: singular-value ratio of the differences
/// to the first point. Zero for collinear sets, O(1) for spread-out ones.
double collinearity_residual(std::span<const Vector> points);

/// Columns are the given vectors.
Matrix stack_columns(std::span<const Vector> vectors);

}  // namespace gyro
