#include "gyro/linear.hpp"

#include <vector>

#include <Eigen/SVD>

namespace gyro {

Matrix stack_columns(std::span<const Vector> vectors) {
  if (vectors.empty()) return Matrix(0, 0);
  const Eigen::Index n = vectors.front().size();
  Matrix m(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "vectors of different lengths");
    }
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return m;
}

double singular_value_ratio(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  const Vector sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
  if (sv.size() < 2 || sv[0] == 0.0) return 0.0;
  return sv[1] / sv[0];
}

int numerical_rank(const Matrix& m, double rel_threshold) {
  if (m.size() == 0) return 0;
  const Vector sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
  if (sv[0] == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > rel_threshold * sv[0]) ++rank;
  }
  return rank;
}

double collinearity_residual(std::span<const Vector> points) {
  if (points.size() < 3) return 0.0;
  std::vector<Vector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return singular_value_ratio(stack_columns(diffs));
}

}  // namespace gyro
