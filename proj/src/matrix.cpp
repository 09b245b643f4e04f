#include <Eigen/SVD>

#include "g2solv/scalar.hpp"

namespace g2solv {

namespace detail {

std::vector<Vector<double>> numeric_kernel(const Matrix<double>& m, double tol) {
  if (m.cols() == 0) return {};
  Eigen::MatrixXd a(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const auto& v = svd.matrixV();
  std::vector<Vector<double>> basis;
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    const bool small = c >= sv.size() || sv(c) < tol;
    if (!small) continue;
    Vector<double> col(m.cols());
    for (Eigen::Index r = 0; r < v.rows(); ++r) col[static_cast<std::size_t>(r)] = v(r, c);
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace detail

KernelBasis kernel(const ScalarGrid& grid) {
  bool any_double = false;
  bool any_exact = false;
  bool any_quad = false;
  std::size_t cols = grid.empty() ? 0 : grid.front().size();
  for (const auto& row : grid) {
    if (row.size() != cols) throw InvalidInput("ragged matrix");
    for (const auto& x : row) {
      any_double |= std::holds_alternative<double>(x);
      any_exact |= !std::holds_alternative<double>(x);
      any_quad |= std::holds_alternative<QuadExt>(x);
    }
  }
  if (any_double && any_exact) throw InvalidInput("matrix mixes exact and double-precision entries");

  const auto fill = [&]<class S>(Matrix<S>& m) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = std::visit(
            [](const auto& x) -> S {
              using X = std::decay_t<decltype(x)>;
              if constexpr (std::is_same_v<S, double>) {
                if constexpr (std::is_same_v<X, double>) return x;
                else throw InvalidInput("unreachable");
              } else if constexpr (std::is_same_v<X, double>) {
                throw InvalidInput("unreachable");
              } else {
                return embed<S>(x);
              }
            },
            grid[i][j]);
      }
    }
  };

  if (any_double) {
    Matrix<double> m(grid.size(), cols);
    fill(m);
    return kernel(m);
  }
  if (any_quad) {
    Matrix<QuadExt> m(grid.size(), cols);
    fill(m);
    return kernel(m);
  }
  Matrix<Rational> m(grid.size(), cols);
  fill(m);
  return kernel(m);
}

}  // namespace g2solv
