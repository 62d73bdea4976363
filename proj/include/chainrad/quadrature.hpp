#pragma once

#include <Eigen/Dense>

namespace chainrad {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    Eigen::VectorXd nodes;    ///< ascending
    Eigen::VectorXd weights;
};

/// Nodes by Newton iteration on P_n from the Chebyshev-like initial guess.
GaussLegendreRule gauss_legendre(int points);

}  // namespace chainrad
