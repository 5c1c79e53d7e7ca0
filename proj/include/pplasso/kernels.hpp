#pragma once

#include <Eigen/Dense>

namespace pplasso {

// OpenMP-parallel dense kernels. Each entry of the output is computed by
// exactly one thread with the same inner-loop order as the serial variants
// below, so parallel and serial results are bit-identical.

// Pearson correlation of the columns of x (n x p). Columns must have
// nonzero variance; callers validate (see covariance.hpp).
Eigen::MatrixXd pearson_correlation(const Eigen::MatrixXd& x);

// u * diag(d) * u^T, symmetric by construction (upper triangle mirrored).
Eigen::MatrixXd sym_sandwich(const Eigen::MatrixXd& u, const Eigen::VectorXd& d);

namespace serial {

Eigen::MatrixXd pearson_correlation(const Eigen::MatrixXd& x);
Eigen::MatrixXd sym_sandwich(const Eigen::MatrixXd& u, const Eigen::VectorXd& d);

}  // namespace serial

}  // namespace pplasso
