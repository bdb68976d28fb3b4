#pragma once

#include <Eigen/Dense>

namespace yamabe {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

}  // namespace yamabe
