#pragma once

#include "osculo/rational.hpp"

#include <Eigen/Dense>

namespace osculo {

using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace osculo
