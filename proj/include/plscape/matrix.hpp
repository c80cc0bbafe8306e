#pragma once

#include "plscape/rational.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <iosfwd>

namespace plscape {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Row-major CSV. Exact "p/q" entries, or decimals with `digits`
/// significant digits when `exact` is false.
void write_csv(std::ostream& os, const RationalMatrix& m, bool exact, int digits = 15);
void write_csv(std::ostream& os, const Eigen::MatrixXd& m, int digits = 15);

}  // namespace plscape
