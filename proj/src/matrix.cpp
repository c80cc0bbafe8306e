#include "plscape/matrix.hpp"

#include <cstdio>
#include <ostream>

namespace plscape {

void write_csv(std::ostream& os, const RationalMatrix& m, bool exact, int digits) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << (exact ? to_string(m(i, j)) : to_decimal(m(i, j), digits));
    }
    os << '\n';
  }
}

void write_csv(std::ostream& os, const Eigen::MatrixXd& m, int digits) {
  char buffer[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      std::snprintf(buffer, sizeof buffer, "%.*g", digits, m(i, j));
      os << buffer;
    }
    os << '\n';
  }
}

}  // namespace plscape
