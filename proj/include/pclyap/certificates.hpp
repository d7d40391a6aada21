#pragma once

#include <map>
#include <string>

#include "pclyap/linalg.hpp"

namespace pclyap {

/// One positive vector per graph node, keyed by node name. The vector p for
/// node i induces the conic gauge V_p(x) = max_l x_l / p_l on the
/// nonnegative orthant.
struct ConicCertificate {
  std::map<std::string, VectorQ> vectors;
};

/// One symmetric positive definite matrix per graph node, keyed by node
/// name; node i induces the quadratic form x^T P_i x.
struct EllipsoidalCertificate {
  std::map<std::string, MatrixQ> matrices;
};

}  // namespace pclyap
