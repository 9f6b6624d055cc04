#pragma once

#include <Eigen/Core>

#include "rpade/real.hpp"

namespace Eigen {

template <>
struct NumTraits<rpade::Real> : GenericNumTraits<rpade::Real> {
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };

  using Real = rpade::Real;
  using NonInteger = rpade::Real;
  using Literal = rpade::Real;
  using Nested = rpade::Real;

  static Real epsilon() { return Real::pow2(1 - rpade::working_precision()); }
  static Real dummy_precision() { return Real::pow2(16 - rpade::working_precision()); }
  static Real highest() { return Real::pow2(1L << 20); }
  static Real lowest() { return -highest(); }
  static int digits10() { return static_cast<int>(rpade::working_precision() * 0.30103); }
  static int digits() { return static_cast<int>(rpade::working_precision()); }
};

}  // namespace Eigen

namespace rpade {

using MatrixR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

}  // namespace rpade
