#pragma once

// Hankel determinants H_D^d built from Riccati coefficients. The (i, j)
// entry (0-based) is f_{d+i+j+1}, so the top-left entry is f_{d+1} and the
// bottom-right entry is f_{d+2D-1}.

#include <span>
#include <vector>

#include "rpade/polynomial.hpp"
#include "rpade/real.hpp"
#include "rpade/series.hpp"

namespace rpade {

struct HankelFrame {
  unsigned D = 0;
  unsigned d = 0;
  Real value;
  Real derivative;  // dH/dE
  long precision_bits = 0;
};

/// Largest coefficient index read by H_D^d.
inline unsigned hankel_max_index(unsigned D, unsigned d) { return d + 2 * D - 1; }

/// Throws SeriesLengthError / InvalidArgument when H_D^d cannot be formed
/// from `available` coefficients (indices 0 .. available-1).
void check_hankel_shape(std::size_t available, unsigned D, unsigned d);

/// det H_D^d with its forward-mode E-derivative, by Gaussian elimination with
/// partial pivoting on (value, derivative) pairs.
HankelFrame hankel_value(const RiccatiSeries& series, unsigned D, unsigned d);

/// det H_D^d at working precision from plain coefficients.
Real hankel_determinant(std::span<const Real> f, unsigned D, unsigned d);

/// det H_D^d in exact rational arithmetic.
Rational hankel_determinant(std::span<const Rational> f, unsigned D, unsigned d);

/// det H_D^d as an exact polynomial in E (fraction-free elimination).
/// Degree is D (D + d + 1).
Polynomial hankel_poly(const ExactSeries& exact, unsigned D, unsigned d);

}  // namespace rpade
