#pragma once

// Rayleigh-Ritz eigenvalues of a walled potential, used as an independent
// check on Hankel roots. All basis functions vanish at the walls, so every
// eigenvalue is a variational upper bound.

#include <optional>
#include <string>
#include <vector>

#include "rpade/model.hpp"
#include "rpade/real.hpp"

namespace rpade {

enum class OracleBasis {
  /// (1 - x^2/R^2)^nu x^p P_k(x), with nu the exact wall exponent
  /// (1 + sqrt(1 + a^2 R^4)) / 2. Converges faster than any power of the basis size.
  wall_weighted,
  /// sin(k pi (x + R) / 2R) restricted to the symmetry class. Converges
  /// algebraically because the wavefunction vanishes like (R - x)^nu.
  sine,
};

const char* to_string(OracleBasis basis);

class OracleSpectrum {
 public:
  OracleSpectrum(PotentialModel model, Symmetry symmetry) : model_(std::move(model)), symmetry_(symmetry) {}

  const PotentialModel& model() const { return model_; }
  Symmetry symmetry() const { return symmetry_; }

  OracleBasis basis = OracleBasis::wall_weighted;
  unsigned basis_size = 0;
  unsigned quadrature_points = 0;  // total nodes on the half interval
  long precision_bits = 0;
  std::vector<Real> eigenvalues;  // ascending
  std::optional<std::string> warning;

 private:
  PotentialModel model_;
  Symmetry symmetry_;
};

/// Lowest eigenvalues in the requested symmetry class. `quadrature_order` is
/// the Gauss-Legendre order per panel (0 picks a default). Throws
/// InvalidArgument for models without walls or basis_size < 4.
OracleSpectrum box_basis_spectrum(const PotentialModel& model, Symmetry symmetry, unsigned basis_size,
                                  unsigned quadrature_order, long precision_bits,
                                  OracleBasis basis = OracleBasis::wall_weighted);

}  // namespace rpade
