#include "rpade/oracle.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "eigen_real.hpp"
#include "rpade/errors.hpp"

namespace rpade {

const char* to_string(OracleBasis basis) {
  switch (basis) {
    case OracleBasis::wall_weighted: return "weighted";
    case OracleBasis::sine: return "sine";
  }
  return "weighted";
}

namespace {

struct Rule {
  std::vector<Real> nodes;  // on [-1, 1]
  std::vector<Real> weights;
};

const Rule& gauss_legendre(unsigned n, long bits) {
  thread_local std::map<std::pair<unsigned, long>, Rule> cache;
  const auto key = std::make_pair(n, bits);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  PrecisionScope scope(bits + 32);
  Rule rule;
  const Real eps = Real::pow2(-bits - 8);
  for (unsigned i = 1; i <= n; ++i) {
    Real x(std::cos(M_PI * (i - 0.25) / (n + 0.5)));
    Real dp;
    for (int it = 0; it < 100; ++it) {
      Real p0(1);
      Real p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        Real p2 = (Real(static_cast<long>(2 * k - 1)) * x * p1 - Real(static_cast<long>(k - 1)) * p0) /
                  Real(static_cast<long>(k));
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = Real(static_cast<long>(n)) * (x * p1 - p0) / (x * x - Real(1));
      const Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
    x.set_precision(bits);
    w.set_precision(bits);
    rule.nodes.push_back(std::move(x));
    rule.weights.push_back(std::move(w));
  }
  return cache.emplace(key, std::move(rule)).first->second;
}

// Quadrature point in x on (0, R), parametrized by x = R cos(theta).
struct Node {
  Real x;
  Real sin2;  // 1 - (x/R)^2
  Real weight;
};

struct Panel {
  Real lo;
  Real hi;
};

// Panels in theta: uniform over [theta_min, pi/2], plus geometric refinement
// toward theta = 0 when the wall is inside the integration range.
std::vector<Panel> make_panels(const Real& theta_min, unsigned uniform, bool grade, long bits) {
  std::vector<Panel> panels;
  const Real half_pi = Real::pi() / Real(2);
  Real start = theta_min;
  if (grade) {
    start = half_pi / Real(static_cast<long>(uniform + 1));
    const Real sigma(0.15);
    const Real floor = Real::pow2(-bits / 2 - 16);
    Real hi = start;
    while (hi > floor) {
      Real lo = hi * sigma;
      panels.push_back({lo, hi});
      hi = std::move(lo);
    }
    panels.push_back({Real(0), hi});
    std::reverse(panels.begin(), panels.end());
  }
  const Real width = (half_pi - start) / Real(static_cast<long>(uniform));
  for (unsigned k = 0; k < uniform; ++k) {
    panels.push_back({start + width * Real(static_cast<long>(k)), start + width * Real(static_cast<long>(k + 1))});
  }
  return panels;
}

std::vector<Node> make_nodes(const Real& R, const std::vector<Panel>& panels, unsigned order, long bits) {
  const Rule& rule = gauss_legendre(order, bits);
  std::vector<Node> nodes;
  nodes.reserve(panels.size() * order);
  for (const auto& p : panels) {
    const Real mid = (p.lo + p.hi) / Real(2);
    const Real half = (p.hi - p.lo) / Real(2);
    for (unsigned i = 0; i < order; ++i) {
      const Real theta = mid + half * rule.nodes[i];
      const Real st = sin(theta);
      nodes.push_back({R * cos(theta), st * st, half * rule.weights[i] * R * st});
    }
  }
  return nodes;
}

struct Assembled {
  MatrixR S;
  MatrixR H;
};

// Basis values and x-derivatives at one node.
using BasisEval = std::pair<VectorR, VectorR>;

class Problem {
 public:
  Problem(const PotentialModel& model, Symmetry symmetry, unsigned K, OracleBasis basis)
      : K_(K), basis_(basis), p_(symmetry.s()), centrifugal_(symmetry.centrifugal()) {
    a_ = model.a().to_real();
    R_ = model.R()->to_real();
    a2_ = a_ * a_;
    nu_ = (Real(1) + sqrt(Real(1) + a2_ * R_ * R_ * R_ * R_)) / Real(2);
    jacobi_alpha_ = Real(2) * nu_;
    jacobi_beta_ = Real(static_cast<long>(2 * p_) - 1) / Real(2);
  }

  unsigned max_degree() const {
    if (basis_ == OracleBasis::sine) return 2 * K_ + 1;
    return 2 * (K_ - 1) + p_ + 2;
  }

  // Upper end of the x range carrying non-negligible weight, as a fraction of R.
  Real t_max(long bits) const {
    if (basis_ == OracleBasis::sine) return Real(1);
    const Real span = sqrt((Real(static_cast<long>(4 * max_degree() + 40)) + Real(bits)) / a_);
    return min(Real(1), span / R_);
  }

  std::vector<Node> nodes(unsigned order, long bits) const {
    const Real t = t_max(bits);
    const bool wall = t >= Real(1);
    const Real theta_min = wall ? Real(0) : acos(t);
    double phase = 3.2 * max_degree();
    if (!wall) phase += 8.0 * (sqrt(a_) * R_ * t).to_double();
    const auto uniform = static_cast<unsigned>(std::ceil(phase / order)) + 2;
    return make_nodes(R_, make_panels(theta_min, uniform, wall, bits), order, bits);
  }

  BasisEval eval(const Node& n) const {
    VectorR phi(K_), dphi(K_);
    if (basis_ == OracleBasis::sine) {
      eval_sine(n, phi, dphi);
    } else {
      eval_weighted(n, phi, dphi);
    }
    return {std::move(phi), std::move(dphi)};
  }

  Real potential(const Node& n) const {
    Real v = a2_ * n.x * n.x / (n.sin2 * n.sin2);
    if (centrifugal_ != 0) v += Real(static_cast<long>(centrifugal_)) / (n.x * n.x);
    return v;
  }

  Assembled assemble(const std::vector<Node>& nodes) const {
    Assembled out{MatrixR::Zero(K_, K_), MatrixR::Zero(K_, K_)};
    for (const auto& n : nodes) {
      const auto [phi, dphi] = eval(n);
      const Real v = potential(n);
      for (unsigned i = 0; i < K_; ++i) {
        const Real wi = n.weight * phi[i];
        const Real wdi = n.weight * dphi[i];
        const Real wvi = wi * v;
        for (unsigned j = i; j < K_; ++j) {
          fma_inplace(out.S(i, j), wi, phi[j]);
          fma_inplace(out.H(i, j), wdi, dphi[j]);
          fma_inplace(out.H(i, j), wvi, phi[j]);
        }
      }
    }
    for (unsigned i = 0; i < K_; ++i) {
      for (unsigned j = 0; j < i; ++j) {
        out.S(i, j) = out.S(j, i);
        out.H(i, j) = out.H(j, i);
      }
    }
    return out;
  }

  // Diagonals of S and H only, for the quadrature self-check.
  std::pair<VectorR, VectorR> diagonals(const std::vector<Node>& nodes) const {
    VectorR s = VectorR::Zero(K_), h = VectorR::Zero(K_);
    for (const auto& n : nodes) {
      const auto [phi, dphi] = eval(n);
      const Real v = potential(n);
      for (unsigned i = 0; i < K_; ++i) {
        fma_inplace(s[i], n.weight * phi[i], phi[i]);
        fma_inplace(h[i], n.weight * dphi[i], dphi[i]);
        fma_inplace(h[i], n.weight * phi[i] * v, phi[i]);
      }
    }
    return {std::move(s), std::move(h)};
  }

 private:
  void eval_sine(const Node& n, VectorR& phi, VectorR& dphi) const {
    // Even class: cos((2m-1) y); odd and central: sin(2 m y); y = pi x / 2R.
    const Real norm = sqrt(Real(2) / R_);
    const bool even = p_ == 0;
    const Real y = Real::pi() * n.x / (Real(2) * R_);
    const Real cs = cos(Real(2) * y), ss = sin(Real(2) * y);
    Real c = even ? cos(y) : cs;
    Real s = even ? sin(y) : ss;
    for (unsigned m = 1; m <= K_; ++m) {
      const Real k = Real::pi() * Real(static_cast<long>(even ? 2 * m - 1 : 2 * m)) / (Real(2) * R_);
      if (even) {
        phi[m - 1] = norm * c;
        dphi[m - 1] = -norm * k * s;
      } else {
        phi[m - 1] = norm * s;
        dphi[m - 1] = norm * k * c;
      }
      Real c2 = c * cs - s * ss;
      s = s * cs + c * ss;
      c = std::move(c2);
    }
  }

  void eval_weighted(const Node& n, VectorR& phi, VectorR& dphi) const {
    // (1 - t^2)^nu x^p P_k^(2nu, p-1/2)(2t^2 - 1), t = x / R.
    const Real& x = n.x;
    const Real u = exp(nu_ * log(n.sin2));
    Real xp(1);
    for (unsigned i = 0; i < p_; ++i) xp *= x;
    const Real w = u * xp;
    const Real dlog = -Real(2) * nu_ * x / (R_ * R_ * n.sin2) + Real(static_cast<long>(p_)) / x;

    const Real t = x / R_;
    const Real z = Real(2) * t * t - Real(1);
    const Real dz = Real(4) * t / R_;
    const Real& al = jacobi_alpha_;
    const Real& be = jacobi_beta_;
    Real q0(1), d0(0);
    Real q1 = (al + Real(1)) + (al + be + Real(2)) * (z - Real(1)) / Real(2);
    Real d1 = (al + be + Real(2)) / Real(2);
    for (unsigned k = 0; k < K_; ++k) {
      phi[k] = w * q0;
      dphi[k] = phi[k] * dlog + w * d0 * dz;
      const Real nn(static_cast<long>(k + 2));
      const Real c = Real(2) * nn + al + be;
      const Real lead = Real(2) * nn * (nn + al + be) * (c - Real(2));
      const Real b = (c - Real(1)) * (c * (c - Real(2)) * z + al * al - be * be);
      const Real slope = (c - Real(1)) * c * (c - Real(2));
      const Real back = Real(2) * (nn + al - Real(1)) * (nn + be - Real(1)) * c;
      Real q2 = (b * q1 - back * q0) / lead;
      Real d2 = (b * d1 + slope * q1 - back * d0) / lead;
      q0 = std::move(q1);
      q1 = std::move(q2);
      d0 = std::move(d1);
      d1 = std::move(d2);
    }
  }

  unsigned K_;
  OracleBasis basis_;
  unsigned p_;
  unsigned centrifugal_;
  Real a_, R_, a2_, nu_, jacobi_alpha_, jacobi_beta_;
};

std::vector<Real> generalized_eigenvalues(const MatrixR& S, const MatrixR& H) {
  const auto K = S.rows();
  VectorR scale(K);
  for (Eigen::Index i = 0; i < K; ++i) scale[i] = Real(1) / sqrt(S(i, i));
  MatrixR Ss = scale.asDiagonal() * S * scale.asDiagonal();
  MatrixR Hs = scale.asDiagonal() * H * scale.asDiagonal();
  Eigen::LLT<MatrixR> llt(Ss);
  if (llt.info() != Eigen::Success) throw Error("oracle: overlap matrix is not positive definite");
  const MatrixR L = llt.matrixL();
  MatrixR X = L.triangularView<Eigen::Lower>().solve(Hs);
  MatrixR C = L.triangularView<Eigen::Lower>().solve(X.transpose()).transpose();
  C = ((C + C.transpose()) / Real(2)).eval();
  Eigen::SelfAdjointEigenSolver<MatrixR> solver(C, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("oracle: eigensolver did not converge");
  std::vector<Real> out(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

OracleSpectrum box_basis_spectrum(const PotentialModel& model, Symmetry symmetry, unsigned basis_size,
                                  unsigned quadrature_order, long precision_bits, OracleBasis basis) {
  if (!model.has_walls()) throw InvalidArgument("oracle requires a model with walls");
  if (basis_size < 4) throw InvalidArgument("oracle basis_size must be at least 4");
  if (precision_bits < 64) throw InvalidArgument("oracle precision must be at least 64 bits");
  const unsigned order = quadrature_order == 0 ? 48 : quadrature_order;
  if (order < 2) throw InvalidArgument("oracle quadrature order must be at least 2");

  PrecisionScope scope(precision_bits);
  Problem problem(model, symmetry, basis_size, basis);
  const auto nodes = problem.nodes(order, precision_bits);
  const Assembled m = problem.assemble(nodes);

  OracleSpectrum spectrum(model, symmetry);
  spectrum.basis = basis;
  spectrum.basis_size = basis_size;
  spectrum.quadrature_points = static_cast<unsigned>(nodes.size());
  spectrum.precision_bits = precision_bits;

  if (basis == OracleBasis::sine) {
    // The sine basis is orthonormal, so S is only used for the self-check.
    MatrixR H = m.H;
    Eigen::SelfAdjointEigenSolver<MatrixR> solver(H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("oracle: eigensolver did not converge");
    spectrum.eigenvalues.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
  } else {
    spectrum.eigenvalues = generalized_eigenvalues(m.S, m.H);
  }

  // A-posteriori check: the highest-degree diagonal entries under a finer rule.
  const auto fine = problem.nodes(order + order / 2 + 4, precision_bits);
  const auto [s2, h2] = problem.diagonals(fine);
  Real worst(0);
  for (unsigned i = 0; i < basis_size; ++i) {
    worst = max(worst, abs(s2[i] - m.S(i, i)) / abs(s2[i]));
    worst = max(worst, abs(h2[i] - m.H(i, i)) / abs(h2[i]));
  }
  const Real allowed = Real::pow2(-precision_bits / 2);
  if (worst > allowed) {
    spectrum.warning = "quadrature error " + worst.to_scientific(3) + " exceeds " + allowed.to_scientific(3) +
                       "; increase quadrature points";
  }
  return spectrum;
}

}  // namespace rpade
