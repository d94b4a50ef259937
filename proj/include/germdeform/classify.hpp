#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "germdeform/contour.hpp"
#include "germdeform/family.hpp"

namespace germdeform {

/// A one-parameter family F(x, y, s), s in [0, s_max], with F(., ., 0) = f.
struct DeformationPath {
  TriPoly F;
  double s_max = 1.0;
};

/// Checks F(., ., 0) = f to 1e-12 and the y-degree; throws InvalidInput otherwise.
void validate_path(const DeformationPath& path, const UniversalFamily& fam);

/// H * G(x, u, phi(s)) for polynomial u(x, y, s), phi_i(s) and unit H(x, y, s).
TriPoly manufactured_path(const UniversalFamily& fam, const TriPoly& u, const std::vector<TriPoly>& phi,
                          const TriPoly& unit);

/// F(x, y, sigma(s)).
TriPoly reparametrize(const TriPoly& F, const TriPoly& sigma);

struct ClassifyOptions {
  int steps = 64;
  int nodes = kDefaultNodes;
  double rho = 0.0;   // 0: three quarters of delta1
  int order = 0;      // 0: the germ's jet order
  double residual_tol = 1e-7;
  double field_tol = 1e-4;  // on-curve check inside field evaluations
  bool halving_check = true;
  std::optional<BiPoly> initial_u;  // defaults to y
};

/// Node-sampled state of the classifying flow: t in C^r and the y-coefficients
/// of u(x_k, .) at each node (D = max(d, 2) per node).
struct FlowState {
  std::vector<cplx> t;
  std::vector<std::vector<cplx>> u;
};

struct NumericDecomposition {
  std::vector<cplx> c;
  std::vector<std::vector<cplx>> b;  // y-coefficients per node
  double on_curve = 0.0;             // max |G(x, u(y_i), t)|
};

/// Split h = b G_u(u) + c.g(u) of on-curve values h at the sheets y_i of the deformed fiber:
/// c from the contour pairings against the dual basis (solving B^T c = P), and b
/// as the Lagrange interpolant through (y_i, (h_i - c.g(u_i)) / G_u(u_i)).
NumericDecomposition decompose_numeric(const UniversalFamily& fam, std::span<const cplx> x_nodes,
                                       const std::vector<std::vector<cplx>>& sheets,
                                       const std::vector<std::vector<cplx>>& h_values, const FlowState& state,
                                       double field_tol = 1e-4);

struct FieldValue {
  std::vector<cplx> dt;
  std::vector<std::vector<cplx>> du;
  double on_curve = 0.0;
};

/// Right-hand side (dt/ds, du/ds) at s. Sheets are the roots of F(x_k, ., s)
/// with |y| < delta2; warm starts are read from and written to `sheet_cache`.
FieldValue vector_field(const DeformationPath& path, const UniversalFamily& fam, double s, const FlowState& state,
                        std::span<const cplx> x_nodes, std::vector<std::vector<cplx>>* sheet_cache = nullptr,
                        double field_tol = 1e-4);

struct ClassifyResult {
  std::vector<double> s;
  std::vector<std::vector<cplx>> phi;       // t at every step point
  std::vector<std::vector<cplx>> dphi;      // dt/ds at every step point
  std::vector<FlowState> states;            // u samples at every step point
  std::vector<std::vector<std::vector<cplx>>> du;  // du/ds at every step point
  std::vector<TruncSeries> u_final;         // Taylor coefficients of u's y^k coefficients
  double residual = 0.0;
  double residual_tol = 1e-7;
  double halving_diff = -1.0;  // -1 when not run
  int steps = 0;
  int nodes = 0;
  int order = 0;
  double rho = 0.0;

  const std::vector<cplx>& t_final() const { return phi.back(); }
};

/// Fixed-step RK4 over [0, s_max]. Throws ToleranceExceeded when the final
/// on-curve residual exceeds residual_tol or, with halving_check, when the run
/// with twice the steps moves t_final by 10 * residual_tol or more.
ClassifyResult integrate_path(const DeformationPath& path, const UniversalFamily& fam,
                              const ClassifyOptions& opts = {});

/// max |G(x_k, u(x_k, y_i), t)| over the sheets of F(., ., s) on the nodes.
double on_curve_residual(const DeformationPath& path, const UniversalFamily& fam, double s,
                         std::span<const cplx> t, std::span<const cplx> x_nodes,
                         const std::vector<std::vector<cplx>>& u_nodes);

struct PullbackReport {
  double residual = 0.0;         // max over s samples, 2M nodes
  double unit_deviation = 0.0;   // max |H - 1| at s = 0
  double holomorphy_defect = 0.0;
};

/// Recomputes the on-curve residual at 2M nodes (spectral extension of u) at
/// every step point and at the Hermite midpoints.
PullbackReport verify_pullback(const DeformationPath& path, const ClassifyResult& result,
                               const UniversalFamily& fam);

struct ExactDecomposition {
  std::vector<cplx> c;
  YPoly b;
  // a[k][j]: coefficient of x^k y^j
  std::vector<std::vector<cplx>> a;
  double residual = 0.0;  // jet-level residual of h = a G(u) + b G_u(u) + c g(u)
};

/// h = a G(u) + b G_u(u) + c.g(u) at t = 0 with exact jets.
ExactDecomposition decompose_exact(const BiPoly& h, const YPoly& u, const UniversalFamily& fam, int order = 0);

}  // namespace germdeform
