#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "germdeform/local_algebra.hpp"

namespace germdeform {

inline constexpr double kClusterRadius = 1e-6;

struct FamilyOptions {
  std::uint64_t seed = 1;
  int probes = 8;
  int bisection_steps = 24;
  std::optional<std::vector<BiPoly>> basis;
};

/// G(x, y, t) = f + sum_i t_i g_i with its dual basis and certified box.
struct UniversalFamily {
  Germ germ;
  QuotientData quotient;
  int r = 0;
  // Componentwise bound on |t_i| inside which the containment checks hold.
  double param_box = 0.0;
  double certified_radius = 0.0;
  std::uint64_t seed = 1;

  const std::vector<BiPoly>& basis() const { return quotient.basis_g; }
  const std::vector<BiPoly>& dual() const { return quotient.dual_h; }
  BiPoly fiber(std::span<const cplx> t) const;
  bool in_box(std::span<const cplx> t) const;
};

UniversalFamily build_family(const Germ& g, const FamilyOptions& opts = {});

/// Uniform sample of the polydisc |t_i| <= radius.
std::vector<cplx> random_parameter(std::mt19937_64& rng, int r, double radius);

struct BranchPoint {
  cplx x;
  cplx y;
  int multiplicity = 1;
  bool smooth = true;
  bool simple = true;
};

struct FiberReport {
  std::vector<cplx> t;
  bool smooth = true;
  bool simple_branch = true;
  std::vector<BranchPoint> branch_points;
  int multiplicity_sum = 0;
  std::vector<cplx> dis_value;
};

/// Roots of the discriminant of G(., ., t) in |x| < delta1.
std::vector<cplx> branch_values(const UniversalFamily& fam, std::span<const cplx> t);

/// Ascending coefficients c_0..c_{r-1} of the monic polynomial whose roots are
/// the branch values in |x| < delta1. Throws OutOfDomain unless there are r of them.
std::vector<cplx> dis_map(const UniversalFamily& fam, std::span<const cplx> t);

FiberReport fiber_classification(const UniversalFamily& fam, std::span<const cplx> t);

/// True iff the branch multiplicities inside |x| < delta1/2 add up to r.
bool multiplicity_conservation_check(const UniversalFamily& fam, std::span<const cplx> t);

/// B_ij(t) = Res g_i h_j / G_y^2 dx by the trapezoid rule on |x| = rho.
Eigen::MatrixXcd B_matrix(const UniversalFamily& fam, std::span<const cplx> t, double rho, int nodes);
Eigen::MatrixXcd B_matrix(const UniversalFamily& fam, std::span<const cplx> t);

enum class SigmaType { Fixed, Swapped };

struct SymmetricBasis {
  std::vector<BiPoly> basis;
  int r = 0;
  int reference_dim = 0;  // symmetric part (Fixed) or full quotient (Swapped)
  bool span_deficit = false;
  std::string warning;
};

/// (1, y, ..., y^(r-1)) for f = y^(r+2) - c x^2 (Fixed) or y^(r+2) - c x (Swapped).
SymmetricBasis symmetric_basis(const Germ& g, SigmaType type);

struct GermCollection {
  std::vector<UniversalFamily> families;
  std::vector<int> sigma;
  std::vector<int> eta;
  std::vector<int> offsets;
  int total_dim = 0;
  int real_slice_dim = 0;  // over the reals; 2 * total_dim without eta
};

GermCollection assemble_collection(std::vector<UniversalFamily> families,
                                   std::optional<std::vector<int>> sigma = std::nullopt,
                                   std::optional<std::vector<int>> eta = std::nullopt);

struct RealProjection {
  std::vector<cplx> t;
  bool member = false;
};

/// Nearest t with t_{eta l} = conj(t_l).
RealProjection reality_constrain(const GermCollection& coll, std::span<const cplx> t);

}  // namespace germdeform
