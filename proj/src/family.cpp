#include "germdeform/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "germdeform/contour.hpp"
#include "germdeform/error.hpp"

namespace germdeform {

BiPoly UniversalFamily::fiber(std::span<const cplx> t) const {
  if (static_cast<int>(t.size()) != r) throw Error(ErrorCode::InvalidInput, "parameter vector has the wrong length");
  BiPoly g = germ.f;
  for (int i = 0; i < r; ++i) g += basis()[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(i)];
  return g;
}

bool UniversalFamily::in_box(std::span<const cplx> t) const {
  if (static_cast<int>(t.size()) != r) return false;
  for (const cplx ti : t) {
    if (std::abs(ti) > param_box * (1.0 + 1e-12)) return false;
  }
  return true;
}

std::vector<cplx> random_parameter(std::mt19937_64& rng, int r, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> t(static_cast<std::size_t>(r));
  for (auto& ti : t) {
    const double mod = radius * std::sqrt(u(rng));
    ti = std::polar(mod, 2.0 * std::numbers::pi * u(rng));
  }
  return t;
}

namespace {

std::vector<cplx> all_branch_values(const BiPoly& fiber) {
  const Poly disc = discriminant_x(fiber);
  return poly_roots(disc.trimmed(1e-14 * std::max(1.0, disc.max_abs())).coeffs());
}

// Containment checks at one parameter point.
bool containment_ok(const UniversalFamily& fam, std::span<const cplx> t) {
  const BiPoly g = fam.fiber(t);
  const double d1 = fam.germ.delta1;
  int inside = 0;
  for (const cplx x : all_branch_values(g)) {
    if (std::abs(x) < d1) {
      if (std::abs(x) >= d1 / 2) return false;
      ++inside;
    }
  }
  if (inside != fam.r) return false;
  for (const cplx x : circle_nodes(d1, 64)) {
    for (const cplx y : poly_roots(g.y_coeffs_at(x))) {
      if (std::abs(y) >= fam.germ.delta2) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> cluster(std::span<const cplx> pts, double radius) {
  std::vector<int> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
    return i;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (std::abs(pts[i] - pts[j]) < radius) parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int root = find(static_cast<int>(i));
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(static_cast<int>(i));
  }
  return groups;
}

bool approx_equal(const BiPoly& a, const BiPoly& b, double tol = 1e-10) { return (a - b).max_abs() <= tol; }

}  // namespace

UniversalFamily build_family(const Germ& g, const FamilyOptions& opts) {
  UniversalFamily fam;
  fam.germ = g;
  fam.seed = opts.seed;
  fam.quotient = analyze_quotient(g, opts.basis);
  fam.r = static_cast<int>(fam.quotient.basis_g.size());
  if (fam.r == 0) return fam;

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  auto radius_ok = [&](double radius) {
    fam.param_box = radius;
    for (int p = 0; p < opts.probes; ++p) {
      std::vector<cplx> t(static_cast<std::size_t>(fam.r));
      for (auto& ti : t) ti = std::polar(radius, phase(rng));
      if (!containment_ok(fam, t)) return false;
    }
    return true;
  };
  double lo = 0.0, hi = 1.0;
  if (radius_ok(hi)) {
    lo = hi;
  } else {
    for (int it = 0; it < opts.bisection_steps; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (radius_ok(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  fam.certified_radius = lo;
  fam.param_box = 0.5 * lo;
  return fam;
}

std::vector<cplx> branch_values(const UniversalFamily& fam, std::span<const cplx> t) {
  std::vector<cplx> inside;
  for (const cplx x : all_branch_values(fam.fiber(t))) {
    if (std::abs(x) < fam.germ.delta1) inside.push_back(x);
  }
  return inside;
}

std::vector<cplx> dis_map(const UniversalFamily& fam, std::span<const cplx> t) {
  if (!fam.in_box(t)) throw Error(ErrorCode::OutOfDomain, "parameter outside the certified box");
  const auto xs = branch_values(fam, t);
  if (static_cast<int>(xs.size()) != fam.r) throw Error(ErrorCode::OutOfDomain, "branch value count differs from r");
  auto c = poly_from_roots(xs);
  c.pop_back();
  return c;
}

FiberReport fiber_classification(const UniversalFamily& fam, std::span<const cplx> t) {
  FiberReport rep;
  rep.t.assign(t.begin(), t.end());
  rep.dis_value = dis_map(fam, t);
  const BiPoly g = fam.fiber(t);
  const BiPoly gx = g.dx();
  const BiPoly gy = g.dy();
  const BiPoly gyy = gy.dy();
  const auto xs = branch_values(fam, t);
  for (const auto& group : cluster(xs, kClusterRadius)) {
    BranchPoint bp;
    for (const int i : group) bp.x += xs[static_cast<std::size_t>(i)];
    bp.x /= static_cast<double>(group.size());
    bp.multiplicity = static_cast<int>(group.size());
    double best = std::numeric_limits<double>::infinity();
    for (const cplx y : poly_roots(gy.y_coeffs_at(bp.x))) {
      const double v = std::abs(g.eval(bp.x, y));
      if (v < best) {
        best = v;
        bp.y = y;
      }
    }
    bp.smooth = std::abs(gx.eval(bp.x, bp.y)) > 1e-6;
    bp.simple = bp.multiplicity == 1 && std::abs(gyy.eval(bp.x, bp.y)) > 1e-6;
    rep.smooth = rep.smooth && bp.smooth;
    rep.simple_branch = rep.simple_branch && bp.simple;
    if (std::abs(bp.x) < fam.germ.delta1 / 2) rep.multiplicity_sum += bp.multiplicity;
    rep.branch_points.push_back(bp);
  }
  std::sort(rep.branch_points.begin(), rep.branch_points.end(), [](const BranchPoint& a, const BranchPoint& b) {
    if (a.x.real() != b.x.real()) return a.x.real() < b.x.real();
    return a.x.imag() < b.x.imag();
  });
  return rep;
}

bool multiplicity_conservation_check(const UniversalFamily& fam, std::span<const cplx> t) {
  return fiber_classification(fam, t).multiplicity_sum == fam.r;
}

Eigen::MatrixXcd B_matrix(const UniversalFamily& fam, std::span<const cplx> t, double rho, int nodes) {
  const BiPoly g = fam.fiber(t);
  const BiPoly gy = g.dy();
  // coalescing roots can split by more than the separation tolerance in rounding
  for (const cplx bv : all_branch_values(g)) {
    if (std::abs(std::abs(bv) - rho) < 1e-3 * rho) throw Error(ErrorCode::OutOfDomain, "branch point on the contour");
  }
  SheetSamples ss;
  try {
    ss = roots_on_circle([&g](cplx x) { return g.y_coeffs_at(x); }, rho, nodes);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ContourTooClose) throw Error(ErrorCode::OutOfDomain, "branch point too close to the contour");
    throw;
  }
  const int r = fam.r;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(r, r);
  for (int k = 0; k < nodes; ++k) {
    const cplx x = ss.x[static_cast<std::size_t>(k)];
    for (const cplx y : ss.sheets[static_cast<std::size_t>(k)]) {
      const cplx w = 1.0 / (gy.eval(x, y) * gy.eval(x, y)) * x;
      Eigen::VectorXcd gv(r), hv(r);
      for (int i = 0; i < r; ++i) {
        gv(i) = fam.basis()[static_cast<std::size_t>(i)].eval(x, y);
        hv(i) = fam.dual()[static_cast<std::size_t>(i)].eval(x, y);
      }
      b += w * gv * hv.transpose();
    }
  }
  return b / static_cast<double>(nodes);
}

Eigen::MatrixXcd B_matrix(const UniversalFamily& fam, std::span<const cplx> t) {
  return B_matrix(fam, t, 0.75 * fam.germ.delta1, kDefaultNodes);
}

SymmetricBasis symmetric_basis(const Germ& g, SigmaType type) {
  const int k = (type == SigmaType::Fixed) ? 2 : 1;
  const auto terms = g.f.terms(1e-14);
  bool normal_form = terms.size() == 2;
  if (normal_form) {
    const Term& lo = terms[0].b == 0 ? terms[0] : terms[1];
    const Term& top = terms[0].b == 0 ? terms[1] : terms[0];
    normal_form = lo.b == 0 && lo.a == k && top.a == 0 && top.b == g.d && top.c == cplx{1.0};
  }
  if (!normal_form) throw Error(ErrorCode::NotSymmetric, "germ is not of the form y^n - c x^" + std::to_string(k));
  if (type == SigmaType::Fixed && !approx_equal(g.f.reflect_x(), g.f)) {
    throw Error(ErrorCode::NotSymmetric, "f(-x, y) differs from f(x, y)");
  }
  SymmetricBasis out;
  out.r = std::max(0, g.d - 2);
  for (int b = 0; b < out.r; ++b) out.basis.push_back(BiPoly::monomial(1.0, 0, b));

  const LocalAlgebra la(g, g.order);
  if (quotient_rank(la, out.basis) != out.r) throw Error(ErrorCode::RankDeficient, "prescribed elements are dependent in the quotient");
  if (type == SigmaType::Fixed) {
    int emax = 0;
    for (const int e : la.smith().orders) emax = std::max(emax, e);
    std::vector<BiPoly> even;
    for (int b = 0; b < g.d; ++b) {
      for (int a = 0; a < emax; a += 2) even.push_back(BiPoly::monomial(1.0, a, b));
    }
    out.reference_dim = quotient_rank(la, even);
  } else {
    out.reference_dim = la.r();
  }
  out.span_deficit = out.r < out.reference_dim;
  if (out.span_deficit) {
    out.warning = "prescribed basis spans " + std::to_string(out.r) + " of " + std::to_string(out.reference_dim) +
                  (type == SigmaType::Fixed ? " symmetric quotient dimensions" : " quotient dimensions");
  }
  return out;
}

GermCollection assemble_collection(std::vector<UniversalFamily> families, std::optional<std::vector<int>> sigma,
                                   std::optional<std::vector<int>> eta) {
  const int n = static_cast<int>(families.size());
  auto identity = [n] {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  auto check_involution = [n](const std::vector<int>& a, const char* name) {
    if (static_cast<int>(a.size()) != n) throw Error(ErrorCode::InvalidInput, std::string(name) + " has the wrong length");
    for (int l = 0; l < n; ++l) {
      const int m = a[static_cast<std::size_t>(l)];
      if (m < 0 || m >= n || a[static_cast<std::size_t>(m)] != l) {
        throw Error(ErrorCode::InvalidInput, std::string(name) + " is not an involution");
      }
    }
  };
  GermCollection c;
  c.sigma = sigma ? *sigma : identity();
  c.eta = eta ? *eta : std::vector<int>{};
  check_involution(c.sigma, "sigma");
  if (eta) check_involution(c.eta, "eta");

  if (sigma) {
    for (int l = 0; l < n; ++l) {
      const int m = c.sigma[static_cast<std::size_t>(l)];
      const BiPoly& fl = families[static_cast<std::size_t>(l)].germ.f;
      const BiPoly& fm = families[static_cast<std::size_t>(m)].germ.f;
      if (!approx_equal(fm, fl.reflect_x())) throw Error(ErrorCode::NotSymmetric, "germ data incompatible with sigma");
    }
  }
  if (eta) {
    for (int l = 0; l < n; ++l) {
      const int m = c.eta[static_cast<std::size_t>(l)];
      const auto& a = families[static_cast<std::size_t>(l)];
      const auto& b = families[static_cast<std::size_t>(m)];
      if (a.r != b.r || !approx_equal(b.germ.f, a.germ.f.conj_coeffs())) {
        throw Error(ErrorCode::IncompatibleRealStructure, "germ data incompatible with eta");
      }
      for (int i = 0; i < a.r; ++i) {
        if (!approx_equal(b.basis()[static_cast<std::size_t>(i)], a.basis()[static_cast<std::size_t>(i)].conj_coeffs())) {
          throw Error(ErrorCode::IncompatibleRealStructure, "basis incompatible with eta");
        }
      }
    }
  }
  for (const auto& f : families) {
    c.offsets.push_back(c.total_dim);
    c.total_dim += f.r;
  }
  if (eta) {
    // a fixed germ contributes r real dimensions, a conjugate pair 2r
    for (int l = 0; l < n; ++l) c.real_slice_dim += families[static_cast<std::size_t>(l)].r;
  } else {
    c.real_slice_dim = 2 * c.total_dim;
  }
  c.families = std::move(families);
  return c;
}

RealProjection reality_constrain(const GermCollection& coll, std::span<const cplx> t) {
  if (coll.eta.empty()) throw Error(ErrorCode::InvalidInput, "collection has no real structure");
  if (static_cast<int>(t.size()) != coll.total_dim) throw Error(ErrorCode::InvalidInput, "parameter vector has the wrong length");
  RealProjection out;
  out.t.assign(t.begin(), t.end());
  const int n = static_cast<int>(coll.families.size());
  for (int l = 0; l < n; ++l) {
    const int m = coll.eta[static_cast<std::size_t>(l)];
    if (m < l) continue;
    const int r = coll.families[static_cast<std::size_t>(l)].r;
    const auto ol = static_cast<std::size_t>(coll.offsets[static_cast<std::size_t>(l)]);
    const auto om = static_cast<std::size_t>(coll.offsets[static_cast<std::size_t>(m)]);
    for (int i = 0; i < r; ++i) {
      const auto li = ol + static_cast<std::size_t>(i);
      const auto mi = om + static_cast<std::size_t>(i);
      if (m == l) {
        out.t[li] = t[li].real();
      } else {
        const cplx a = 0.5 * (t[li] + std::conj(t[mi]));
        out.t[li] = a;
        out.t[mi] = std::conj(a);
      }
    }
  }
  double diff = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) diff = std::max(diff, std::abs(out.t[i] - t[i]));
  out.member = diff <= 1e-12;
  return out;
}

}  // namespace germdeform
