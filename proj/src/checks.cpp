#include "germdeform/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "germdeform/classify.hpp"
#include "germdeform/error.hpp"

namespace germdeform {

namespace {

std::vector<Term> pure(int n, int k) { return {{0, n, {1.0, 0.0}}, {k, 0, {-1.0, 0.0}}}; }

CheckRow row(std::string name, double value, double threshold, bool below = true, std::string detail = {}) {
  CheckRow r;
  r.name = std::move(name);
  r.value = value;
  r.threshold = threshold;
  r.pass = below ? (value < threshold) : (value >= threshold);
  r.detail = std::move(detail);
  return r;
}

CheckRow failed(std::string name, const std::exception& e) {
  CheckRow r;
  r.name = std::move(name);
  r.pass = false;
  r.value = std::nan("");
  r.detail = e.what();
  return r;
}

double max_abs(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"y^2 - x", pure(2, 1), 1},   {"y^2 - x^3", pure(2, 3), 3}, {"y^3 - x^2", pure(3, 2), 4},
      {"y^3 - x^4", pure(3, 4), 8}, {"y^4 - x^2", pure(4, 2), 6}, {"y^4 - x^3", pure(4, 3), 9},
  };
  return corpus;
}

std::vector<CheckRow> run_checks(std::uint64_t seed) {
  std::vector<CheckRow> rows;
  std::mt19937_64 rng(seed);
  std::vector<UniversalFamily> fams;

  // quotient dimension, basis maximality and independence
  {
    double bad = 0;
    std::string detail;
    try {
      for (const auto& e : builtin_corpus()) {
        Germ g = normalize_germ(e.terms);
        LocalAlgebra la(g, g.order);
        auto basis = monomial_basis(la);
        bool ok = g.r == e.expected_r && static_cast<int>(basis.size()) == g.r && quotient_rank(la, basis) == g.r;
        for (std::size_t i = 0; i < basis.size() && ok; ++i) {
          auto fewer = basis;
          fewer.erase(fewer.begin() + static_cast<long>(i));
          ok = quotient_rank(la, fewer) == g.r - 1;
        }
        for (int a = 0; a < g.r + 1 && ok; ++a) {
          for (int b = 0; b < g.d && ok; ++b) {
            auto more = basis;
            more.push_back(BiPoly::monomial(1.0, a, b));
            ok = quotient_rank(la, more) == g.r;
          }
        }
        if (!ok) {
          bad += 1;
          detail += e.name + " ";
        }
      }
      rows.push_back(row("quotient_dimension_and_basis", bad, 0.5, true, detail));
    } catch (const std::exception& ex) {
      rows.push_back(failed("quotient_dimension_and_basis", ex));
    }
  }

  // e1 anchor
  try {
    Germ g = normalize_germ(pure(3, 2));
    auto q = analyze_quotient(g);
    std::vector<std::string> names;
    for (const auto& b : q.basis_g) names.push_back(b.to_string());
    const bool ok = g.d == 3 && g.r == 4 && names == std::vector<std::string>{"1", "x", "y", "x*y"};
    rows.push_back(row("e1_anchor_basis", ok ? 0.0 : 1.0, 0.5));
  } catch (const std::exception& ex) {
    rows.push_back(failed("e1_anchor_basis", ex));
  }

  // exact against contour pairing; dual certificate; B(0)
  {
    double pair_err = 0, cert = 0, b0 = 0;
    try {
      for (const auto& e : builtin_corpus()) {
        Germ g = normalize_germ(e.terms);
        FamilyOptions fo;
        fo.seed = seed;
        auto fam = build_family(g, fo);
        const auto& gs = fam.basis();
        for (const auto& a : gs) {
          for (const auto& b : gs) {
            const cplx ex = residue_pairing(a, b, g);
            const cplx ct = residue_pairing_contour(a, b, g.f, 0.75 * g.delta1, kDefaultNodes);
            pair_err = std::max(pair_err, std::abs(ex - ct));
          }
        }
        cert = std::max(cert, fam.quotient.dual_certificate);
        const std::vector<cplx> zero(static_cast<std::size_t>(fam.r));
        auto B = B_matrix(fam, zero);
        b0 = std::max(b0, (B - Eigen::MatrixXcd::Identity(fam.r, fam.r)).cwiseAbs().maxCoeff());
        fams.push_back(std::move(fam));
      }
      rows.push_back(row("pairing_exact_vs_contour", pair_err, 1e-8));
      rows.push_back(row("dual_basis_certificate", cert, 1e-10));
      rows.push_back(row("B_at_origin_identity", b0, 1e-10));
    } catch (const std::exception& ex) {
      rows.push_back(failed("pairing_and_dual_basis", ex));
      return rows;
    }
  }

  // sum y_i^n / f'(y_i) over random monic square-free polynomials
  {
    double err = 0;
    std::normal_distribution<double> nd;
    for (int trial = 0; trial < 30; ++trial) {
      const int d = 2 + trial % 5;
      std::vector<cplx> roots;
      for (int i = 0; i < d; ++i) roots.push_back({nd(rng), nd(rng)});
      auto coeffs = poly_from_roots(roots);
      Poly p(coeffs);
      Poly dp = p.derivative();
      auto found = poly_roots(coeffs);
      for (int n = 0; n < d; ++n) {
        cplx s = 0;
        for (const cplx y : found) s += std::pow(y, n) / dp.eval(y);
        err = std::max(err, std::abs(s - (n == d - 1 ? 1.0 : 0.0)));
      }
    }
    rows.push_back(row("trace_identities", err, 1e-10));
  }

  const UniversalFamily& e1 = fams[2];

  // Z3 equivariance of dis on e1
  try {
    const cplx q = std::polar(1.0, 2 * std::numbers::pi / 3);
    const double rad = std::min(0.01, e1.param_box);
    double err = 0;
    for (int i = 0; i < 10; ++i) {
      auto t = random_parameter(rng, 4, rad);
      auto tq = t;
      tq[2] *= q;
      tq[3] *= q;
      err = std::max(err, max_abs(dis_map(e1, t), dis_map(e1, tq)));
    }
    rows.push_back(row("z3_equivariance", err, 1e-8));
  } catch (const std::exception& ex) {
    rows.push_back(failed("z3_equivariance", ex));
  }

  // local constancy of the branch multiplicity
  try {
    double bad = 0;
    for (const auto& fam : fams) {
      for (int i = 0; i < 20; ++i) {
        auto t = random_parameter(rng, fam.r, fam.param_box);
        if (!multiplicity_conservation_check(fam, t)) bad += 1;
      }
    }
    rows.push_back(row("multiplicity_conservation", bad, 0.5));
  } catch (const std::exception& ex) {
    rows.push_back(failed("multiplicity_conservation", ex));
  }

  // generic fibers are smooth with simple branching
  try {
    int good = 0;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
      auto rep = fiber_classification(e1, random_parameter(rng, 4, e1.param_box));
      if (rep.smooth && rep.simple_branch) ++good;
    }
    rows.push_back(row("generic_fiber_fraction", static_cast<double>(good) / n, 0.95, false));
  } catch (const std::exception& ex) {
    rows.push_back(failed("generic_fiber_fraction", ex));
  }

  // straight-line classification on e1
  try {
    std::vector<cplx> target{0.002, {0.0, 0.001}, 0.001, -0.0005};
    BiPoly dir;
    for (int i = 0; i < 4; ++i) dir += target[static_cast<std::size_t>(i)] * e1.basis()[static_cast<std::size_t>(i)];
    DeformationPath path{TriPoly::from_bipoly(e1.germ.f) + TriPoly::var_s() * TriPoly::from_bipoly(dir), 1.0};
    ClassifyOptions opts;
    opts.nodes = 64;
    opts.halving_check = false;
    auto res = integrate_path(path, e1, opts);
    rows.push_back(row("straight_line_classification", max_abs(res.t_final(), target), 1e-6));
  } catch (const std::exception& ex) {
    rows.push_back(failed("straight_line_classification", ex));
  }

  // span deficit of the symmetric prescription
  try {
    Germ g = normalize_germ(pure(4, 2));
    auto sb = symmetric_basis(g, SigmaType::Fixed);
    const bool ok = sb.basis.size() == 2 && sb.span_deficit && sb.reference_dim == sb.r + 1;
    rows.push_back(row("symmetric_basis_span_warning", ok ? 0.0 : 1.0, 0.5, true, sb.warning));
  } catch (const std::exception& ex) {
    rows.push_back(failed("symmetric_basis_span_warning", ex));
  }

  return rows;
}

}  // namespace germdeform
