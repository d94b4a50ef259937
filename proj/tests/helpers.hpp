#pragma once

#include <complex>
#include <vector>

#include "germdeform/polynomial.hpp"

namespace th {

using germdeform::cplx;
using germdeform::Term;

// y^n - x^k
inline std::vector<Term> pure(int n, int k) { return {{0, n, {1.0, 0.0}}, {k, 0, {-1.0, 0.0}}}; }

inline germdeform::BiPoly bp(std::vector<Term> t) { return germdeform::BiPoly::from_terms(t); }

inline bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace th
