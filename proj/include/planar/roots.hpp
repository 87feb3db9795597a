#pragma once

// Planar roots, exponentials and logarithms, solved degree by degree.
//
// For a tree T of degree n >= 2 and a target g with g(0) = 1, the root is the
// unique f with f(0) = 1 and f^T = g. In .T(f, ..., f) a tree w of degree k
// receives n * f_w from the terms with a single non-unit argument; every other
// contribution involves only coefficients of degree < k. So each degree is
// one linear solve: f_w = (g_w - p_w) / n with p = (f_{<k})^T.

#include <cstddef>

#include "planar/rational.hpp"
#include "planar/series.hpp"
#include "planar/tree.hpp"

namespace planar {

// f with f(0) = 1 and f^t = target through degree max_degree. deg(t) >= 2.
PlanarSeries root(const PlanarTree& t, const PlanarSeries& target, std::size_t max_degree);
PlanarSeries root(const PlanarTree& t, std::size_t max_degree);

// f with f(0) = 1 and f^t = (1 + x)^s.
PlanarSeries generalized_root(const PlanarTree& t, const PlanarTree& s, std::size_t max_degree);

// Coefficient of the C_d-root of 1 + x at t, from the arity profile of t.
Rational corona_root_coeff(std::size_t d, const PlanarTree& t);
// The same closed form on a profile (a_nu for the corona C_d).
Rational profile_root_coeff(std::size_t d, const ArityProfile& nu);
// The closed form without the d^{-deg} normalization. Kept only to document that
// it disagrees with the solver.
Rational corona_root_coeff_unnormalized(std::size_t d, const PlanarTree& t);

// q (q - 1) ... (q - n + 1) / n!
Rational classical_binom(const Rational& q, std::size_t n);

// Sum over profiles nu of degree n of catalan(nu) * a_nu.
Rational catalan_aggregate(std::size_t d, std::size_t n);

// e(0) = 1, e_x = 1, e^t = e(n x) through max_degree.
PlanarSeries exp_t(const PlanarTree& t, std::size_t max_degree);
// L(0) = 0, exp_t o L = 1 + x through max_degree.
PlanarSeries log_t(const PlanarTree& t, std::size_t max_degree);

// f(c x): the coefficient at w is multiplied by c^deg(w).
PlanarSeries dilate(const PlanarSeries& f, const Rational& c);

} // namespace planar
