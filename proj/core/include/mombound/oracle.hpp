#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mombound/measures.hpp"
#include "mombound/polynomial.hpp"
#include "mombound/rational.hpp"

// Ground-truth engines for tests. Nothing here calls the moment formulas,
// matrix assembly or eigen code it is used to check.
namespace mombound::oracle {

struct GridMinimum {
  double value = 0;
  std::vector<double> point;
};

/// Minimum of f over the uniform tensor grid with `resolution` points per
/// axis on prod [lower_i, upper_i]. Every value is attained at a feasible
/// point, so the result is an upper bound on the box minimum.
GridMinimum grid_minimize(const Polynomial& f, const std::vector<double>& lower, const std::vector<double>& upper,
                          std::size_t resolution);

/// Upper bound of |grad f| over the box from coefficient magnitudes, used
/// to turn a grid minimum into a rigorous lower bound.
double gradient_bound(const Polynomial& f, const std::vector<double>& lower, const std::vector<double>& upper);

struct MonteCarloEstimate {
  double estimate = 0;
  double standard_error = 0;
};

/// Sample mean of x^alpha for ball, sphere and simplex measures.
/// Sphere: normalized Gaussian vectors. Ball: sphere point scaled by
/// U^{1/n}. Simplex: first n of n+1 normalized exponential spacings.
/// Throws CapabilityError for other kinds, InputError for samples < 1e4.
MonteCarloEstimate mc_moment(const MeasureSpec& spec, const Exponent& alpha, std::size_t samples,
                             std::uint64_t seed);

/// All moments of degree <= d from one sample set, in enumerate_basis order.
std::vector<MonteCarloEstimate> mc_moments(const MeasureSpec& spec, unsigned d, std::size_t samples,
                                           std::uint64_t seed);

/// Box moment by the substitution x = a + (b - a) t and binomial expansion,
/// an algebraic route distinct from the antiderivative formula.
Rational box_moment_binomial(const std::vector<Rational>& lower, const std::vector<Rational>& upper,
                             const Exponent& alpha);

/// Standard-simplex moment by iterated exact integration, innermost
/// variable first, normalized by the volume 1/n!.
Rational simplex_moment_iterated(const Exponent& alpha);

/// Weighted sum over the support points evaluated through poly_eval.
Rational discrete_moment_direct(const MeasureSpec& spec, const Exponent& alpha);

}  // namespace mombound::oracle
