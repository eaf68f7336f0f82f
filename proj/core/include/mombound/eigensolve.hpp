#pragma once

#include <cstddef>
#include <vector>

#include "mombound/momat.hpp"
#include "mombound/rational.hpp"

namespace mombound {

/// Exact symmetric-pivoted P^T A P = L D L^T.
///
/// Columns are eliminated in their original order; a column whose Schur
/// diagonal is zero and whose Schur column vanishes is deferred to the end
/// (a zero pivot), so zero pivots are always trailing. If a zero diagonal
/// meets a nonzero off-diagonal the matrix is indefinite and the
/// factorization stops there (complete == false).
struct LdltFactorization {
  std::size_t size = 0;
  /// order[p] = original index placed at permuted position p.
  std::vector<std::size_t> order;
  /// Unit lower triangular factor in permuted coordinates.
  RationalMatrix lower;
  /// Pivots in permuted order; zeros trailing.
  std::vector<Rational> diagonal;
  std::size_t rank = 0;
  bool complete = true;
  /// A negative pivot appeared or the factorization stalled.
  bool indefinite = false;
  /// When indefinite: a vector (original coordinates) with w^T A w < 0.
  std::vector<Rational> witness;
  Rational witness_value;

  /// P L D L^T P^T mapped back to original coordinates; equals A when complete.
  RationalMatrix reconstruct() const;
};

LdltFactorization ldlt(const RationalMatrix& a);

/// Eigen decomposition from cyclic Jacobi. vectors is column-major:
/// component i of eigenvector k is vectors[k * n + i].
struct SymmetricEigensystem {
  std::vector<double> values;
  std::vector<double> vectors;
  int sweeps = 0;
  bool converged = false;
};

/// Cyclic Jacobi with threshold skipping; at most max_sweeps sweeps.
SymmetricEigensystem jacobi_eigensystem(const RealMatrix& a, int max_sweeps = 50);

struct EigenResult {
  double value = 0;
  std::vector<double> vector;
  /// ||A v - value v|| for unit v.
  double residual = 0;
};

/// Smallest eigenpair. Throws NumericalError if Jacobi does not converge.
EigenResult sym_eig_smallest(const RealMatrix& a);

/// Smallest generalized eigenpair of the definite pencil (A, B).
struct GenEigResult : EigenResult {
  /// Exact Rayleigh quotient v^T A v / v^T B v of the returned vector; value
  /// is this number rounded once.
  Rational rayleigh;
  /// Raw smallest eigenvalue of the reduced standard problem.
  double reduced_eigenvalue = 0;
  /// Returned vector with exact rational entries, original coordinates.
  std::vector<Rational> vector_exact;
  /// Frobenius norm of the reduced matrix; residual is measured there.
  double reduced_norm = 0;
  std::size_t reduced_dimension = 0;
  /// Ratio of largest to smallest nonzero pivot of B.
  double condition_estimate = 0;
  int sweeps = 0;
};

/// Solves A v = lambda B v on range(B) and returns the smallest lambda.
///
/// B is factored exactly (LDL^T); A is transformed congruently into the
/// basis orthonormal for B, also exactly, and rounded once before the
/// Jacobi solve. Components in ker(B) are set to zero. Among numerically
/// tied eigenvalues the vector with the largest constant coefficient is
/// chosen. Throws NumericalError when B is indefinite or zero, or when the
/// reduced eigenproblem does not converge.
GenEigResult gen_eig_smallest(const RationalMatrix& a, const RationalMatrix& b);
GenEigResult gen_eig_smallest(const RealMatrix& a, const RealMatrix& b);

struct PsdVerdict {
  bool psd = true;
  /// Decided by the exact factorization alone (no rounding involved).
  bool exact = false;
  /// Present iff !psd: h^T A h < -tol * ||A||_F * ||h||^2, checked exactly.
  std::vector<Rational> witness;
  Rational witness_value;
  double min_eigenvalue = 0;
};

/// PSD test with a verifiable witness. A matrix whose negative directions
/// are all within the relative tolerance is reported psd (inconclusive
/// boundary cases never yield witnesses).
PsdVerdict is_psd(const RationalMatrix& a, double tol = 1e-8);
PsdVerdict is_psd(const RealMatrix& a, double tol = 1e-8);

}  // namespace mombound
