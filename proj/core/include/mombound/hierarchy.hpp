#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mombound/eigensolve.hpp"
#include "mombound/measures.hpp"
#include "mombound/momat.hpp"
#include "mombound/polynomial.hpp"

namespace mombound {

enum class BoundStatus { ok, ill_conditioned };
std::string_view status_name(BoundStatus s);

/// One level of the upper-bound hierarchy
///   lambda_d = max { lambda : M_d((f - lambda) y) >= 0 },
/// i.e. the smallest generalized eigenvalue of (M_d(f y), M_d(y)).
struct BoundReport {
  unsigned d = 0;
  /// The exact Rayleigh quotient of dual_exact, rounded once. Since any
  /// polynomial g gives int f g^2 / int g^2 >= f*, this is a valid upper
  /// bound regardless of eigensolver accuracy.
  double lambda = 0;
  Rational lambda_exact;
  /// Minimizing eigenvector g*: coefficients in the graded monomial basis.
  std::vector<double> dual_coeffs;
  std::vector<Rational> dual_exact;
  std::shared_ptr<const MonomialBasis> basis;
  /// int (g*)^2 dmu, exact.
  Rational normalization;
  double residual = 0;
  double reduced_eigenvalue = 0;
  double reduced_norm = 0;
  double condition_estimate = 0;
  std::size_t reduced_dimension = 0;
  BoundStatus status = BoundStatus::ok;
  std::string diagnostic;
  Polynomial objective{1};
};

struct HierarchyOptions {
  /// Worker threads for independent levels.
  unsigned jobs = 1;
  /// Allowed increase lambda_{d+1} - lambda_d, relative to max(1, |lambda_d|).
  double monotone_tol = 1e-8;
  /// Relative gap between the reduced eigenvalue and the exact Rayleigh
  /// quotient above which a level is flagged ill_conditioned.
  double rayleigh_tol = 1e-6;
};

/// Single level. Numerical failures are reported through status.
BoundReport upper_bound(const Polynomial& f, const MomentSequence& seq, unsigned d,
                        const HierarchyOptions& options = {});

/// Levels 0..d_max from one assembly at d_max (leading blocks give the lower
/// orders). A level that increases beyond monotone_tol is flagged.
std::vector<BoundReport> run_hierarchy(const Polynomial& f, const MomentSequence& seq, unsigned d_max,
                                       const HierarchyOptions& options = {});

/// Index of the last level whose status is ok, or -1.
std::ptrdiff_t last_trusted(const std::vector<BoundReport>& reports);

/// sigma* = (g*)^2 / int (g*)^2 dmu.
struct SosDensity {
  Polynomial g{1};
  Rational normalization;
  /// int f sigma* dmu, exact.
  Rational expected_objective;
  /// |int f sigma* dmu - lambda_d|.
  double complementarity_residual = 0;
  unsigned d = 0;

  double operator()(std::span<const double> x) const;
};

/// Throws NumericalError on a zero normalization or an untrusted report.
SosDensity dual_density(const BoundReport& report, const MomentSequence& seq);

struct CandidatePoint {
  std::vector<double> x_star;
  std::vector<Rational> x_star_exact;
  double f_value = 0;
  bool in_support = false;
};

/// Mean of the dual density: x*_i = int x_i sigma* dmu, computed exactly.
CandidatePoint extract_candidate(const SosDensity& density, const Polynomial& f, const MomentSequence& seq);

/// sigma*(x) at each grid point (row-major points of dimension n).
std::vector<double> density_profile(const SosDensity& density, std::span<const std::vector<double>> grid);

/// "d,lambda,residual,status" header plus one row per level, 12 significant digits.
void write_bounds_csv(const std::vector<BoundReport>& reports, std::ostream& out);
std::string format_number(double v);

}  // namespace mombound
