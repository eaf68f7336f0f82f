#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mombound/hierarchy.hpp"
#include "mombound/measures.hpp"
#include "mombound/momat.hpp"
#include "mombound/polynomial.hpp"

namespace mombound {

enum class CertificateVerdict { member_up_to, counterexample };
std::string_view verdict_name(CertificateVerdict v);

/// Outcome of testing M_k(f y) >= 0 for k = 0..k_max.
///
/// member_up_to(k) is one-sided: f lies in every tested cone C^k, which is
/// necessary but never sufficient for f >= 0 on the support. A
/// counterexample carries h with int h^2 f dmu < 0, so f < 0 somewhere.
struct Certificate {
  CertificateVerdict verdict = CertificateVerdict::member_up_to;
  unsigned k_reached = 0;
  std::optional<Polynomial> witness;
  /// <h, M_k(f y) h> = int h^2 f dmu, exact.
  std::optional<Rational> witness_value;
};

Certificate certify_nonnegativity(const Polynomial& f, const MomentSequence& seq, unsigned k_max, double tol = 1e-8);

/// Exact test of M_k(f y) >= 0 (single level, no tolerance).
bool cone_membership(const Polynomial& f, const MomentSequence& seq, unsigned k);

enum class CopositivityConclusion { not_copositive, no_refutation };
std::string_view conclusion_name(CopositivityConclusion c);

struct CopositivityReport {
  RationalMatrix matrix;
  std::vector<double> lambdas;
  std::vector<BoundReport> levels;
  CopositivityConclusion conclusion = CopositivityConclusion::no_refutation;
  /// First order with lambda_d < -tol (not_copositive) or d_max.
  unsigned order = 0;
};

/// f_A(x) = x^T A x.
Polynomial quadratic_form_polynomial(const RationalMatrix& a);

/// A is copositive iff lambda_d >= 0 for every d, for the hierarchy of f_A
/// under the exponential measure on the orthant. Refutations are exact: the
/// reported lambda_d is an exact Rayleigh quotient, so lambda_d < 0 means
/// int f_A g^2 dmu < 0 for an explicit g.
CopositivityReport copositivity_test(const RationalMatrix& a, unsigned d_max, double tol = 1e-10,
                                     const HierarchyOptions& options = {});

}  // namespace mombound
