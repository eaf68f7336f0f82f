#include "mombound/cone.hpp"

#include "mombound/eigensolve.hpp"
#include "mombound/errors.hpp"

namespace mombound {

std::string_view verdict_name(CertificateVerdict v) {
  return v == CertificateVerdict::member_up_to ? "member_up_to" : "counterexample";
}

std::string_view conclusion_name(CopositivityConclusion c) {
  return c == CopositivityConclusion::not_copositive ? "not_copositive" : "no_refutation";
}

Certificate certify_nonnegativity(const Polynomial& f, const MomentSequence& seq, unsigned k_max, double tol) {
  if (f.dimension() != seq.dimension()) throw InputError("polynomial and measure dimensions differ");
  const RationalMatrix full = localizing_matrix(seq, f, k_max);
  Certificate cert;
  for (unsigned k = 0; k <= k_max; ++k) {
    auto basis = std::make_shared<const MonomialBasis>(seq.dimension(), k);
    const RationalMatrix m = full.leading(basis->size(), basis);
    PsdVerdict v = is_psd(m, tol);
    cert.k_reached = k;
    if (!v.psd) {
      // Independent re-check through the raw moments of h^2 f.
      Polynomial h = from_coefficients(*basis, v.witness);
      Rational check = integrate(h * h * f, seq);
      if (check != v.witness_value || !(check < 0))
        throw NumericalError("witness failed exact re-verification");
      cert.verdict = CertificateVerdict::counterexample;
      cert.witness = std::move(h);
      cert.witness_value = check;
      return cert;
    }
  }
  cert.verdict = CertificateVerdict::member_up_to;
  return cert;
}

bool cone_membership(const Polynomial& f, const MomentSequence& seq, unsigned k) {
  return !ldlt(localizing_matrix(seq, f, k)).indefinite;
}

Polynomial quadratic_form_polynomial(const RationalMatrix& a) {
  const std::size_t n = a.size();
  Polynomial f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (a(i, j) == 0) continue;
      std::vector<unsigned> e(n, 0);
      e[i] += 1;
      e[j] += 1;
      f.add_term(Exponent(std::move(e)), i == j ? a(i, j) : Rational(2 * a(i, j)));
    }
  return f;
}

CopositivityReport copositivity_test(const RationalMatrix& a, unsigned d_max, double tol,
                                     const HierarchyOptions& options) {
  if (a.size() == 0) throw InputError("empty matrix");
  CopositivityReport rep;
  rep.matrix = a;
  const Polynomial f = quadratic_form_polynomial(a);
  MomentSequence seq(MeasureSpec::exponential(a.size()));
  rep.levels = run_hierarchy(f, seq, d_max, options);
  rep.order = d_max;
  for (const auto& lvl : rep.levels) {
    rep.lambdas.push_back(lvl.lambda);
    if (rep.conclusion == CopositivityConclusion::no_refutation && !lvl.dual_exact.empty() &&
        lvl.lambda_exact < 0 && lvl.lambda < -tol) {
      rep.conclusion = CopositivityConclusion::not_copositive;
      rep.order = lvl.d;
    }
  }
  return rep;
}

}  // namespace mombound
