#include "mombound/hierarchy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "mombound/errors.hpp"

namespace mombound {

std::string_view status_name(BoundStatus s) { return s == BoundStatus::ok ? "ok" : "ill_conditioned"; }

namespace {

BoundReport solve_level(const Polynomial& f, const RationalMatrix& a, const RationalMatrix& b, unsigned d,
                        std::shared_ptr<const MonomialBasis> basis, const HierarchyOptions& options) {
  BoundReport rep;
  rep.d = d;
  rep.basis = std::move(basis);
  rep.objective = f;
  try {
    GenEigResult g = gen_eig_smallest(a, b);
    rep.lambda = g.value;
    rep.lambda_exact = g.rayleigh;
    rep.dual_coeffs = std::move(g.vector);
    rep.dual_exact = std::move(g.vector_exact);
    rep.normalization = quadratic_form(b, rep.dual_exact);
    rep.residual = g.residual;
    rep.reduced_eigenvalue = g.reduced_eigenvalue;
    rep.reduced_norm = g.reduced_norm;
    rep.condition_estimate = g.condition_estimate;
    rep.reduced_dimension = g.reduced_dimension;
    const double scale = std::max(1.0, std::abs(rep.lambda));
    if (rep.residual > 1e-10 * std::max(1.0, rep.reduced_norm)) {
      rep.status = BoundStatus::ill_conditioned;
      rep.diagnostic = "reduced eigen residual above tolerance";
    } else if (std::abs(rep.reduced_eigenvalue - rep.lambda) > options.rayleigh_tol * scale) {
      rep.status = BoundStatus::ill_conditioned;
      rep.diagnostic = "eigenvalue and exact Rayleigh quotient disagree";
    }
  } catch (const NumericalError& err) {
    rep.status = BoundStatus::ill_conditioned;
    rep.diagnostic = err.what();
    rep.lambda = std::nan("");
  }
  return rep;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

BoundReport upper_bound(const Polynomial& f, const MomentSequence& seq, unsigned d, const HierarchyOptions& options) {
  if (f.dimension() != seq.dimension()) throw InputError("objective and measure dimensions differ");
  RationalMatrix b = moment_matrix(seq, d);
  RationalMatrix a = localizing_matrix(seq, f, d);
  return solve_level(f, a, b, d, b.basis(), options);
}

std::vector<BoundReport> run_hierarchy(const Polynomial& f, const MomentSequence& seq, unsigned d_max,
                                       const HierarchyOptions& options) {
  if (f.dimension() != seq.dimension()) throw InputError("objective and measure dimensions differ");
  const RationalMatrix b_full = moment_matrix(seq, d_max);
  const RationalMatrix a_full = localizing_matrix(seq, f, d_max);
  std::vector<BoundReport> reports(d_max + 1);
  parallel_for(d_max + 1, options.jobs, [&](std::size_t d) {
    auto basis = std::make_shared<const MonomialBasis>(seq.dimension(), static_cast<unsigned>(d));
    const std::size_t m = basis->size();
    reports[d] = solve_level(f, a_full.leading(m, basis), b_full.leading(m, basis), static_cast<unsigned>(d), basis,
                             options);
  });
  // Sequential reduction: later levels may only improve on the best trusted one.
  std::ptrdiff_t trusted = -1;
  for (std::size_t d = 0; d < reports.size(); ++d) {
    auto& r = reports[d];
    if (r.status != BoundStatus::ok) continue;
    if (trusted >= 0) {
      const double prev = reports[static_cast<std::size_t>(trusted)].lambda;
      if (r.lambda > prev + options.monotone_tol * std::max(1.0, std::abs(prev))) {
        r.status = BoundStatus::ill_conditioned;
        r.diagnostic = "monotonicity violated";
        continue;
      }
    }
    trusted = static_cast<std::ptrdiff_t>(d);
  }
  return reports;
}

std::ptrdiff_t last_trusted(const std::vector<BoundReport>& reports) {
  for (std::size_t i = reports.size(); i-- > 0;)
    if (reports[i].status == BoundStatus::ok) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

// ---------------------------------------------------------------------------

double SosDensity::operator()(std::span<const double> x) const {
  std::vector<Rational> xr(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) xr[i] = exact_from_double(x[i]);
  Rational gv = poly_eval(g, xr);
  return Rational(gv * gv / normalization).get_d();
}

SosDensity dual_density(const BoundReport& report, const MomentSequence& seq) {
  if (!report.basis || report.dual_exact.size() != report.basis->size())
    throw NumericalError("bound report carries no dual vector");
  if (report.status != BoundStatus::ok) throw NumericalError("bound report is not trusted: " + report.diagnostic);
  SosDensity s;
  s.d = report.d;
  s.g = from_coefficients(*report.basis, report.dual_exact);
  const RationalMatrix b = moment_matrix(seq, report.d);
  s.normalization = quadratic_form(b, report.dual_exact);
  if (s.normalization == 0) throw NumericalError("dual eigenvector has zero norm");
  const RationalMatrix a = localizing_matrix(seq, report.objective, report.d);
  s.expected_objective = quadratic_form(a, report.dual_exact) / s.normalization;
  s.complementarity_residual = std::abs(Rational(s.expected_objective - report.lambda_exact).get_d());
  return s;
}

CandidatePoint extract_candidate(const SosDensity& density, const Polynomial& f, const MomentSequence& seq) {
  const std::size_t n = seq.dimension();
  const MonomialBasis basis(n, density.d);
  std::vector<Rational> coeffs(basis.size(), Rational(0));
  for (const auto& [e, c] : density.g.terms()) {
    auto idx = basis.index_of(e);
    if (!idx) throw InputError("density polynomial exceeds its declared degree");
    coeffs[*idx] = c;
  }
  CandidatePoint p;
  p.x_star_exact.resize(n);
  p.x_star.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RationalMatrix m = localizing_matrix(seq, Polynomial::variable(n, i), density.d);
    p.x_star_exact[i] = quadratic_form(m, coeffs) / density.normalization;
    p.x_star[i] = p.x_star_exact[i].get_d();
  }
  p.f_value = poly_eval(f, std::span<const Rational>(p.x_star_exact)).get_d();
  p.in_support = seq.spec().contains(p.x_star);
  return p;
}

std::vector<double> density_profile(const SosDensity& density, std::span<const std::vector<double>> grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (const auto& x : grid) out.push_back(density(x));
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_bounds_csv(const std::vector<BoundReport>& reports, std::ostream& out) {
  out << "d,lambda,residual,status\n";
  for (const auto& r : reports)
    out << r.d << "," << format_number(r.lambda) << "," << format_number(r.residual) << "," << status_name(r.status)
        << "\n";
}

}  // namespace mombound
