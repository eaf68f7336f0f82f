#include "mombound/oracle.hpp"

#include <cmath>
#include <random>

#include "mombound/errors.hpp"

namespace mombound::oracle {

GridMinimum grid_minimize(const Polynomial& f, const std::vector<double>& lower, const std::vector<double>& upper,
                          std::size_t resolution) {
  const std::size_t n = f.dimension();
  if (lower.size() != n || upper.size() != n) throw InputError("grid bounds do not match dimension");
  if (resolution < 2) throw InputError("grid resolution must be >= 2");
  GridMinimum best;
  best.value = INFINITY;
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i)
      x[i] = lower[i] + (upper[i] - lower[i]) * static_cast<double>(idx[i]) / static_cast<double>(resolution - 1);
    const double v = poly_eval(f, std::span<const double>(x));
    if (v < best.value) {
      best.value = v;
      best.point = x;
    }
    std::size_t i = 0;
    while (i < n && ++idx[i] == resolution) idx[i++] = 0;
    if (i == n) break;
  }
  return best;
}

double gradient_bound(const Polynomial& f, const std::vector<double>& lower, const std::vector<double>& upper) {
  const std::size_t n = f.dimension();
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::max(std::abs(lower[i]), std::abs(upper[i]));
  double total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double g = 0;
    for (const auto& [e, c] : f.terms()) {
      if (e[k] == 0) continue;
      double t = std::abs(c.get_d()) * e[k];
      for (std::size_t i = 0; i < n; ++i) t *= std::pow(r[i], static_cast<double>(i == k ? e[i] - 1 : e[i]));
      g += t;
    }
    total += g * g;
  }
  return std::sqrt(total);
}

namespace {

template <typename Rng>
void sample_point(const MeasureSpec& spec, Rng& rng, std::vector<double>& x) {
  const std::size_t n = spec.dimension();
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  switch (spec.kind()) {
    case MeasureKind::uniform_sphere:
    case MeasureKind::uniform_ball: {
      double nrm = 0;
      do {
        nrm = 0;
        for (auto& v : x) {
          v = normal(rng);
          nrm += v * v;
        }
      } while (nrm == 0);
      nrm = std::sqrt(nrm);
      double scale = 1.0 / nrm;
      if (spec.kind() == MeasureKind::uniform_ball) scale *= std::pow(unif(rng), 1.0 / static_cast<double>(n));
      for (auto& v : x) v *= scale;
      return;
    }
    case MeasureKind::uniform_simplex: {
      double total = 0;
      std::vector<double> e(n + 1);
      for (auto& v : e) {
        v = expo(rng);
        total += v;
      }
      for (std::size_t i = 0; i < n; ++i) x[i] = e[i] / total;
      return;
    }
    default:
      throw CapabilityError("Monte Carlo oracle supports ball, sphere and simplex only");
  }
}

}  // namespace

std::vector<MonteCarloEstimate> mc_moments(const MeasureSpec& spec, unsigned d, std::size_t samples,
                                           std::uint64_t seed) {
  if (spec.kind() != MeasureKind::uniform_ball && spec.kind() != MeasureKind::uniform_sphere &&
      spec.kind() != MeasureKind::uniform_simplex)
    throw CapabilityError("Monte Carlo oracle supports ball, sphere and simplex only");
  if (samples < 10000) throw InputError("Monte Carlo oracle needs at least 1e4 samples");
  const MonomialBasis basis(spec.dimension(), d);
  std::vector<double> sum(basis.size(), 0.0), sumsq(basis.size(), 0.0);
  std::mt19937_64 rng(seed);
  std::vector<double> x(spec.dimension());
  for (std::size_t s = 0; s < samples; ++s) {
    sample_point(spec, rng, x);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      double v = 1;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (unsigned p = 0; p < basis[k][i]; ++p) v *= x[i];
      sum[k] += v;
      sumsq[k] += v * v;
    }
  }
  std::vector<MonteCarloEstimate> out(basis.size());
  const double m = static_cast<double>(samples);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double mean = sum[k] / m;
    const double var = std::max(0.0, sumsq[k] / m - mean * mean);
    out[k] = {mean, std::sqrt(var / (m - 1))};
  }
  return out;
}

MonteCarloEstimate mc_moment(const MeasureSpec& spec, const Exponent& alpha, std::size_t samples,
                             std::uint64_t seed) {
  if (alpha.dimension() != spec.dimension()) throw InputError("exponent dimension mismatch");
  auto all = mc_moments(spec, alpha.degree(), samples, seed);
  const MonomialBasis basis(spec.dimension(), alpha.degree());
  return all[*basis.index_of(alpha)];
}

Rational box_moment_binomial(const std::vector<Rational>& lower, const std::vector<Rational>& upper,
                             const Exponent& alpha) {
  Rational total = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    // (1/(b-a)) int_a^b x^k dx = sum_j C(k,j) a^{k-j} (b-a)^j / (j+1)
    const unsigned k = alpha[i];
    const Rational& a = lower[i];
    const Rational w = upper[i] - lower[i];
    Rational acc = 0;
    for (unsigned j = 0; j <= k; ++j) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, j);
      acc += Rational(binom) * power(a, k - j) * power(w, j) / Rational(j + 1);
    }
    total *= acc;
  }
  return total;
}

Rational simplex_moment_iterated(const Exponent& alpha) {
  // Work with polynomials in x_1..x_m; integrate x_m from 0 to 1 - (x_1 + ... + x_{m-1}).
  const std::size_t n = alpha.dimension();
  Polynomial integrand = Polynomial::monomial(alpha);
  for (std::size_t m = n; m-- > 0;) {
    Polynomial rest_sum(n);
    for (std::size_t i = 0; i < m; ++i) rest_sum.add_term(Exponent::unit(n, i), 1);
    const Polynomial upper = Polynomial::constant(n, 1) - rest_sum;
    Polynomial next(n);
    for (const auto& [e, c] : integrand.terms()) {
      // c * (prod_{i != m} x_i^{e_i}) * upper^{e_m + 1} / (e_m + 1)
      std::vector<unsigned> ev(e.values().begin(), e.values().end());
      const unsigned p = ev[m] + 1;
      ev[m] = 0;
      Polynomial pw = Polynomial::constant(n, 1);
      for (unsigned t = 0; t < p; ++t) pw = pw * upper;
      next += Polynomial::monomial(Exponent(std::move(ev)), c / Rational(p)) * pw;
    }
    integrand = std::move(next);
  }
  // Only the constant term remains; divide by the simplex volume 1/n!.
  return integrand.coefficient(Exponent(n)) * Rational(factorial(static_cast<unsigned>(n)));
}

Rational discrete_moment_direct(const MeasureSpec& spec, const Exponent& alpha) {
  if (spec.kind() != MeasureKind::discrete) throw CapabilityError("discrete oracle needs a discrete measure");
  const Polynomial mono = Polynomial::monomial(alpha);
  Rational total = 0;
  for (std::size_t k = 0; k < spec.points().size(); ++k)
    total += spec.weights()[k] * poly_eval(mono, spec.points()[k]);
  return total;
}

}  // namespace mombound::oracle
