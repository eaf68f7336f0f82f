#include "mombound/problems.hpp"

#include <bit>
#include <cmath>

#include "mombound/errors.hpp"

namespace mombound {

Polynomial motzkin_like() { return parse_polynomial("x1^4*x2^2 + x1^2*x2^4 - x1^2*x2^2", 2); }

Polynomial unattained_infimum() {
  const Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
  const Polynomial t = Polynomial::constant(2, 1) - x1 * x2;
  return x1 * x1 + t * t;
}

Polynomial double_well() { return parse_polynomial("0.375 - 5*x1 + 21*x1^2 - 32*x1^3 + 16*x1^4", 1); }

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return v % bound;
}

Polynomial MaxCutInstance::objective() const {
  Polynomial f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (q(i, j) == 0) continue;
      std::vector<unsigned> e(n, 0);
      e[i] = e[j] = 1;
      f.add_term(Exponent(std::move(e)), 2 * q(i, j));
    }
  return f;
}

MaxCutInstance maxcut_equal(std::size_t n) {
  if (n < 2) throw InputError("MAXCUT needs n >= 2");
  MaxCutInstance inst;
  inst.n = n;
  inst.q = RationalMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) inst.q(i, j) = Rational(1, 2);
  return inst;
}

MaxCutInstance maxcut_random(std::size_t n, double density, std::uint64_t seed) {
  if (n < 2) throw InputError("MAXCUT needs n >= 2");
  if (!(density >= 0 && density <= 1)) throw InputError("density must lie in [0, 1]");
  SplitMix64 rng(seed);
  MaxCutInstance inst;
  inst.n = n;
  inst.seed = seed;
  inst.q = RationalMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const bool keep = rng.uniform() < density;
      double w;
      do w = rng.uniform();
      while (w == 0.0);
      if (keep) inst.q(i, j) = exact_from_double(w);
    }
  return inst;
}

MaxCutInstance maxcut_from_matrix(const RationalMatrix& q, std::uint64_t seed) {
  if (q.size() < 2) throw InputError("MAXCUT needs n >= 2");
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q(i, i) != 0) throw InputError("MAXCUT matrix must have a zero diagonal");
  MaxCutInstance inst;
  inst.n = q.size();
  inst.q = q;
  inst.seed = seed;
  return inst;
}

HypercubeMinimum brute_force_hypercube(const Polynomial& f, std::size_t n) {
  if (n != f.dimension()) throw InputError("polynomial dimension does not match n");
  if (n > 22) throw InputError("brute force limited to n <= 22");
  // Double evaluation to locate candidates, exact evaluation to decide.
  struct Term {
    double c;
    std::uint32_t odd_mask;
  };
  std::vector<Term> terms;
  for (const auto& [e, c] : f.terms()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] % 2) mask |= 1u << i;
    terms.push_back({c.get_d(), mask});
  }
  const std::uint32_t count = 1u << n;
  std::vector<double> values(count);
  double best = INFINITY;
  for (std::uint32_t v = 0; v < count; ++v) {
    long double total = 0;
    for (const auto& t : terms) total += (std::popcount(v & t.odd_mask) % 2) ? -t.c : t.c;
    values[v] = static_cast<double>(total);
    best = std::min(best, values[v]);
  }
  double scale = 0;
  for (const auto& t : terms) scale += std::abs(t.c);
  const double slack = 1e-9 * std::max(1.0, scale);
  HypercubeMinimum out;
  bool have = false;
  for (std::uint32_t v = 0; v < count; ++v) {
    if (values[v] > best + slack) continue;
    std::vector<Rational> x(n);
    std::vector<int> xi(n);
    for (std::size_t i = 0; i < n; ++i) {
      xi[i] = (v >> i) & 1u ? -1 : 1;
      x[i] = xi[i];
    }
    Rational val = poly_eval(f, x);
    if (!have || val < out.value) {
      out.value = val;
      out.argmin = xi;
      have = true;
    }
  }
  return out;
}

}  // namespace mombound
