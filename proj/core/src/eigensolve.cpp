#include "mombound/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "mombound/errors.hpp"

namespace mombound {
namespace {

// Right-looking exact elimination kept in sparse-column form; the dense
// factor is only materialized for callers of ldlt().
struct Elimination {
  std::size_t size = 0;
  std::vector<std::size_t> pivots;  // original indices, processing order
  std::vector<Rational> d;          // pivot values, same order
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;  // (original row, multiplier)
  std::vector<std::size_t> deferred;  // zero pivots, original indices
  bool negative = false;
  bool stalled = false;
  std::vector<Rational> witness;  // original coordinates
};

// Solves L^T x = rhs for the eliminated pivots, with rhs given in original
// coordinates; non-pivot coordinates of x are taken from rhs unchanged.
std::vector<Rational> back_substitute(const Elimination& e, std::vector<Rational> x) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    Rational acc = x[e.pivots[k]];
    for (const auto& [i, m] : e.columns[k])
      if (x[i] != 0) acc -= m * x[i];
    x[e.pivots[k]] = std::move(acc);
  }
  return x;
}

Elimination eliminate(const RationalMatrix& a) {
  const std::size_t s = a.size();
  Elimination e;
  e.size = s;
  RationalMatrix work = a;
  std::vector<std::size_t> nz;
  for (std::size_t k = 0; k < s; ++k) {
    if (work(k, k) == 0) {
      std::optional<std::size_t> partner;
      for (std::size_t j = k + 1; j < s && !partner; ++j)
        if (work(j, k) != 0) partner = j;
      if (!partner) {
        e.deferred.push_back(k);
        continue;
      }
      // Indefinite 2x2 Schur block [[0, c], [c, s_jj]].
      const std::size_t j = *partner;
      const Rational c = work(j, k);
      const Rational sjj = work(j, j);
      std::vector<Rational> x(s, Rational(0));
      x[j] = 1;
      if (sjj >= 0) x[k] = -(sjj + abs(c)) / (2 * c);
      e.stalled = true;
      e.witness = back_substitute(e, std::move(x));
      return e;
    }
    const Rational dk = work(k, k);
    if (dk < 0) e.negative = true;
    nz.clear();
    for (std::size_t i = k + 1; i < s; ++i)
      if (work(i, k) != 0) nz.push_back(i);
    std::vector<std::pair<std::size_t, Rational>> column;
    column.reserve(nz.size());
    for (std::size_t i : nz) column.emplace_back(i, work(i, k) / dk);
    for (std::size_t a_idx = 0; a_idx < nz.size(); ++a_idx) {
      const std::size_t i = nz[a_idx];
      const Rational& mi = column[a_idx].second;
      for (std::size_t b_idx = 0; b_idx <= a_idx; ++b_idx) {
        const std::size_t j = nz[b_idx];
        work(i, j) -= mi * work(j, k);
      }
    }
    e.pivots.push_back(k);
    e.d.push_back(dk);
    e.columns.push_back(std::move(column));
  }
  if (e.negative) {
    std::size_t q = 0;
    while (e.d[q] >= 0) ++q;
    std::vector<Rational> x(s, Rational(0));
    x[e.pivots[q]] = 1;
    e.witness = back_substitute(e, std::move(x));
  }
  return e;
}

std::vector<double> unit_eigenvector(const SymmetricEigensystem& es, std::size_t n, std::size_t k) {
  return {es.vectors.begin() + static_cast<std::ptrdiff_t>(k * n),
          es.vectors.begin() + static_cast<std::ptrdiff_t>((k + 1) * n)};
}

double residual_norm(const RealMatrix& a, std::span<const double> v, double lambda) {
  long double total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    long double r = -static_cast<long double>(lambda) * v[i];
    for (std::size_t j = 0; j < a.size(); ++j) r += static_cast<long double>(a(i, j)) * v[j];
    total += r * r;
  }
  return static_cast<double>(std::sqrt(total));
}

double norm2(std::span<const double> v) {
  long double t = 0;
  for (double x : v) t += static_cast<long double>(x) * x;
  return static_cast<double>(std::sqrt(t));
}

}  // namespace

// ---------------------------------------------------------------------------

RationalMatrix LdltFactorization::reconstruct() const {
  RationalMatrix r(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k <= j && k < diagonal.size(); ++k) {
        if (diagonal[k] == 0) continue;
        acc += lower(i, k) * diagonal[k] * lower(j, k);
      }
      r(order[i], order[j]) = acc;
    }
  return r;
}

LdltFactorization ldlt(const RationalMatrix& a) {
  Elimination e = eliminate(a);
  LdltFactorization f;
  f.size = a.size();
  f.rank = e.pivots.size();
  f.complete = !e.stalled;
  f.indefinite = e.stalled || e.negative;
  f.order = e.pivots;
  f.order.insert(f.order.end(), e.deferred.begin(), e.deferred.end());
  if (e.stalled) {
    // Columns never reached keep their original relative order.
    std::vector<bool> seen(a.size(), false);
    for (std::size_t i : f.order) seen[i] = true;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!seen[i]) f.order.push_back(i);
  }
  std::vector<std::size_t> position(a.size());
  for (std::size_t p = 0; p < f.order.size(); ++p) position[f.order[p]] = p;
  f.lower = RationalMatrix(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) f.lower(p, p) = 1;
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (const auto& [i, m] : e.columns[k]) f.lower(position[i], k) = m;
  f.diagonal = e.d;
  f.diagonal.resize(f.complete ? a.size() : e.d.size(), Rational(0));
  if (f.indefinite) {
    f.witness = e.witness;
    f.witness_value = quadratic_form(a, f.witness);
  }
  return f;
}

// ---------------------------------------------------------------------------

SymmetricEigensystem jacobi_eigensystem(const RealMatrix& m, int max_sweeps) {
  const std::size_t n = m.size();
  SymmetricEigensystem out;
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  std::vector<double> v(n * n, 0.0);  // row-major, column k is eigenvector k
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  std::vector<double> d(n), b(n), z(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = b[i] = a[i * n + i];
  // Off-diagonals below eps * ||A||_F are dropped even next to zero eigenvalues.
  const double floor = 1e-2 * std::numeric_limits<double>::epsilon() * frobenius_norm(m);
  const double stop = std::numeric_limits<double>::epsilon() * frobenius_norm(m);

  auto rotate = [](double& x, double& y, double s, double tau) {
    const double g = x, h = y;
    x = g - s * (h + g * tau);
    y = h + s * (g - h * tau);
  };

  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    double off = 0, off2 = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        off += std::abs(a[p * n + q]);
        off2 += a[p * n + q] * a[p * n + q];
      }
    if (off == 0.0 || std::sqrt(2 * off2) <= stop) {
      out.converged = true;
      out.sweeps = sweep - 1;
      break;
    }
    const double threshold = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double& apq = a[p * n + q];
        const double g = 100.0 * std::abs(apq);
        const double dp = std::max(std::abs(d[p]), floor), dq = std::max(std::abs(d[q]), floor);
        if (sweep > 4 && dp + g == dp && dq + g == dq) {
          apq = 0.0;
          continue;
        }
        if (std::abs(apq) <= threshold || apq == 0.0) continue;
        double h = d[q] - d[p];
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        h = t * apq;
        z[p] -= h;
        z[q] += h;
        d[p] -= h;
        d[q] += h;
        apq = 0.0;
        for (std::size_t j = 0; j < p; ++j) rotate(a[j * n + p], a[j * n + q], s, tau);
        for (std::size_t j = p + 1; j < q; ++j) rotate(a[p * n + j], a[j * n + q], s, tau);
        for (std::size_t j = q + 1; j < n; ++j) rotate(a[p * n + j], a[q * n + j], s, tau);
        for (std::size_t j = 0; j < n; ++j) rotate(v[j * n + p], v[j * n + q], s, tau);
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      b[p] += z[p];
      d[p] = b[p];
      z[p] = 0.0;
    }
    out.sweeps = sweep;
  }
  if (!out.converged) {
    double off2 = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off2 += a[p * n + q] * a[p * n + q];
    out.converged = std::sqrt(2 * off2) <= stop;
  }
  out.values = d;
  out.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) out.vectors[k * n + i] = v[i * n + k];
  return out;
}

EigenResult sym_eig_smallest(const RealMatrix& a) {
  if (a.size() == 0) throw InputError("empty matrix");
  auto es = jacobi_eigensystem(a);
  if (!es.converged) throw NumericalError("Jacobi iteration did not converge within the sweep cap");
  const std::size_t k = static_cast<std::size_t>(std::min_element(es.values.begin(), es.values.end()) - es.values.begin());
  EigenResult r;
  r.value = es.values[k];
  r.vector = unit_eigenvector(es, a.size(), k);
  r.residual = residual_norm(a, r.vector, r.value);
  return r;
}

// ---------------------------------------------------------------------------

GenEigResult gen_eig_smallest(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.size() != b.size()) throw InputError("pencil matrices have different sizes");
  if (a.size() == 0) throw InputError("empty pencil");
  const std::size_t s = a.size();
  Elimination e = eliminate(b);
  if (e.stalled || e.negative) throw NumericalError("B is indefinite; not a valid moment matrix");
  const std::size_t r = e.pivots.size();
  if (r == 0) throw NumericalError("B is zero; pencil is degenerate");

  std::vector<std::ptrdiff_t> position(s, -1);
  for (std::size_t k = 0; k < r; ++k) position[e.pivots[k]] = static_cast<std::ptrdiff_t>(k);

  // C = L^{-1} A_pp L^{-T} restricted to the pivot block, exactly.
  std::vector<Rational> c(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i * r + j] = a(e.pivots[i], e.pivots[j]);
  for (std::size_t k = 0; k < r; ++k) {
    for (const auto& [orig, m] : e.columns[k]) {
      const auto i = position[orig];
      if (i < 0) continue;
      for (std::size_t j = 0; j < r; ++j)
        if (c[k * r + j] != 0) c[static_cast<std::size_t>(i) * r + j] -= m * c[k * r + j];
    }
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (const auto& [orig, m] : e.columns[k]) {
      const auto j = position[orig];
      if (j < 0) continue;
      for (std::size_t i = 0; i < r; ++i)
        if (c[i * r + k] != 0) c[i * r + static_cast<std::size_t>(j)] -= m * c[i * r + k];
    }
  }

  // Scale by D^{-1/2} on both sides and round each entry once.
  std::vector<double> inv_sqrt_d(r);
  for (std::size_t k = 0; k < r; ++k) {
    const double dk = e.d[k].get_d();
    if (!std::isfinite(dk) || dk <= 0) throw NumericalError("pivot of B out of floating range");
    inv_sqrt_d[k] = 1.0 / std::sqrt(dk);
  }
  RealMatrix reduced(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Rational& cij = c[i * r + j];
      if (cij == 0) continue;
      const Rational sq = cij * cij / (e.d[i] * e.d[j]);
      const double mag = std::sqrt(sq.get_d());
      reduced(i, j) = cij < 0 ? -mag : mag;
    }

  auto es = jacobi_eigensystem(reduced);
  if (!es.converged) throw NumericalError("Jacobi iteration did not converge on the reduced pencil");

  const std::size_t kmin =
      static_cast<std::size_t>(std::min_element(es.values.begin(), es.values.end()) - es.values.begin());
  const double mu = es.values[kmin];

  // Constant-coefficient functional in reduced coordinates:
  // v_0 = sum_k (L^{-1} e_0)_k u_k / sqrt(d_k).
  std::vector<double> const_row(r, 0.0);
  if (position[0] >= 0) {
    std::vector<Rational> t(r, Rational(0));
    t[static_cast<std::size_t>(position[0])] = 1;
    for (std::size_t k = 0; k < r; ++k) {
      if (t[k] == 0) continue;
      for (const auto& [orig, m] : e.columns[k])
        if (position[orig] >= 0) t[static_cast<std::size_t>(position[orig])] -= m * t[k];
    }
    for (std::size_t k = 0; k < r; ++k) const_row[k] = t[k].get_d() * inv_sqrt_d[k];
  }

  std::vector<std::size_t> cluster;
  const double window = 1e-9 * std::max(1.0, std::abs(mu));
  for (std::size_t k = 0; k < r; ++k)
    if (es.values[k] <= mu + window) cluster.push_back(k);

  std::vector<double> u = unit_eigenvector(es, r, kmin);
  if (cluster.size() > 1) {
    auto project = [&](const std::vector<double>& target) {
      std::vector<double> out(r, 0.0);
      for (std::size_t k : cluster) {
        double dot = 0;
        for (std::size_t i = 0; i < r; ++i) dot += es.vectors[k * r + i] * target[i];
        for (std::size_t i = 0; i < r; ++i) out[i] += dot * es.vectors[k * r + i];
      }
      return out;
    };
    std::vector<double> cand = project(const_row);
    if (norm2(cand) <= 1e-12 * std::max(1.0, norm2(const_row))) {
      for (std::size_t j = 0; j < r; ++j) {
        std::vector<double> ej(r, 0.0);
        ej[j] = 1.0;
        cand = project(ej);
        if (norm2(cand) > 1e-8) break;
      }
    }
    const double nc = norm2(cand);
    if (nc > 0) {
      for (double& x : cand) x /= nc;
      u = std::move(cand);
    }
  }
  // Deterministic sign: positive constant coefficient, else first entry.
  double sign_ref = 0;
  for (std::size_t i = 0; i < r; ++i) sign_ref += const_row[i] * u[i];
  if (std::abs(sign_ref) <= 1e-14) {
    for (double x : u)
      if (std::abs(x) > 1e-12) {
        sign_ref = x;
        break;
      }
  }
  if (sign_ref < 0)
    for (double& x : u) x = -x;

  GenEigResult out;
  out.reduced_eigenvalue = mu;
  out.residual = residual_norm(reduced, u, mu);
  out.reduced_norm = frobenius_norm(reduced);
  out.reduced_dimension = r;
  out.sweeps = es.sweeps;
  Rational dmax = e.d[0], dmin = e.d[0];
  for (const auto& dk : e.d) {
    if (dk > dmax) dmax = dk;
    if (dk < dmin) dmin = dk;
  }
  out.condition_estimate = Rational(dmax / dmin).get_d();

  // Lift: w = D^{-1/2} u (rounded once, then exact), v = L^{-T} w.
  std::vector<Rational> w(r);
  for (std::size_t k = 0; k < r; ++k) w[k] = exact_from_double(u[k] * inv_sqrt_d[k]);
  std::vector<Rational> x(s, Rational(0));
  for (std::size_t k = 0; k < r; ++k) x[e.pivots[k]] = w[k];
  for (std::size_t k = r; k-- > 0;) {
    Rational acc = x[e.pivots[k]];
    for (const auto& [orig, m] : e.columns[k])
      if (position[orig] >= 0 && x[orig] != 0) acc -= m * x[orig];
    x[e.pivots[k]] = std::move(acc);
  }

  // v^T A v = w^T C w and v^T B v = w^T D w, both exact.
  Rational num = 0, den = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (w[i] == 0) continue;
    den += e.d[i] * w[i] * w[i];
    Rational row = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (w[j] != 0 && c[i * r + j] != 0) row += c[i * r + j] * w[j];
    num += 2 * row * w[i] + c[i * r + i] * w[i] * w[i];
  }
  out.rayleigh = num / den;
  out.value = out.rayleigh.get_d();
  out.vector_exact = std::move(x);
  out.vector.resize(s);
  for (std::size_t i = 0; i < s; ++i) out.vector[i] = out.vector_exact[i].get_d();
  return out;
}

GenEigResult gen_eig_smallest(const RealMatrix& a, const RealMatrix& b) {
  return gen_eig_smallest(to_rational(a), to_rational(b));
}

// ---------------------------------------------------------------------------

PsdVerdict is_psd(const RationalMatrix& a, double tol) {
  PsdVerdict v;
  if (a.size() == 0) {
    v.exact = true;
    return v;
  }
  LdltFactorization f = ldlt(a);
  if (!f.indefinite) {
    v.psd = true;
    v.exact = true;
    return v;
  }
  const RealMatrix real = to_real(a);
  const double norm = frobenius_norm(a);
  auto accepts = [&](const std::vector<Rational>& h, const Rational& value) {
    if (!(value < 0)) return false;
    double hn = 0;
    for (const auto& x : h) hn += x.get_d() * x.get_d();
    return value.get_d() < -tol * norm * hn;
  };

  auto es = jacobi_eigensystem(real);
  const std::size_t k =
      static_cast<std::size_t>(std::min_element(es.values.begin(), es.values.end()) - es.values.begin());
  v.min_eigenvalue = es.values[k];
  if (es.converged && v.min_eigenvalue < -tol * norm) {
    std::vector<double> h = unit_eigenvector(es, a.size(), k);
    double big = 0;
    for (double x : h) big = std::max(big, std::abs(x));
    for (double& x : h) x /= big;
    for (std::uint64_t cap : {std::uint64_t{1'000'000}, std::uint64_t{1'000'000'000}, std::uint64_t{1'000'000'000'000}}) {
      std::vector<Rational> cand(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) cand[i] = rationalize(h[i], cap);
      Rational value = quadratic_form(a, cand);
      if (accepts(cand, value)) {
        v.psd = false;
        v.witness = std::move(cand);
        v.witness_value = value;
        return v;
      }
    }
    std::vector<Rational> cand(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) cand[i] = exact_from_double(h[i]);
    Rational value = quadratic_form(a, cand);
    if (accepts(cand, value)) {
      v.psd = false;
      v.witness = std::move(cand);
      v.witness_value = value;
      return v;
    }
  }
  if (accepts(f.witness, f.witness_value)) {
    v.psd = false;
    v.witness = f.witness;
    v.witness_value = f.witness_value;
    return v;
  }
  // Negative directions exist but all lie inside the tolerance band.
  v.psd = true;
  return v;
}

PsdVerdict is_psd(const RealMatrix& a, double tol) { return is_psd(to_rational(a), tol); }

}  // namespace mombound
