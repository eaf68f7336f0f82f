#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "mombound/eigensolve.hpp"
#include "mombound/errors.hpp"
#include "mombound/problems.hpp"

using namespace mombound;

namespace {

Eigen::MatrixXd dense(const RealMatrix& m) {
  Eigen::MatrixXd out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j);
  return out;
}

// Random symmetric matrix with small rational entries.
RationalMatrix random_symmetric(std::size_t n, SplitMix64& rng, long range = 9) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      m(i, j) = Rational(static_cast<long>(rng.below(2 * range + 1)) - range, 1 + static_cast<long>(rng.below(4)));
      m(i, j).canonicalize();
    }
  return m;
}

// G G^T + I, positive definite.
RationalMatrix random_spd(std::size_t n, SplitMix64& rng) {
  std::vector<Rational> g(n * n);
  for (auto& v : g) {
    v = Rational(static_cast<long>(rng.below(11)) - 5, 1 + static_cast<long>(rng.below(3)));
    v.canonicalize();
  }
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Rational s = i == j ? 1 : 0;
      for (std::size_t k = 0; k < n; ++k) s += g[i * n + k] * g[j * n + k];
      m(i, j) = s;
    }
  return m;
}

}  // namespace

TEST_CASE("exact LDLT reconstructs the matrix") {
  SplitMix64 rng(1);
  for (int t = 0; t < 10; ++t) {
    RationalMatrix a = random_spd(6, rng);
    LdltFactorization f = ldlt(a);
    CHECK(f.complete);
    CHECK_FALSE(f.indefinite);
    CHECK(f.rank == 6);
    CHECK(f.reconstruct() == a);
  }
}

TEST_CASE("LDLT of a singular PSD matrix defers the zero pivot") {
  RationalMatrix a = RationalMatrix::from_rows({{Rational(1), Rational(1), Rational(0)},
                                                {Rational(1), Rational(1), Rational(0)},
                                                {Rational(0), Rational(0), Rational(2)}});
  LdltFactorization f = ldlt(a);
  CHECK(f.complete);
  CHECK_FALSE(f.indefinite);
  CHECK(f.rank == 2);
  CHECK(f.reconstruct() == a);
}

TEST_CASE("LDLT of an indefinite matrix yields an exact witness") {
  for (const auto& rows : std::vector<std::vector<std::vector<Rational>>>{
           {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}},
           {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}},
           {{Rational(1), Rational(0)}, {Rational(0), Rational(-1, 1000)}}}) {
    RationalMatrix a = RationalMatrix::from_rows(rows);
    LdltFactorization f = ldlt(a);
    CHECK(f.indefinite);
    CHECK(f.witness_value < 0);
    CHECK(quadratic_form(a, f.witness) == f.witness_value);
  }
}

TEST_CASE("Jacobi agrees with Eigen's self-adjoint solver") {
  SplitMix64 rng(2);
  for (int t = 0; t < 20; ++t) {
    RealMatrix a = to_real(random_symmetric(8, rng));
    auto es = jacobi_eigensystem(a);
    REQUIRE(es.converged);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(dense(a));
    std::vector<double> vals = es.values;
    std::sort(vals.begin(), vals.end());
    for (int i = 0; i < 8; ++i) CHECK(vals[i] == doctest::Approx(ref.eigenvalues()(i)).epsilon(1e-12).scale(1));
  }
}

TEST_CASE("sym_eig_smallest returns a unit eigenvector with small residual") {
  SplitMix64 rng(3);
  RealMatrix a = to_real(random_symmetric(10, rng));
  EigenResult r = sym_eig_smallest(a);
  double norm = 0;
  for (double v : r.vector) norm += v * v;
  CHECK(norm == doctest::Approx(1.0));
  CHECK(r.residual < 1e-12);
}

TEST_CASE("generalized eigenvalue agrees with Eigen on random 5x5 pencils") {
  SplitMix64 rng(4);
  for (int t = 0; t < 25; ++t) {
    RationalMatrix a = random_symmetric(5, rng), b = random_spd(5, rng);
    GenEigResult r = gen_eig_smallest(a, b);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ref(dense(to_real(a)), dense(to_real(b)));
    const double expected = ref.eigenvalues()(0);
    CHECK(std::abs(r.value - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    // the reported value is the exact Rayleigh quotient of the exact vector
    CHECK(quadratic_form(a, r.vector_exact) == r.rayleigh * quadratic_form(b, r.vector_exact));
  }
}

TEST_CASE("generalized eigenvalue is invariant under congruence") {
  SplitMix64 rng(5);
  for (int t = 0; t < 10; ++t) {
    RationalMatrix a = random_symmetric(5, rng), b = random_spd(5, rng);
    // P = I + strictly lower random, invertible
    std::vector<Rational> p(25, Rational(0));
    for (std::size_t i = 0; i < 5; ++i) {
      p[i * 5 + i] = 1 + static_cast<long>(rng.below(3));
      for (std::size_t j = 0; j < i; ++j) p[i * 5 + j] = static_cast<long>(rng.below(5)) - 2;
    }
    auto congruent = [&](const RationalMatrix& m) {
      RationalMatrix out(5);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
          Rational s = 0;
          for (std::size_t k = 0; k < 5; ++k)
            for (std::size_t l = 0; l < 5; ++l) s += p[k * 5 + i] * m(k, l) * p[l * 5 + j];
          out(i, j) = s;
        }
      return out;
    };
    const double l1 = gen_eig_smallest(a, b).value;
    const double l2 = gen_eig_smallest(congruent(a), congruent(b)).value;
    CHECK(std::abs(l1 - l2) <= 1e-9 * std::max(1.0, std::abs(l1)));
  }
}

TEST_CASE("singular B restricts the pencil to its range") {
  // B = diag(1, 0), A = diag(3, -100): the kernel direction is ignored
  RationalMatrix a = RationalMatrix::from_rows({{Rational(3), Rational(0)}, {Rational(0), Rational(-100)}});
  RationalMatrix b = RationalMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
  GenEigResult r = gen_eig_smallest(a, b);
  CHECK(r.value == doctest::Approx(3.0));
  CHECK(r.reduced_dimension == 1);
}

TEST_CASE("indefinite B is rejected") {
  RationalMatrix a = RationalMatrix::identity(2);
  RationalMatrix b = RationalMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}});
  CHECK_THROWS_AS(gen_eig_smallest(a, b), NumericalError);
}

TEST_CASE("is_psd") {
  SplitMix64 rng(6);
  PsdVerdict yes = is_psd(random_spd(6, rng));
  CHECK(yes.psd);
  CHECK(yes.exact);
  RationalMatrix bad = random_spd(6, rng);
  bad(5, 5) = 0;
  bad(4, 4) = -1;
  PsdVerdict no = is_psd(bad);
  CHECK_FALSE(no.psd);
  CHECK(no.witness_value < 0);
  CHECK(quadratic_form(bad, no.witness) == no.witness_value);
  CHECK(is_psd(to_real(random_spd(4, rng))).psd);
}
