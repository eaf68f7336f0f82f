#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mombound/errors.hpp"
#include "mombound/measures.hpp"
#include "mombound/polynomial.hpp"
#include "mombound/rational.hpp"

namespace mombound {

/// Dense symmetric matrix in packed lower-triangle storage. When built from
/// moments it carries the monomial basis that indexes its rows and columns.
template <typename T>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, std::shared_ptr<const MonomialBasis> basis = nullptr)
      : n_(n), data_(n * (n + 1) / 2, T(0)), basis_(std::move(basis)) {
    if (basis_ && basis_->size() != n) throw InputError("matrix size does not match basis size");
  }
  /// Builds from a full row-major square; only the lower triangle is read.
  static SymMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw InputError("matrix rows must be square");
      for (std::size_t j = 0; j <= i; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static SymMatrix identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  const std::shared_ptr<const MonomialBasis>& basis() const { return basis_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

  /// Leading principal m x m block. With a graded basis this is exactly the
  /// matrix of a lower order, so hierarchies slice one assembly.
  SymMatrix leading(std::size_t m, std::shared_ptr<const MonomialBasis> basis = nullptr) const {
    if (m > n_) throw InputError("leading block larger than matrix");
    SymMatrix r(m, std::move(basis));
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(m * (m + 1) / 2), r.data_.begin());
    return r;
  }

  bool operator==(const SymMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

  std::span<const T> packed() const { return data_; }

 private:
  static std::size_t index(std::size_t i, std::size_t j) { return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i; }

  std::size_t n_ = 0;
  std::vector<T> data_;
  std::shared_ptr<const MonomialBasis> basis_;
};

using RationalMatrix = SymMatrix<Rational>;
using RealMatrix = SymMatrix<double>;

/// Entrywise conversion (single rounding per entry).
RealMatrix to_real(const RationalMatrix& m);
/// Exact conversion of double entries.
RationalMatrix to_rational(const RealMatrix& m);

template <typename T>
double frobenius_norm(const SymMatrix<T>& m) {
  long double total = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      long double v;
      if constexpr (std::is_same_v<T, Rational>) {
        v = m(i, j).get_d();
      } else {
        v = m(i, j);
      }
      total += (i == j ? 1 : 2) * v * v;
    }
  return static_cast<double>(std::sqrt(total));
}

/// z_delta = sum_gamma f_gamma y_{delta+gamma} for all |delta| <= degree,
/// in enumerate_basis order. The localizing matrix reads its entries here.
std::vector<Rational> localized_moments(const MomentSequence& seq, const Polynomial& f, unsigned degree);

/// M_d(y)(i, j) = y_{alpha_i + alpha_j}.
RationalMatrix moment_matrix(const MomentSequence& seq, unsigned d);

/// M_d(f y)(i, j) = sum_gamma f_gamma y_{alpha_i + alpha_j + gamma}.
RationalMatrix localizing_matrix(const MomentSequence& seq, const Polynomial& f, unsigned d);

/// Exact g^T M g. Throws InputError on a length mismatch.
Rational quadratic_form(const RationalMatrix& m, std::span<const Rational> g);
double quadratic_form(const RealMatrix& m, std::span<const double> g);

/// Debug/golden format: one "i j value" line per nonzero lower-triangle
/// entry (i >= j, 0-based), preceded by a "# size s" header.
void dump_triplets(const RationalMatrix& m, std::ostream& out);
RationalMatrix read_triplets(std::istream& in);

}  // namespace mombound
