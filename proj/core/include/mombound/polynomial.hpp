#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mombound/rational.hpp"

namespace mombound {

/// Multi-index alpha in N^n. The total degree is cached.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t n) : exps_(n, 0) {}
  Exponent(std::initializer_list<unsigned> exps);
  explicit Exponent(std::vector<unsigned> exps);

  static Exponent unit(std::size_t n, std::size_t i, unsigned power = 1);

  std::size_t dimension() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  std::span<const unsigned> values() const { return exps_; }
  bool is_zero() const { return degree_ == 0; }

  /// Componentwise sum; both operands must have the same dimension.
  Exponent operator+(const Exponent& other) const;
  bool operator==(const Exponent& other) const { return exps_ == other.exps_; }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order: lower total degree first; within a degree the
/// lexicographically larger exponent vector comes first, so x1 precedes x2.
/// This order fixes the row/column layout of every matrix in the library.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored. The zero polynomial has degree 0.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexLess>;

  explicit Polynomial(std::size_t n = 1);

  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);

  std::size_t dimension() const { return n_; }
  unsigned degree() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;

  /// Adds c * x^e, dropping the term if the result cancels.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void check_dimension(const Exponent& e) const;
  void check_dimension(const Polynomial& o) const;

  std::size_t n_;
  TermMap terms_;
};

/// Monomials of degree <= d in graded lex order. Index 0 is the constant.
/// enumerate_basis(n, d') is a prefix of enumerate_basis(n, d) for d' <= d.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, unsigned d);

  std::size_t dimension() const { return n_; }
  unsigned max_degree() const { return d_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::optional<std::size_t> index_of(const Exponent& e) const;

 private:
  std::size_t n_;
  unsigned d_;
  std::vector<Exponent> monomials_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

MonomialBasis enumerate_basis(std::size_t n, unsigned d);

/// s(d) = C(n+d, d).
std::size_t basis_size(std::size_t n, unsigned d);

/// Exact value sum f_a x^a. Throws InputError on dimension mismatch.
Rational poly_eval(const Polynomial& f, std::span<const Rational> x);
double poly_eval(const Polynomial& f, std::span<const double> x);

/// f - lambda (only the constant coefficient changes).
Polynomial poly_shift(const Polynomial& f, const Rational& lambda);

/// Polynomial built from a coefficient vector over a basis, zeros skipped.
Polynomial from_coefficients(const MonomialBasis& basis, std::span<const Rational> coeffs);

/// Text form: terms "coef * x1^e1 * x2^e2" joined by " + " / " - ".
/// Parsing is lenient: "*" between factors is optional, "^1" may be dropped,
/// and coefficients may be "p/q" or decimal literals. When n is 0 the
/// dimension is taken from the largest variable index present (at least 1).
Polynomial parse_polynomial(std::string_view text, std::size_t n = 0);
std::string to_string(const Polynomial& f);

}  // namespace mombound
