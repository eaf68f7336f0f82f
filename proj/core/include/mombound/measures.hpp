#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mombound/polynomial.hpp"
#include "mombound/rational.hpp"

namespace mombound {

enum class MeasureKind {
  gaussian_Rn,          // standard normal product measure on R^n
  exponential_orthant,  // product of exp(-x_i) on R^n_+
  lebesgue_box,         // normalized Lebesgue measure on prod [a_i, b_i]
  uniform_pm1_cube,     // uniform on the 2^n vertices {-1, 1}^n
  uniform_simplex,      // normalized Lebesgue on {x >= 0, sum x <= 1}
  uniform_ball,         // normalized Lebesgue on the closed unit ball
  uniform_sphere,       // rotation-invariant probability on the unit sphere
  discrete,             // sum_k w_k delta_{x(k)}
};

std::string_view kind_name(MeasureKind kind);
/// Throws CapabilityError for an unknown kind name.
MeasureKind kind_from_name(std::string_view name);

/// Shape of supp(mu); consulted when interpreting hierarchy output.
struct SupportInfo {
  bool convex = false;
  bool compact = false;
  bool discrete = false;
};

/// A probability measure with closed-form moments. All built-ins have
/// total mass 1.
class MeasureSpec {
 public:
  static MeasureSpec gaussian(std::size_t n);
  static MeasureSpec exponential(std::size_t n);
  static MeasureSpec box(std::vector<Rational> lower, std::vector<Rational> upper);
  static MeasureSpec unit_box(std::size_t n);  // [0,1]^n
  static MeasureSpec pm1_cube(std::size_t n);
  static MeasureSpec simplex(std::size_t n);
  static MeasureSpec ball(std::size_t n);
  static MeasureSpec sphere(std::size_t n);
  /// Empty weights means uniform. Weights must be positive and sum to 1.
  static MeasureSpec discrete(std::vector<std::vector<Rational>> points, std::vector<Rational> weights = {});

  MeasureKind kind() const { return kind_; }
  std::size_t dimension() const { return n_; }
  const std::vector<Rational>& lower() const { return lower_; }
  const std::vector<Rational>& upper() const { return upper_; }
  const std::vector<std::vector<Rational>>& points() const { return points_; }
  const std::vector<Rational>& weights() const { return weights_; }

  SupportInfo support() const;
  /// Membership of x in supp(mu), with slack tol on each defining inequality.
  bool contains(std::span<const double> x, double tol = 1e-9) const;
  /// True when every odd moment vanishes (reflection symmetric support).
  bool is_symmetric() const;

 private:
  MeasureSpec(MeasureKind kind, std::size_t n) : kind_(kind), n_(n) {}

  MeasureKind kind_;
  std::size_t n_;
  std::vector<Rational> lower_, upper_;
  std::vector<std::vector<Rational>> points_;
  std::vector<Rational> weights_;
};

/// Lazily computed, memoized moments y_alpha = int x^alpha dmu.
/// Safe for concurrent use; the cache is append-only.
class MomentSequence {
 public:
  explicit MomentSequence(MeasureSpec spec);
  MomentSequence(const MomentSequence& other);
  MomentSequence& operator=(const MomentSequence&) = delete;

  const MeasureSpec& spec() const { return spec_; }
  std::size_t dimension() const { return spec_.dimension(); }

  /// Throws InputError when alpha has the wrong dimension.
  Rational moment(const Exponent& alpha) const;

 private:
  Rational compute(const Exponent& alpha) const;

  MeasureSpec spec_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Exponent, Rational, ExponentHash> cache_;
};

/// Moments of every monomial of degree <= d, in enumerate_basis order.
std::vector<Rational> linear_moment_vector(const MomentSequence& seq, unsigned d);

/// Riesz functional L_y(p) = sum_a p_a y_a = int p dmu.
Rational integrate(const Polynomial& p, const MomentSequence& seq);

}  // namespace mombound
