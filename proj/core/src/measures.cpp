#include "mombound/measures.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "mombound/errors.hpp"

namespace mombound {
namespace {

constexpr std::array<std::pair<MeasureKind, std::string_view>, 8> kKindNames{{
    {MeasureKind::gaussian_Rn, "gaussian_Rn"},
    {MeasureKind::exponential_orthant, "exponential_orthant"},
    {MeasureKind::lebesgue_box, "lebesgue_box"},
    {MeasureKind::uniform_pm1_cube, "uniform_pm1_cube"},
    {MeasureKind::uniform_simplex, "uniform_simplex"},
    {MeasureKind::uniform_ball, "uniform_ball"},
    {MeasureKind::uniform_sphere, "uniform_sphere"},
    {MeasureKind::discrete, "discrete"},
}};

void require_dimension(std::size_t n) {
  if (n == 0) throw InputError("measure dimension must be >= 1");
}

bool any_odd(const Exponent& a) {
  for (unsigned v : a.values())
    if (v % 2) return true;
  return false;
}

// (b^{k+1} - a^{k+1}) / ((k+1)(b-a)): k-th moment of uniform on [a,b].
Rational interval_moment(const Rational& a, const Rational& b, unsigned k) {
  return (power(b, k + 1) - power(a, k + 1)) / (Rational(k + 1) * (b - a));
}

}  // namespace

std::string_view kind_name(MeasureKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

MeasureKind kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw CapabilityError("unsupported measure kind '" + std::string(name) + "'");
}

MeasureSpec MeasureSpec::gaussian(std::size_t n) {
  require_dimension(n);
  return MeasureSpec(MeasureKind::gaussian_Rn, n);
}

MeasureSpec MeasureSpec::exponential(std::size_t n) {
  require_dimension(n);
  return MeasureSpec(MeasureKind::exponential_orthant, n);
}

MeasureSpec MeasureSpec::box(std::vector<Rational> lower, std::vector<Rational> upper) {
  require_dimension(lower.size());
  if (lower.size() != upper.size()) throw InputError("box bounds have different lengths");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!(lower[i] < upper[i])) throw InputError("box requires a_i < b_i in coordinate " + std::to_string(i + 1));
  MeasureSpec m(MeasureKind::lebesgue_box, lower.size());
  m.lower_ = std::move(lower);
  m.upper_ = std::move(upper);
  return m;
}

MeasureSpec MeasureSpec::unit_box(std::size_t n) {
  require_dimension(n);
  return box(std::vector<Rational>(n, 0), std::vector<Rational>(n, 1));
}

MeasureSpec MeasureSpec::pm1_cube(std::size_t n) {
  require_dimension(n);
  return MeasureSpec(MeasureKind::uniform_pm1_cube, n);
}

MeasureSpec MeasureSpec::simplex(std::size_t n) {
  require_dimension(n);
  return MeasureSpec(MeasureKind::uniform_simplex, n);
}

MeasureSpec MeasureSpec::ball(std::size_t n) {
  require_dimension(n);
  return MeasureSpec(MeasureKind::uniform_ball, n);
}

MeasureSpec MeasureSpec::sphere(std::size_t n) {
  require_dimension(n);
  return MeasureSpec(MeasureKind::uniform_sphere, n);
}

MeasureSpec MeasureSpec::discrete(std::vector<std::vector<Rational>> points, std::vector<Rational> weights) {
  if (points.empty()) throw InputError("discrete measure needs at least one point");
  const std::size_t n = points.front().size();
  require_dimension(n);
  for (const auto& p : points)
    if (p.size() != n) throw InputError("discrete measure points have inconsistent dimension");
  if (weights.empty()) {
    weights.assign(points.size(), Rational(1, static_cast<unsigned long>(points.size())));
  }
  if (weights.size() != points.size()) throw InputError("discrete measure needs one weight per point");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w <= 0) throw InputError("discrete measure weights must be positive");
    total += w;
  }
  if (total != 1) throw InputError("discrete measure weights must sum to 1 (got " + to_string(total) + ")");
  MeasureSpec m(MeasureKind::discrete, n);
  m.points_ = std::move(points);
  m.weights_ = std::move(weights);
  return m;
}

SupportInfo MeasureSpec::support() const {
  switch (kind_) {
    case MeasureKind::gaussian_Rn:
    case MeasureKind::exponential_orthant:
      return {true, false, false};
    case MeasureKind::lebesgue_box:
    case MeasureKind::uniform_simplex:
    case MeasureKind::uniform_ball:
      return {true, true, false};
    case MeasureKind::uniform_sphere:
      return {false, true, n_ == 1};
    case MeasureKind::uniform_pm1_cube:
      return {false, true, true};
    case MeasureKind::discrete:
      return {points_.size() == 1, true, true};
  }
  return {};
}

bool MeasureSpec::contains(std::span<const double> x, double tol) const {
  if (x.size() != n_) throw InputError("point dimension does not match measure");
  double sum = 0, sq = 0;
  for (double v : x) {
    sum += v;
    sq += v * v;
  }
  switch (kind_) {
    case MeasureKind::gaussian_Rn:
      return true;
    case MeasureKind::exponential_orthant:
      for (double v : x)
        if (v < -tol) return false;
      return true;
    case MeasureKind::lebesgue_box:
      for (std::size_t i = 0; i < n_; ++i)
        if (x[i] < lower_[i].get_d() - tol || x[i] > upper_[i].get_d() + tol) return false;
      return true;
    case MeasureKind::uniform_simplex:
      for (double v : x)
        if (v < -tol) return false;
      return sum <= 1 + tol;
    case MeasureKind::uniform_ball:
      return sq <= 1 + tol;
    case MeasureKind::uniform_sphere:
      return std::abs(sq - 1) <= tol;
    case MeasureKind::uniform_pm1_cube:
      for (double v : x)
        if (std::abs(std::abs(v) - 1) > tol) return false;
      return true;
    case MeasureKind::discrete:
      for (const auto& p : points_) {
        bool match = true;
        for (std::size_t i = 0; i < n_ && match; ++i) match = std::abs(p[i].get_d() - x[i]) <= tol;
        if (match) return true;
      }
      return false;
  }
  return false;
}

bool MeasureSpec::is_symmetric() const {
  switch (kind_) {
    case MeasureKind::gaussian_Rn:
    case MeasureKind::uniform_pm1_cube:
    case MeasureKind::uniform_ball:
    case MeasureKind::uniform_sphere:
      return true;
    case MeasureKind::lebesgue_box:
      for (std::size_t i = 0; i < n_; ++i)
        if (lower_[i] != -upper_[i]) return false;
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------

MomentSequence::MomentSequence(MeasureSpec spec) : spec_(std::move(spec)) {}

MomentSequence::MomentSequence(const MomentSequence& other) : spec_(other.spec_) {
  std::shared_lock lock(other.mutex_);
  cache_ = other.cache_;
}

Rational MomentSequence::moment(const Exponent& alpha) const {
  if (alpha.dimension() != spec_.dimension())
    throw InputError("moment index has dimension " + std::to_string(alpha.dimension()) + ", measure has " +
                     std::to_string(spec_.dimension()));
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(alpha); it != cache_.end()) return it->second;
  }
  Rational value = compute(alpha);
  std::unique_lock lock(mutex_);
  cache_.emplace(alpha, value);
  return value;
}

Rational MomentSequence::compute(const Exponent& alpha) const {
  const std::size_t n = spec_.dimension();
  switch (spec_.kind()) {
    case MeasureKind::gaussian_Rn: {
      if (any_odd(alpha)) return 0;
      Integer r = 1;
      for (unsigned a : alpha.values()) r *= odd_double_factorial(a / 2);
      return Rational(r);
    }
    case MeasureKind::exponential_orthant: {
      Integer r = 1;
      for (unsigned a : alpha.values()) r *= factorial(a);
      return Rational(r);
    }
    case MeasureKind::lebesgue_box: {
      Rational r = 1;
      for (std::size_t i = 0; i < n; ++i) r *= interval_moment(spec_.lower()[i], spec_.upper()[i], alpha[i]);
      return r;
    }
    case MeasureKind::uniform_pm1_cube:
      return any_odd(alpha) ? 0 : 1;
    case MeasureKind::uniform_simplex: {
      // n! prod(alpha_i!) / (n + |alpha|)!
      Integer num = factorial(static_cast<unsigned>(n));
      for (unsigned a : alpha.values()) num *= factorial(a);
      Rational r(num, factorial(static_cast<unsigned>(n) + alpha.degree()));
      r.canonicalize();
      return r;
    }
    case MeasureKind::uniform_sphere:
    case MeasureKind::uniform_ball: {
      // Sphere: prod (2k_i - 1)!! / prod_{j<K} (n + 2j), alpha = 2k, K = sum k_i.
      // The pi^{n/2} factors of the Gamma functions cancel under normalization.
      if (any_odd(alpha)) return 0;
      Integer num = 1;
      for (unsigned a : alpha.values()) num *= odd_double_factorial(a / 2);
      Integer den = 1;
      const unsigned half = alpha.degree() / 2;
      for (unsigned j = 0; j < half; ++j) den *= static_cast<unsigned long>(n + 2 * j);
      Rational r(num, den);
      r.canonicalize();
      if (spec_.kind() == MeasureKind::uniform_ball) {
        Rational shrink(static_cast<unsigned long>(n), static_cast<unsigned long>(n + alpha.degree()));
        shrink.canonicalize();
        r *= shrink;
      }
      return r;
    }
    case MeasureKind::discrete: {
      Rational total = 0;
      for (std::size_t k = 0; k < spec_.points().size(); ++k) {
        Rational term = spec_.weights()[k];
        for (std::size_t i = 0; i < n && term != 0; ++i)
          if (alpha[i] != 0) term *= power(spec_.points()[k][i], alpha[i]);
        total += term;
      }
      return total;
    }
  }
  throw CapabilityError("unsupported measure kind");
}

std::vector<Rational> linear_moment_vector(const MomentSequence& seq, unsigned d) {
  MonomialBasis basis(seq.dimension(), d);
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (const auto& e : basis.monomials()) out.push_back(seq.moment(e));
  return out;
}

Rational integrate(const Polynomial& p, const MomentSequence& seq) {
  if (p.dimension() != seq.dimension()) throw InputError("polynomial and measure dimensions differ");
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) total += c * seq.moment(e);
  return total;
}

}  // namespace mombound
