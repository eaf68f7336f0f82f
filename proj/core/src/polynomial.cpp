#include "mombound/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mombound/errors.hpp"

namespace mombound {

Exponent::Exponent(std::initializer_list<unsigned> exps) : Exponent(std::vector<unsigned>(exps)) {}

Exponent::Exponent(std::vector<unsigned> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

Exponent Exponent::unit(std::size_t n, std::size_t i, unsigned power) {
  std::vector<unsigned> e(n, 0);
  e.at(i) = power;
  return Exponent(std::move(e));
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (other.exps_.size() != exps_.size()) throw InputError("exponent dimension mismatch");
  Exponent r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto av = a.values(), bv = b.values();
  return std::lexicographical_compare(bv.begin(), bv.end(), av.begin(), av.end());
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (unsigned v : e.values()) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::size_t n) : n_(n) {
  if (n == 0) throw InputError("polynomial dimension must be >= 1");
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(Exponent(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw InputError("variable index out of range");
  return monomial(Exponent::unit(n, i), 1);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.dimension());
  p.add_term(e, c);
  return p;
}

unsigned Polynomial::degree() const {
  // Graded order: the last term has the largest degree.
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_dimension(const Exponent& e) const {
  if (e.dimension() != n_) throw InputError("exponent has dimension " + std::to_string(e.dimension()) +
                                            ", polynomial has " + std::to_string(n_));
}

void Polynomial::check_dimension(const Polynomial& o) const {
  if (o.n_ != n_) throw InputError("polynomial dimension mismatch");
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  check_dimension(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_dimension(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_dimension(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_dimension(b);
  std::unordered_map<Exponent, Rational, ExponentHash> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  Polynomial r(a.n_);
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace(e, std::move(c));
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

void append_degree(std::size_t n, unsigned degree, std::vector<Exponent>& out) {
  // Lexicographically descending enumeration of all exponents of this degree.
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == n) {
      e[pos] = remaining;
      out.emplace_back(e);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, degree);
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, unsigned d) : n_(n), d_(d) {
  if (n == 0) throw InputError("basis dimension must be >= 1");
  monomials_.reserve(basis_size(n, d));
  for (unsigned k = 0; k <= d; ++k) append_degree(n, k, monomials_);
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MonomialBasis enumerate_basis(std::size_t n, unsigned d) { return MonomialBasis(n, d); }

std::size_t basis_size(std::size_t n, unsigned d) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n + d, d);
  return c.get_ui();
}

Rational poly_eval(const Polynomial& f, std::span<const Rational> x) {
  if (x.size() != f.dimension())
    throw InputError("point has dimension " + std::to_string(x.size()) + ", polynomial expects " +
                     std::to_string(f.dimension()));
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e[i] != 0) term *= power(x[i], e[i]);
    total += term;
  }
  return total;
}

double poly_eval(const Polynomial& f, std::span<const double> x) {
  if (x.size() != f.dimension())
    throw InputError("point has dimension " + std::to_string(x.size()) + ", polynomial expects " +
                     std::to_string(f.dimension()));
  long double total = 0;
  for (const auto& [e, c] : f.terms()) {
    long double term = c.get_d();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= x[i];
    total += term;
  }
  return static_cast<double>(total);
}

Polynomial poly_shift(const Polynomial& f, const Rational& lambda) {
  Polynomial r = f;
  r.add_term(Exponent(f.dimension()), -lambda);
  return r;
}

Polynomial from_coefficients(const MonomialBasis& basis, std::span<const Rational> coeffs) {
  if (coeffs.size() != basis.size()) throw InputError("coefficient vector does not match basis size");
  Polynomial p(basis.dimension());
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := primary ['^' integer]
// primary:= number | x<k> | '(' expr ')'
class ExprParser {
 public:
  ExprParser(std::string_view s, std::size_t n) : s_(s), n_(n) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw InputError("empty polynomial text");
    Polynomial p = expr();
    if (!at_end()) fail("unexpected character");
    return p;
  }

  // Largest variable index mentioned in the text.
  static std::size_t max_variable(std::string_view s) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != 'x') continue;
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j > i + 1) best = std::max<std::size_t>(best, std::stoul(std::string(s.substr(i + 1, j - i - 1))));
    }
    return best;
  }

 private:
  Polynomial expr() {
    Polynomial acc(n_);
    bool first = true;
    for (;;) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      if (sign < 0) acc -= t;
      else acc += t;
      first = false;
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip_ws();
      if (at_end()) return p;
      if (peek() == '*') {
        ++pos_;
      } else if (peek() != 'x' && peek() != '(') {
        return p;  // juxtaposition like 3x1 or x1(x2 + 1) is implicit '*'
      }
      p = p * factor();
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    skip_ws();
    if (at_end() || peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t ps = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (ps == pos_) fail("expected exponent after '^'");
    const auto e = std::stoul(std::string(s_.substr(ps, pos_ - ps)));
    Polynomial out = Polynomial::constant(n_, 1);
    for (unsigned long k = 0; k < e; ++k) out = out * base;
    return out;
  }

  Polynomial primary() {
    skip_ws();
    if (at_end()) fail("expected coefficient or variable");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("variable name must be x<index>");
      const auto idx = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (idx == 0) fail("variables are numbered from x1");
      return Polynomial::variable(n_, idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Polynomial::constant(n_, parse_rational(take_number()));
    fail("expected coefficient or variable");
  }

  std::string_view take_number() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
      std::size_t ds = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (ds == pos_) pos_ = save;
    }
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return s_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  const std::size_t max_var = ExprParser::max_variable(text);
  if (n == 0) n = std::max<std::size_t>(max_var, 1);
  if (max_var > n)
    throw InputError("polynomial uses x" + std::to_string(max_var) + " but dimension is " + std::to_string(n));
  return ExprParser(text, n).parse();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.dimension(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace mombound
