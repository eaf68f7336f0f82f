#include "mombound/momat.hpp"

#include <istream>
#include <sstream>

namespace mombound {
namespace {

// Index into basis(2d) of alpha_i + alpha_j for every (i >= j) of basis(d).
std::vector<std::size_t> pair_sum_indices(const MonomialBasis& basis, const MonomialBasis& doubled) {
  const std::size_t s = basis.size();
  std::vector<std::size_t> idx(s * (s + 1) / 2);
  std::size_t k = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j <= i; ++j) idx[k++] = *doubled.index_of(basis[i] + basis[j]);
  return idx;
}

RationalMatrix hankel_fill(const MomentSequence& seq, const std::vector<Rational>& seq_over_doubled, unsigned d) {
  auto basis = std::make_shared<const MonomialBasis>(seq.dimension(), d);
  MonomialBasis doubled(seq.dimension(), 2 * d);
  auto idx = pair_sum_indices(*basis, doubled);
  RationalMatrix m(basis->size(), basis);
  std::size_t k = 0;
  for (std::size_t i = 0; i < basis->size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = seq_over_doubled[idx[k++]];
  return m;
}

}  // namespace

RealMatrix to_real(const RationalMatrix& m) {
  RealMatrix r(m.size(), m.basis());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) r(i, j) = m(i, j).get_d();
  return r;
}

RationalMatrix to_rational(const RealMatrix& m) {
  RationalMatrix r(m.size(), m.basis());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) r(i, j) = exact_from_double(m(i, j));
  return r;
}

std::vector<Rational> localized_moments(const MomentSequence& seq, const Polynomial& f, unsigned degree) {
  if (f.dimension() != seq.dimension()) throw InputError("polynomial and measure dimensions differ");
  MonomialBasis basis(seq.dimension(), degree);
  std::vector<Rational> z(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rational acc = 0;
    for (const auto& [gamma, c] : f.terms()) {
      Rational y = seq.moment(basis[i] + gamma);
      if (y != 0) acc += c * y;
    }
    z[i] = std::move(acc);
  }
  return z;
}

RationalMatrix moment_matrix(const MomentSequence& seq, unsigned d) {
  return hankel_fill(seq, linear_moment_vector(seq, 2 * d), d);
}

RationalMatrix localizing_matrix(const MomentSequence& seq, const Polynomial& f, unsigned d) {
  return hankel_fill(seq, localized_moments(seq, f, 2 * d), d);
}

Rational quadratic_form(const RationalMatrix& m, std::span<const Rational> g) {
  if (g.size() != m.size()) throw InputError("vector length does not match matrix size");
  Rational total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (g[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (g[j] != 0 && m(i, j) != 0) row += m(i, j) * g[j];
    total += 2 * row * g[i] + m(i, i) * g[i] * g[i];
  }
  return total;
}

double quadratic_form(const RealMatrix& m, std::span<const double> g) {
  if (g.size() != m.size()) throw InputError("vector length does not match matrix size");
  long double total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    long double row = 0;
    for (std::size_t j = 0; j < i; ++j) row += static_cast<long double>(m(i, j)) * g[j];
    total += 2 * row * g[i] + static_cast<long double>(m(i, i)) * g[i] * g[i];
  }
  return static_cast<double>(total);
}

void dump_triplets(const RationalMatrix& m, std::ostream& out) {
  out << "# size " << m.size() << "\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (m(i, j) != 0) out << i << " " << j << " " << to_string(m(i, j)) << "\n";
}

RationalMatrix read_triplets(std::istream& in) {
  std::string line;
  std::size_t size = 0;
  bool have_size = false;
  RationalMatrix m;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, word;
      ls >> hash >> word;
      if (word == "size" && (ls >> size)) {
        m = RationalMatrix(size);
        have_size = true;
      }
      continue;
    }
    if (!have_size) throw InputError("triplet dump lacks '# size' header");
    std::size_t i, j;
    std::string value;
    if (!(ls >> i >> j >> value) || i >= size || j >= size) throw InputError("bad triplet line: " + line);
    m(i, j) = parse_rational(value);
  }
  if (!have_size) throw InputError("triplet dump lacks '# size' header");
  return m;
}

}  // namespace mombound
