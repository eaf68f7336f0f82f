#include "mombound/io.hpp"

#include "mombound/errors.hpp"
#include "mombound/hierarchy.hpp"

namespace mombound {
namespace {

Rational rational_field(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_float()) return parse_rational(j.dump());
  throw InputError(std::string("expected a rational for ") + what);
}

std::vector<Rational> rational_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("expected an array for ") + what);
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_field(v, what));
  return out;
}

Json rational_strings(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::size_t dimension_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1)
    throw InputError(std::string("field '") + key + "' must be a positive integer");
  return j[key].get<std::size_t>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json polynomial_to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json exps = Json::array();
    for (unsigned v : e.values()) exps.push_back(v);
    terms.push_back({{"exps", exps}, {"coef", to_string(c)}});
  }
  return terms;
}

Polynomial polynomial_from_json(const Json& j, std::size_t n) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), n);
  if (!j.is_array()) throw InputError("polynomial must be a term array or a string");
  if (n == 0) {
    if (j.empty()) throw InputError("cannot infer dimension of an empty term list");
    n = j.front().at("exps").size();
  }
  Polynomial f(n);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exps") || !t.contains("coef"))
      throw InputError("polynomial term needs 'exps' and 'coef'");
    const auto& ex = t["exps"];
    if (!ex.is_array() || ex.size() != n)
      throw InputError("term exponent length differs from dimension " + std::to_string(n));
    std::vector<unsigned> e;
    for (const auto& v : ex) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("exponents must be nonnegative integers");
      e.push_back(v.get<unsigned>());
    }
    f.add_term(Exponent(std::move(e)), rational_field(t["coef"], "coef"));
  }
  return f;
}

Json measure_to_json(const MeasureSpec& m) {
  Json j{{"kind", std::string(kind_name(m.kind()))}, {"n", m.dimension()}};
  if (m.kind() == MeasureKind::lebesgue_box) {
    j["lower"] = rational_strings(m.lower());
    j["upper"] = rational_strings(m.upper());
  } else if (m.kind() == MeasureKind::discrete) {
    Json pts = Json::array();
    for (const auto& p : m.points()) pts.push_back(rational_strings(p));
    j["points"] = pts;
    j["weights"] = rational_strings(m.weights());
  }
  return j;
}

MeasureSpec measure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("measure must be an object with a 'kind' string");
  const MeasureKind kind = kind_from_name(j["kind"].get<std::string>());
  switch (kind) {
    case MeasureKind::gaussian_Rn:
      return MeasureSpec::gaussian(dimension_field(j, "n"));
    case MeasureKind::exponential_orthant:
      return MeasureSpec::exponential(dimension_field(j, "n"));
    case MeasureKind::uniform_pm1_cube:
      return MeasureSpec::pm1_cube(dimension_field(j, "n"));
    case MeasureKind::uniform_simplex:
      return MeasureSpec::simplex(dimension_field(j, "n"));
    case MeasureKind::uniform_ball:
      return MeasureSpec::ball(dimension_field(j, "n"));
    case MeasureKind::uniform_sphere:
      return MeasureSpec::sphere(dimension_field(j, "n"));
    case MeasureKind::lebesgue_box: {
      if (!j.contains("lower") && !j.contains("upper")) return MeasureSpec::unit_box(dimension_field(j, "n"));
      if (!j.contains("lower") || !j.contains("upper")) throw InputError("box needs both 'lower' and 'upper'");
      auto lo = rational_vector(j["lower"], "lower");
      auto hi = rational_vector(j["upper"], "upper");
      if (j.contains("n") && dimension_field(j, "n") != lo.size()) throw InputError("box bounds do not match 'n'");
      return MeasureSpec::box(std::move(lo), std::move(hi));
    }
    case MeasureKind::discrete: {
      if (!j.contains("points") || !j["points"].is_array()) throw InputError("discrete measure needs 'points'");
      std::vector<std::vector<Rational>> pts;
      for (const auto& p : j["points"]) pts.push_back(rational_vector(p, "points"));
      std::vector<Rational> w;
      if (j.contains("weights")) w = rational_vector(j["weights"], "weights");
      auto m = MeasureSpec::discrete(std::move(pts), std::move(w));
      if (j.contains("n") && dimension_field(j, "n") != m.dimension())
        throw InputError("discrete points do not match 'n'");
      return m;
    }
  }
  throw CapabilityError("unsupported measure kind");
}

Json problem_to_json(const Problem& p) {
  return {{"v", 1},
          {"variables", p.objective.dimension()},
          {"objective", polynomial_to_json(p.objective)},
          {"measure", measure_to_json(p.measure)}};
}

Problem problem_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  if (j.contains("v") && (!j["v"].is_number_integer() || j["v"].get<int>() != 1))
    throw InputError("unsupported problem schema version");
  if (!j.contains("objective")) throw InputError("problem needs an 'objective'");
  if (!j.contains("measure")) throw InputError("problem needs a 'measure'");
  Problem p;
  p.measure = measure_from_json(j["measure"]);
  std::size_t n = p.measure.dimension();
  if (j.contains("variables") && dimension_field(j, "variables") != n)
    throw InputError("'variables' does not match the measure dimension");
  p.objective = polynomial_from_json(j["objective"], n);
  return p;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a nonempty array of rows");
  const std::size_t n = rows.size();
  std::vector<std::vector<Rational>> full;
  for (const auto& r : rows) {
    auto v = rational_vector(r, "matrix row");
    if (v.size() != n) throw InputError("matrix must be square");
    full.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (full[i][j] != full[j][i]) throw InputError("matrix must be symmetric");
  return RationalMatrix::from_rows(full);
}

Json maxcut_to_json(const MaxCutInstance& inst) {
  return {{"v", 1}, {"n", inst.n}, {"Q", matrix_to_json(inst.q)}, {"seed", inst.seed}};
}

MaxCutInstance maxcut_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("Q")) throw InputError("instance needs 'Q'");
  RationalMatrix q = matrix_from_json(j["Q"]);
  if (j.contains("n") && dimension_field(j, "n") != q.size()) throw InputError("'n' does not match Q");
  std::uint64_t seed = j.contains("seed") && j["seed"].is_number_unsigned() ? j["seed"].get<std::uint64_t>() : 0;
  return maxcut_from_matrix(q, seed);
}

Json certificate_to_json(const Certificate& c) {
  Json j{{"verdict", std::string(verdict_name(c.verdict))}, {"k", c.k_reached}};
  j["witness"] = c.witness ? polynomial_to_json(*c.witness) : Json(nullptr);
  j["witness_value"] = c.witness_value ? Json(to_string(*c.witness_value)) : Json(nullptr);
  return j;
}

Json copositivity_to_json(const CopositivityReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels)
    levels.push_back({{"d", l.d},
                      {"lambda", l.lambda},
                      {"lambda_exact", l.dual_exact.empty() ? Json(nullptr) : Json(to_string(l.lambda_exact))},
                      {"status", std::string(status_name(l.status))}});
  return {{"matrix", matrix_to_json(r.matrix)},
          {"conclusion", std::string(conclusion_name(r.conclusion))},
          {"d", r.order},
          {"levels", levels}};
}

}  // namespace mombound
