#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "mombound/cone.hpp"
#include "mombound/errors.hpp"
#include "mombound/hierarchy.hpp"
#include "mombound/io.hpp"
#include "mombound/problems.hpp"

namespace mombound::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 20100514;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_file(path)); }

struct Options {
  std::string file;
  unsigned d_max = 4;
  unsigned k_max = 4;
  unsigned d = 0;
  unsigned jobs = 1;
  double tol = 1e-8;
  std::uint64_t seed = kDefaultSeed;
  std::size_t n = 0;
  bool random = false;
  double density = 0.5;
  std::size_t points = 200;
  std::vector<double> lower, upper;
  bool localizing = false;
  std::string example;
};

int cmd_bound(const Options& o, std::ostream& out) {
  Problem p = problem_from_json(read_json_file(o.file));
  MomentSequence seq(p.measure);
  HierarchyOptions ho;
  ho.jobs = o.jobs;
  write_bounds_csv(run_hierarchy(p.objective, seq, o.d_max, ho), out);
  return kOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  Problem p = problem_from_json(read_json_file(o.file));
  MomentSequence seq(p.measure);
  Certificate c = certify_nonnegativity(p.objective, seq, o.k_max, o.tol);
  out << certificate_to_json(c).dump(2) << "\n";
  return c.verdict == CertificateVerdict::counterexample ? kNegativeVerdict : kOk;
}

int cmd_copositive(const Options& o, std::ostream& out) {
  Json j = read_json_file(o.file);
  RationalMatrix a = matrix_from_json(j.is_object() ? j.at("matrix") : j);
  HierarchyOptions ho;
  ho.jobs = o.jobs;
  CopositivityReport r = copositivity_test(a, o.d_max, o.tol < 1e-8 ? o.tol : 1e-10, ho);
  out << copositivity_to_json(r).dump(2) << "\n";
  return r.conclusion == CopositivityConclusion::not_copositive ? kNegativeVerdict : kOk;
}

int cmd_maxcut(const Options& o, std::ostream& out) {
  MaxCutInstance inst;
  if (!o.file.empty()) {
    inst = maxcut_from_json(read_json_file(o.file));
  } else if (o.n >= 2) {
    inst = o.random ? maxcut_random(o.n, o.density, o.seed) : maxcut_equal(o.n);
  } else {
    throw InputError("maxcut needs --n >= 2 or --instance FILE");
  }
  const Polynomial f = inst.objective();
  MomentSequence seq(MeasureSpec::pm1_cube(inst.n));
  HierarchyOptions ho;
  ho.jobs = o.jobs;
  auto reports = run_hierarchy(f, seq, o.d_max, ho);
  std::optional<double> fstar;
  if (inst.n <= 22) fstar = brute_force_hypercube(f, inst.n).value.get_d();
  out << "d,lambda,residual,status,f_star\n";
  for (const auto& r : reports)
    out << r.d << "," << format_number(r.lambda) << "," << format_number(r.residual) << "," << status_name(r.status)
        << "," << (fstar ? format_number(*fstar) : std::string("")) << "\n";
  return kOk;
}

int cmd_density(const Options& o, std::ostream& out) {
  Problem p = problem_from_json(read_json_file(o.file));
  MomentSequence seq(p.measure);
  const std::size_t n = p.measure.dimension();
  std::vector<double> lo = o.lower, hi = o.upper;
  if (lo.empty() || hi.empty()) {
    if (p.measure.kind() == MeasureKind::lebesgue_box) {
      for (std::size_t i = 0; i < n; ++i) {
        lo.push_back(p.measure.lower()[i].get_d());
        hi.push_back(p.measure.upper()[i].get_d());
      }
    } else if (p.measure.support().compact && p.measure.kind() != MeasureKind::discrete) {
      lo.assign(n, p.measure.kind() == MeasureKind::uniform_simplex ? 0.0 : -1.0);
      hi.assign(n, 1.0);
    } else {
      throw InputError("density needs --lower/--upper for a noncompact or discrete support");
    }
  }
  if (lo.size() == 1 && n > 1) lo.assign(n, lo[0]);
  if (hi.size() == 1 && n > 1) hi.assign(n, hi[0]);
  if (lo.size() != n || hi.size() != n) throw InputError("grid bounds must match the dimension");
  if (o.points < 2) throw InputError("--points must be >= 2");

  BoundReport rep = upper_bound(p.objective, seq, o.d);
  SosDensity sigma = dual_density(rep, seq);
  std::vector<std::vector<double>> grid;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = lo[i] + (hi[i] - lo[i]) * static_cast<double>(idx[i]) / static_cast<double>(o.points - 1);
    grid.push_back(std::move(x));
    std::size_t i = 0;
    while (i < n && ++idx[i] == o.points) idx[i++] = 0;
    if (i == n) break;
  }
  auto values = density_profile(sigma, grid);
  for (std::size_t i = 0; i < n; ++i) out << "x" << i + 1 << ",";
  out << "sigma\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (double v : grid[k]) out << format_number(v) << ",";
    out << format_number(values[k]) << "\n";
  }
  return kOk;
}

int cmd_dump(const Options& o, std::ostream& out) {
  Problem p = problem_from_json(read_json_file(o.file));
  MomentSequence seq(p.measure);
  dump_triplets(o.localizing ? localizing_matrix(seq, p.objective, o.d) : moment_matrix(seq, o.d), out);
  return kOk;
}

int cmd_example(const Options& o, std::ostream& out) {
  Problem p;
  if (o.example == "motzkin-exp") {
    p = {motzkin_like(), MeasureSpec::exponential(2)};
  } else if (o.example == "motzkin-box") {
    p = {motzkin_like(), MeasureSpec::unit_box(2)};
  } else if (o.example == "unattained") {
    p = {unattained_infimum(), MeasureSpec::exponential(2)};
  } else if (o.example == "double-well") {
    p = {double_well(), MeasureSpec::unit_box(1)};
  } else {
    throw InputError("unknown example '" + o.example + "' (motzkin-exp, motzkin-box, unattained, double-well)");
  }
  out << problem_to_json(p).dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measure-based upper bounds, nonnegativity certificates and copositivity tests"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads for independent hierarchy levels")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for generated instances");

  auto* bound = app.add_subcommand("bound", "Upper bounds lambda_0..lambda_dmax as CSV");
  bound->add_option("problem", o.file, "Problem JSON file")->required();
  bound->add_option("--d-max", o.d_max, "Highest hierarchy order");

  auto* certify = app.add_subcommand("certify", "Nonnegativity certificate (exit 1 on counterexample)");
  certify->add_option("problem", o.file, "Problem JSON file")->required();
  certify->add_option("--k-max", o.k_max, "Highest localizing order tested");
  certify->add_option("--tol", o.tol, "Relative witness tolerance");

  auto* copositive = app.add_subcommand("copositive", "Copositivity test (exit 1 if refuted)");
  copositive->add_option("matrix", o.file, "Matrix JSON file")->required();
  copositive->add_option("--d-max", o.d_max, "Highest hierarchy order");

  auto* maxcut = app.add_subcommand("maxcut", "MAXCUT hierarchy with brute-force f* (n <= 22)");
  maxcut->add_option("--n", o.n, "Number of vertices for generated instances");
  maxcut->add_flag("--random", o.random, "Random weights instead of equal weights 1/2");
  maxcut->add_option("--density", o.density, "Edge probability for --random");
  maxcut->add_option("--instance", o.file, "Instance JSON file");
  maxcut->add_option("--d-max", o.d_max, "Highest hierarchy order");

  auto* density = app.add_subcommand("density", "Dual density sigma* on a grid as CSV");
  density->add_option("problem", o.file, "Problem JSON file")->required();
  density->add_option("--d", o.d, "Hierarchy order")->required();
  density->add_option("--points", o.points, "Grid points per axis");
  density->add_option("--lower", o.lower, "Grid lower bounds");
  density->add_option("--upper", o.upper, "Grid upper bounds");

  auto* dump = app.add_subcommand("dump", "Moment or localizing matrix as triplets");
  dump->add_option("problem", o.file, "Problem JSON file")->required();
  dump->add_option("--d", o.d, "Order")->required();
  dump->add_flag("--localizing", o.localizing, "Dump M_d(f y) instead of M_d(y)");

  auto* example = app.add_subcommand("example", "Print a built-in problem file");
  example->add_option("name", o.example, "motzkin-exp | motzkin-box | unattained | double-well")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*bound) return cmd_bound(o, out);
    if (*certify) return cmd_certify(o, out);
    if (*copositive) return cmd_copositive(o, out);
    if (*maxcut) return cmd_maxcut(o, out);
    if (*density) return cmd_density(o, out);
    if (*dump) return cmd_dump(o, out);
    if (*example) return cmd_example(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapabilityError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kCapabilityError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kCapabilityError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mombound::cli
