#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpj/errors.hpp"
#include "fpj/expansion.hpp"
#include "fpj/expression.hpp"
#include "fpj/hypergeometric.hpp"
#include "fpj/jacobi.hpp"
#include "fpj/special_functions.hpp"
#include "json_writer.hpp"

namespace fpj::cli {
namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json doc = Json::object();
  Table table;
  std::vector<std::string> warnings;
};

struct Settings {
  std::string alpha = "0";
  std::string beta = "0";
  std::string a;
  std::string b;
  std::string c;
  std::string expr;
  std::size_t n = 0;
  std::size_t n_max = 0;
  bool n_max_given = false;
  std::size_t sampling_degree = 0;
  bool sampling_given = false;
  std::size_t grid_points = 101;
  std::optional<double> tolerance;
  std::string route = "rodrigues";
  bool strict = false;
  std::string format = "json";
  std::string replay;
};

std::size_t degree_cap() {
  const char* env = std::getenv("FPJ_N_MAX_CAP");
  if (!env || !*env) return kDefaultDegreeCap;
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0') {
    throw InvalidParameters(std::string("FPJ_N_MAX_CAP must be a nonnegative integer, got '") + env + "'");
  }
  return value;
}

void require_within_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw DegreeCapExceeded(n, cap);
}

Complex complex_flag(const std::string& text, const char* name) {
  try {
    return parse_complex(text);
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), e.expected(), std::string("--") + name + ": " + e.what());
  }
}

ParamMode mode_of(const Settings& s) { return s.strict ? ParamMode::strict : ParamMode::permissive; }

Json params_json(const JacobiParams& p) {
  return Json::object().set("alpha", p.alpha()).set("beta", p.beta());
}

std::string num(double d) { return format_double(d); }

std::vector<std::string> complex_cells(Complex z) { return {num(z.real()), num(z.imag())}; }

void budget_warning(std::size_t total_degree, Report& r) {
  if (total_degree > detail::kWideDegreeBudget) {
    r.warnings.push_back("total polynomial degree " + std::to_string(total_degree) +
                         " exceeds the extended-precision budget of " +
                         std::to_string(detail::kWideDegreeBudget) + "; results may be inaccurate");
  }
}

ChebyshevModel sample(const Expression& f, std::size_t degree) {
  return chebyshev_fit([&f](double x) { return f(Complex(x, 0.0)); }, degree);
}

void cmd_jacobi(const Settings& s, Report& r) {
  const std::size_t cap = degree_cap();
  const JacobiParams params(complex_flag(s.alpha, "alpha"), complex_flag(s.beta, "beta"), mode_of(s));
  require_within_cap(s.n, cap);
  const DensePoly p = s.route == "recurrence" ? jacobi_via_recurrence(params, s.n, cap)
                                              : jacobi_rodrigues(params, s.n, cap);
  r.doc.set("params", params_json(params))
      .set("n", s.n)
      .set("route", s.route)
      .set("coefficients", Json::list(p.coeffs()))
      .set("leading_coefficient", leading_coefficient(params, s.n))
      .set("norm", norm_an(params, s.n));
  r.table.header = {"k", "coefficient_re", "coefficient_im"};
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    auto row = complex_cells(p[k]);
    row.insert(row.begin(), std::to_string(k));
    r.table.rows.push_back(std::move(row));
  }
}

void cmd_gram(const Settings& s, Report& r) {
  const std::size_t cap = degree_cap();
  const JacobiParams params(complex_flag(s.alpha, "alpha"), complex_flag(s.beta, "beta"), mode_of(s));
  require_within_cap(s.n_max, cap);
  budget_warning(2 * s.n_max, r);
  const JacobiBasis basis(params, s.n_max, cap);
  const double tol = s.tolerance.value_or(1e-9);

  Json matrix = Json::array();
  Json norms = Json::array();
  double off = 0.0, diag = 0.0;
  r.table.header = {"n", "k", "gram_re", "gram_im"};
  for (std::size_t n = 0; n <= s.n_max; ++n) {
    norms.push(basis.norm(n));
    Json row = Json::array();
    for (std::size_t k = 0; k <= s.n_max; ++k) {
      const Complex g = basis.gram_entry(n, k);
      row.push(g);
      if (n == k) {
        diag = std::max(diag, std::abs(g - basis.norm(n)) / std::abs(basis.norm(n)));
      } else {
        off = std::max(off, std::abs(g) / std::sqrt(std::abs(basis.norm(n) * basis.norm(k))));
      }
      auto cells = complex_cells(g);
      cells.insert(cells.begin(), {std::to_string(n), std::to_string(k)});
      r.table.rows.push_back(std::move(cells));
    }
    matrix.push(std::move(row));
  }
  r.doc.set("params", params_json(params))
      .set("n_max", s.n_max)
      .set("norms", std::move(norms))
      .set("gram", std::move(matrix))
      .set("off_diagonal_max", off)
      .set("diagonal_max_rel_error", diag)
      .set("tolerance", tol)
      .set("within_tolerance", off <= tol && diag <= tol);
  if (!(off <= tol && diag <= tol)) {
    r.warnings.push_back("Gram matrix deviates from diag(a_n) by more than the tolerance");
  }
}

void cmd_expand(const Settings& s, Report& r) {
  const std::size_t cap = degree_cap();
  const JacobiParams params(complex_flag(s.alpha, "alpha"), complex_flag(s.beta, "beta"), mode_of(s));
  const Expression f = parse_expression(s.expr);
  require_within_cap(s.n_max, cap);
  const std::size_t m = s.sampling_given ? s.sampling_degree : default_sampling_degree(s.n_max);
  const ChebyshevModel model = sample(f, m);
  budget_warning(s.n_max + model.degree(), r);

  const JacobiBasis basis(params, s.n_max, cap);
  const JacobiExpansion expansion = expansion_coefficients(basis, model, s.n_max);
  double sup = 0.0;
  for (double x : uniform_grid(s.grid_points)) {
    sup = std::max(sup, std::abs(evaluate_expansion(expansion, basis, x) - f(x)));
  }
  Json rho = nullptr;
  try {
    rho = Json(convergence_estimate(expansion));
  } catch (const InsufficientData& e) {
    r.warnings.push_back(std::string("rho_hat unavailable: ") + e.what());
  }

  r.doc.set("params", params_json(params))
      .set("expression", s.expr)
      .set("n_max", s.n_max)
      .set("sampling_degree", m)
      .set("chebyshev_degree", model.degree())
      .set("coefficients", Json::list(expansion.coeffs))
      .set("tail_estimate", expansion.tail_estimate)
      .set("rho_hat", std::move(rho))
      .set("grid_points", s.grid_points)
      .set("residual_max", sup);
  r.table.header = {"n", "coefficient_re", "coefficient_im"};
  for (std::size_t n = 0; n < expansion.coeffs.size(); ++n) {
    auto row = complex_cells(expansion.coeffs[n]);
    row.insert(row.begin(), std::to_string(n));
    r.table.rows.push_back(std::move(row));
  }
}

void cmd_solve(const Settings& s, Report& r) {
  const std::size_t cap = degree_cap();
  const Complex a = complex_flag(s.a, "a");
  const Complex b = complex_flag(s.b, "b");
  const Complex c = complex_flag(s.c, "c");
  const Expression g = parse_expression(s.expr);
  if (s.n_max_given) require_within_cap(s.n_max, cap);

  const std::size_t m =
      s.sampling_given ? s.sampling_degree : default_sampling_degree(s.n_max_given ? s.n_max : cap);
  const HypergeomProblem problem{a, b, c, sample(g, m), mode_of(s)};

  SolveOptions options;
  options.cap = cap;
  if (s.tolerance) options.resonance_tolerance = *s.tolerance;
  const auto solution =
      solve(problem, s.n_max_given ? std::optional<std::size_t>(s.n_max) : std::nullopt, options);
  budget_warning(solution.expansion.n_trunc + problem.g.degree(), r);
  const double res = residual(problem, solution, uniform_grid(s.grid_points));

  r.warnings.insert(r.warnings.end(), solution.warnings.begin(), solution.warnings.end());
  r.doc.set("params", params_json(solution.expansion.params))
      .set("problem", Json::object().set("a", a).set("b", b).set("c", c).set("g", s.expr))
      .set("n_max", solution.expansion.n_trunc)
      .set("auto_truncation", !s.n_max_given)
      .set("sampling_degree", m)
      .set("chebyshev_degree", problem.g.degree())
      .set("coefficients", Json::list(solution.expansion.coeffs))
      .set("g_coefficients", Json::list(solution.g_coeffs))
      .set("tail_estimate", solution.expansion.tail_estimate)
      .set("grid_points", s.grid_points)
      .set("residual_max", res)
      .set("resonances", Json::list(solution.resonances))
      .set("resonance_margin", solution.resonance_margin)
      .set("resonance_tolerance", options.resonance_tolerance);
  r.table.header = {"n", "u_re", "u_im", "g_re", "g_im"};
  for (std::size_t n = 0; n < solution.expansion.coeffs.size(); ++n) {
    auto row = complex_cells(solution.expansion.coeffs[n]);
    const auto gc = complex_cells(solution.g_coeffs[n]);
    row.insert(row.begin(), std::to_string(n));
    row.insert(row.end(), gc.begin(), gc.end());
    r.table.rows.push_back(std::move(row));
  }
}

void cmd_fp_beta(const Settings& s, Report& r) {
  const Complex a = complex_flag(s.a, "a");
  const Complex b = complex_flag(s.b, "b");
  const Complex v = beta_fp(a, b);
  r.doc.set("arguments", Json::object().set("a", a).set("b", b)).set("value", v);
  r.table.header = {"value_re", "value_im"};
  r.table.rows.push_back(complex_cells(v));
}

std::string render_csv(const Table& t) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out += ',';
      out += cells[k];
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return out;
}

Json command_json(const std::vector<std::string>& args) { return Json::list(args); }

struct Failure {
  int code;
  std::string kind;
  std::string message;
  Json extra = Json::object();
};

void emit_failure(const std::vector<std::string>& args, const std::string& format, const Failure& f,
                  std::ostream& out, std::ostream& err) {
  err << "fpj: " << f.message << '\n';
  if (format != "json") return;
  Json error = Json::object();
  error.set("exit_code", f.code).set("kind", f.kind).set("message", f.message);
  error.set("details", f.extra);
  Json doc = Json::object();
  doc.set("command", command_json(args)).set("error", std::move(error));
  out << doc.dump();
}

std::vector<std::string> replay_command(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameters("cannot open replay document '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, {"JSON document"}, "replay document is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("command") || !doc["command"].is_array()) {
    throw ParseError(0, {"\"command\" array"}, "replay document has no \"command\" array");
  }
  std::vector<std::string> args;
  for (const auto& v : doc["command"]) {
    if (!v.is_string()) throw ParseError(0, {"string"}, "replay \"command\" entries must be strings");
    args.push_back(v.get<std::string>());
  }
  for (const auto& a : args) {
    if (a == "--replay" || a.rfind("--replay=", 0) == 0) {
      throw InvalidParameters("replay document refers to another replay");
    }
  }
  return args;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Jacobi polynomials with complex parameters, finite-part integrals and a hypergeometric solver",
               "fpj"};
  app.set_version_flag("--version", "fpj 0.1.0");
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--strict-params", s.strict, "Also reject alpha = 0 and beta = 0");
  app.add_option("--replay", s.replay, "Re-run the command recorded in a JSON document");

  auto* jacobi = app.add_subcommand("jacobi", "Power-basis coefficients of p_n");
  jacobi->add_option("--alpha", s.alpha, "Weight exponent at 0 (complex literal)")->capture_default_str();
  jacobi->add_option("--beta", s.beta, "Weight exponent at 1 (complex literal)")->capture_default_str();
  jacobi->add_option("--n", s.n, "Degree")->required();
  jacobi->add_option("--route", s.route, "Construction")
      ->check(CLI::IsMember({"rodrigues", "recurrence"}))
      ->capture_default_str();

  auto* gram = app.add_subcommand("gram", "Finite-part Gram matrix and norms");
  gram->add_option("--alpha", s.alpha, "Weight exponent at 0 (complex literal)")->capture_default_str();
  gram->add_option("--beta", s.beta, "Weight exponent at 1 (complex literal)")->capture_default_str();
  gram->add_option("--n-max", s.n_max, "Largest degree")->required();
  gram->add_option("--tolerance", s.tolerance, "Diagonality tolerance (default 1e-9)");

  auto* expand = app.add_subcommand("expand", "Jacobi coefficients f_n of an expression");
  expand->add_option("--alpha", s.alpha, "Weight exponent at 0 (complex literal)")->capture_default_str();
  expand->add_option("--beta", s.beta, "Weight exponent at 1 (complex literal)")->capture_default_str();
  expand->add_option("--expr", s.expr, "Function of x")->required();
  auto* expand_n = expand->add_option("--n-max", s.n_max, "Truncation degree")->required();
  auto* expand_m = expand->add_option("--sampling-degree", s.sampling_degree, "Chebyshev sampling degree (default 2N+8)");
  expand->add_option("--grid-points", s.grid_points, "Points of the reconstruction grid")
      ->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "Analytic solution of the inhomogeneous hypergeometric equation");
  solve_cmd->add_option("--a", s.a, "Coefficient a (complex literal)")->required();
  solve_cmd->add_option("--b", s.b, "Coefficient b (complex literal)")->required();
  solve_cmd->add_option("--c", s.c, "Coefficient c (complex literal)")->required();
  solve_cmd->add_option("--g", s.expr, "Inhomogeneity g(x)")->required();
  auto* solve_n = solve_cmd->add_option("--n-max", s.n_max, "Truncation degree (automatic when omitted)");
  auto* solve_m = solve_cmd->add_option("--sampling-degree", s.sampling_degree, "Chebyshev sampling degree (default 2N+8)");
  solve_cmd->add_option("--grid-points", s.grid_points, "Points of the residual grid")->capture_default_str();
  solve_cmd->add_option("--tolerance", s.tolerance, "Relative resonance tolerance (default 1e-8)");

  auto* fp_beta = app.add_subcommand("fp-beta", "Continued Beta function B(a, b)");
  fp_beta->add_option("--a", s.a, "First argument (complex literal)")->required();
  fp_beta->add_option("--b", s.b, "Second argument (complex literal)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_failure(args, "json", {kInvalidParameters, "usage", e.what()}, out, err);
    return kInvalidParameters;
  }

  if (!s.replay.empty()) {
    if (!app.get_subcommands().empty() || args.size() != 2) {
      err << "fpj: --replay takes only the document path\n";
      return kInvalidParameters;
    }
    try {
      return run_command(replay_command(s.replay), out, err);
    } catch (const ParseError& e) {
      err << "fpj: " << e.what() << '\n';
      return kParseError;
    } catch (const Error& e) {
      err << "fpj: " << e.what() << '\n';
      return kInvalidParameters;
    }
  }
  if (app.get_subcommands().empty()) {
    out << app.help();
    return kInvalidParameters;
  }

  s.n_max_given = expand_n->count() > 0 || solve_n->count() > 0;
  s.sampling_given = expand_m->count() > 0 || solve_m->count() > 0;

  Report report;
  report.doc.set("command", command_json(args));
  try {
    const CLI::App* sub = app.get_subcommands().front();
    if (sub == jacobi) {
      cmd_jacobi(s, report);
    } else if (sub == gram) {
      cmd_gram(s, report);
    } else if (sub == expand) {
      cmd_expand(s, report);
    } else if (sub == solve_cmd) {
      cmd_solve(s, report);
    } else {
      cmd_fp_beta(s, report);
    }
  } catch (const ResonantEigenvalue& e) {
    emit_failure(args, s.format,
                 {kResonance, "resonant_eigenvalue", e.what(), Json::object().set("n", e.index())}, out, err);
    return kResonance;
  } catch (const ParseError& e) {
    emit_failure(args, s.format,
                 {kParseError, "parse_error", e.what(),
                  Json::object().set("offset", e.offset()).set("expected", Json::list(e.expected()))},
                 out, err);
    return kParseError;
  } catch (const DegreeCapExceeded& e) {
    emit_failure(args, s.format,
                 {kDegreeCap, "degree_cap_exceeded", e.what(),
                  Json::object().set("requested", e.requested()).set("cap", e.cap())},
                 out, err);
    return kDegreeCap;
  } catch (const InvalidParameters& e) {
    emit_failure(args, s.format, {kInvalidParameters, "invalid_parameters", e.what()}, out, err);
    return kInvalidParameters;
  } catch (const PoleError& e) {
    emit_failure(args, s.format, {kInvalidParameters, "pole", e.what()}, out, err);
    return kInvalidParameters;
  } catch (const std::exception& e) {
    emit_failure(args, s.format, {kFailure, "failure", e.what()}, out, err);
    return kFailure;
  }

  if (s.format == "csv") {
    out << render_csv(report.table);
    for (const auto& w : report.warnings) err << "fpj: warning: " << w << '\n';
  } else {
    report.doc.set("warnings", Json::list(report.warnings));
    out << report.doc.dump();
  }
  return kOk;
}

}  // namespace fpj::cli
