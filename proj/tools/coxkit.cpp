#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "coxkit/curvature.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/export.hpp"
#include "coxkit/suite.hpp"

using namespace coxkit;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

struct Options {
  std::vector<std::string> types;
  std::string matrix;
  std::string radius = "auto";
  std::string k;
  std::string ideal = "tk";
  std::vector<std::string> checks;
  std::string out;
  std::string format;
  std::size_t cap_elements = kDefaultElementCap;
  double timeout_secs = 0;
  std::string backend = "descent";
  std::string order = "lk";
  std::string object = "lk";
  std::string J;
};

std::vector<std::string> type_specs(const Options& o) {
  if (!o.matrix.empty()) {
    if (!o.types.empty()) throw ValidationError("give --type or --matrix, not both");
    return {o.matrix};
  }
  if (o.types.empty()) throw ValidationError("no --type or --matrix given");
  return o.types;
}

std::string single_type(const Options& o) {
  const auto specs = type_specs(o);
  if (specs.size() != 1) throw ValidationError("this command takes exactly one type");
  return specs.front();
}

std::optional<int> radius_of(const Options& o) {
  if (o.radius == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const int r = std::stoi(o.radius, &used);
    if (used != o.radius.size()) throw std::invalid_argument("trailing text");
    if (r < 0) throw ValidationError("radius must be >= 0");
    return r;
  } catch (const std::logic_error&) {
    throw ValidationError("bad --radius '" + o.radius + "' (expected an integer or auto)");
  }
}

BallBackend backend_of(const Options& o) {
  if (o.backend == "descent") return BallBackend::kDescent;
  if (o.backend == "tits") return BallBackend::kTits;
  if (o.backend == "model") return BallBackend::kModel;
  throw ValidationError("unknown backend '" + o.backend + "'");
}

GroupBall ball_of(const Options& o, const std::string& type) {
  const CoxeterMatrix cm = CoxeterMatrix::parse(type);
  BallOptions options;
  options.element_cap = o.cap_elements;
  options.backend = backend_of(o);
  if (auto r = radius_of(o)) return GroupBall::enumerate(cm, *r, options);
  if (!cm.is_finite()) throw ValidationError(type + " is infinite: give --radius");
  return full_group(cm, options);
}

int single_k(const Options& o) {
  if (o.k.empty()) throw ValidationError("this command needs --k");
  const auto [lo, hi] = parse_k_range(o.k);
  if (lo != hi) throw ValidationError("this command takes a single k, not a range");
  return lo;
}

std::vector<int> k_values(const Options& o, const ReflectionTable& table) {
  std::pair<int, int> range;
  if (!o.k.empty())
    range = parse_k_range(o.k);
  else if (table.ball->is_complete_group())
    range = {0, std::max(0, table.max_length() / 2)};
  else
    throw ValidationError("give --k for a partial ball");
  std::vector<int> ks;
  for (int k = range.first; k <= range.second; ++k) ks.push_back(k);
  return ks;
}

Format format_of(const Options& o, Format fallback) { return o.format.empty() ? fallback : parse_format(o.format); }

void emit(const Options& o, const std::string& content) {
  if (o.out.empty())
    std::cout << content;
  else
    write_text(o.out, content);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

GeneratorSet parse_generator_set(const std::string& text, int rank) {
  GeneratorSet J = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item.front() == 's') item.erase(0, 1);
    int s = -1;
    try {
      s = std::stoi(item);
    } catch (const std::logic_error&) {
    }
    if (s < 0 || s >= rank) throw ValidationError("bad generator '" + item + "' in --J");
    J |= singleton(static_cast<Generator>(s));
  }
  return J;
}

Poset order_poset(const Options& o, const std::string& which, const ReflectionTable& table) {
  const GroupBall& ball = *table.ball;
  if (which == "weak") return left_weak_poset(ball);
  if (which == "bruhat") return bruhat_poset(ball);
  if (which == "lk") return k_intermediate_poset(table, single_k(o));
  if (which == "absolute") return k_absolute_poset(k_absolute_length_all(table, single_k(o))).poset;
  if (which == "torder") return t_order_poset(table);
  throw ValidationError("unknown order '" + which + "'");
}

int run_ball(const Options& o) {
  const GroupBall ball = ball_of(o, single_type(o));
  const Format f = format_of(o, Format::kJson);
  if (f == Format::kDot) throw ValidationError("ball output is json or csv");
  emit(o, f == Format::kJson ? dump(to_json(ball)) : to_csv(ball));
  return 0;
}

int run_order(const Options& o) {
  const GroupBall ball = ball_of(o, single_type(o));
  const ReflectionTable table = reflections_in_ball(ball);
  const Poset p = order_poset(o, o.order, table);
  nlohmann::json j{{"schema", 1},
                   {"type", ball.matrix().name()},
                   {"radius", ball.radius()},
                   {"complete", ball.is_complete_group()},
                   {"order", o.order},
                   {"descriptor", p.descriptor},
                   {"size", p.size()},
                   {"relations", p.relation_size()},
                   {"covers", p.cover_count()},
                   {"height", p.height()},
                   {"graded", is_graded(p).graded}};
  if (!o.k.empty() && (o.order == "lk" || o.order == "absolute")) j["k"] = single_k(o);
  if (p.rank) j["rank_sizes"] = rank_sizes(p);
  nlohmann::json maxima = nlohmann::json::array(), minima = nlohmann::json::array();
  for (int u : p.maximal_elements()) maxima.push_back(p.label(u));
  for (int u : p.minimal_elements()) minima.push_back(p.label(u));
  j["maximal"] = maxima;
  j["minimal"] = minima;
  if (o.order == "absolute") j["flagged_pairs"] = k_absolute_poset(k_absolute_length_all(table, single_k(o))).flagged_pairs;
  emit(o, dump(j));
  return 0;
}

int run_check(const Options& o) {
  CheckSuiteConfig config;
  config.types = type_specs(o);
  config.radius = radius_of(o);
  if (!o.k.empty()) config.k_range = parse_k_range(o.k);
  if (o.ideal == "tk")
    config.ideals = IdealMode::kTk;
  else if (o.ideal == "all")
    config.ideals = IdealMode::kAll;
  else
    throw ValidationError("--ideal is tk or all");
  for (const auto& c : o.checks)
    if (!c.empty()) config.checks.insert(c);
  config.out_dir = o.out;
  config.cap_elements = o.cap_elements;
  config.timeout_secs = o.timeout_secs;
  const SuiteReport report = run_check_suite(config);
  if (format_of(o, Format::kCsv) == Format::kJson)
    std::cout << dump(report.to_json(config));
  else
    std::cout << report.summary();
  return report.exit_code();
}

std::string join(const CoeffVector& c, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? sep : "") + std::to_string(c[i]);
  return out;
}

int run_poly(const Options& o) {
  const Format f = format_of(o, Format::kCsv);
  if (f == Format::kDot) throw ValidationError("poly output is csv or json");
  std::string csv = "type,k,coeffs,log_concave,unimodal,internal_zeros\n";
  nlohmann::json rows = nlohmann::json::array();
  for (const std::string& type : type_specs(o)) {
    const GroupBall ball = ball_of(o, type);
    const ReflectionTable table = reflections_in_ball(ball);
    const CoxeterMatrix& cm = ball.matrix();
    const bool dihedral = cm.rank() == 2 && !cm.is_infinite(0, 1);
    for (int k : k_values(o, table)) {
      const GenPoly p = gen_poly(k_absolute_length_all(table, k));
      const LogConcavity lc = is_log_concave(p.coeffs);
      const bool uni = is_unimodal(p.coeffs);
      csv += "\"" + cm.name() + "\"," + std::to_string(k) + "," + join(p.coeffs, " ") + "," +
             (lc.log_concave ? "true" : "false") + "," + (uni ? "true" : "false") + "," +
             (lc.internal_zeros ? "true" : "false") + "\n";
      nlohmann::json row{{"type", cm.name()},
                         {"k", k},
                         {"coeffs", p.coeffs},
                         {"polynomial", format_poly(p.coeffs)},
                         {"ball_truncated", p.ball_truncated},
                         {"log_concave", lc.log_concave},
                         {"unimodal", uni},
                         {"internal_zeros", lc.internal_zeros}};
      if (dihedral && 2 * k + 1 <= cm(0, 1)) {
        const DihedralFormula d = dihedral_formula_poly(cm(0, 1), k);
        row["dihedral_formula"] = d.coeffs;
        row["dihedral_formula_matches"] = trim(d.coeffs) == trim(p.coeffs);
      }
      rows.push_back(row);
    }
  }
  emit(o, f == Format::kCsv ? csv : dump({{"schema", 1}, {"polynomials", rows}}));
  return 0;
}

int run_curvature(const Options& o) {
  const GroupBall ball = ball_of(o, single_type(o));
  const ReflectionTable table = reflections_in_ball(ball);
  const int k = single_k(o);
  const UndirectedGraph g = undirected_omega(omega_graph(ball, t_k_set(table, k)));
  const auto edges = safe_edges(g);
  const CurvatureSpectrum spectrum = curvature_spectrum(g, edges);
  const Format f = format_of(o, Format::kJson);
  if (f == Format::kDot) throw ValidationError("curvature output is csv or json");
  if (f == Format::kCsv) {
    emit(o, to_csv(spectrum, g));
  } else {
    nlohmann::json j = to_json(spectrum, g);
    j["schema"] = 1;
    j["type"] = ball.matrix().name();
    j["k"] = k;
    j["skipped_boundary_edges"] = g.edges().size() - edges.size();
    emit(o, dump(j));
  }
  return 0;
}

int run_export(const Options& o) {
  const GroupBall ball = ball_of(o, single_type(o));
  const Format f = format_of(o, Format::kDot);
  if (o.object == "ball") {
    if (f == Format::kDot) throw ValidationError("ball export is json or csv");
    emit(o, f == Format::kJson ? dump(to_json(ball)) : to_csv(ball));
    return 0;
  }
  const ReflectionTable table = reflections_in_ball(ball);
  if (o.object == "omega") {
    const OmegaGraph g = omega_graph(ball, t_k_set(table, single_k(o)));
    emit(o, render(g, f, "omega_k" + std::to_string(single_k(o))));
  } else if (o.object == "lk-table") {
    if (f != Format::kCsv) throw ValidationError("lk-table export is csv");
    emit(o, to_csv(k_absolute_length_all(table, single_k(o))));
  } else if (o.object == "pj" || o.object == "qj") {
    const GeneratorSet J = parse_generator_set(o.J, ball.rank());
    const SelfMapTable map = o.object == "pj" ? PJ_map(ball, J) : QJ_map(ball, J);
    if (f != Format::kCsv) throw ValidationError("projection export is csv");
    emit(o, to_csv(map));
  } else if (o.object == "monoid") {
    if (f != Format::kJson) throw ValidationError("monoid export is json");
    std::vector<SelfMapTable> gens;
    for (Generator s = 0; s < ball.rank(); ++s) gens.push_back(PJ_map(ball, singleton(s)));
    const Poset order = o.k.empty() ? left_weak_poset(ball) : k_intermediate_poset(table, single_k(o));
    emit(o, dump(to_json(projection_monoid(ball, gens, &order))));
  } else {
    emit(o, render(order_poset(o, o.object, table), f, o.object));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxkit: Coxeter group balls, k-intermediate orders and their checks"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file mirroring the flags");
  Options o;
  app.add_option("--type", o.types, "named type(s) such as A3, B3, I2(5), ~A2")->delimiter(',');
  app.add_option("--matrix", o.matrix, "explicit Coxeter matrix, rows separated by ';', 0 = inf");
  app.add_option("--radius", o.radius, "ball radius or auto (finite types: the whole group)");
  app.add_option("--k", o.k, "k or a range lo..hi");
  app.add_option("--ideal", o.ideal, "ideals for check: tk or all")->check(CLI::IsMember({"tk", "all"}));
  app.add_option("--checks", o.checks, "comma-separated checks")->delimiter(',');
  app.add_option("--out", o.out, "output file (check: output directory)");
  app.add_option("--format", o.format, "dot, json or csv");
  app.add_option("--cap-elements", o.cap_elements, "element cap for ball construction");
  app.add_option("--timeout-secs", o.timeout_secs, "check-suite wall-clock limit, 0 = none");
  app.add_option("--backend", o.backend, "ball backend: descent, tits or model")
      ->check(CLI::IsMember({"descent", "tits", "model"}));

  auto* ball = app.add_subcommand("ball", "enumerate a ball and print it");
  auto* order = app.add_subcommand("order", "summarise an order on a ball");
  order->add_option("--order", o.order, "weak, bruhat, lk, absolute or torder")
      ->check(CLI::IsMember({"weak", "bruhat", "lk", "absolute", "torder"}));
  auto* check = app.add_subcommand("check", "run the theorem and conjecture checks");
  auto* poly = app.add_subcommand("poly", "generating polynomials of l_k");
  auto* curvature = app.add_subcommand("curvature", "Ollivier-Ricci curvature of the k-Bruhat graph");
  auto* exp = app.add_subcommand("export", "write an order or graph as dot, json or csv");
  exp->add_option("--object", o.object,
                  "weak, bruhat, lk, absolute, torder, omega, ball, lk-table, pj, qj or monoid")
      ->check(CLI::IsMember(
          {"weak", "bruhat", "lk", "absolute", "torder", "omega", "ball", "lk-table", "pj", "qj", "monoid"}));
  exp->add_option("--J", o.J, "generator subset for pj/qj, e.g. 0,2");
  for (auto* sub : {ball, order, check, poly, curvature, exp}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*ball) return run_ball(o);
    if (*order) return run_order(o);
    if (*check) return run_check(o);
    if (*poly) return run_poly(o);
    if (*curvature) return run_curvature(o);
    if (*exp) return run_export(o);
  } catch (const ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const OutOfBallError& e) {
    std::cerr << "ball too small: " << e.what() << "\n";
    return kExitResource;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
