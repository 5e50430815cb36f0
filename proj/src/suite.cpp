#include "coxkit/suite.hpp"

#include <chrono>
#include <memory>
#include <regex>
#include <sstream>

#include "coxkit/curvature.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/export.hpp"
#include "coxkit/orders.hpp"
#include "coxkit/polynomials.hpp"
#include "coxkit/posetlab.hpp"
#include "coxkit/projections.hpp"

namespace coxkit {

namespace {

using Clock = std::chrono::steady_clock;

struct Ideal {
  std::string name;
  std::vector<ElementId> X;
};

struct Context {
  std::string type;
  std::unique_ptr<GroupBall> ball;
  std::unique_ptr<ReflectionTable> table;
  std::vector<int> ks;
  std::vector<Ideal> ideals;
  std::vector<Poset> lk;  // <=_{L^k}, parallel to ks
};

std::string file_stem(const std::string& type) {
  std::string out;
  for (char c : type) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

GeneratorSet simple_part(const GroupBall& ball, const std::vector<ElementId>& X) {
  GeneratorSet J = 0;
  for (Generator s = 0; s < ball.rank(); ++s)
    if (std::find(X.begin(), X.end(), ball.locate(Word{s})) != X.end()) J |= singleton(s);
  return J;
}

std::string ideal_name(const GroupBall& ball, const std::vector<ElementId>& X) {
  std::string out = "{";
  for (std::size_t i = 0; i < X.size(); ++i) out += (i ? "," : "") + ball.label(X[i]);
  return out + "}";
}

CheckOutcome outcome(const Context& ctx, const std::string& check, CheckKind kind) {
  CheckOutcome o;
  o.type = ctx.type;
  o.check = check;
  o.kind = kind;
  return o;
}

CheckOutcome needs_complete(const Context& ctx, const std::string& check, CheckKind kind) {
  CheckOutcome o = outcome(ctx, check, kind);
  o.status = CheckStatus::kSkipped;
  o.detail = "needs the complete finite group";
  return o;
}

CheckOutcome check_graded_suite(const Context& ctx) {
  const GroupBall& ball = *ctx.ball;
  CheckOutcome o = outcome(ctx, "graded", CheckKind::kTheorem);
  std::size_t violations = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (const Ideal& ideal : ctx.ideals) {
    const Poset p = intermediate_poset(ball, ideal.X);
    const GeneratorSet J = simple_part(ball, ideal.X);
    std::vector<int> rho(ball.size());
    for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w)
      rho[w] = ball.length(w) - ball.length(project_QJ(ball, w, J));
    const auto graded = check_graded(p, rho);
    std::size_t gaps = 0;
    for (const auto& [u, v] : p.cover_edges()) gaps += ball.length(v) != ball.length(u) + 1;
    nlohmann::json row{{"X", ideal.name},
                       {"J", format_generator_set(J, ball.rank())},
                       {"rank_violations", graded.violations.size()},
                       {"gap_violations", gaps}};
    bool ok = graded.graded && gaps == 0;
    if (ball.is_complete_group()) {
      const auto comps = p.components();
      std::size_t reps = 0;
      for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) reps += (ball.left_descents(w) & J) == 0;
      const Poset first = p.induced(comps.front());
      bool iso = true;
      for (std::size_t c = 1; c < comps.size() && iso; ++c)
        iso = poset_isomorphic(first, p.induced(comps[c])).isomorphic;
      row["components"] = comps.size();
      row["coset_representatives"] = reps;
      row["components_isomorphic"] = iso;
      ok = ok && comps.size() == reps && iso;
    }
    violations += !ok;
    row["ok"] = ok;
    rows.push_back(row);
  }
  o.status = violations == 0 ? CheckStatus::kPass : CheckStatus::kFail;
  o.detail = std::to_string(ctx.ideals.size()) + " ideals, " + std::to_string(violations) + " with violations";
  if (!ctx.ball->is_complete_group()) o.detail += " (ball: component count not checked)";
  o.data["ideals"] = rows;
  return o;
}

CheckOutcome check_projections_suite(const Context& ctx) {
  const GroupBall& ball = *ctx.ball;
  CheckOutcome o = outcome(ctx, "projections", CheckKind::kTheorem);
  std::vector<SelfMapTable> maps;
  for (GeneratorSet J = 0; J <= all_generators(ball.rank()); ++J) maps.push_back(PJ_map(ball, J));
  std::size_t pairs = 0, failures = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (const Ideal& ideal : ctx.ideals) {
    const Poset p = intermediate_poset(ball, ideal.X);
    for (GeneratorSet J = 0; J < maps.size(); ++J) {
      ++pairs;
      if (!is_order_preserving(maps[J], p).preserving) {
        ++failures;
        bad.push_back({{"X", ideal.name}, {"J", format_generator_set(J, ball.rank())}});
      }
    }
  }
  o.status = failures == 0 ? CheckStatus::kPass : CheckStatus::kFail;
  o.detail = std::to_string(pairs) + " (X, J) pairs, " + std::to_string(failures) + " not order-preserving";
  o.data["failures"] = bad;
  return o;
}

CheckOutcome projection_control() {
  CheckOutcome o;
  o.type = "A2";
  o.check = "projections-control";
  o.kind = CheckKind::kTheorem;
  const GroupBall a2 = full_group(CoxeterMatrix::parse("A2"));
  const auto report = is_order_preserving(QJ_map(a2, singleton(1)), left_weak_poset(a2));
  const std::pair<int, int> expected{a2.locate(parse_word("s1s0")), a2.locate(parse_word("s0s1s0"))};
  const bool found = std::find(report.violations.begin(), report.violations.end(), expected) != report.violations.end();
  o.status = found ? CheckStatus::kPass : CheckStatus::kFail;
  o.detail = found ? "Q^{s1} breaks left weak order at (s1s0, s0s1s0) as expected"
                   : "expected violation of Q^{s1} at (s1s0, s0s1s0) not found";
  return o;
}

CheckOutcome check_refinement_suite(const Context& ctx) {
  const GroupBall& ball = *ctx.ball;
  CheckOutcome o = outcome(ctx, "refinement", CheckKind::kTheorem);
  const int k_max = ctx.ks.back();
  const auto r = refinement_chain_check(*ctx.table, k_max);
  const bool weak = k_intermediate_poset(*ctx.table, 0).same_relation(left_weak_poset(ball));
  bool top_is_bruhat = true;
  if (ball.is_complete_group() && 2 * k_max + 1 >= ctx.table->max_length()) top_is_bruhat = r.equals_bruhat.back();
  o.status = r.ok && weak && top_is_bruhat ? CheckStatus::kPass : CheckStatus::kFail;
  o.detail = "L^0..L^" + std::to_string(k_max) + " nested inside Bruhat order" + (r.ok ? "" : " FAILED") +
             "; L^0 = left weak order: " + (weak ? "yes" : "no");
  o.data["relation_sizes"] = r.relation_sizes;
  o.data["equals_bruhat"] = r.equals_bruhat;
  o.data["failures"] = r.failures;
  return o;
}

std::vector<CheckOutcome> check_sperner_suite(const Context& ctx, const std::string& out_dir) {
  std::vector<CheckOutcome> out;
  const bool theorem = is_type_A(ctx.ball->matrix());
  CheckOutcome o = outcome(ctx, "sperner", theorem ? CheckKind::kTheorem : CheckKind::kExploratory);
  bool all = true;
  for (std::size_t i = 0; i < ctx.ks.size(); ++i) {
    const auto r = strong_sperner_check(ctx.lk[i]);
    all = all && r.strongly_sperner;
    o.data["k" + std::to_string(ctx.ks[i])] = r.strongly_sperner;
    if (!out_dir.empty())
      write_text(out_dir + "/sperner_" + file_stem(ctx.type) + "_k" + std::to_string(ctx.ks[i]) + ".csv", to_csv(r));
  }
  o.status = theorem ? (all ? CheckStatus::kPass : CheckStatus::kFail) : CheckStatus::kReport;
  o.detail = std::string("<=_{L^k} strongly Sperner for every k: ") + (all ? "yes" : "no");
  out.push_back(o);

  CheckOutcome a = outcome(ctx, "sperner-absolute", CheckKind::kExploratory);
  a.status = CheckStatus::kReport;
  for (int k : ctx.ks) {
    const auto abs = k_absolute_poset(k_absolute_length_all(*ctx.table, k));
    const std::string key = "k" + std::to_string(k);
    if (!check_graded(abs.poset, *abs.poset.rank).graded)
      a.data[key] = "not graded by l_k";
    else
      a.data[key] = strong_sperner_check(abs.poset).strongly_sperner ? "strongly Sperner" : "not strongly Sperner";
  }
  a.detail = "k-absolute orders, no expected value";
  out.push_back(a);
  return out;
}

CheckOutcome check_shellability_suite(const Context& ctx) {
  const GroupBall& ball = *ctx.ball;
  CheckOutcome o = outcome(ctx, "shellability", CheckKind::kConjecture);
  const auto coxeter = coxeter_elements(ball);
  std::size_t shellable = 0, not_shellable = 0, inconclusive = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < ctx.ks.size(); ++i) {
    const auto abs = k_absolute_poset(k_absolute_length_all(*ctx.table, ctx.ks[i]));
    for (ElementId c : coxeter)
      for (int which = 0; which < 2; ++which) {
        const Poset& order = which == 0 ? ctx.lk[i] : abs.poset;
        const auto complex = order_complex(order.interval(ball.identity(), c));
        std::string verdict;
        try {
          verdict = to_string(shellability(complex).verdict);
        } catch (const ResourceError&) {
          verdict = "inconclusive";
        }
        shellable += verdict == "shellable";
        not_shellable += verdict == "not shellable";
        inconclusive += verdict == "inconclusive";
        rows.push_back({{"k", ctx.ks[i]},
                        {"c", ball.label(c)},
                        {"order", which == 0 ? "intermediate" : "absolute"},
                        {"facets", complex.facets.size()},
                        {"verdict", verdict}});
      }
  }
  o.status = not_shellable ? CheckStatus::kFail : inconclusive ? CheckStatus::kInconclusive : CheckStatus::kPass;
  o.detail = std::to_string(shellable) + " shellable, " + std::to_string(not_shellable) + " not shellable, " +
             std::to_string(inconclusive) + " inconclusive";
  o.data["intervals"] = rows;
  return o;
}

CheckOutcome check_logconcave_suite(const Context& ctx) {
  CheckOutcome o = outcome(ctx, "logconcave", CheckKind::kConjecture);
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  for (int k : ctx.ks) {
    const auto p = gen_poly(k_absolute_length_all(*ctx.table, k));
    const auto lc = is_log_concave(p.coeffs);
    const bool uni = is_unimodal(p.coeffs);
    all = all && lc.log_concave && uni;
    rows.push_back({{"k", k},
                    {"coeffs", p.coeffs},
                    {"log_concave", lc.log_concave},
                    {"unimodal", uni},
                    {"internal_zeros", lc.internal_zeros}});
  }
  o.status = all ? CheckStatus::kPass : CheckStatus::kFail;
  o.detail = std::string("sum x^{l_k(w)} log-concave and unimodal for every k: ") + (all ? "yes" : "no");
  o.data["polynomials"] = rows;
  return o;
}

CheckOutcome check_phi_suite(const Context& ctx) {
  const GroupBall& ball = *ctx.ball;
  const bool type_a = is_type_A(ball.matrix());
  const bool b3 = ball.matrix() == CoxeterMatrix::parse("B3");
  CheckOutcome o = outcome(ctx, "phi", type_a || b3 ? CheckKind::kTheorem : CheckKind::kExploratory);
  const Poset bruhat = bruhat_poset(ball);
  bool ok = true;
  for (std::size_t i = 0; i < ctx.ks.size(); ++i) {
    const Poset img = phi_k_image_poset(ctx.lk[i], ball);
    const bool graded = is_graded(img).graded;
    nlohmann::json row{{"k", ctx.ks[i]}, {"size", img.size()}, {"graded", graded}};
    if (type_a) {
      const bool iso = poset_isomorphic(img, bruhat).isomorphic;
      row["isomorphic_to_bruhat"] = iso;
      ok = ok && iso;
    } else if (b3 && ctx.ks[i] == 0) {
      row["expected_graded"] = false;
      ok = ok && !graded;
    }
    o.data["k" + std::to_string(ctx.ks[i])] = row;
  }
  if (type_a)
    o.detail = std::string("Im(phi_k) isomorphic to Bruhat order for every k: ") + (ok ? "yes" : "no");
  else if (b3)
    o.detail = std::string("Im(phi_0) not graded, as expected: ") + (ok ? "yes" : "no");
  else
    o.detail = "no expected value outside types A and B3";
  o.status = o.kind == CheckKind::kTheorem ? (ok ? CheckStatus::kPass : CheckStatus::kFail) : CheckStatus::kReport;
  return o;
}

CheckOutcome check_monoid_suite(const Context& ctx) {
  const GroupBall& ball = *ctx.ball;
  CheckOutcome o = outcome(ctx, "monoid", CheckKind::kTheorem);
  std::vector<SelfMapTable> gens;
  for (Generator s = 0; s < ball.rank(); ++s) gens.push_back(PJ_map(ball, singleton(s)));
  bool ok = true;
  for (std::size_t i = 0; i < ctx.ks.size(); ++i) {
    const auto r = projection_monoid(ball, gens, &ctx.lk[i]);
    const bool cell = r.size == ball.size() && r.braid_ok && r.generators_idempotent && r.order_preserving;
    ok = ok && cell;
    o.data["k" + std::to_string(ctx.ks[i])] = {{"size", r.size},
                                                {"braid_ok", r.braid_ok},
                                                {"idempotent", r.generators_idempotent},
                                                {"order_preserving", r.order_preserving}};
  }
  o.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  o.detail = "monoid of the P^{s} has |W| = " + std::to_string(ball.size()) +
             " elements, braid relations, order-preserving: " + (ok ? "yes" : "no");
  return o;
}

CheckOutcome check_curvature_suite(const Context& ctx, const std::string& out_dir) {
  const GroupBall& ball = *ctx.ball;
  CheckOutcome o = outcome(ctx, "curvature", CheckKind::kExploratory);
  o.status = CheckStatus::kReport;
  o.data["convention"] = curvature_convention();
  for (int k : ctx.ks) {
    const auto g = undirected_omega(omega_graph(ball, t_k_set(*ctx.table, k)));
    const auto edges = safe_edges(g);
    const auto spectrum = curvature_spectrum(g, edges);
    nlohmann::json histogram = nlohmann::json::object();
    for (const auto& [kappa, n] : spectrum.histogram) histogram[to_string(kappa)] = n;
    o.data["k" + std::to_string(k)] = {{"edges", edges.size()},
                                       {"skipped_boundary_edges", g.edges().size() - edges.size()},
                                       {"min", spectrum.min ? to_string(*spectrum.min) : "none"},
                                       {"max", spectrum.max ? to_string(*spectrum.max) : "none"},
                                       {"histogram", histogram}};
    if (!out_dir.empty())
      write_text(out_dir + "/curvature_" + file_stem(ctx.type) + "_k" + std::to_string(k) + ".csv",
                 to_csv(spectrum, g));
  }
  o.detail = "Ollivier-Ricci spectrum of Omega^k, no expected value";
  return o;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"graded", "projections", "sperner", "shellability", "logconcave",
                                              "refinement", "phi", "monoid", "curvature"};
  return names;
}

std::pair<int, int> parse_k_range(const std::string& text) {
  static const std::regex range(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, range)) throw ValidationError("bad k range '" + text + "' (expected 2 or 0..2)");
  const int lo = std::stoi(m[1]);
  const int hi = m[2].matched ? std::stoi(m[2]) : lo;
  if (hi < lo) throw ValidationError("empty k range '" + text + "'");
  return {lo, hi};
}

void validate(const CheckSuiteConfig& config) {
  if (config.types.empty()) throw ValidationError("no type given");
  if (config.checks.empty()) throw ValidationError("no checks enabled");
  for (const auto& c : config.checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw ValidationError("unknown check '" + c + "'");
  if (config.radius && *config.radius < 0) throw ValidationError("radius must be >= 0");
  if (config.k_range && (config.k_range->first < 0 || config.k_range->second < config.k_range->first))
    throw ValidationError("bad k range");
  if (config.timeout_secs < 0) throw ValidationError("timeout must be >= 0");
}

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::kTheorem:
      return "theorem";
    case CheckKind::kConjecture:
      return "conjecture";
    case CheckKind::kExploratory:
      break;
  }
  return "exploratory";
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kInconclusive:
      return "inconclusive";
    case CheckStatus::kSkipped:
      return "skipped";
    case CheckStatus::kReport:
      return "report";
    case CheckStatus::kResource:
      break;
  }
  return "resource-limit";
}

bool SuiteReport::theorem_failure() const {
  for (const auto& o : outcomes)
    if (o.kind == CheckKind::kTheorem && o.status == CheckStatus::kFail) return true;
  return false;
}

bool SuiteReport::resource_hit() const {
  if (timed_out) return true;
  for (const auto& o : outcomes)
    if (o.status == CheckStatus::kResource) return true;
  return false;
}

int SuiteReport::exit_code() const {
  if (theorem_failure()) return 1;
  if (resource_hit()) return 3;
  return 0;
}

nlohmann::json SuiteReport::to_json(const CheckSuiteConfig& config) const {
  nlohmann::json cfg{{"types", config.types},
                     {"radius", config.radius ? nlohmann::json(*config.radius) : nlohmann::json("auto")},
                     {"ideals", config.ideals == IdealMode::kTk ? "tk" : "all"},
                     {"checks", config.checks},
                     {"cap_elements", config.cap_elements},
                     {"timeout_secs", config.timeout_secs}};
  if (config.k_range) cfg["k"] = {config.k_range->first, config.k_range->second};
  nlohmann::json results = nlohmann::json::array();
  std::map<std::string, std::size_t> tally;
  for (const auto& o : outcomes) {
    results.push_back({{"type", o.type},
                       {"check", o.check},
                       {"kind", coxkit::to_string(o.kind)},
                       {"status", coxkit::to_string(o.status)},
                       {"detail", o.detail},
                       {"data", o.data}});
    ++tally[coxkit::to_string(o.kind) + ":" + coxkit::to_string(o.status)];
  }
  return {{"schema", 1},
          {"config", cfg},
          {"results", results},
          {"summary", {{"counts", tally}, {"timed_out", timed_out}, {"exit_code", exit_code()}}}};
}

std::string SuiteReport::summary() const {
  std::ostringstream out;
  for (const auto& o : outcomes)
    out << "[" << coxkit::to_string(o.status) << "] " << o.type << " " << o.check << " (" << coxkit::to_string(o.kind)
        << "): " << o.detail << "\n";
  if (timed_out) out << "timeout reached, report is partial\n";
  out << "exit status " << exit_code() << "\n";
  return out.str();
}

bool is_type_A(const CoxeterMatrix& matrix) {
  return matrix.rank() >= 1 && matrix == CoxeterMatrix::parse("A" + std::to_string(matrix.rank()));
}

GroupBall build_ball(const std::string& type, std::optional<int> radius, std::size_t cap_elements) {
  const CoxeterMatrix cm = CoxeterMatrix::parse(type);
  BallOptions options;
  options.element_cap = cap_elements;
  if (radius) return GroupBall::enumerate(cm, *radius, options);
  if (!cm.is_finite()) throw ValidationError(type + " is infinite: give --radius");
  return full_group(cm, options);
}

SuiteReport run_check_suite(const CheckSuiteConfig& config) {
  validate(config);
  const auto start = Clock::now();
  auto expired = [&] {
    return config.timeout_secs > 0 &&
           std::chrono::duration<double>(Clock::now() - start).count() > config.timeout_secs;
  };
  const std::string& out_dir = config.out_dir;
  SuiteReport report;

  if (config.checks.count("projections")) report.outcomes.push_back(projection_control());

  for (const std::string& type : config.types) {
    Context ctx;
    ctx.type = type;
    try {
      ctx.ball = std::make_unique<GroupBall>(build_ball(type, config.radius, config.cap_elements));
      ctx.table = std::make_unique<ReflectionTable>(reflections_in_ball(*ctx.ball));
      const bool complete = ctx.ball->is_complete_group();
      std::pair<int, int> ks;
      if (config.k_range)
        ks = *config.k_range;
      else if (complete)
        ks = {0, std::max(0, ctx.table->max_length() / 2)};
      else
        throw ValidationError(type + ": give --k for a partial ball");
      for (int k = ks.first; k <= ks.second; ++k) ctx.ks.push_back(k);
      for (int k : ctx.ks) ctx.lk.push_back(k_intermediate_poset(*ctx.table, k));
      if (config.ideals == IdealMode::kTk) {
        for (int k : ctx.ks) ctx.ideals.push_back({"T_" + std::to_string(k), t_k_set(*ctx.table, k)});
      } else {
        if (!complete) throw ValidationError(type + ": all-ideals mode needs a finite type");
        const Poset tp = t_order_poset(*ctx.table);
        for (const auto& members : order_ideals(tp)) {
          std::vector<ElementId> X;
          for (int u : members) X.push_back(tp.origin[u]);
          std::sort(X.begin(), X.end());
          ctx.ideals.push_back({ideal_name(*ctx.ball, X), X});
        }
      }
    } catch (const ResourceError& e) {
      CheckOutcome o;
      o.type = type;
      o.check = "setup";
      o.status = CheckStatus::kResource;
      o.detail = e.what();
      report.outcomes.push_back(o);
      continue;
    }

    const bool complete = ctx.ball->is_complete_group();
    for (const std::string& check : known_checks()) {
      if (!config.checks.count(check)) continue;
      if (expired()) {
        report.timed_out = true;
        break;
      }
      try {
        if (check == "graded") {
          report.outcomes.push_back(check_graded_suite(ctx));
        } else if (check == "projections") {
          report.outcomes.push_back(check_projections_suite(ctx));
        } else if (check == "refinement") {
          if (ctx.ks.front() != 0) throw ValidationError("refinement needs the k range to start at 0");
          report.outcomes.push_back(check_refinement_suite(ctx));
        } else if (check == "sperner") {
          if (!complete) {
            report.outcomes.push_back(needs_complete(ctx, check, CheckKind::kExploratory));
            continue;
          }
          for (auto& o : check_sperner_suite(ctx, out_dir)) report.outcomes.push_back(std::move(o));
        } else if (check == "shellability") {
          report.outcomes.push_back(complete ? check_shellability_suite(ctx)
                                             : needs_complete(ctx, check, CheckKind::kConjecture));
        } else if (check == "logconcave") {
          report.outcomes.push_back(complete ? check_logconcave_suite(ctx)
                                             : needs_complete(ctx, check, CheckKind::kConjecture));
        } else if (check == "phi") {
          report.outcomes.push_back(complete ? check_phi_suite(ctx) : needs_complete(ctx, check, CheckKind::kTheorem));
        } else if (check == "monoid") {
          report.outcomes.push_back(complete ? check_monoid_suite(ctx)
                                             : needs_complete(ctx, check, CheckKind::kTheorem));
        } else if (check == "curvature") {
          report.outcomes.push_back(check_curvature_suite(ctx, out_dir));
        }
      } catch (const ResourceError& e) {
        CheckOutcome o = outcome(ctx, check, CheckKind::kTheorem);
        o.status = CheckStatus::kResource;
        o.detail = e.what();
        report.outcomes.push_back(o);
      } catch (const OutOfBallError& e) {
        CheckOutcome o = outcome(ctx, check, CheckKind::kTheorem);
        o.status = CheckStatus::kResource;
        o.detail = std::string("ball too small: ") + e.what();
        report.outcomes.push_back(o);
      }
    }
    if (report.timed_out) break;
  }

  if (!out_dir.empty()) {
    write_text(out_dir + "/report.json", report.to_json(config).dump(2) + "\n");
    write_text(out_dir + "/summary.txt", report.summary());
  }
  return report;
}

}  // namespace coxkit
