// pglgraph: command-line front end. Exit status 0 = ok, 1 = a checked property
// failed, 2 = usage error (bad flags, unsupported q, inadmissible parameter).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pglgraph/cayley.hpp"
#include "pglgraph/context.hpp"
#include "pglgraph/error.hpp"
#include "pglgraph/graph_io.hpp"
#include "pglgraph/kirillov.hpp"
#include "pglgraph/numtheory.hpp"
#include "pglgraph/pipeline.hpp"
#include "pglgraph/predicted.hpp"
#include "pglgraph/spectra.hpp"

using namespace pglgraph;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(errc code) {
  switch (code) {
    case errc::not_prime:
    case errc::even_characteristic:
    case errc::cap_exceeded:
    case errc::forbidden_param:
    case errc::zero_param:
    case errc::invalid_param:
    case errc::malformed_input:
    case errc::asymmetric_coset:
      return exit_usage;
    default:
      return exit_violation;
  }
}

std::pair<unsigned, unsigned> resolve_q(std::uint32_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw usage_error("q = " + std::to_string(q) + " is not a prime power");
  if (pe->first == 2) throw usage_error("q = " + std::to_string(q) + " has even characteristic");
  if (q > default_field_cap) throw usage_error("q = " + std::to_string(q) + " exceeds the cap");
  return *pe;
}

std::shared_ptr<const Context> context_for(std::uint32_t q) {
  const auto [p, e] = resolve_q(q);
  return Context::make(p, e);
}

Family family_from(const std::string& s) {
  const auto f = parse_family(s);
  if (!f) throw usage_error("unknown family '" + s + "'");
  return *f;
}

elem checked_param(const Context& ctx, Family fam, std::optional<std::uint32_t> param) {
  if (!param) throw usage_error("--param is required");
  if (!is_admissible(fam, *ctx.field, ctx.delta(), *param)) {
    throw usage_error("parameter " + std::to_string(*param) + " is not admissible for family " + to_string(fam));
  }
  return *param;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json element_json(const PglElement& x) { return json::array({x.a, x.b, x.c, x.d}); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::malformed_input, e.what());
  }
}

std::vector<std::uint32_t> parse_q_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw usage_error("bad q list entry '" + item + "'");
    }
  }
  if (out.empty()) throw usage_error("empty q list");
  return out;
}

// --- subcommands -----------------------------------------------------------

int cmd_field_info(std::uint32_t q) {
  const auto ctx = context_for(q);
  const FieldTable& f = *ctx->field;
  json j = {{"p", f.characteristic()},
            {"e", f.degree()},
            {"q", f.order()},
            {"modulus", f.modulus()},
            {"generator", f.generator()},
            {"delta", ctx->delta()},
            {"ext_generator", ctx->ext->generator()}};
  std::cout << dump(j);
  return exit_ok;
}

int cmd_chars(std::uint32_t q) {
  const auto ctx = context_for(q);
  const Characters& ch = *ctx->chars;
  auto labels = [](const std::vector<RepParam>& reps) {
    auto a = json::array();
    for (const auto& r : reps) a.push_back(label(r));
    return a;
  };
  json j = {{"q", q},
            {"multiplicative", q - 1},
            {"additive", q},
            {"torus", q + 1},
            {"counts",
             {{"principal", ch.principal_series().size()},
              {"steinberg", ch.steinberg().size()},
              {"discrete", ch.discrete_series().size()}}},
            {"principal", labels(ch.principal_series())},
            {"steinberg", labels(ch.steinberg())},
            {"discrete", labels(ch.discrete_series())}};
  std::cout << dump(j);
  return exit_ok;
}

int cmd_cosets(const std::string& family, std::uint32_t q, std::optional<std::uint32_t> param) {
  const Family fam = family_from(family);
  if (fam == Family::cusp) throw usage_error("the cusp family has no coset space");
  const auto ctx = context_for(q);
  const CosetSpace& space = ctx->space(subgroup_of(fam));
  auto sub = json::array();
  for (const auto& h : space.subgroup()) sub.push_back(element_json(h));
  auto reps = json::array();
  for (const auto& x : space.reps()) reps.push_back(element_json(x));
  json j = {{"family", family}, {"q", q}, {"subgroup", sub}, {"size", space.size()}, {"reps", reps},
            {"double_cosets", count_double_cosets(space)}};
  if (param) {
    const DoubleCoset dc = make_double_coset(*ctx, fam, checked_param(*ctx, fam, param));
    auto gens = json::array();
    for (const auto& x : dc.generators) gens.push_back(element_json(x));
    j["double_coset"] = {{"label", dc.label}, {"param", *param}, {"cosets", dc.cosets}, {"generators", gens},
                         {"count", dc.cosets.size()}, {"symmetric", is_symmetric(space, dc)}};
    if (dc.measured_count) j["double_coset"]["measured_count"] = *dc.measured_count;
  }
  std::cout << dump(j);
  return exit_ok;
}

Graph graph_for(const std::string& family, std::uint32_t q, std::optional<std::uint32_t> param) {
  const Family fam = family_from(family);
  const auto [p, e] = resolve_q(q);
  if (fam == Family::cusp) return build_cusp_graph(p, e);
  const auto ctx = Context::make(p, e);
  return build_family_graph(*ctx, fam, checked_param(*ctx, fam, param));
}

int cmd_build(const std::string& family, std::uint32_t q, std::optional<std::uint32_t> param,
              const std::string& out, bool dot) {
  const Graph g = graph_for(family, q, param);
  emit(dot ? graph_to_dot(g) : dump(graph_to_json(g)), out);
  return exit_ok;
}

int cmd_spectrum(const std::string& in, const std::string& csv, const std::string& method) {
  const Graph g = graph_from_json(read_json_file(in));
  const auto ev = eigenvalues(g, method == "jacobi" ? EigenMethod::jacobi : EigenMethod::ql);
  const auto rep = make_report(ev, g.k(), g.q);
  if (!csv.empty()) {
    std::ostringstream s;
    s << "index,eigenvalue\n";
    for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) s << i << ',' << format12(rep.eigenvalues[i]) << '\n';
    emit(s.str(), csv);
  }
  const auto moments = moment_check(g, ev);
  json j = to_json(rep);
  j["n"] = g.n();
  j["q"] = g.q;
  j["structure"] = to_json(analyze(g));
  j["moments_ok"] = moments.ok;
  std::cout << dump(j);
  return moments.ok ? exit_ok : exit_violation;
}

int cmd_predict(const std::string& family, std::uint32_t q, std::optional<std::uint32_t> param, bool as_json) {
  const Family fam = family_from(family);
  if (fam == Family::cusp) throw usage_error("no prediction for the cusp graph");
  const auto ctx = context_for(q);
  const auto ps = assemble_predicted(*ctx, fam, checked_param(*ctx, fam, param));
  if (as_json) {
    json j = to_json(ps);
    j["family"] = family;
    j["q"] = q;
    j["param"] = *param;
    std::cout << dump(j);
  } else {
    for (const auto& e : ps.entries) std::printf("%-24s %16s x %zu\n", e.source.c_str(), format12(e.value).c_str(), e.multiplicity);
    std::printf("total %zu\n", ps.total());
  }
  return exit_ok;
}

int cmd_crosscheck(const std::string& family, std::uint32_t q, std::optional<std::uint32_t> param, bool all,
                   double tol, const std::string& method, bool timing, const std::string& out) {
  const Family fam = family_from(family);
  if (fam == Family::cusp) throw usage_error("use cusp-graph for the cusp family");
  if (!(tol > 0)) throw usage_error("--tol must be positive");
  const auto ctx = context_for(q);
  std::vector<elem> params;
  if (all) {
    params = admissible_params(fam, *ctx->field, ctx->delta());
  } else {
    params.push_back(checked_param(*ctx, fam, param));
  }
  const EigenMethod m = method == "jacobi" ? EigenMethod::jacobi : EigenMethod::ql;
  bool ok = true;
  json reports = json::array();
  for (elem c : params) {
    const auto r = run_crosscheck(*ctx, fam, c, tol, m);
    ok = ok && r.ok;
    reports.push_back(to_json(r, timing));
  }
  emit(dump(all ? reports : reports[0]), out);
  return ok ? exit_ok : exit_violation;
}

int cmd_certify(const std::string& in, const std::string& family, std::optional<std::uint32_t> q,
                std::optional<std::uint32_t> param) {
  Graph g;
  if (!in.empty()) {
    g = graph_from_json(read_json_file(in));
  } else {
    if (!q) throw usage_error("--q or --in is required");
    g = graph_for(family, *q, param);
  }
  const auto rep = make_report(eigenvalues(g), g.k(), g.q);
  const auto cert = certify(rep);
  const auto fam = parse_family(g.family);
  const bool holds = fam ? family_bound_holds(*fam, cert) : cert.ramanujan;
  json j = {{"family", g.family}, {"q", g.q}, {"n", g.n()}, {"k", g.k()},
            {"max_nontrivial_abs", round12(rep.max_nontrivial_abs)},
            {"ramanujan_bound", round12(rep.ramanujan_bound)},
            {"paper_bound", round12(rep.paper_bound)},
            {"certificate", to_json(cert)},
            {"family_bound_holds", holds}};
  std::cout << dump(j);
  return holds ? exit_ok : exit_violation;
}

int cmd_repcheck(std::uint32_t q, unsigned trials, const std::string& kind, unsigned seed) {
  if (!kind.empty() && kind != "discrete" && kind != "steinberg" && kind != "principal") {
    throw usage_error("unknown representation kind '" + kind + "'");
  }
  const auto ctx = context_for(q);
  const Pgl2& g = *ctx->group;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  double worst = 0.0;
  bool ranks_ok = true;
  json rows = json::array();
  for (const auto& rep : ctx->chars->all_reps()) {
    if (!kind.empty() && kind != to_string(rep.kind)) continue;
    const Representation pi(ctx, rep, ctx->chars->base_psi());
    double residual = 0.0;
    for (unsigned t = 0; t < trials; ++t) {
      const auto& x = g.elements()[pick(rng)];
      const auto& y = g.elements()[pick(rng)];
      residual = std::max(residual, (pi.matrix(g.mul(x, y)) - pi.matrix(x) * pi.matrix(y)).cwiseAbs().maxCoeff());
    }
    worst = std::max(worst, residual);
    json ranks, expected;
    for (SubgroupKind h : {SubgroupKind::K, SubgroupKind::U, SubgroupKind::A}) {
      const CMatrix p = pi.projector(h);
      const auto r = static_cast<long>(std::lround(p.trace().real()));
      const auto e = expected_fixed_dim(*ctx->chars, rep, h);
      ranks[to_string(h)] = r;
      expected[to_string(h)] = e;
      ranks_ok = ranks_ok && r == static_cast<long>(e);
    }
    rows.push_back({{"rep", label(rep)}, {"dim", pi.dim()}, {"residual", round12(residual)}, {"rank", ranks},
                    {"expected_rank", expected}});
  }
  const bool ok = worst <= 1e-9 && ranks_ok;
  json j = {{"q", q}, {"trials", trials}, {"max_residual", round12(worst)}, {"ranks_ok", ranks_ok}, {"reps", rows}, {"ok", ok}};
  std::cout << dump(j);
  return ok ? exit_ok : exit_violation;
}

int cmd_cusp(unsigned p, unsigned e, const std::string& out, bool timing) {
  if (!is_prime(p)) throw usage_error(std::to_string(p) + " is not prime");
  if (p == 2) throw usage_error("even characteristic is not supported");
  if (e == 0 || std::pow(double(p), double(e)) > default_field_cap) throw usage_error("p^e outside the supported range");
  const auto r = run_cusp(p, e);
  if (!out.empty()) emit(dump(graph_to_json(build_cusp_graph(p, e))), out);
  std::cout << dump(to_json(r, timing));
  return r.ok ? exit_ok : exit_violation;
}

int cmd_suite(const std::string& qlist, unsigned jobs, const std::string& format) {
  if (format != "json" && format != "table") throw usage_error("--format must be json or table");
  const auto qs = parse_q_list(qlist);
  for (auto q : qs) resolve_q(q);
  const auto rows = run_suite(qs, jobs);
  bool ok = true;
  for (const auto& r : rows) {
    const bool bound = r.family == "a" ? r.paper_bound_holds : r.ramanujan;
    ok = ok && r.error.empty() && r.matched && bound;
  }
  if (format == "json") {
    json a = json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    std::cout << dump(a);
  } else {
    std::printf("%-6s %4s %6s %6s %4s %14s %10s %7s %9s %11s %8s\n", "family", "q", "param", "n", "k", "max|lambda|",
                "2sqrt(q)", "ratio", "ramanujan", "paper_bound", "matched");
    for (const auto& r : rows) {
      const std::string param = r.param ? std::to_string(*r.param) : "-";
      std::printf("%-6s %4u %6s %6zu %4zu %14s %10s %7.4f %9s %11s %8s%s%s\n", r.family.c_str(), r.q, param.c_str(), r.n,
                  r.k, format12(r.max_nontrivial_abs).c_str(), format12(r.paper_bound).c_str(),
                  r.paper_bound > 0 ? r.max_nontrivial_abs / r.paper_bound : 0.0, r.ramanujan ? "yes" : "no",
                  r.paper_bound_holds ? "yes" : "no", r.matched ? "yes" : "no", r.error.empty() ? "" : "  error: ",
                  r.error.c_str());
    }
  }
  return ok ? exit_ok : exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset Cayley graphs on PGL_2(F_q): construction, spectra and predicted eigenvalues"};
  app.require_subcommand(1);
  int status = exit_ok;

  std::uint32_t q = 0;
  std::optional<std::uint32_t> opt_q, param;
  std::string family, out, in, csv, method = "ql", kind, qlist = "3,5,7,9,11,13", format = "json";
  bool dot = false, all = false, as_json = false, timing = false;
  double tol = 1e-6;
  unsigned trials = 100, seed = 1, p = 3, e = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* field_info = app.add_subcommand("field-info", "print p, e, q, modulus, generator and delta");
  field_info->add_option("--q", q, "field size")->required();

  auto* chars = app.add_subcommand("chars", "character and representation inventory");
  chars->add_option("--q", q, "field size")->required();

  auto* cosets = app.add_subcommand("cosets", "coset representatives and a double coset decomposition");
  cosets->add_option("--family", family, "k, u or a")->required();
  cosets->add_option("--q", q, "field size")->required();
  cosets->add_option("--param", param, "double coset parameter");

  auto* build = app.add_subcommand("build", "build a graph and write it as JSON or DOT");
  build->add_option("--family", family, "k, u, a or cusp")->required();
  build->add_option("--q", q, "field size")->required();
  build->add_option("--param", param, "c or t");
  build->add_option("--out", out, "output file (default stdout)");
  build->add_flag("--dot", dot, "emit Graphviz DOT");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a graph JSON file");
  spectrum->add_option("--in", in, "graph JSON")->required();
  spectrum->add_option("--csv", csv, "also write index,eigenvalue CSV");
  spectrum->add_option("--method", method, "ql or jacobi")->check(CLI::IsMember({"ql", "jacobi"}));

  auto* predict = app.add_subcommand("predict", "predicted spectrum from the character-sum formulas");
  predict->add_option("--family", family, "k, u or a")->required();
  predict->add_option("--q", q, "field size")->required();
  predict->add_option("--param", param, "c or t")->required();
  predict->add_flag("--json", as_json, "JSON output");

  auto* crosscheck = app.add_subcommand("crosscheck", "build, solve, predict and compare");
  crosscheck->add_option("--family", family, "k, u or a")->required();
  crosscheck->add_option("--q", q, "field size")->required();
  auto* param_opt = crosscheck->add_option("--param", param, "c or t");
  crosscheck->add_flag("--all-params", all, "every admissible parameter")->excludes(param_opt);
  crosscheck->add_option("--tol", tol, "matching tolerance");
  crosscheck->add_option("--method", method, "ql or jacobi")->check(CLI::IsMember({"ql", "jacobi"}));
  crosscheck->add_option("--out", out, "report file (default stdout)");
  crosscheck->add_flag("--timing", timing, "include wall-clock timing in the report");

  auto* certify_cmd = app.add_subcommand("certify", "Ramanujan and 2 sqrt(q) bound certification");
  certify_cmd->add_option("--in", in, "graph JSON");
  certify_cmd->add_option("--family", family, "k, u, a or cusp");
  certify_cmd->add_option("--q", opt_q, "field size");
  certify_cmd->add_option("--param", param, "c or t");

  auto* repcheck = app.add_subcommand("repcheck", "Kirillov model homomorphism and fixed-space ranks");
  repcheck->add_option("--q", q, "field size")->required();
  repcheck->add_option("--trials", trials, "random pairs per representation");
  repcheck->add_option("--kind", kind, "discrete, steinberg or principal");
  repcheck->add_option("--seed", seed, "random seed");

  auto* cusp = app.add_subcommand("cusp-graph", "the cusp graph X_P and its comparison with X_{U_1}");
  cusp->add_option("--p", p, "characteristic")->required();
  cusp->add_option("--e", e, "degree")->required();
  cusp->add_option("--out", out, "also write the graph JSON here");
  cusp->add_flag("--timing", timing, "include wall-clock timing in the report");

  auto* suite = app.add_subcommand("suite", "every family and parameter over a list of q");
  suite->add_option("--q", qlist, "comma separated field sizes");
  suite->add_option("--jobs", jobs, "worker threads");
  suite->add_option("--format", format, "json or table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*field_info) status = cmd_field_info(q);
    else if (*chars) status = cmd_chars(q);
    else if (*cosets) status = cmd_cosets(family, q, param);
    else if (*build) status = cmd_build(family, q, param, out, dot);
    else if (*spectrum) status = cmd_spectrum(in, csv, method);
    else if (*predict) status = cmd_predict(family, q, param, as_json);
    else if (*crosscheck) status = cmd_crosscheck(family, q, param, all, tol, method, timing, out);
    else if (*certify_cmd) status = cmd_certify(in, family, opt_q, param);
    else if (*repcheck) status = cmd_repcheck(q, trials, kind, seed);
    else if (*cusp) status = cmd_cusp(p, e, out, timing);
    else if (*suite) status = cmd_suite(qlist, jobs, format);
  } catch (const usage_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_usage;
  } catch (const pglgraph::error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_code_for(err.code());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_violation;
  }
  return status;
}
