#include "pglgraph/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "pglgraph/error.hpp"
#include "pglgraph/graph_io.hpp"

namespace pglgraph {

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

nlohmann::json rounded(const std::vector<double>& xs) {
  auto a = nlohmann::json::array();
  for (double x : xs) a.push_back(round12(x));
  return a;
}

}  // namespace

DoubleCoset make_double_coset(const Context& ctx, Family family, elem param) {
  switch (family) {
    case Family::k: return k_double_coset(*ctx.mod_k, param);
    case Family::u: return u_double_coset(*ctx.mod_u, param);
    case Family::a: return a_double_coset(*ctx.mod_a, param);
    case Family::cusp: break;
  }
  throw error(errc::invalid_param, "the cusp graph is not a coset graph");
}

Graph build_family_graph(const Context& ctx, Family family, elem param) {
  if (param >= ctx.q()) throw error(errc::invalid_param, "parameter outside F_q");
  return build_graph(ctx.space(subgroup_of(family)), make_double_coset(ctx, family, param));
}

std::vector<double> eigenvalues(const Graph& g, EigenMethod method) {
  const Eigen::MatrixXd a = g.adjacency();
  return method == EigenMethod::jacobi ? jacobi_eigenvalues(a) : sym_eigenvalues(a);
}

bool family_bound_holds(Family family, const CertResult& cert) {
  switch (family) {
    case Family::k: return cert.ramanujan && cert.paper_bound_holds;
    case Family::u:
    case Family::cusp: return cert.ramanujan;
    case Family::a: return cert.paper_bound_holds;
  }
  return false;
}

CrosscheckResult run_crosscheck(const Context& ctx, Family family, elem param, double tol, EigenMethod method) {
  const auto t0 = clock_type::now();
  CrosscheckResult r;
  r.family = family;
  r.q = ctx.q();
  r.param = param;
  const Graph g = build_family_graph(ctx, family, param);
  r.structure = analyze(g);
  const Eigen::MatrixXd a = g.adjacency();
  auto ev = method == EigenMethod::jacobi ? jacobi_eigenvalues(a) : sym_eigenvalues(a);
  r.residual = sampled_residual(a, ev, 3);
  r.moments = moment_check(g, ev);
  r.spectrum = make_report(std::move(ev), g.k(), ctx.q());
  r.predicted = assemble_predicted(ctx, family, param);
  r.match = match_multiset(r.spectrum.eigenvalues, r.predicted.expanded(), tol);
  r.cert = certify(r.spectrum);
  r.bound_holds = family_bound_holds(family, r.cert);
  r.ok = r.match.success && r.bound_holds && r.moments.ok;
  r.seconds = since(t0);
  return r;
}

CuspResult run_cusp(unsigned p, unsigned e, const Context* ctx) {
  const auto t0 = clock_type::now();
  CuspResult r;
  r.p = p;
  r.e = e;
  const Graph g = build_cusp_graph(p, e);
  r.structure = analyze(g);
  r.spectrum = make_report(eigenvalues(g), g.k(), g.q);
  r.cert = certify(r.spectrum);

  std::shared_ptr<const Context> owned;
  if (!ctx) {
    owned = Context::make(p, e);
    ctx = owned.get();
  }
  const Graph cover = build_family_graph(*ctx, Family::u, 1);
  const auto labels = component_labels(cover);
  const auto home = labels[ctx->mod_u->identity_coset()];
  std::vector<std::uint32_t> verts;
  for (std::uint32_t i = 0; i < cover.n(); ++i) {
    if (labels[i] == home) verts.push_back(i);
  }
  r.cover_size = verts.size();
  const auto cover_ev = eigenvalues(induced_subgraph(cover, verts));
  r.sub_multiset = is_sub_multiset(r.spectrum.eigenvalues, cover_ev, 1e-6);
  r.ok = r.sub_multiset && r.cert.ramanujan && r.structure.regular && r.structure.k == g.q;
  r.seconds = since(t0);
  return r;
}

nlohmann::json to_json(const StructureReport& r) {
  return {{"n", r.n}, {"k", r.k}, {"regular", r.regular}, {"components", r.components}, {"bipartite", r.bipartite}};
}

nlohmann::json to_json(const SpectrumReport& r) {
  auto clustered = nlohmann::json::array();
  for (const auto& c : r.clustered) clustered.push_back({{"value", round12(c.value)}, {"multiplicity", c.multiplicity}});
  return {{"eigenvalues", rounded(r.eigenvalues)},
          {"clustered", clustered},
          {"k", r.k},
          {"trivial", rounded(r.trivial)},
          {"max_nontrivial_abs", round12(r.max_nontrivial_abs)},
          {"ramanujan_bound", round12(r.ramanujan_bound)},
          {"paper_bound", round12(r.paper_bound)}};
}

nlohmann::json to_json(const PredictedSpectrum& p) {
  auto entries = nlohmann::json::array();
  for (const auto& e : p.entries) {
    entries.push_back({{"value", round12(e.value)}, {"multiplicity", e.multiplicity}, {"source", e.source}});
  }
  return {{"entries", entries}, {"total", p.total()}};
}

nlohmann::json to_json(const MatchReport& m) {
  return {{"success", m.success},
          {"max_distance", round12(m.max_distance)},
          {"worst_index", m.worst_index},
          {"worst_computed", round12(m.worst_computed)},
          {"worst_predicted", round12(m.worst_predicted)}};
}

nlohmann::json to_json(const CertResult& c) {
  return {{"ramanujan", c.ramanujan}, {"paper_bound_holds", c.paper_bound_holds}};
}

nlohmann::json to_json(const CrosscheckResult& r, bool timing) {
  nlohmann::json j = {{"config", {{"family", to_string(r.family)}, {"q", r.q}, {"param", r.param}}},
                      {"structure", to_json(r.structure)},
                      {"spectrum", to_json(r.spectrum)},
                      {"predicted", to_json(r.predicted)},
                      {"match", to_json(r.match)},
                      {"certificate", to_json(r.cert)},
                      {"moments_ok", r.moments.ok},
                      {"ok", r.ok}};
  if (timing) j["timing"] = {{"seconds", round12(r.seconds)}};
  return j;
}

nlohmann::json to_json(const CuspResult& r, bool timing) {
  nlohmann::json j = {{"config", {{"family", "cusp"}, {"p", r.p}, {"e", r.e}}},
                      {"structure", to_json(r.structure)},
                      {"spectrum", to_json(r.spectrum)},
                      {"certificate", to_json(r.cert)},
                      {"cover_component_size", r.cover_size},
                      {"sub_multiset_of_cover", r.sub_multiset},
                      {"ok", r.ok}};
  if (timing) j["timing"] = {{"seconds", round12(r.seconds)}};
  return j;
}

nlohmann::json to_json(const SuiteRow& r) {
  nlohmann::json j = {{"family", r.family},
                      {"q", r.q},
                      {"param", r.param ? nlohmann::json(*r.param) : nlohmann::json(nullptr)},
                      {"n", r.n},
                      {"k", r.k},
                      {"max_nontrivial_abs", round12(r.max_nontrivial_abs)},
                      {"two_sqrt_q", round12(r.paper_bound)},
                      {"ratio", round12(r.paper_bound > 0 ? r.max_nontrivial_abs / r.paper_bound : 0.0)},
                      {"ramanujan", r.ramanujan},
                      {"paper_bound", r.paper_bound_holds},
                      {"matched", r.matched}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::vector<SuiteRow> run_suite(const std::vector<std::uint32_t>& qs, unsigned jobs) {
  struct Job {
    std::shared_ptr<const Context> ctx;
    Family family;
    std::optional<elem> param;
  };
  std::vector<Job> work;
  for (auto q : qs) {
    auto ctx = Context::make_q(q);
    for (Family fam : {Family::k, Family::u, Family::a}) {
      for (elem c : admissible_params(fam, *ctx->field, ctx->delta())) work.push_back({ctx, fam, c});
    }
    work.push_back({ctx, Family::cusp, std::nullopt});
  }

  std::vector<SuiteRow> rows(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
      const Job& job = work[i];
      SuiteRow& row = rows[i];
      row.family = to_string(job.family);
      row.q = job.ctx->q();
      row.param = job.param;
      try {
        if (job.family == Family::cusp) {
          const auto r = run_cusp(job.ctx->field->characteristic(), job.ctx->field->degree(), job.ctx.get());
          row.n = r.structure.n;
          row.k = r.structure.k;
          row.max_nontrivial_abs = r.spectrum.max_nontrivial_abs;
          row.paper_bound = r.spectrum.paper_bound;
          row.ramanujan = r.cert.ramanujan;
          row.paper_bound_holds = r.cert.paper_bound_holds;
          row.matched = r.sub_multiset;
        } else {
          const auto r = run_crosscheck(*job.ctx, job.family, *job.param);
          row.n = r.structure.n;
          row.k = r.structure.k;
          row.max_nontrivial_abs = r.spectrum.max_nontrivial_abs;
          row.paper_bound = r.spectrum.paper_bound;
          row.ramanujan = r.cert.ramanujan;
          row.paper_bound_holds = r.cert.paper_bound_holds;
          row.matched = r.match.success;
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  auto family_rank = [](const std::string& f) { return f == "k" ? 0 : f == "u" ? 1 : f == "a" ? 2 : 3; };
  std::stable_sort(rows.begin(), rows.end(), [&](const SuiteRow& x, const SuiteRow& y) {
    return std::tuple(x.q, family_rank(x.family), x.param.value_or(0)) <
           std::tuple(y.q, family_rank(y.family), y.param.value_or(0));
  });
  return rows;
}

}  // namespace pglgraph
