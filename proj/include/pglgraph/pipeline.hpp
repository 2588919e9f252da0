#pragma once

// build -> spectrum -> predict -> match -> certify, and JSON reports.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pglgraph/cayley.hpp"
#include "pglgraph/context.hpp"
#include "pglgraph/predicted.hpp"
#include "pglgraph/spectra.hpp"

namespace pglgraph {

enum class EigenMethod { ql, jacobi };

DoubleCoset make_double_coset(const Context& ctx, Family family, elem param);
Graph build_family_graph(const Context& ctx, Family family, elem param);
std::vector<double> eigenvalues(const Graph& g, EigenMethod method = EigenMethod::ql);

struct CrosscheckResult {
  Family family = Family::k;
  std::uint32_t q = 0;
  elem param = 0;
  StructureReport structure;
  SpectrumReport spectrum;
  PredictedSpectrum predicted;
  MatchReport match;
  CertResult cert;
  MomentReport moments;
  double residual = 0;  // sampled eigenpair residual relative to ||A||_inf
  bool bound_holds = false;
  bool ok = false;
  double seconds = 0;
};

/// K and U must satisfy the Ramanujan bound, A the 2 sqrt(q) bound.
bool family_bound_holds(Family family, const CertResult& cert);

CrosscheckResult run_crosscheck(const Context& ctx, Family family, elem param, double tol = 1e-6,
                                EigenMethod method = EigenMethod::ql);

struct CuspResult {
  unsigned p = 0, e = 0;
  StructureReport structure;
  SpectrumReport spectrum;
  CertResult cert;
  std::size_t cover_size = 0;  // vertices in the identity component of X_{U_1}
  bool sub_multiset = false;
  bool ok = false;
  double seconds = 0;
};

/// The cusp graph, its certification, and the sub-multiset check against the
/// component of X_{U_1} containing the identity coset.
CuspResult run_cusp(unsigned p, unsigned e, const Context* ctx = nullptr);

nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const SpectrumReport& r);
nlohmann::json to_json(const PredictedSpectrum& p);
nlohmann::json to_json(const MatchReport& m);
nlohmann::json to_json(const CertResult& c);
nlohmann::json to_json(const CrosscheckResult& r, bool timing = false);
nlohmann::json to_json(const CuspResult& r, bool timing = false);

struct SuiteRow {
  std::string family;
  std::uint32_t q = 0;
  std::optional<elem> param;
  std::size_t n = 0, k = 0;
  double max_nontrivial_abs = 0;
  double paper_bound = 0;
  bool ramanujan = false;
  bool paper_bound_holds = false;
  bool matched = false;
  std::string error;  // set when the job failed
};

/// Every family and admissible parameter for each q, `jobs` worker threads.
/// Rows are sorted by (q, family, param) independent of scheduling.
std::vector<SuiteRow> run_suite(const std::vector<std::uint32_t>& qs, unsigned jobs);
nlohmann::json to_json(const SuiteRow& r);

}  // namespace pglgraph
