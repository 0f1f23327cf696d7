#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vfwalk/cycles.hpp"
#include "vfwalk/embedding.hpp"
#include "vfwalk/graph.hpp"
#include "vfwalk/util.hpp"
#include "vfwalk/walk_matrices.hpp"

namespace vfwalk {

// One evaluation of a claim: both sides as logarithms (or coefficients /
// eigenvalues, per the report notes) and the relative residual between them.
struct ClaimSample {
  Complex u;
  Complex lhs_log;
  Complex rhs_log;
  double residual = 0.0;
};

// Per-displacement-class decomposition of 16 K - (A^2 + 2A), the structural
// diagnostic attached to the dual-adjacency surrogate claim.
struct DiagnosticRow {
  std::string klass;          // "(0,1) edge", "(1,1) diagonal", ...
  long long pair_count = 0;   // ordered face pairs in the class
  double mean_overlap16 = 0;  // mean entry of 16 K
  double mean_walk_poly = 0;  // mean entry of A^2 + 2A
  double mean_residual = 0;   // signed mean of the difference
  double max_abs_residual = 0;
};

struct ClaimReport {
  std::string claim;
  nlohmann::json params;
  std::vector<ClaimSample> samples;
  std::string verdict;  // "pass" | "fail" (hard) | "reported" (soft)
  std::string notes;
  bool hard = true;
  double tolerance = 0.0;
  double max_residual = 0.0;
  std::vector<DiagnosticRow> diagnostic;  // only the surrogate claim fills this
};

// Everything a claim can draw on.  Individual claims validate that the pieces
// they need are present and reject the rest.
struct ClaimContext {
  std::optional<Graph> graph;
  std::optional<EmbeddedGraph> embedding;
  std::optional<TorusSpec> torus;
  std::optional<CoinSpec> coin;
  std::string coin_name;
  bool vertex_transitive = false;
  std::string source_name;
};

struct ClaimConfig {
  std::uint64_t seed = 0xA11CE;
  int sample_count = 20;
  double tol_hard = 1e-9;
  double tol_series = 1e-8;
  double tol_overlap = 1e-12;
  double tol_spectra = 1e-8;
  double tol_limit_finite = 1e-6;     // finite product vs quadrature
  double tol_limit_converged = 1e-8;  // last doubling gap
  int series_order = 8;
  int generalized_order = 6;
  int grid_max = 128;
  int limit_side = 64;  // torus side for the finite route of limit claims
  EnumerationBudget budget{};
  int threads = 0;  // 0 = VFWALK_THREADS / hardware default
};

// Context builders for the built-in families.
ClaimContext context_for_graph(Graph g, std::string source_name,
                               bool vertex_transitive);
ClaimContext context_for_torus(const TorusSpec& spec);
ClaimContext context_for_torus_embedded(int side);
ClaimContext context_for_walk(const TorusSpec& spec, CoinSpec coin,
                              std::string coin_name);

// All registered claim IDs, sorted.
std::vector<std::string> registered_claims();
// Resolves aliases ("2.1" -> "2.1-series", "5.4" -> "5.4-finite") and rejects
// unknown IDs.
std::string canonical_claim_id(const std::string& id);
// The claims a given context runs when no explicit filter is passed.
std::vector<std::string> default_claims(const ClaimContext& ctx);

ClaimReport check_claim(const std::string& id, const ClaimContext& ctx,
                        const ClaimConfig& cfg);
// Runs claims (possibly in parallel, capped by cfg.threads) and returns the
// reports sorted by claim ID.  Duplicate IDs are collapsed.
std::vector<ClaimReport> check_claims(const std::vector<std::string>& ids,
                                      const ClaimContext& ctx,
                                      const ClaimConfig& cfg);

bool all_hard_claims_pass(const std::vector<ClaimReport>& reports);

nlohmann::json claim_report_json(const ClaimReport& report);
nlohmann::json claim_reports_json(const std::vector<ClaimReport>& reports);

}  // namespace vfwalk
