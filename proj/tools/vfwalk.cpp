#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vfwalk/claims.hpp"
#include "vfwalk/errors.hpp"
#include "vfwalk/io.hpp"
#include "vfwalk/spectra.hpp"
#include "vfwalk/util.hpp"
#include "vfwalk/zeta.hpp"

namespace {

using namespace vfwalk;

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInput("empty value for u");
  auto to_double = [](const std::string& t) {
    if (t == "+" || t.empty()) return 1.0;
    if (t == "-") return -1.0;
    size_t used = 0;
    double v;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse number '" + t + "'");
    }
    if (used != t.size()) throw InvalidInput("cannot parse number '" + t + "'");
    return v;
  };
  // split at the last +/- that is not an exponent sign and not leading
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
      split = i;
  }
  bool has_i = s.back() == 'i' || s.back() == 'j';
  if (!has_i) {
    if (split != std::string::npos)
      throw InvalidInput("imaginary part of '" + raw + "' must end in i");
    return Complex(to_double(s), 0.0);
  }
  std::string body = s.substr(0, s.size() - 1);
  if (split == std::string::npos) return Complex(0.0, to_double(body));
  return Complex(to_double(body.substr(0, split)),
                 to_double(body.substr(split)));
}

struct SourceOpts {
  std::string family;
  std::string graph_path;
  std::string coin;
  int n = 0;
  int side = 0;
  int dimension = 2;
  std::uint64_t seed = 0xA11CE;
};

void add_source_flags(CLI::App* cmd, SourceOpts& o) {
  cmd->add_option("--family", o.family,
                  "builtin family: cycle | complete | torus | torus-embedded");
  cmd->add_option("--n", o.n, "vertex count for cycle/complete");
  cmd->add_option("--N", o.side, "torus side length");
  cmd->add_option("--d", o.dimension, "torus dimension (default 2)");
  cmd->add_option("--graph", o.graph_path, "graph JSON file");
  cmd->add_option("--coin", o.coin,
                  "coin: grover | identity | grover-reversal | random-unitary "
                  "| <json file>");
  cmd->add_option("--seed", o.seed, "seed for u samples / random coins");
}

std::pair<CoinSpec, std::string> resolve_coin(const std::string& name, int size,
                                              std::uint64_t seed) {
  if (name == "identity") return {CoinSpec::identity(size), name};
  if (name == "grover") return {CoinSpec::grover(size), name};
  if (name == "grover-reversal")
    return {CoinSpec::grover_reversal(size / 2), name};
  if (name == "random-unitary") return {CoinSpec::random_unitary(size, seed), name};
  CoinSpec coin = load_coin_json(name);
  if (coin.size() != size) {
    std::ostringstream os;
    os << "coin file is " << coin.size() << "x" << coin.size()
       << " but the walk needs 2d = " << size;
    throw InvalidInput(os.str());
  }
  return {coin, name};
}

ClaimContext resolve_context(const SourceOpts& o) {
  ClaimContext ctx;
  int sources = (!o.family.empty() ? 1 : 0) + (!o.graph_path.empty() ? 1 : 0);
  if (sources > 1) throw InvalidInput("pick exactly one of --family / --graph");
  if (!o.graph_path.empty()) {
    LoadedGraph loaded = load_graph_json(o.graph_path);
    ctx.graph = loaded.graph;
    ctx.embedding = loaded.embedding;
    ctx.source_name = o.graph_path;
    ctx.vertex_transitive = false;
  } else if (o.family == "cycle") {
    if (o.n < 3) throw InvalidInput("cycle needs --n >= 3");
    std::ostringstream name;
    name << "cycle(" << o.n << ")";
    ctx = context_for_graph(cycle_graph(o.n), name.str(), true);
  } else if (o.family == "complete") {
    if (o.n < 2) throw InvalidInput("complete needs --n >= 2");
    std::ostringstream name;
    name << "complete(" << o.n << ")";
    ctx = context_for_graph(complete_graph(o.n), name.str(), true);
  } else if (o.family == "torus") {
    TorusSpec spec{o.dimension, o.side > 0 ? o.side : 3};
    ctx = context_for_torus(spec);
  } else if (o.family == "torus-embedded") {
    if (o.dimension != 2)
      throw InvalidInput("torus-embedded is two-dimensional; drop --d");
    ctx = context_for_torus_embedded(o.side > 0 ? o.side : 3);
  } else if (!o.family.empty()) {
    throw InvalidInput("unknown family '" + o.family +
                       "' (cycle | complete | torus | torus-embedded)");
  } else if (!o.coin.empty()) {
    // pure walk source: --d / --N / --coin without a family
    TorusSpec spec{o.dimension, o.side > 0 ? o.side : 3};
    auto [coin, name] = resolve_coin(o.coin, spec.coin_size(), o.seed);
    ctx = context_for_walk(spec, std::move(coin), name);
    return ctx;
  } else {
    throw InvalidInput("pick a graph source: --family, --graph, or --coin");
  }
  if (!o.coin.empty()) {
    TorusSpec spec = ctx.torus ? *ctx.torus
                               : TorusSpec{o.dimension, o.side > 0 ? o.side : 3};
    auto [coin, name] = resolve_coin(o.coin, spec.coin_size(), o.seed);
    ctx.torus = spec;
    ctx.coin = std::move(coin);
    ctx.coin_name = name;
  }
  return ctx;
}

std::vector<Complex> resolve_u_samples(const std::vector<std::string>& raw,
                                       std::uint64_t seed) {
  std::vector<Complex> out;
  if (!raw.empty()) {
    for (const std::string& s : raw) out.push_back(parse_complex(s));
    return out;
  }
  out = {Complex(0.1), Complex(0.2), Complex(0.3)};
  for (Complex u : sample_u_disk(seed, 20)) out.push_back(u);
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
    std::cerr << "wrote " << out_path << "\n";
  }
}

nlohmann::json complex_json(Complex z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

// ---- check ------------------------------------------------------------------

int run_check(const SourceOpts& src, const std::string& claims_csv, double tol,
              int grid, const std::string& out_path) {
  ClaimContext ctx = resolve_context(src);
  ClaimConfig cfg;
  cfg.seed = src.seed;
  if (tol > 0) cfg.tol_hard = tol;
  if (grid > 0) cfg.grid_max = grid;
  std::vector<std::string> ids;
  if (claims_csv.empty()) {
    ids = default_claims(ctx);
  } else {
    std::stringstream ss(claims_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) ids.push_back(item);
    }
    if (ids.empty()) throw InvalidInput("--claims is empty");
  }
  std::vector<ClaimReport> reports = check_claims(ids, ctx, cfg);
  for (const ClaimReport& r : reports)
    std::cerr << r.claim << ": " << r.verdict
              << " (max residual " << fmt17(r.max_residual) << ")\n";
  emit(out_path, dump_json_17g(claim_reports_json(reports)));
  return all_hard_claims_pass(reports) ? 0 : 1;
}

// ---- zeta -------------------------------------------------------------------

nlohmann::json route_json(Complex log_value, double site_divisor) {
  nlohmann::json j;
  j["log"] = complex_json(log_value);
  Complex per_site = log_value / site_divisor;
  j["log_per_site"] = complex_json(per_site);
  j["value_per_site"] = complex_json(std::exp(per_site));
  return j;
}

int run_zeta(const SourceOpts& src, const std::string& model,
             const std::vector<std::string>& u_raw, int grid, int order,
             int x0, const std::string& out_path) {
  nlohmann::json doc;
  doc["model"] = model;
  std::vector<Complex> us = resolve_u_samples(u_raw, src.seed);

  if (model == "generalized") {
    ClaimContext ctx = resolve_context(src);
    const Graph& g = ctx.graph ? *ctx.graph : ctx.embedding->graph();
    doc["source"] = ctx.source_name;
    doc["x0"] = x0;
    nlohmann::json flavors = nlohmann::json::array();
    for (auto [flavor, tag] :
         {std::pair{GeneralizedFlavor::ihara, "ihara"},
          std::pair{GeneralizedFlavor::grover, "grover"}}) {
      SeriesComparison cmp = generalized_zeta_series(g, x0, flavor, order);
      nlohmann::json f;
      f["flavor"] = tag;
      f["route_oracle"] = cmp.oracle;
      f["route_determinant"] = cmp.determinant;
      f["residuals"] = cmp.residuals;
      flavors.push_back(f);
    }
    doc["series"] = flavors;
    emit(out_path, dump_json_17g(doc));
    return 0;
  }

  nlohmann::json rows = nlohmann::json::array();
  if (model == "walk") {
    SourceOpts walk_src = src;
    if (walk_src.coin.empty()) walk_src.coin = "grover";
    ClaimContext ctx = resolve_context(walk_src);
    if (!ctx.torus || !ctx.coin)
      throw InvalidInput("walk model needs --d/--N and --coin");
    doc["source"] = ctx.source_name;
    const double sites = std::pow(static_cast<double>(ctx.torus->side),
                                  ctx.torus->dimension);
    for (Complex u : us) {
      WalkZetaLogs logs =
          walk_zeta_logs(*ctx.torus, *ctx.coin, u, grid > 0 ? grid : 64);
      nlohmann::json row;
      row["u"] = complex_json(u);
      row["routes"]["determinant"] = route_json(logs.determinant, sites);
      row["routes"]["fourier-product"] = route_json(logs.fourier_product, sites);
      row["routes"]["limit-integral"] = route_json(logs.limit_integral * sites, sites);
      row["residuals"]["determinant-vs-fourier"] =
          log_relative_residual(logs.determinant, logs.fourier_product);
      row["residuals"]["fourier-vs-limit-per-site"] =
          std::abs(logs.fourier_product / sites - logs.limit_integral);
      rows.push_back(row);
    }
  } else if (model == "vertex-face") {
    ClaimContext ctx = resolve_context(src);
    if (!ctx.embedding)
      throw InvalidInput("vertex-face model needs an embedded source "
                         "(torus-embedded family or a graph file with rotation)");
    const EmbeddedGraph& emb = *ctx.embedding;
    doc["source"] = ctx.source_name;
    const double sites = emb.graph().vertex_count();
    bool has_cos = ctx.torus && ctx.torus->dimension == 2;
    for (Complex u : us) {
      nlohmann::json row;
      row["u"] = complex_json(u);
      Complex det_log = vf_logdet(emb, u);
      Complex fact_log = vf_factorization_log(emb, u);
      row["routes"]["determinant"] = route_json(det_log, sites);
      row["routes"]["factorization-4.1"] = route_json(fact_log, sites);
      row["residuals"]["determinant-vs-factorization-4.1"] =
          log_relative_residual(det_log, fact_log);
      if (has_cos) {
        Complex cos_log = vf_cos_product_log(ctx.torus->side, u);
        row["routes"]["closed-form-5.4"] = route_json(cos_log, sites);
        row["residuals"]["determinant-vs-closed-form-5.4"] =
            log_relative_residual(det_log, cos_log);
        row["residuals"]["factorization-4.1-vs-closed-form-5.4"] =
            log_relative_residual(fact_log, cos_log);
      }
      rows.push_back(row);
    }
  } else if (model == "ihara" || model == "positive-support" ||
             model == "grover") {
    ClaimContext ctx = resolve_context(src);
    const Graph& g = ctx.graph ? *ctx.graph : ctx.embedding->graph();
    doc["source"] = ctx.source_name;
    int min_degree = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
      min_degree = std::min(min_degree, g.degree(v));
    for (Complex u : us) {
      nlohmann::json row;
      row["u"] = complex_json(u);
      if (model == "grover") {
        GroverZetaLogs logs = grover_zeta_logs(g, u);
        row["routes"]["determinant"] = route_json(logs.determinant, 1.0);
        row["routes"]["closed-form"] = route_json(logs.closed_form, 1.0);
        row["residuals"]["determinant-vs-closed-form"] =
            log_relative_residual(logs.determinant, logs.closed_form);
      } else {
        Complex bass = ihara_bass_log(g, u);
        row["routes"]["ihara-bass"] = route_json(bass, 1.0);
        if (min_degree >= 2) {
          Complex ps = positive_support_zeta_log(g, u);
          row["routes"]["positive-support"] = route_json(ps, 1.0);
          row["residuals"]["ihara-bass-vs-positive-support"] =
              log_relative_residual(bass, ps);
        }
      }
      rows.push_back(row);
    }
  } else {
    throw InvalidInput("unknown model '" + model +
                       "' (ihara | grover | positive-support | generalized | "
                       "walk | vertex-face)");
  }
  doc["rows"] = rows;
  emit(out_path, dump_json_17g(doc));
  return 0;
}

// ---- spectra ------------------------------------------------------------------

int run_spectra(const SourceOpts& src, std::string model, bool cluster,
                double tol, const std::string& out_path) {
  ClaimContext ctx = resolve_context(src);
  if (model.empty()) {
    if (ctx.embedding) model = "vertex-face";
    else if (ctx.coin) model = "walk";
    else model = "grover";
  }
  std::vector<Complex> values;
  if (model == "vertex-face") {
    if (!ctx.embedding)
      throw InvalidInput("vertex-face spectra need an embedded source");
    values = eigenvalue_list(vertex_face_transition(*ctx.embedding));
  } else if (model == "predicted") {
    if (!ctx.embedding)
      throw InvalidInput("predicted spectra need an embedded source");
    emit(out_path, spectrum_csv(vf_spectrum_via_overlap(*ctx.embedding).spectrum));
    return 0;
  } else if (model == "overlap") {
    if (!ctx.embedding)
      throw InvalidInput("overlap spectra need an embedded source");
    values = eigenvalue_list(face_overlap_matrix(*ctx.embedding).incidence);
  } else if (model == "walk") {
    if (!ctx.torus || !ctx.coin)
      throw InvalidInput("walk spectra need --d/--N and --coin");
    values = eigenvalue_list(coin_walk_matrix(*ctx.torus, *ctx.coin));
  } else if (model == "grover" || model == "adjacency") {
    const Graph& g = ctx.graph ? *ctx.graph : ctx.embedding->graph();
    values = eigenvalue_list(model == "grover" ? grover_matrix(g)
                                               : adjacency_matrix(g));
  } else {
    throw InvalidInput("unknown spectra model '" + model +
                       "' (vertex-face | predicted | overlap | walk | grover | "
                       "adjacency)");
  }
  if (cluster) {
    emit(out_path, spectrum_csv(Spectrum::cluster(values, tol > 0 ? tol : 1e-8)));
  } else {
    std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    emit(out_path, eigenvalue_csv(values));
  }
  return 0;
}

// ---- limit --------------------------------------------------------------------

int run_limit(const SourceOpts& src, const std::string& kind,
              const std::vector<std::string>& u_raw, int grid,
              const std::string& out_path) {
  std::vector<double> us;
  if (u_raw.empty()) {
    us = {0.1, 0.2, 0.3};
  } else {
    for (const std::string& s : u_raw) {
      Complex u = parse_complex(s);
      if (u.imag() != 0.0)
        throw InvalidInput("limit integrals need real u");
      us.push_back(u.real());
    }
  }
  const int grid_max = grid > 0 ? grid : 128;
  std::ostringstream csv;
  csv << "u,grid,value_re,value_im,gap\n";
  auto value_at = [&](double u, int g) -> Complex {
    if (kind == "grover")
      return Complex(torus_limit_integral_log(LimitKind::grover, src.dimension, u, g));
    if (kind == "ihara")
      return Complex(torus_limit_integral_log(LimitKind::ihara, src.dimension, u, g));
    if (kind == "vertex-face")
      return Complex(torus_limit_integral_log(LimitKind::vertex_face, 2, u, g));
    if (kind == "walk") {
      auto [coin, name] = resolve_coin(src.coin.empty() ? "grover" : src.coin,
                                       2 * src.dimension, src.seed);
      return walk_limit_integral_log(coin, src.dimension, Complex(u), g);
    }
    throw InvalidInput("unknown limit kind '" + kind +
                       "' (grover | ihara | vertex-face | walk)");
  };
  for (double u : us) {
    Complex prev = 0.0;
    bool have_prev = false;
    for (int g = 8; g <= grid_max; g *= 2) {
      Complex v = value_at(u, g);
      csv << fmt17(u) << "," << g << "," << fmt17(v.real()) << ","
          << fmt17(v.imag()) << ",";
      csv << (have_prev ? fmt17(std::abs(v - prev)) : std::string("")) << "\n";
      prev = v;
      have_prev = true;
    }
  }
  emit(out_path, csv.str());
  return 0;
}

// ---- build --------------------------------------------------------------------

int run_build(const SourceOpts& src, const std::string& prefix) {
  ClaimContext ctx = resolve_context(src);
  std::vector<std::string> written;
  auto save = [&](const std::string& suffix, const std::string& text) {
    std::string path = prefix + suffix;
    write_text_file(path, text);
    written.push_back(path);
  };
  if (ctx.graph || ctx.embedding) {
    const Graph& g = ctx.graph ? *ctx.graph : ctx.embedding->graph();
    nlohmann::json gj;
    gj["n"] = g.vertex_count();
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges())
      edges.push_back(nlohmann::json::array({a, b}));
    gj["edges"] = edges;
    gj["source"] = ctx.source_name;
    save("-graph.json", dump_json_17g(gj));
    save("-adjacency.csv", matrix_csv(adjacency_matrix(g)));
    save("-grover.csv", matrix_csv(grover_matrix(g)));
  }
  if (ctx.embedding) {
    const EmbeddedGraph& emb = *ctx.embedding;
    save("-faces.json", dump_json_17g(faces_json(emb)));
    save("-vertex-face.csv", matrix_csv(vertex_face_transition(emb)));
    FaceOverlap overlap = face_overlap_matrix(emb);
    save("-overlap.csv", matrix_csv(overlap.incidence));
    save("-overlap-direct.csv", matrix_csv(overlap.direct));
  }
  if (ctx.coin && ctx.torus) {
    nlohmann::json wj;
    wj["dimension"] = ctx.torus->dimension;
    wj["side"] = ctx.torus->side;
    wj["coin"] = ctx.coin_name;
    wj["matrix"] = matrix_json(coin_walk_matrix(*ctx.torus, *ctx.coin));
    save("-walk.json", dump_json_17g(wj));
  }
  for (const std::string& p : written) std::cerr << "wrote " << p << "\n";
  if (written.empty()) throw InvalidInput("nothing to build for this source");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-face quantum walk zeta toolkit"};
  app.require_subcommand(1);

  int rc = 0;

  // check
  SourceOpts check_src;
  std::string check_claims_csv, check_out;
  double check_tol = 0.0;
  int check_grid = 0;
  CLI::App* check = app.add_subcommand(
      "check", "run claim checks and write a merged report");
  add_source_flags(check, check_src);
  check->add_option("--claims", check_claims_csv,
                    "comma-separated claim IDs (default: all applicable)");
  check->add_option("--tol", check_tol, "override the hard tolerance");
  check->add_option("--grid", check_grid, "max quadrature grid per axis");
  check->add_option("--out", check_out, "report path (default: stdout)");
  check->callback([&]() {
    rc = run_check(check_src, check_claims_csv, check_tol, check_grid,
                   check_out);
  });

  // zeta
  SourceOpts zeta_src;
  std::string zeta_model = "grover", zeta_out;
  std::vector<std::string> zeta_u;
  int zeta_grid = 0, zeta_order = 6, zeta_x0 = 0;
  CLI::App* zeta = app.add_subcommand(
      "zeta", "evaluate a reciprocal zeta by every available route");
  add_source_flags(zeta, zeta_src);
  zeta->add_option("--model", zeta_model,
                   "ihara | grover | positive-support | generalized | walk | "
                   "vertex-face");
  zeta->add_option("--u", zeta_u,
                   "evaluation points, e.g. 0.3 or 0.1+0.2i (repeatable)");
  zeta->add_option("--grid", zeta_grid, "grid for the walk limit route");
  zeta->add_option("--order", zeta_order, "series order for generalized");
  zeta->add_option("--x0", zeta_x0, "root vertex for generalized");
  zeta->add_option("--out", zeta_out, "output path (default: stdout)");
  zeta->callback([&]() {
    rc = run_zeta(zeta_src, zeta_model, zeta_u, zeta_grid, zeta_order, zeta_x0,
                  zeta_out);
  });

  // spectra
  SourceOpts spec_src;
  std::string spec_model, spec_out;
  bool spec_cluster = false;
  double spec_tol = 0.0;
  CLI::App* spectra =
      app.add_subcommand("spectra", "export eigenvalues as CSV");
  add_source_flags(spectra, spec_src);
  spectra->add_option("--model", spec_model,
                      "vertex-face | predicted | overlap | walk | grover | "
                      "adjacency");
  spectra->add_flag("--cluster", spec_cluster,
                    "merge eigenvalues into multiplicity clusters");
  spectra->add_option("--tol", spec_tol, "clustering tolerance");
  spectra->add_option("--out", spec_out, "output path (default: stdout)");
  spectra->callback([&]() {
    rc = run_spectra(spec_src, spec_model, spec_cluster, spec_tol, spec_out);
  });

  // limit
  SourceOpts limit_src;
  std::string limit_kind = "grover", limit_out;
  std::vector<std::string> limit_u;
  int limit_grid = 0;
  CLI::App* limit = app.add_subcommand(
      "limit", "doubling-grid convergence trace of a limit integral");
  add_source_flags(limit, limit_src);
  limit->add_option("--kind", limit_kind,
                    "grover | ihara | vertex-face | walk");
  limit->add_option("--u", limit_u, "real evaluation points (repeatable)");
  limit->add_option("--grid", limit_grid, "max grid per axis (default 128)");
  limit->add_option("--out", limit_out, "output path (default: stdout)");
  limit->callback([&]() {
    rc = run_limit(limit_src, limit_kind, limit_u, limit_grid, limit_out);
  });

  // build
  SourceOpts build_src;
  std::string build_prefix = "artifact";
  CLI::App* build = app.add_subcommand(
      "build", "construct and export the matrices for a source");
  add_source_flags(build, build_src);
  build->add_option("--out", build_prefix, "output path prefix");
  build->callback([&]() { rc = run_build(build_src, build_prefix); });

  try {
    app.parse(argc, argv);
    return rc;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
