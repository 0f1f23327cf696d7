#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vfwalk/embedding.hpp"
#include "vfwalk/graph.hpp"
#include "vfwalk/spectra.hpp"
#include "vfwalk/walk_matrices.hpp"

namespace vfwalk {

struct LoadedGraph {
  Graph graph;
  std::optional<EmbeddedGraph> embedding;
};

// Graph document: {"n": int, "edges": [[u, v], ...]} with an optional
// "rotation" key giving, per vertex, its neighbors in cyclic order; when
// present the faces are traced and an embedding attached.
LoadedGraph parse_graph_json(const nlohmann::json& doc);
LoadedGraph load_graph_json(const std::string& path);

// Coin document: a 2D array; entries are numbers or [re, im] pairs.
CoinSpec parse_coin_json(const nlohmann::json& doc);
CoinSpec load_coin_json(const std::string& path);

// JSON text with every floating-point leaf rendered by fmt17, so file output
// is byte-identical across runs and platforms.  Two-space indentation.
std::string dump_json_17g(const nlohmann::json& j, int indent = 2);

void write_text_file(const std::string& path, const std::string& text);

std::string matrix_csv(const Matrix& m);
nlohmann::json matrix_json(const Matrix& m);
nlohmann::json matrix_json(const ComplexMatrix& m);

// "re,im,multiplicity" rows under a header line.
std::string spectrum_csv(const Spectrum& s);
std::string eigenvalue_csv(const std::vector<Complex>& values);

nlohmann::json faces_json(const EmbeddedGraph& emb);

}  // namespace vfwalk
