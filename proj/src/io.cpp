#include "vfwalk/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "vfwalk/errors.hpp"
#include "vfwalk/util.hpp"

namespace vfwalk {
namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("invalid JSON in " + path + ": " + e.what());
  }
}

Complex parse_scalar(const nlohmann::json& v, const char* what) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw InvalidInput(std::string(what) +
                     " entries must be numbers or [re, im] pairs");
}

void dump_rec(const nlohmann::json& j, int indent, int depth,
              std::string& out) {
  const std::string pad(static_cast<size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + nlohmann::json(it.key()).dump() + ": ";
        dump_rec(it.value(), indent, depth + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad_in;
        dump_rec(j[i], indent, depth + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      double x = j.get<double>();
      out += std::isfinite(x) ? fmt17(x) : "null";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

LoadedGraph parse_graph_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw InvalidInput("graph document needs \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer())
    throw InvalidInput("graph \"n\" must be an integer");
  int n = doc["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw InvalidInput("graph edges must be [u, v] integer pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  LoadedGraph out{Graph::from_edges(n, edges), std::nullopt};
  if (doc.contains("rotation")) {
    std::vector<std::vector<int>> neighbor_order;
    for (const auto& ring : doc["rotation"]) {
      std::vector<int> order;
      for (const auto& v : ring) {
        if (!v.is_number_integer())
          throw InvalidInput("rotation entries must be vertex indices");
        order.push_back(v.get<int>());
      }
      neighbor_order.push_back(std::move(order));
    }
    RotationSystem rot =
        rotation_from_neighbor_lists(out.graph, neighbor_order);
    out.embedding = trace_faces(out.graph, rot);
  }
  return out;
}

LoadedGraph load_graph_json(const std::string& path) {
  return parse_graph_json(parse_file(path));
}

CoinSpec parse_coin_json(const nlohmann::json& doc) {
  const nlohmann::json& rows =
      doc.is_object() && doc.contains("coin") ? doc["coin"] : doc;
  if (!rows.is_array() || rows.empty())
    throw InvalidInput("coin document must be a non-empty 2D array");
  const size_t n = rows.size();
  ComplexMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw InvalidInput("coin matrix must be square");
    for (size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_scalar(rows[i][j], "coin");
  }
  return CoinSpec::from_matrix(std::move(m));
}

CoinSpec load_coin_json(const std::string& path) {
  return parse_coin_json(parse_file(path));
}

std::string dump_json_17g(const nlohmann::json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  out += "\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << text;
  if (!out) throw InvalidInput("short write to " + path);
}

std::string matrix_csv(const Matrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << (j ? "," : "") << fmt17(m(i, j));
    os << "\n";
  }
  return os.str();
}

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json matrix_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(nlohmann::json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream os;
  os << "re,im,multiplicity\n";
  for (const Spectrum::Entry& e : s.entries)
    os << fmt17(e.value.real()) << "," << fmt17(e.value.imag()) << ","
       << e.multiplicity << "\n";
  return os.str();
}

std::string eigenvalue_csv(const std::vector<Complex>& values) {
  std::ostringstream os;
  os << "re,im,multiplicity\n";
  for (Complex v : values)
    os << fmt17(v.real()) << "," << fmt17(v.imag()) << ",1\n";
  return os.str();
}

nlohmann::json faces_json(const EmbeddedGraph& emb) {
  nlohmann::json j;
  j["face_count"] = emb.face_count();
  j["genus"] = emb.genus();
  nlohmann::json faces = nlohmann::json::array();
  for (int f = 0; f < emb.face_count(); ++f)
    faces.push_back(emb.face_vertices(f));
  j["faces"] = faces;
  return j;
}

}  // namespace vfwalk
