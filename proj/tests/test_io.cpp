#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vfwalk/errors.hpp"
#include "vfwalk/graph.hpp"
#include "vfwalk/io.hpp"
#include "vfwalk/spectra.hpp"

using namespace vfwalk;

TEST_CASE("graph json round trip") {
  nlohmann::json doc = {{"n", 3}, {"edges", {{0, 1}, {1, 2}, {2, 0}}}};
  LoadedGraph lg = parse_graph_json(doc);
  CHECK(lg.graph.vertex_count() == 3);
  CHECK(lg.graph.edge_count() == 3);
  CHECK(!lg.embedding.has_value());

  doc["rotation"] = {{1, 2}, {2, 0}, {0, 1}};
  LoadedGraph emb = parse_graph_json(doc);
  REQUIRE(emb.embedding.has_value());
  CHECK(emb.embedding->face_count() == 2);
  CHECK(emb.embedding->genus() == 0);
}

TEST_CASE("graph json validation") {
  CHECK_THROWS_AS(parse_graph_json(nlohmann::json{{"edges", {{0, 1}}}}),
                  InvalidInput);
  CHECK_THROWS_AS(parse_graph_json(nlohmann::json{{"n", 2}}), InvalidInput);
  CHECK_THROWS_AS(
      parse_graph_json(nlohmann::json{{"n", 2}, {"edges", {{0, 0}}}}),
      InvalidInput);
  nlohmann::json bad_rot = {{"n", 3},
                            {"edges", {{0, 1}, {1, 2}, {2, 0}}},
                            {"rotation", {{1, 1}, {2, 0}, {0, 1}}}};
  CHECK_THROWS_AS(parse_graph_json(bad_rot), InvalidInput);
}

TEST_CASE("coin json accepts real and complex entries") {
  CoinSpec swap = parse_coin_json(nlohmann::json::parse("[[0,1],[1,0]]"));
  CHECK(swap.size() == 2);
  CHECK(swap.unitary);

  CoinSpec scaled = parse_coin_json(nlohmann::json::parse("[[2,0],[0,2]]"));
  CHECK(!scaled.unitary);

  nlohmann::json c = nlohmann::json::parse("[[0,[0,1]],[[0,1],0]]");
  CoinSpec spinor = parse_coin_json(c);
  CHECK(spinor.unitary);
  CHECK(spinor.entries(0, 1) == Complex(0, 1));

  nlohmann::json wrapped = {{"coin", {{1, 0}, {0, 1}}}};
  CHECK(parse_coin_json(wrapped).size() == 2);

  CHECK_THROWS_AS(parse_coin_json(nlohmann::json::parse("[[1,0]]")), InvalidInput);
  CHECK_THROWS_AS(parse_coin_json(nlohmann::json::parse("\"nope\"")), InvalidInput);
}

TEST_CASE("json dump pins float formatting") {
  nlohmann::json j = {{"x", 0.1}, {"list", {1.5, 2}}, {"name", "v"}};
  std::string out = dump_json_17g(j);
  CHECK(out.find("0.10000000000000001") != std::string::npos);
  CHECK(out.find("1.5") != std::string::npos);
  CHECK(out.back() == '\n');
  // the dump parses back to the same values
  nlohmann::json back = nlohmann::json::parse(out);
  CHECK(back["x"].get<double>() == 0.1);
  CHECK(back["list"][0].get<double>() == 1.5);
  CHECK(back["name"] == "v");

  nlohmann::json inf_doc = {{"bad", std::numeric_limits<double>::infinity()}};
  std::string inf_out = dump_json_17g(inf_doc);
  CHECK(inf_out.find("null") != std::string::npos);
}

TEST_CASE("dump is byte stable") {
  nlohmann::json j = {{"a", 0.30000000000000004}, {"b", {{"c", -1.25}}}};
  CHECK(dump_json_17g(j) == dump_json_17g(j));
}

TEST_CASE("matrix serialization") {
  Matrix m = Matrix::Identity(2, 2);
  CHECK(matrix_csv(m) == "1,0\n0,1\n");
  nlohmann::json mj = matrix_json(m);
  CHECK(mj.size() == 2);
  CHECK(mj[0][0].get<double>() == 1.0);

  ComplexMatrix c(1, 1);
  c(0, 0) = Complex(0.5, -2);
  nlohmann::json cj = matrix_json(c);
  CHECK(cj[0][0][0].get<double>() == 0.5);
  CHECK(cj[0][0][1].get<double>() == -2.0);
}

TEST_CASE("spectrum csv") {
  Spectrum s = Spectrum::cluster({Complex(1, 0), Complex(1, 0), Complex(0, -1)},
                                 1e-8);
  std::string csv = spectrum_csv(s);
  CHECK(csv.rfind("re,im,multiplicity\n", 0) == 0);
  CHECK(csv.find(",2\n") != std::string::npos);

  std::string plain = eigenvalue_csv({Complex(0.5, 0.25)});
  CHECK(plain.find("0.5,0.25,1\n") != std::string::npos);
}

TEST_CASE("file round trips and failures") {
  std::string path = "io_test_scratch.txt";
  write_text_file(path, "hello\n");
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "hello\n");
  std::remove(path.c_str());

  CHECK_THROWS_AS(write_text_file("no/such/dir/file.txt", "x"), InvalidInput);
  CHECK_THROWS_AS(load_graph_json("missing.json"), InvalidInput);
}

TEST_CASE("load graph from disk") {
  std::string path = "io_test_graph.json";
  write_text_file(path,
                  "{\"n\":4,\"edges\":[[0,1],[1,2],[2,3],[3,0]],"
                  "\"rotation\":[[1,3],[2,0],[3,1],[0,2]]}\n");
  LoadedGraph lg = load_graph_json(path);
  CHECK(lg.graph.vertex_count() == 4);
  REQUIRE(lg.embedding.has_value());
  CHECK(lg.embedding->face_count() == 2);
  std::remove(path.c_str());
}

TEST_CASE("faces json") {
  nlohmann::json fj = faces_json(torus_embedding(3));
  CHECK(fj["face_count"].get<int>() == 9);
  CHECK(fj["genus"].get<int>() == 1);
  REQUIRE(fj["faces"].is_array());
  CHECK(fj["faces"].size() == 9);
}
