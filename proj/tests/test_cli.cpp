#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "tiso/cli.hpp"
#include "tiso/io.hpp"

using namespace tiso;
using namespace testing;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("graph JSON roundtrip") {
    for (auto mode : {GraphMode::kHasse, GraphMode::kCayley}) {
      const auto g = build_graph(RectShape(2, 3), 0, 6, mode).value();
      const Json j = graph_to_json(g);
      const Json again = Json::parse(j.dump());
      CHECK(again == j);
      const auto back = graph_from_json(again).value();
      CHECK(back.vertices == g.vertices);
      CHECK(back.edges == g.edges);
      CHECK(back.mode == g.mode);
      CHECK(graph_to_json(back) == j);
    }
    const Json j = graph_to_json(build_graph(RectShape(2, 3), 0, 0, GraphMode::kHasse).value());
    CHECK(j["n"] == 2);
    CHECK(j["classes"].size() == 2);
    CHECK(j["classes"][0]["reps"].size() == 5);
  }

  TEST_CASE("borel JSON roundtrip") {
    const RectShape s(3, 4);
    BorelAtlas atlas(s);
    for (const AnchoredPair& p : {AnchoredPair{D({4, 1, 1}), 0}, AnchoredPair{D({0, 0, 0}), 7},
                                  AnchoredPair{D({2, 1, 0}), -5}}) {
      const FiniteBorel b = atlas.borel_of_pair(p).value();
      const Json j = borel_to_json(s, b);
      CHECK(Json::parse(j.dump()) == j);
      CHECK(borel_from_json(s, j).value() == b);
    }
    const Json j = borel_to_json(s, atlas.borel_of_pair({D({4, 1, 1}), 0}).value());
    CHECK(j["nodes"][0]["root"] == "dbar - d1 + e3");
    CHECK(j["nodes"][0]["grey"] == true);
    CHECK(j["deleted"] == 0);
    CHECK(j["local"]["partition"] == Json::array({4, 1, 1}));
    Json bad = j;
    bad["nodes"][2]["grey"] = true;
    CHECK(borel_from_json(s, bad).code() == Errc::kInconsistent);
  }

  TEST_CASE("dot output") {
    const auto g = build_graph(RectShape(2, 3), 0, 6, GraphMode::kHasse).value();
    const std::string dot = graph_to_dot(g);
    std::size_t nodes = 0;
    std::size_t ranks = 0;
    for (std::size_t at = dot.find("[label=\"("); at != std::string::npos;
         at = dot.find("[label=\"(", at + 1)) {
      ++nodes;
    }
    for (std::size_t at = dot.find("rank=same"); at != std::string::npos;
         at = dot.find("rank=same", at + 1)) {
      ++ranks;
    }
    CHECK(nodes == 14);
    CHECK(ranks == 7);
    CHECK(has(dot, "\"3,2@-1\" [label=\"(3,2)^-1\"]"));
  }
}

TEST_SUITE("cli") {
  TEST_CASE("convert") {
    const Run r = run({"convert", "--n", "2", "--m", "3", "--partition", "3,1"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "word rdrrd"));
    CHECK(has(r.out, "shuffle 1',1,2',3',2"));
    CHECK(has(r.out, "dual 2,1,1"));
    const Run w = run({"convert", "--n", "2", "--m", "3", "--word", "rdrrd", "--format", "json"});
    CHECK(w.status == 0);
    CHECK(Json::parse(w.out)["partition"] == Json::array({3, 1}));
  }

  TEST_CASE("act") {
    const Run r = run({"act", "--n", "2", "--m", "3", "--partition", "3,1", "--k", "0", "--root",
                       "+e2-d1"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "(1,1)^3"));
    const Run plain = run({"act", "--n", "2", "--m", "3", "--shuffle", "1',1,2',3',2", "--root",
                           "+e1-d2", "--plain"});
    CHECK(plain.status == 0);
    CHECK(plain.out == "1',2',1,3',2\n");
    const Run undefined = run({"act", "--n", "2", "--m", "3", "--partition", "0,0", "--root",
                               "+e1-d1", "--plain"});
    CHECK(undefined.status == 1);
    CHECK(has(undefined.err, "NotACorner"));
  }

  TEST_CASE("graph") {
    const Run r = run({"graph", "--n", "2", "--m", "3", "--deg", "0:6", "--mode", "hasse",
                       "--format", "dot"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "digraph"));
    const Run j = run({"graph", "--n", "2", "--m", "3", "--deg", "0:6", "--format", "json"});
    CHECK(Json::parse(j.out)["classes"].size() == 14);
    const Run nc = run({"graph", "--n", "2", "--m", "4", "--deg", "0:2"});
    CHECK(nc.status == 1);
    CHECK(has(nc.err, "NonCoprimeShape"));
  }

  TEST_CASE("borel") {
    const Run r = run({"borel", "--n", "2", "--m", "3", "--greys", "0,2"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "w0 ddrrr"));
    CHECK(has(r.out, "w4 rddrr"));
    const Run b = run({"borel", "--n", "3", "--m", "4", "--partition", "0", "--k", "7", "--format",
                       "json"});
    CHECK(b.status == 0);
    CHECK(Json::parse(b.out)["nodes"][6]["root"] == "dbar - d1 + d4");
    const Run sq = run({"borel", "--n", "2", "--m", "2", "--partition", "1"});
    CHECK(sq.status == 1);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).status == 2);
    CHECK(run({"convert", "--n", "2"}).status == 2);
    CHECK(run({"convert", "--n", "2", "--m", "3"}).status == 2);
    const Run two = run({"convert", "--n", "2", "--m", "3", "--partition", "1", "--word", "ddrrr"});
    CHECK(two.status == 2);
    CHECK(has(two.err, "exactly one"));
    const Run dot = run({"class", "--n", "2", "--m", "3", "--partition", "1", "--format", "dot"});
    CHECK(dot.status == 2);
    CHECK(has(dot.err, "--format"));
    const Run bad = run({"convert", "--n", "2", "--m", "3", "--partition", "4"});
    CHECK(bad.status == 2);
    CHECK(has(bad.err, "--partition"));
    CHECK(run({"convert", "--n", "0", "--m", "3", "--partition", "0"}).status == 2);
    CHECK(run({"act", "--n", "2", "--m", "3", "--partition", "1", "--root", "x"}).status == 2);
  }

  TEST_CASE("verify") {
    const Run r = run({"verify", "--n", "2", "--m", "3"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "0 failed"));
    const Run j = run({"verify", "--n", "3", "--m", "4", "--deg", "0:4", "--format", "json"});
    CHECK(j.status == 0);
    CHECK(Json::parse(j.out)["ok"] == true);
  }
}
