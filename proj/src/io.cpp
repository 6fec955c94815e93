#include "tiso/io.hpp"

#include <map>
#include <sstream>

namespace tiso {

namespace {

Result<Diagram> diagram_from_json(const RectShape& shape, const Json& json) {
  if (!json.is_array()) return make_error(Errc::kInvalidInput, "partition must be an array");
  Diagram lambda;
  for (const Json& part : json) {
    if (!part.is_number_integer()) return make_error(Errc::kInvalidInput, "partition entries must be integers");
    lambda.parts.push_back(part.get<int>());
  }
  if (!is_valid(shape, lambda)) {
    return make_error(Errc::kInvalidInput, "partition does not fit " + to_string(shape));
  }
  return lambda;
}

Result<AnchoredPair> pair_from_json(const RectShape& shape, const Json& json) {
  if (!json.is_object() || !json.contains("partition") || !json.contains("k") ||
      !json["k"].is_number_integer()) {
    return make_error(Errc::kInvalidInput, "pair needs \"partition\" and integer \"k\"");
  }
  auto lambda = diagram_from_json(shape, json["partition"]);
  if (!lambda) return lambda.error();
  return AnchoredPair{*lambda, json["k"].get<std::int64_t>()};
}

Result<AnchoredPair> pair_from_name(const RectShape& shape, const std::string& name) {
  const auto at = name.find('@');
  if (at == std::string::npos) return make_error(Errc::kInvalidInput, "bad node id '" + name + "'");
  auto lambda = parse_partition(shape, name.substr(0, at));
  if (!lambda) return lambda.error();
  try {
    return AnchoredPair{*lambda, std::stoll(name.substr(at + 1))};
  } catch (const std::exception&) {
    return make_error(Errc::kInvalidInput, "bad node id '" + name + "'");
  }
}

}  // namespace

Json pair_to_json(const RectShape& shape, const AnchoredPair& pair) {
  return Json{{"partition", pair.element.parts},
              {"word", word_of_diagram(shape, pair.element).letters},
              {"k", pair.k}};
}

Json class_to_json(const RectShape& shape, const OrbitClass& cls) {
  // Rotation order, starting at the canonical rep.
  Json reps = Json::array();
  const auto& all = cls.reps();
  for (std::size_t i = 0; i < all.size(); ++i) {
    reps.push_back(pair_to_json(shape, all[(cls.canonical_index() + i) % all.size()]));
  }
  return Json{{"degree", cls.degree()},
              {"canonical", {{"partition", cls.canonical().element.parts}, {"k", cls.canonical().k}}},
              {"reps", reps}};
}

Result<OrbitClass> class_from_json(const RectShape& shape, const Json& json) {
  if (!json.is_object() || !json.contains("canonical")) {
    return make_error(Errc::kInvalidInput, "class needs \"canonical\"");
  }
  const auto canonical = pair_from_json(shape, json["canonical"]);
  if (!canonical) return canonical.error();
  auto cls = enumerate_class(shape, *canonical);
  if (!cls) return cls;
  if (!(cls->canonical() == *canonical)) {
    return make_error(Errc::kInconsistent, display_name(*canonical) + " is not canonical");
  }
  if (json.contains("reps")) {
    for (const Json& rep : json["reps"]) {
      const auto pair = pair_from_json(shape, rep);
      if (!pair) return pair.error();
      if (!cls->contains(*pair)) {
        return make_error(Errc::kInconsistent, display_name(*pair) + " is not in the class");
      }
    }
  }
  return cls;
}

Json graph_to_json(const MorphismGraph& graph) {
  Json classes = Json::array();
  for (const OrbitClass& cls : graph.vertices) classes.push_back(class_to_json(graph.shape, cls));
  Json edges = Json::array();
  for (const GraphEdge& e : graph.edges) {
    edges.push_back(Json{{"src", node_name(graph.vertices[e.source].canonical())},
                         {"dst", node_name(graph.vertices[e.target].canonical())},
                         {"root", to_string(e.label)}});
  }
  return Json{{"n", graph.shape.n()},
              {"m", graph.shape.m()},
              {"mode", to_string(graph.mode)},
              {"window", {graph.lo, graph.hi}},
              {"classes", classes},
              {"edges", edges}};
}

Result<MorphismGraph> graph_from_json(const Json& json) {
  try {
    const RectShape shape(json.at("n").get<int>(), json.at("m").get<int>());
    const std::string mode = json.at("mode").get<std::string>();
    if (mode != "hasse" && mode != "cayley") {
      return make_error(Errc::kInvalidInput, "unknown mode '" + mode + "'");
    }
    MorphismGraph graph{shape, mode == "hasse" ? GraphMode::kHasse : GraphMode::kCayley,
                        json.at("window").at(0).get<std::int64_t>(),
                        json.at("window").at(1).get<std::int64_t>(), {}, {}};
    std::map<AnchoredPair, std::size_t> index;
    for (const Json& c : json.at("classes")) {
      auto cls = class_from_json(shape, c);
      if (!cls) return cls.error();
      index.emplace(cls->canonical(), graph.vertices.size());
      graph.vertices.push_back(std::move(cls).value());
    }
    for (const Json& e : json.at("edges")) {
      const auto src = pair_from_name(shape, e.at("src").get<std::string>());
      const auto dst = pair_from_name(shape, e.at("dst").get<std::string>());
      const auto root = parse_root(shape, e.at("root").get<std::string>());
      if (!src) return src.error();
      if (!dst) return dst.error();
      if (!root) return root.error();
      const auto s = index.find(*src);
      const auto t = index.find(*dst);
      if (s == index.end() || t == index.end()) {
        return make_error(Errc::kInconsistent, "edge end is not a listed class");
      }
      graph.edges.push_back(GraphEdge{s->second, t->second, *root});
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
  } catch (const std::invalid_argument& e) {
    return make_error(Errc::kInvalidInput, e.what());
  } catch (const Json::exception& e) {
    return make_error(Errc::kInvalidInput, e.what());
  }
}

std::string graph_to_dot(const MorphismGraph& graph) {
  std::ostringstream out;
  out << "digraph \"T_iso " << to_string(graph.shape) << ' ' << to_string(graph.mode) << "\" {\n";
  out << "  rankdir=" << (graph.mode == GraphMode::kHasse ? "LR" : "TB") << ";\n";
  out << "  node [shape=box];\n";
  std::map<std::int64_t, std::vector<std::size_t>> ranks;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    ranks[graph.vertices[v].degree()].push_back(v);
  }
  auto id = [&](std::size_t v) { return "\"" + node_name(graph.vertices[v].canonical()) + "\""; };
  for (const auto& [degree, members] : ranks) {
    if (graph.mode == GraphMode::kHasse) out << "  { rank=same; // degree " << degree << "\n";
    for (std::size_t v : members) {
      out << (graph.mode == GraphMode::kHasse ? "    " : "  ") << id(v) << " [label=\""
          << display_name(graph.vertices[v].canonical()) << "\"];\n";
    }
    if (graph.mode == GraphMode::kHasse) out << "  }\n";
  }
  for (const GraphEdge& e : graph.edges) {
    out << "  " << id(e.source) << " -> " << id(e.target) << " [label=\"" << to_string(e.label)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json borel_to_json(const RectShape& shape, const FiniteBorel& borel) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < borel.dk.size(); ++i) {
    nodes.push_back(Json{{"root", to_string(borel.dk.nodes[i])}, {"grey", borel.dk.grey(i)}});
  }
  const AnchoredPair local = borel.local_pair(shape);
  return Json{{"nodes", nodes},
              {"deleted", borel.deleted},
              {"local", {{"partition", local.element.parts}, {"k", local.k}}}};
}

Result<FiniteBorel> borel_from_json(const RectShape& shape, const Json& json) {
  try {
    FiniteBorel borel;
    for (const Json& node : json.at("nodes")) {
      auto root = parse_global_root(shape, node.at("root").get<std::string>());
      if (!root) return root.error();
      borel.dk.nodes.push_back(*root);
      if (node.contains("grey") && node["grey"].get<bool>() != is_isotropic(*root)) {
        return make_error(Errc::kInconsistent, "grey flag disagrees with the root");
      }
    }
    if (borel.dk.size() != static_cast<std::size_t>(shape.length())) {
      return make_error(Errc::kInvalidInput, "want " + std::to_string(shape.length()) + " nodes");
    }
    borel.deleted = json.at("deleted").get<std::size_t>();
    if (borel.deleted >= borel.dk.size()) return make_error(Errc::kInvalidInput, "deleted out of range");
    const auto local = pair_from_json(shape, json.at("local"));
    if (!local) return local.error();
    borel.local = shuffle_of_diagram(shape, local->element);
    borel.k = local->k;
    return borel;
  } catch (const Json::exception& e) {
    return make_error(Errc::kInvalidInput, e.what());
  }
}

}  // namespace tiso
