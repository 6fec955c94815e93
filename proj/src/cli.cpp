#include "tiso/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "tiso/affine.hpp"
#include "tiso/io.hpp"
#include "tiso/orbit.hpp"
#include "tiso/verify.hpp"

namespace tiso::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainFailure {
  Error error;
};

template <typename T>
T take(Result<T> result) {
  if (!result) throw DomainFailure{result.error()};
  return std::move(result).value();
}

struct Options {
  int n = 0;
  int m = 0;
  std::string format = "text";
  std::string out_path;
  std::string partition;
  std::string word;
  std::string shuffle;
  std::int64_t k = 0;
  std::string root;
  bool plain = false;
  bool approx = false;
  std::int64_t degree = 0;
  std::string window;
  std::string mode = "hasse";
  std::string greys;
  bool gram = false;
};

enum class Encoding { kPartition, kWord, kShuffle };

struct Input {
  Encoding encoding = Encoding::kPartition;
  Diagram lambda;
  std::int64_t k = 0;
};

RectShape shape_of(const Options& o) {
  try {
    return RectShape(o.n, o.m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--n/--m: ") + e.what());
  }
}

Input read_input(const RectShape& shape, const Options& o) {
  const int given = !o.partition.empty() + !o.word.empty() + !o.shuffle.empty();
  if (given != 1) {
    throw UsageError("give exactly one of --partition, --word, --shuffle (got " +
                     std::to_string(given) + ")");
  }
  Input in;
  in.k = o.k;
  auto usage = [](const char* flag, const Error& e) {
    return UsageError(std::string(flag) + ": " + e.message);
  };
  if (!o.partition.empty()) {
    auto lambda = parse_partition(shape, o.partition);
    if (!lambda) throw usage("--partition", lambda.error());
    in.lambda = *lambda;
  } else if (!o.word.empty()) {
    auto w = parse_word(shape, o.word);
    if (!w) throw usage("--word", w.error());
    in.encoding = Encoding::kWord;
    in.lambda = diagram_of_word(shape, *w).value();
  } else {
    auto s = parse_shuffle(shape, o.shuffle);
    if (!s) throw usage("--shuffle", s.error());
    in.encoding = Encoding::kShuffle;
    in.lambda = diagram_of_shuffle(shape, *s);
  }
  return in;
}

OddRoot read_root(const RectShape& shape, const Options& o) {
  if (o.root.empty()) throw UsageError("--root is required");
  auto root = parse_root(shape, o.root);
  if (!root) throw UsageError("--root: " + root.error().message);
  return *root;
}

std::pair<std::int64_t, std::int64_t> read_window(const RectShape& shape, const std::string& text) {
  if (text.empty()) return {0, default_window_hi(shape)};
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto d = std::stoll(text);
      return {d, d};
    }
    const auto lo = std::stoll(text.substr(0, colon));
    const auto hi = std::stoll(text.substr(colon + 1));
    if (lo > hi) throw UsageError("--deg: empty window " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--deg: want LO:HI, got '" + text + "'");
  }
}

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string roots_text(const std::vector<OddRoot>& roots) {
  std::vector<std::string> items;
  for (const OddRoot& r : roots) items.push_back(to_string(r));
  return items.empty() ? "-" : join(items);
}

void write_class(std::ostream& os, const OrbitClass& cls) {
  std::vector<std::string> reps;
  for (const AnchoredPair& r : cls.reps()) reps.push_back(display_name(r));
  os << "class " << display_name(cls.canonical()) << " degree " << cls.degree() << "\n";
  os << "reps " << join(reps) << "\n";
}

void write_json(std::ostream& os, const Json& json) { os << json.dump(2) << "\n"; }

void cmd_convert(const Options& o, std::ostream& os) {
  const RectShape shape = shape_of(o);
  const Input in = read_input(shape, o);
  const Diagram& lambda = in.lambda;
  const std::string word = word_of_diagram(shape, lambda).letters;
  const std::string shuffle = to_string(shape, shuffle_of_diagram(shape, lambda));
  const Diagram d = dual(shape, lambda);
  if (o.format == "json") {
    write_json(os, Json{{"partition", lambda.parts}, {"word", word}, {"shuffle", shuffle},
                        {"dual", d.parts}, {"size", lambda.weight()}});
    return;
  }
  os << "partition " << to_string(lambda) << "\n"
     << "word " << word << "\n"
     << "shuffle " << shuffle << "\n"
     << "dual " << to_string(d) << "\n"
     << "size " << lambda.weight() << "\n";
}

void cmd_corners(const Options& o, std::ostream& os) {
  const RectShape shape = shape_of(o);
  const Diagram lambda = read_input(shape, o).lambda;
  const Corners c = corners(shape, lambda);
  const PseudoCorners pc = pseudo_corners(shape, lambda);
  const EdgeFlags f = edge_flags(shape, lambda);
  if (o.format == "json") {
    auto names = [](const std::vector<OddRoot>& roots) {
      Json out = Json::array();
      for (const OddRoot& r : roots) out.push_back(to_string(r));
      return out;
    };
    write_json(os, Json{{"outer", names(c.outer)},
                        {"inner", names(c.inner)},
                        {"pseudo", {{"outer", pc.outer}, {"inner", pc.inner}}},
                        {"flags",
                         {{"-r", f.row_full}, {"+r", f.row_empty}, {"-c", f.column_full},
                          {"+c", f.column_empty}, {"hook", f.contains_hook}, {"reduced", f.reduced}}}});
    return;
  }
  std::vector<std::string> ops;
  if (f.row_full) ops.push_back("-r");
  if (f.row_empty) ops.push_back("+r");
  if (f.column_full) ops.push_back("-c");
  if (f.column_empty) ops.push_back("+c");
  os << "outer " << roots_text(c.outer) << "\n"
     << "inner " << roots_text(c.inner) << "\n"
     << "pseudo-outer " << (pc.outer ? "yes" : "no") << "\n"
     << "pseudo-inner " << (pc.inner ? "yes" : "no") << "\n"
     << "edge-ops " << (ops.empty() ? "-" : join(ops)) << "\n";
}

void cmd_act(const Options& o, std::ostream& os) {
  const RectShape shape = shape_of(o);
  const Input in = read_input(shape, o);
  const OddRoot root = read_root(shape, o);
  if (o.plain) {
    std::string result;
    switch (in.encoding) {
      case Encoding::kPartition:
        result = to_string(take(t_apply(shape, in.lambda, root)));
        break;
      case Encoding::kWord:
        result = take(p_apply(shape, word_of_diagram(shape, in.lambda), root)).letters;
        break;
      case Encoding::kShuffle:
        result = to_string(shape, take(r_apply(shape, shuffle_of_diagram(shape, in.lambda), root)));
        break;
    }
    if (o.format == "json") {
      write_json(os, Json{{"root", to_string(root)}, {"result", result}});
    } else {
      os << result << "\n";
    }
    return;
  }
  const OrbitClass source = take(enumerate_class(shape, AnchoredPair{in.lambda, in.k}));
  const OrbitClass image = take(act(shape, source, root));
  if (o.format == "json") {
    write_json(os, Json{{"root", to_string(root)},
                        {"source", class_to_json(shape, source)},
                        {"image", class_to_json(shape, image)}});
    return;
  }
  os << "source " << display_name(source.canonical()) << "\n";
  os << "root " << to_string(root) << "\n";
  write_class(os, image);
}

void cmd_class(const Options& o, std::ostream& os) {
  const RectShape shape = shape_of(o);
  const Input in = read_input(shape, o);
  const OrbitClass cls = take(enumerate_class(shape, AnchoredPair{in.lambda, in.k}));
  if (!o.approx) {
    if (o.format == "json") {
      write_json(os, class_to_json(shape, cls));
    } else {
      write_class(os, cls);
    }
    return;
  }
  const auto parts = take(approx_decompose(shape, cls));
  if (o.format == "json") {
    Json out = class_to_json(shape, cls);
    out["parts"] = Json::array();
    for (const auto& part : parts) {
      Json members = Json::array();
      for (const AnchoredPair& p : part) members.push_back(pair_to_json(shape, p));
      out["parts"].push_back(members);
    }
    write_json(os, out);
    return;
  }
  write_class(os, cls);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::vector<std::string> members;
    for (const AnchoredPair& p : parts[j]) members.push_back(display_name(p));
    os << "part " << j << " " << join(members) << "\n";
  }
}

void cmd_degree(const Options& o, std::ostream& os) {
  const RectShape shape = shape_of(o);
  const auto classes = take(classes_at_degree(shape, o.degree));
  if (o.format == "json") {
    Json out = Json::array();
    for (const OrbitClass& cls : classes) out.push_back(class_to_json(shape, cls));
    write_json(os, Json{{"n", shape.n()}, {"m", shape.m()}, {"degree", o.degree}, {"classes", out}});
    return;
  }
  os << classes.size() << " classes of degree " << o.degree << "\n";
  for (const OrbitClass& cls : classes) write_class(os, cls);
}

void cmd_graph(const Options& o, std::ostream& os) {
  const RectShape shape = shape_of(o);
  const auto [lo, hi] = read_window(shape, o.window);
  const GraphMode mode = o.mode == "cayley" ? GraphMode::kCayley : GraphMode::kHasse;
  const MorphismGraph graph = take(build_graph(shape, lo, hi, mode));
  if (o.format == "json") {
    write_json(os, graph_to_json(graph));
    return;
  }
  if (o.format == "dot") {
    os << graph_to_dot(graph);
    return;
  }
  os << graph.vertices.size() << " vertices, " << graph.edges.size() << " edges\n";
  for (const OrbitClass& v : graph.vertices) {
    os << "vertex " << display_name(v.canonical()) << " degree " << v.degree() << "\n";
  }
  for (const GraphEdge& e : graph.edges) {
    os << "edge " << display_name(graph.vertices[e.source].canonical()) << " -> "
       << display_name(graph.vertices[e.target].canonical()) << " " << to_string(e.label) << "\n";
  }
}

void write_matrix(std::ostream& os, const char* title, const std::vector<std::vector<int>>& rows) {
  os << title << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << std::setw(2) << row[c];
    os << "\n";
  }
}

void write_borel(std::ostream& os, const RectShape& shape, const FiniteBorel& b, bool with_gram) {
  os << "local " << display_name(b.local_pair(shape)) << "\n";
  os << "deleted " << b.deleted << "\n";
  for (std::size_t i = 0; i < b.dk.size(); ++i) {
    os << "node " << i << (b.dk.grey(i) ? " grey  " : " white ") << to_string(b.dk.nodes[i])
       << (i == b.deleted ? "  (deleted)" : "") << "\n";
  }
  if (with_gram) {
    write_matrix(os, "cartan", gram(b));
    write_matrix(os, "cyclic gram", gram(b.dk));
  }
}

void cmd_borel(const Options& o, std::ostream& os) {
  const RectShape shape = shape_of(o);
  if (!o.greys.empty()) {
    if (!o.partition.empty() || !o.word.empty() || !o.shuffle.empty()) {
      throw UsageError("--greys takes no diagram input");
    }
    std::vector<bool> greys(static_cast<std::size_t>(shape.length()), false);
    std::istringstream in(o.greys);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t node = 0;
      try {
        node = std::stoul(item);
      } catch (const std::logic_error&) {
        throw UsageError("--greys: bad node '" + item + "'");
      }
      if (node >= greys.size()) throw UsageError("--greys: node " + item + " out of range");
      greys[node] = true;
    }
    const auto words = take(dta_words(shape, greys));
    if (o.format == "json") {
      Json out = Json::array();
      for (const BorderWord& w : words) out.push_back(w.letters);
      write_json(os, Json{{"words", out}});
      return;
    }
    for (std::size_t i = 0; i < words.size(); ++i) os << "w" << i << " " << words[i].letters << "\n";
    return;
  }
  const Input in = read_input(shape, o);
  BorelAtlas atlas(shape);
  const AnchoredPair pair{in.lambda, in.k};
  const FiniteBorel borel = take(atlas.borel_of_pair(pair));
  std::optional<FiniteBorel> image;
  std::size_t node = 0;
  if (!o.root.empty()) {
    const OddRoot root = read_root(shape, o);
    const OrbitClass cls = take(enumerate_class(shape, pair));
    node = take(atlas.node_for(cls, root));
    const auto found = admissions(shape, cls, root);
    image = take(affine_reflect(shape, take(atlas.borel_of_pair(cls.reps()[found.front().rep])), node));
  }
  if (o.format == "json") {
    Json out = borel_to_json(shape, borel);
    if (o.gram) {
      out["cartan"] = gram(borel);
      out["gram"] = gram(borel.dk);
    }
    if (image) {
      out["reflection"] = {{"root", o.root}, {"node", node}, {"image", borel_to_json(shape, *image)}};
    }
    write_json(os, out);
    return;
  }
  write_borel(os, shape, borel, o.gram);
  if (image) {
    os << "reflect " << to_string(read_root(shape, o)) << " at node " << node << "\n";
    write_borel(os, shape, *image, false);
  }
}

int cmd_verify(const Options& o, std::ostream& os) {
  const RectShape shape = shape_of(o);
  const auto [lo, hi] = read_window(shape, o.window);
  const SuiteReport report = run_suite(shape, lo, hi);
  if (o.format == "json") {
    Json props = Json::array();
    for (const PropertyResult& p : report.properties) {
      props.push_back(Json{{"module", p.module}, {"property", p.name}, {"checks", p.checks},
                           {"failures", p.failures}, {"samples", p.samples},
                           {"skipped", p.skipped}});
    }
    write_json(os, Json{{"n", shape.n()}, {"m", shape.m()}, {"window", {lo, hi}},
                        {"ok", report.ok()}, {"properties", props}});
  } else {
    os << "verify " << to_string(shape) << " degrees " << lo << ".." << hi << "\n";
    for (const PropertyResult& p : report.properties) {
      const char* status = !p.skipped.empty() ? "SKIP" : p.ok() ? "PASS" : "FAIL";
      os << std::left << std::setw(5) << status << std::setw(8) << p.module << std::setw(46)
         << p.name << std::right << std::setw(8) << p.checks;
      if (!p.skipped.empty()) os << "  " << p.skipped;
      if (p.failures) os << "  " << p.failures << " violations";
      os << "\n";
      for (const std::string& s : p.samples) os << "      " << s << "\n";
    }
    os << report.properties.size() << " properties, " << report.failed_properties()
       << " failed\n";
  }
  return report.ok() ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd reflections on Young diagrams in an n x m rectangle", "tiso"};
  app.require_subcommand(1);
  Options o;

  auto shape_flags = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "rows")->required();
    sub->add_option("--m", o.m, "columns")->required();
    sub->add_option("--out", o.out_path, "write output to a file");
  };
  auto format_flag = [&o](CLI::App* sub, bool dot) {
    std::vector<std::string> allowed{"text", "json"};
    if (dot) allowed.push_back("dot");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto input_flags = [&o](CLI::App* sub) {
    sub->add_option("--partition", o.partition, "parts, e.g. 3,1");
    sub->add_option("--word", o.word, "border word over r,d");
    sub->add_option("--shuffle", o.shuffle, "one-line shuffle, e.g. 1',1,2',3',2");
    sub->add_option("--k", o.k, "rotation number");
  };

  auto* convert = app.add_subcommand("convert", "show every encoding of a diagram");
  shape_flags(convert);
  input_flags(convert);
  format_flag(convert, false);

  auto* corners_cmd = app.add_subcommand("corners", "corners, pseudo-corners and edge operations");
  shape_flags(corners_cmd);
  input_flags(corners_cmd);
  format_flag(corners_cmd, false);

  auto* act_cmd = app.add_subcommand("act", "apply an odd reflection to a class");
  shape_flags(act_cmd);
  input_flags(act_cmd);
  format_flag(act_cmd, false);
  act_cmd->add_option("--root", o.root, "signed root, e.g. +e2-d1")->required();
  act_cmd->add_flag("--plain", o.plain, "act on the input itself, ignoring k");

  auto* class_cmd = app.add_subcommand("class", "list the class of (lambda, k)");
  shape_flags(class_cmd);
  input_flags(class_cmd);
  format_flag(class_cmd, false);
  class_cmd->add_flag("--approx", o.approx, "split into row-move classes");

  auto* degree_cmd = app.add_subcommand("degree", "all classes of one degree");
  shape_flags(degree_cmd);
  format_flag(degree_cmd, false);
  degree_cmd->add_option("--d", o.degree, "degree")->required();

  auto* graph_cmd = app.add_subcommand("graph", "Cayley or Hasse graph on a degree window");
  shape_flags(graph_cmd);
  format_flag(graph_cmd, true);
  graph_cmd->add_option("--deg", o.window, "degree window LO:HI");
  graph_cmd->add_option("--mode", o.mode, "hasse or cayley")
      ->check(CLI::IsMember({"hasse", "cayley"}));

  auto* borel_cmd = app.add_subcommand("borel", "affine Borel of a class, or edge words");
  shape_flags(borel_cmd);
  input_flags(borel_cmd);
  format_flag(borel_cmd, false);
  borel_cmd->add_option("--root", o.root, "also reflect at the node of this root");
  borel_cmd->add_option("--greys", o.greys, "grey nodes, e.g. 0,2: print the edge words");
  borel_cmd->add_flag("--gram", o.gram, "print the Cartan and cyclic Gram matrices");

  auto* verify_cmd = app.add_subcommand("verify", "run the property suite");
  shape_flags(verify_cmd);
  format_flag(verify_cmd, false);
  verify_cmd->add_option("--deg", o.window, "degree window LO:HI");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (*convert) cmd_convert(o, buffer);
    if (*corners_cmd) cmd_corners(o, buffer);
    if (*act_cmd) cmd_act(o, buffer);
    if (*class_cmd) cmd_class(o, buffer);
    if (*degree_cmd) cmd_degree(o, buffer);
    if (*graph_cmd) cmd_graph(o, buffer);
    if (*borel_cmd) cmd_borel(o, buffer);
    if (*verify_cmd) status = cmd_verify(o, buffer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainFailure& f) {
    err << "error: " << errc_name(f.error.code) << ": " << f.error.message << "\n";
    return kExitDomain;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "usage error: --out: cannot open " << o.out_path << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace tiso::cli
