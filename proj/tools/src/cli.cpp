#include "xoverlab/cli.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <optional>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "xover/axioms.hpp"
#include "xover/crossover.hpp"
#include "xover/error.hpp"
#include "xover/oriented_matroid.hpp"
#include "xover/partial_cube.hpp"
#include "xover/planarity.hpp"
#include "xoverlab/verify.hpp"

namespace xoverlab {

namespace {

using json = nlohmann::ordered_json;
using namespace xover;

struct RunConfig {
  std::string spec;
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;

  Limits limits() const {
    Limits l;
    l.max_space = budget;
    return l;
  }
};

// Usage errors raised after parsing (bad combinations of flags).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::array<const char*, 12> kPalette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

std::size_t word_length(const std::string& text) {
  if (text.find(',') != std::string::npos) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), ',')) + 1;
  }
  return text.size();
}

AlphabetSpec resolve_spec(const RunConfig& config, const std::string& word) {
  if (!config.spec.empty()) return AlphabetSpec::parse(config.spec);
  if (word.empty()) throw UsageError("cannot infer the alphabet spec; pass --spec");
  return AlphabetSpec::binary(word_length(word));
}

json header(const RunConfig& config, const std::string& name, json args) {
  json doc;
  doc["tool_version"] = kToolVersion;
  doc["config"] = {{"spec", config.spec.empty() ? json(nullptr) : json(config.spec)},
                   {"budget", config.budget},
                   {"format", config.format},
                   {"out", config.out.empty() ? json(nullptr) : json(config.out)},
                   {"seed", config.seed}};
  doc["command"] = {{"name", name}, {"args", std::move(args)}};
  return doc;
}

std::string table_header(const RunConfig& config, const std::string& name, const json& args) {
  std::ostringstream os;
  os << "# xoverlab " << kToolVersion << '\n';
  os << "# command " << name;
  for (const auto& [key, value] : args.items()) {
    os << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
  }
  os << '\n';
  os << "# config spec=" << (config.spec.empty() ? "auto" : config.spec)
     << " budget=" << config.budget << " seed=" << config.seed << '\n';
  return os.str();
}

json words_json(const WordSet& s) {
  json out = json::array();
  for (const auto& w : s) out.push_back(w.to_string());
  return out;
}

json signs_json(const std::vector<SignVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Graph statistics shared by `graph` and the DOT form of `rset`.

struct GraphStats {
  SimpleGraph graph;
  std::optional<PartialCubeEmbedding> embedding;
  std::optional<std::vector<Vertex>> antipodes;
  std::optional<bool> antipodes_are_swaps;
  std::optional<PlanarityReport> planarity;
  bool connected = false;
  std::optional<std::size_t> diameter;
  int vc = -1;
  std::optional<std::size_t> cube_minor;
};

GraphStats graph_stats(const RSetResult& r) {
  GraphStats s;
  s.graph = hamming_subgraph(r.members);
  const auto& g = s.graph;
  s.connected = is_connected(g);
  if (r.members.spec().is_binary()) s.vc = vc_dimension(r.members);
  if (!s.connected) return s;
  s.diameter = diameter(g);
  s.embedding = is_partial_cube(g);
  s.antipodes = is_antipodal(g);
  if (s.antipodes) {
    bool swaps = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      swaps = swaps && g.label((*s.antipodes)[v]) ==
                           swap_parents(g.label(v), r.first_parent, r.second_parent);
    }
    s.antipodes_are_swaps = swaps;
  }
  if (g.vertex_count() >= 4) s.planarity = is_planar_quadrangulation(g);
  if (s.embedding) s.cube_minor = largest_cube_minor_dim(g, *s.embedding);
  return s;
}

std::vector<std::size_t> cut_of_edges(const GraphStats& s) {
  const auto edges = s.graph.edges();
  std::vector<std::size_t> out(edges.size(), 0);
  if (!s.embedding) return out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t c = 0; c < s.embedding->cuts.size(); ++c) {
      const auto& cut = s.embedding->cuts[c];
      if (std::binary_search(cut.begin(), cut.end(), edges[i])) out[i] = c;
    }
  }
  return out;
}

std::string graph_dot(const GraphStats& s, const std::string& name) {
  const auto& g = s.graph;
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=ellipse, fontname=\"monospace\"];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  \"" << g.label(v).to_string() << "\";\n";
  const auto edges = g.edges();
  const auto cuts = cut_of_edges(s);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << "  \"" << g.label(edges[i].first).to_string() << "\" -- \""
       << g.label(edges[i].second).to_string() << '"';
    if (s.embedding) {
      os << " [color=\"" << kPalette[cuts[i] % kPalette.size()] << "\", cut=" << cuts[i] + 1
         << ']';
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

json r2_expectation(std::size_t t) {
  json e;
  e["t"] = t;
  e["vertices"] = t * t - t + 2;
  e["edges"] = 2 * t * t - 2 * t;
  e["quadrangles"] = t * t - t;
  e["cut_size"] = 2 * t - 2;
  e["degree_histogram"] = json::object();
  std::map<std::size_t, std::size_t> h{{3, 2 * t}, {4, t * t - 3 * t}};
  h[t] += 2;
  for (const auto& [deg, count] : h) e["degree_histogram"][std::to_string(deg)] = count;
  return e;
}

json graph_json(const GraphStats& s, const RSetResult& r) {
  const auto& g = s.graph;
  json stats;
  stats["vertex_count"] = g.vertex_count();
  stats["edge_count"] = g.edge_count();
  stats["connected"] = s.connected;
  stats["diameter"] = s.diameter ? json(*s.diameter) : json(nullptr);
  auto [lo, hi] = min_max_degree(g);
  stats["min_degree"] = lo;
  stats["max_degree"] = hi;
  stats["degree_histogram"] = json::object();
  for (const auto& [deg, count] : degree_profile(g)) {
    stats["degree_histogram"][std::to_string(deg)] = count;
  }
  stats["partial_cube"] = s.embedding.has_value();
  stats["cut_count"] = s.embedding ? json(s.embedding->dimension()) : json(nullptr);
  stats["cut_sizes"] = s.embedding ? json(cut_sizes(*s.embedding)) : json(nullptr);
  stats["antipodal"] = s.antipodes.has_value();
  stats["antipodal_map_is_swap"] = s.antipodes_are_swaps ? json(*s.antipodes_are_swaps)
                                                         : json(nullptr);
  if (s.planarity) {
    stats["planar"] = s.planarity->planar;
    stats["bipartite"] = s.planarity->bipartite;
    stats["quadrangulation"] = s.planarity->quadrangulation;
    stats["quadrangles"] = s.planarity->quadrangulation ? json(s.planarity->quadrangles)
                                                        : json(nullptr);
  } else {
    stats["planar"] = nullptr;
    stats["bipartite"] = s.connected ? json(is_bipartite(g)) : json(nullptr);
    stats["quadrangulation"] = nullptr;
    stats["quadrangles"] = nullptr;
  }
  stats["vc_dimension"] = r.members.spec().is_binary() ? json(s.vc) : json(nullptr);
  stats["largest_cube_minor_dim"] = s.cube_minor ? json(*s.cube_minor) : json(nullptr);

  json doc;
  doc["k"] = r.k;
  doc["x"] = r.first_parent.to_string();
  doc["y"] = r.second_parent.to_string();
  doc["distance"] = hamming_distance(r.first_parent, r.second_parent);
  doc["stats"] = stats;
  const auto t = hamming_distance(r.first_parent, r.second_parent);
  if (r.k == 2 && t >= 4) {
    json expected = r2_expectation(t);
    bool matches = expected["vertices"] == stats["vertex_count"] &&
                   expected["edges"] == stats["edge_count"] &&
                   expected["quadrangles"] == stats["quadrangles"] &&
                   expected["degree_histogram"] == stats["degree_histogram"] &&
                   s.embedding &&
                   std::all_of(s.embedding->cuts.begin(), s.embedding->cuts.end(),
                               [&](const auto& c) { return c.size() == 2 * t - 2; });
    expected["matches"] = matches;
    doc["r2_expected"] = expected;
  }
  doc["vertices"] = words_json(r.members);
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back({g.label(u).to_string(), g.label(v).to_string()});
  }
  doc["edges"] = edges;
  if (s.embedding) {
    json labels = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      labels[g.label(v).to_string()] = s.embedding->labels[v];
    }
    doc["embedding"] = labels;
    json cuts = json::array();
    for (const auto& cut : s.embedding->cuts) {
      json c = json::array();
      for (const auto& [u, v] : cut) c.push_back({g.label(u).to_string(), g.label(v).to_string()});
      cuts.push_back(c);
    }
    doc["cuts"] = cuts;
  } else {
    doc["embedding"] = nullptr;
    doc["cuts"] = nullptr;
  }
  if (s.antipodes) {
    json map = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      map[g.label(v).to_string()] = g.label((*s.antipodes)[v]).to_string();
    }
    doc["antipodal_map"] = map;
  } else {
    doc["antipodal_map"] = nullptr;
  }
  return doc;
}

std::string graph_table(const GraphStats& s, const json& doc) {
  std::ostringstream os;
  const auto& st = doc["stats"];
  for (const auto& [key, value] : st.items()) {
    os << std::left << std::setw(28) << key << value.dump() << '\n';
  }
  if (doc.contains("r2_expected")) {
    os << std::left << std::setw(28) << "r2_expected" << doc["r2_expected"].dump() << '\n';
  }
  os << "# edges\n";
  const auto edges = s.graph.edges();
  const auto cuts = cut_of_edges(s);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << s.graph.label(edges[i].first).to_string() << ' '
       << s.graph.label(edges[i].second).to_string();
    if (s.embedding) os << " cut=" << cuts[i] + 1;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

struct Output {
  const RunConfig& config;
  std::ostream& out;

  void write(const std::string& text) const {
    if (config.out.empty()) {
      out << text;
      return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + config.out);
    file << text;
  }
  void write(const json& doc) const { write(doc.dump(2) + "\n"); }
};

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed,
                    const std::string& command) {
  for (auto f : allowed) {
    if (config.format == f) return;
  }
  throw UsageError("format '" + config.format + "' is not available for " + command);
}

void cmd_rset(const RunConfig& config, const Output& out, unsigned k, const std::string& xs,
              const std::string& ys) {
  const auto spec = resolve_spec(config, xs);
  const auto x = Word::parse(spec, xs);
  const auto y = Word::parse(spec, ys);
  json args{{"k", k}, {"x", x.to_string()}, {"y", y.to_string()}};
  const auto r = rset(k, x, y);
  if (config.format == "dot") {
    out.write(graph_dot(graph_stats(r), "rset"));
    return;
  }
  const auto distance = hamming_distance(x, y);
  const bool closed = is_closed(k, x, y);
  if (config.format == "table") {
    std::string text = table_header(config, "rset", args);
    text += "# size " + std::to_string(r.members.size()) + " distance " +
            std::to_string(distance) + " closed " + yes_no(closed) + '\n';
    for (const auto& w : r.members) text += w.to_string() + '\n';
    out.write(text);
    return;
  }
  json doc = header(config, "rset", args);
  doc["result"] = {{"k", k},
                   {"parents", {x.to_string(), y.to_string()}},
                   {"distance", distance},
                   {"size", r.members.size()},
                   {"closed", closed},
                   {"members", words_json(r.members)}};
  out.write(doc);
}

void cmd_closure(const RunConfig& config, const Output& out, unsigned k, const std::string& xs,
                 const std::string& ys) {
  require_format(config, {"json", "table"}, "closure");
  const auto spec = resolve_spec(config, xs);
  const auto x = Word::parse(spec, xs);
  const auto y = Word::parse(spec, ys);
  json args{{"k", k}, {"x", x.to_string()}, {"y", y.to_string()}};
  const auto c = closure(k, x, y, config.limits());
  const bool is_interval = c == interval(x, y);
  const auto r_size = rset(k, x, y).members.size();
  if (config.format == "table") {
    std::string text = table_header(config, "closure", args);
    text += "# size " + std::to_string(c.size()) + " rset_size " + std::to_string(r_size) +
            " equals_interval " + yes_no(is_interval) + '\n';
    for (const auto& w : c) text += w.to_string() + '\n';
    out.write(text);
    return;
  }
  json doc = header(config, "closure", args);
  doc["result"] = {{"k", k},
                   {"parents", {x.to_string(), y.to_string()}},
                   {"distance", hamming_distance(x, y)},
                   {"size", c.size()},
                   {"rset_size", r_size},
                   {"equals_interval", is_interval},
                   {"members", words_json(c)}};
  out.write(doc);
}

TransitTable source_table(const std::string& source, const AlphabetSpec& spec, const Limits& limits) {
  auto colon = source.find(':');
  const std::string kind = source.substr(0, colon);
  if (kind == "interval" && colon == std::string::npos) {
    return table_from_interval(hamming_graph(spec, limits), limits);
  }
  if ((kind == "rset" || kind == "closure") && colon != std::string::npos) {
    unsigned k = 0;
    try {
      k = static_cast<unsigned>(std::stoul(source.substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError("bad source '" + source + "'; expected rset:k, closure:k or interval");
    }
    if (k < 1) throw UsageError("source order k must be >= 1");
    return kind == "rset" ? table_from_rset(k, spec, limits) : table_from_closure(k, spec, limits);
  }
  throw UsageError("bad source '" + source + "'; expected rset:k, closure:k or interval");
}

void cmd_axioms(const RunConfig& config, const Output& out, const std::string& source,
                const std::vector<std::string>& checks, bool closure_geometric) {
  require_format(config, {"json", "table"}, "axioms");
  if (config.spec.empty()) throw UsageError("axioms needs --spec");
  const auto spec = AlphabetSpec::parse(config.spec);
  std::vector<Axiom> wanted;
  for (const auto& list : checks) {
    std::stringstream ss(list);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) wanted.push_back(parse_axiom(id));
    }
  }
  CheckOptions options;
  options.limits = config.limits();
  options.closure_for_geometric = closure_geometric;
  const auto table = source_table(source, spec, options.limits);

  std::vector<AxiomReport> reports;
  if (wanted.empty()) {
    reports = check_all(table, options);
  } else {
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (auto a : wanted) reports.push_back(check_axiom(table, a, options));
  }

  json check_list = json::array();
  for (auto a : wanted) check_list.push_back(std::string(axiom_id(a)));
  json args{{"source", source}, {"check", check_list}, {"closure_geometric", closure_geometric}};

  auto witness_names = [&](const AxiomReport& r) {
    std::vector<std::string> names;
    for (auto w : r.witness) names.push_back(table.name(w));
    return names;
  };
  auto evaluated = [](const AxiomReport& r) {
    return r.evaluated == Evaluated::closure ? "closure" : "table";
  };

  if (config.format == "table") {
    std::string text = table_header(config, "axioms", args);
    std::ostringstream os;
    os << "# carrier " << table.size() << '\n';
    for (const auto& r : reports) {
      std::ostringstream line;
      line << std::left << std::setw(6) << axiom_id(r.axiom) << std::setw(8)
           << (r.skipped ? "skipped" : r.holds ? "holds" : "fails") << std::setw(10)
           << evaluated(r);
      for (const auto& name : witness_names(r)) line << name << ' ';
      if (!r.note.empty()) line << "# " << r.note;
      std::string text = line.str();
      text.erase(text.find_last_not_of(' ') + 1);
      os << text << '\n';
    }
    out.write(text + os.str());
    return;
  }
  json records = json::array();
  for (const auto& r : reports) {
    records.push_back({{"axiom", std::string(axiom_id(r.axiom))},
                       {"holds", r.skipped ? json(nullptr) : json(r.holds)},
                       {"witness", witness_names(r)},
                       {"universe", r.universe},
                       {"evaluated", evaluated(r)},
                       {"skipped", r.skipped},
                       {"note", r.note}});
  }
  json doc = header(config, "axioms", args);
  doc["result"] = {{"source", source},
                   {"spec", spec.to_string()},
                   {"carrier_size", table.size()},
                   {"reports", records}};
  out.write(doc);
}

void cmd_graph(const RunConfig& config, const Output& out, unsigned k, const std::string& xs,
               const std::string& ys) {
  const auto spec = resolve_spec(config, xs);
  const auto x = Word::parse(spec, xs);
  const auto y = Word::parse(spec, ys);
  json args{{"k", k}, {"x", x.to_string()}, {"y", y.to_string()}};
  const auto r = rset(k, x, y);
  const auto stats = graph_stats(r);
  if (config.format == "dot") {
    out.write(graph_dot(stats, "rset"));
    return;
  }
  json result = graph_json(stats, r);
  if (config.format == "table") {
    out.write(table_header(config, "graph", args) + graph_table(stats, result));
    return;
  }
  json doc = header(config, "graph", args);
  doc["result"] = std::move(result);
  out.write(doc);
}

std::string lattice_dot(const FaceLattice& lattice) {
  std::ostringstream os;
  os << "graph \"face_lattice\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << lattice.nodes[i].to_string() << "\"];\n";
  }
  os << "  n" << lattice.top() << " [label=\"1^\"];\n";
  for (std::size_t level = 0; level < lattice.level_sizes.size(); ++level) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < lattice.rank.size(); ++i) {
      if (lattice.rank[i] == level) os << " n" << i << ';';
    }
    os << " }\n";
  }
  for (const auto& [a, b] : lattice.covers) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

void cmd_om(const RunConfig& config, const Output& out, unsigned k, unsigned n,
            const std::string& lattice_path) {
  Limits limits = config.limits();
  const auto om = om_from_rset(k, n, limits);
  const auto lattice = face_lattice(om);
  if (!lattice_path.empty()) {
    std::ofstream file(lattice_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + lattice_path);
    file << lattice_dot(lattice);
  }
  json args{{"k", k}, {"n", n}, {"lattice", lattice_path.empty() ? json(nullptr) : json(lattice_path)}};
  if (config.format == "dot") {
    out.write(lattice_dot(lattice));
    return;
  }
  const auto uniform = is_uniform(om);
  const auto tope_check = uniform_tope_check(om.topes);
  const auto faces = check_face_axioms(om.covectors);
  const auto two_binom_k = 2 * binomial(n, k);
  const auto two_binom_k_minus_1 = 2 * binomial(n, k - 1);

  json result;
  result["ground_size"] = om.ground_size;
  result["rank"] = om.rank;
  result["corank"] = om.ground_size - om.rank;
  result["uniform"] = uniform.uniform;
  result["cocircuit_support_size"] = uniform.support_size ? json(*uniform.support_size)
                                                          : json(nullptr);
  result["tope_count"] = om.topes.size();
  result["cocircuit_count"] = om.cocircuits.size();
  result["covector_count"] = om.covectors.size();
  result["level_sizes"] = lattice.level_sizes;
  result["uniform_tope_check"] = {{"symmetric", tope_check.symmetric},
                                  {"vc_dimension", tope_check.vc_dimension},
                                  {"expected_count", tope_check.expected_count},
                                  {"count_matches", tope_check.count_matches},
                                  {"holds", tope_check.holds}};
  json face_witness = json::array();
  for (const auto& w : faces.witness) face_witness.push_back(w.to_string());
  result["face_axioms"] = {{"holds", faces.holds},
                           {"failed", faces.axiom.empty() ? json(nullptr) : json(faces.axiom)},
                           {"witness", face_witness}};
  result["cocircuit_formulas"] = {
      {"two_binom_n_k", two_binom_k},
      {"two_binom_n_k_minus_1", two_binom_k_minus_1},
      {"matches_two_binom_n_k", two_binom_k == om.cocircuits.size()},
      {"matches_two_binom_n_k_minus_1", two_binom_k_minus_1 == om.cocircuits.size()}};
  result["topes"] = signs_json(om.topes);
  result["cocircuits"] = signs_json(om.cocircuits);
  result["covectors"] = signs_json(om.covectors);

  if (config.format == "table") {
    std::ostringstream os;
    for (const auto& key : {"ground_size", "rank", "corank", "uniform", "cocircuit_support_size",
                            "tope_count", "cocircuit_count", "covector_count", "level_sizes",
                            "uniform_tope_check", "face_axioms", "cocircuit_formulas"}) {
      os << std::left << std::setw(28) << key << result[key].dump() << '\n';
    }
    for (const auto& key : {"topes", "cocircuits", "covectors"}) {
      os << "# " << key << '\n';
      for (const auto& v : result[key]) os << v.get<std::string>() << '\n';
    }
    out.write(table_header(config, "om", args) + os.str());
    return;
  }
  json doc = header(config, "om", args);
  doc["result"] = std::move(result);
  out.write(doc);
}

int cmd_verify(const RunConfig& config, const Output& out, const std::string& suite,
               VerifyOptions options) {
  require_format(config, {"json", "table"}, "verify");
  options.seed = config.seed;
  options.limits = config.limits();
  const auto report = run_suite(suite, options);
  json args{{"suite", suite},
            {"max_n", options.max_n},
            {"max_k", options.max_k},
            {"t", std::to_string(options.t_min) + ".." + std::to_string(options.t_max)}};
  if (config.format == "table") {
    std::ostringstream os;
    for (const auto& c : report.criteria) {
      os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    for (const auto& note : report.notes) os << "NOTE " << note << '\n';
    os << (report.passed() ? "suite passed" : "suite FAILED") << '\n';
    out.write(table_header(config, "verify", args) + os.str());
  } else {
    json criteria = json::array();
    for (const auto& c : report.criteria) {
      criteria.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    json doc = header(config, "verify", args);
    doc["result"] = {{"suite", report.suite},
                     {"passed", report.passed()},
                     {"criteria", criteria},
                     {"notes", report.notes}};
    out.write(doc);
  }
  return report.passed() ? 0 : 1;
}

void parse_range(const std::string& text, unsigned& lo, unsigned& hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = static_cast<unsigned>(std::stoul(text));
    } else {
      lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
      hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "'; expected a or a..b");
  }
  if (lo > hi) throw UsageError("empty range '" + text + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive laboratory for k-point crossover transit functions", "xoverlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  RunConfig config;
  app.add_option("--spec", config.spec, "Alphabet sizes, e.g. 2,2,3 or 2^5 (default: binary, from word length)");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "table"}));
  app.add_option("--budget", config.budget, "Largest whole-space size to enumerate");
  app.add_option("--out", config.out, "Write output to this file instead of stdout");
  app.add_option("--seed", config.seed, "Seed for sampled checks");
  app.fallthrough();

  unsigned k = 1;
  unsigned n = 0;
  std::string xs, ys;

  auto* rset_cmd = app.add_subcommand("rset", "Recombination set R_k(x, y)");
  auto* closure_cmd = app.add_subcommand("closure", "Closure of R_k from {x, y}");
  auto* graph_cmd = app.add_subcommand("graph", "Graph induced by R_k(x, y) and its structure");
  for (auto* cmd : {rset_cmd, closure_cmd, graph_cmd}) {
    cmd->add_option("-k", k, "Number of crossover points")->required();
    cmd->add_option("-x", xs, "First parent")->required();
    cmd->add_option("-y", ys, "Second parent")->required();
  }

  std::string source;
  std::vector<std::string> checks;
  bool closure_geometric = false;
  auto* axioms_cmd = app.add_subcommand("axioms", "Check transit-function axioms exhaustively");
  axioms_cmd->add_option("--source", source, "rset:k, closure:k or interval")->required();
  axioms_cmd->add_option("--check", checks, "Axiom ids, comma separated (default: all)");
  axioms_cmd->add_flag("--closure-geometric", closure_geometric,
                       "Evaluate S1, S2 and MO on the closure");

  std::string lattice_path;
  auto* om_cmd = app.add_subcommand("om", "Oriented matroid with topes R_k(0^n, 1^n)");
  om_cmd->add_option("-k", k, "Number of crossover points")->required();
  om_cmd->add_option("-n", n, "String length")->required();
  om_cmd->add_option("--lattice", lattice_path, "Write the face lattice as DOT");

  std::string suite;
  std::string t_range;
  VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run an acceptance suite");
  verify_cmd->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-n", verify_options.max_n, "Largest string length");
  verify_cmd->add_option("--max-k", verify_options.max_k, "Largest k");
  verify_cmd->add_option("--t", t_range, "Distance range a..b (r2 suite)");
  verify_cmd->add_option("--golden", verify_options.golden_dir, "Golden directory (determinism suite)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const Output output{config, out};
  try {
    if (*rset_cmd) cmd_rset(config, output, k, xs, ys);
    if (*closure_cmd) cmd_closure(config, output, k, xs, ys);
    if (*graph_cmd) cmd_graph(config, output, k, xs, ys);
    if (*axioms_cmd) cmd_axioms(config, output, source, checks, closure_geometric);
    if (*om_cmd) cmd_om(config, output, k, n, lattice_path);
    if (*verify_cmd) {
      if (!t_range.empty()) parse_range(t_range, verify_options.t_min, verify_options.t_max);
      return cmd_verify(config, output, suite, verify_options);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const xover::Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"rset_k2_0000_1111", {"rset", "-k", "2", "-x", "0000", "-y", "1111"}},
      {"rset_k1_0_1", {"rset", "-k", "1", "-x", "0", "-y", "1", "--spec", "2"}},
      {"rset_k2_00000_11111_table", {"rset", "-k", "2", "-x", "00000", "-y", "11111", "--format", "table"}},
      {"closure_k1_0101_1010", {"closure", "-k", "1", "-x", "0101", "-y", "1010"}},
      {"axioms_rset1_Pa", {"axioms", "--source", "rset:1", "--spec", "2^4", "--check", "Pa"}},
      {"axioms_rset2_B2", {"axioms", "--source", "rset:2", "--spec", "2^4", "--check", "B2"}},
      {"axioms_closure1_33_MO", {"axioms", "--source", "closure:1", "--spec", "3,3", "--check", "MO"}},
      {"axioms_rset1_all_table", {"axioms", "--source", "rset:1", "--spec", "2^4", "--format", "table"}},
      {"graph_k2_0000_1111_dot", {"graph", "-k", "2", "-x", "0000", "-y", "1111", "--format", "dot"}},
      {"graph_k2_00000_11111", {"graph", "-k", "2", "-x", "00000", "-y", "11111"}},
      {"graph_k1_000_111", {"graph", "-k", "1", "-x", "000", "-y", "111"}},
      {"om_k2_n4", {"om", "-k", "2", "-n", "4"}},
      {"om_k2_n4_lattice_dot", {"om", "-k", "2", "-n", "4", "--format", "dot"}},
      {"om_k1_n3", {"om", "-k", "1", "-n", "3"}},
      {"om_k2_n5_table", {"om", "-k", "2", "-n", "5", "--format", "table"}},
  };
  return cases;
}

std::string capture(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (int status = run(args, out, err); status != 0) {
    throw std::runtime_error("exit status " + std::to_string(status) + ": " + err.str());
  }
  return out.str();
}

}  // namespace xoverlab
