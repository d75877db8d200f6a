#include "qmdp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qmdp/error.hpp"

namespace qmdp {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) l.words.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.words.empty()) lines.push_back(std::move(l));
  }
  return lines;
}

std::size_t to_number(const Line& l, std::string_view w) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc{} || ptr != w.data() + w.size())
    throw ParseError(l.number, "expected a non-negative integer, got '" + std::string(w) + "'");
  return value;
}

Vertex to_vertex(const Line& l, std::string_view w, std::size_t n) {
  const std::size_t v = to_number(l, w);
  if (v >= n) throw ParseError(l.number, "vertex " + std::string(w) + " out of range (n = " + std::to_string(n) + ")");
  return static_cast<Vertex>(v);
}

}  // namespace

Mdp parse_mdp(std::string_view text, BuildOptions opts) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].words.size() != 1 || lines[0].words[0] != "mdp")
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'mdp'");
  if (lines.size() < 2 || lines[1].words.size() != 2 || lines[1].words[0] != "vertices")
    throw ParseError(lines.size() < 2 ? lines[0].number + 1 : lines[1].number, "expected 'vertices <n>'");
  const std::size_t n = to_number(lines[1], lines[1].words[1]);
  std::vector<Owner> owners(n, Owner::Player1);
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto head = l.words[0];
    if (head == "random") {
      for (std::size_t j = 1; j < l.words.size(); ++j) owners[to_vertex(l, l.words[j], n)] = Owner::Random;
    } else if (head == "edge") {
      if (l.words.size() != 3) throw ParseError(l.number, "expected 'edge <u> <v>'");
      const Vertex u = to_vertex(l, l.words[1], n);
      const Vertex v = to_vertex(l, l.words[2], n);
      for (Vertex w : adj[u])
        if (w == v) throw ParseError(l.number, "duplicate edge " + std::to_string(u) + " -> " + std::to_string(v));
      adj[u].push_back(v);
    } else {
      throw ParseError(l.number, "unknown directive '" + std::string(head) + "'");
    }
  }
  if (!opts.self_loop_sinks)
    for (std::size_t v = 0; v < n; ++v)
      if (adj[v].empty())
        throw ParseError(lines[1].number, "vertex " + std::to_string(v) + " has no outgoing edge (use --normalize)");
  try {
    return Mdp(std::move(owners), std::move(adj), opts);
  } catch (const ModelError& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_mdp(const Mdp& mdp) {
  std::ostringstream out;
  out << "mdp\nvertices " << mdp.num_vertices() << '\n';
  if (!mdp.is_graph()) {
    out << "random";
    for (Vertex v = 0; v < mdp.num_vertices(); ++v)
      if (mdp.is_random(v)) out << ' ' << v;
    out << '\n';
  }
  for (Vertex v = 0; v < mdp.num_vertices(); ++v)
    for (Vertex w : mdp.successors(v)) out << "edge " << v << ' ' << w << '\n';
  return out.str();
}

ObjectiveSpec parse_objective(std::string_view text, std::size_t n) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "objective")
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected 'objective <kind>'");
  ObjectiveSpec spec;
  auto kind = parse_kind(lines[0].words[1]);
  if (!kind) throw ParseError(lines[0].number, "unknown objective kind '" + std::string(lines[0].words[1]) + "'");
  spec.kind = *kind;
  if (lines.size() < 2 || lines[1].words.size() != 2 || lines[1].words[0] != "mode")
    throw ParseError(lines.size() < 2 ? lines[0].number + 1 : lines[1].number, "expected 'mode <mode>'");
  auto mode = parse_mode(lines[1].words[1]);
  if (!mode) throw ParseError(lines[1].number, "unknown mode '" + std::string(lines[1].words[1]) + "'");
  spec.mode = *mode;

  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto head = l.words[0];
    if (head != "set" && head != "pair") throw ParseError(l.number, "unknown directive '" + std::string(head) + "'");
    if ((head == "pair") != spec.uses_pairs())
      throw ParseError(l.number, std::string(to_string(spec.kind)) + " objective does not take '" + std::string(head) +
                                     "' lines");
    if (l.words.size() < 2) throw ParseError(l.number, "missing index");
    const std::size_t idx = to_number(l, l.words[1]);
    if (idx != spec.k()) throw ParseError(l.number, "expected index " + std::to_string(spec.k()));
    if (head == "set") {
      VertexSet s(n);
      for (std::size_t j = 2; j < l.words.size(); ++j) s.insert(to_vertex(l, l.words[j], n));
      spec.sets.push_back(std::move(s));
    } else {
      if (l.words.size() < 3 || l.words[2] != "L") throw ParseError(l.number, "expected 'pair <i> L <v>* U <v>*'");
      Pair p{VertexSet(n), VertexSet(n)};
      bool in_u = false;
      for (std::size_t j = 3; j < l.words.size(); ++j) {
        if (l.words[j] == "U") {
          if (in_u) throw ParseError(l.number, "repeated 'U'");
          in_u = true;
          continue;
        }
        (in_u ? p.u : p.l).insert(to_vertex(l, l.words[j], n));
      }
      if (!in_u) throw ParseError(l.number, "missing 'U'");
      spec.pairs.push_back(std::move(p));
    }
  }
  if (spec.mode == CombinationMode::Single && spec.k() != 1)
    throw ParseError(lines.back().number, "mode single needs exactly one set or pair, got " + std::to_string(spec.k()));
  return spec;
}

std::string serialize_objective(const ObjectiveSpec& spec) {
  std::ostringstream out;
  out << "objective " << to_string(spec.kind) << "\nmode " << to_string(spec.mode) << '\n';
  for (std::size_t i = 0; i < spec.sets.size(); ++i) {
    out << "set " << i;
    for (Vertex v : spec.sets[i]) out << ' ' << v;
    out << '\n';
  }
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    out << "pair " << i << " L";
    for (Vertex v : spec.pairs[i].l) out << ' ' << v;
    out << " U";
    for (Vertex v : spec.pairs[i].u) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace qmdp
