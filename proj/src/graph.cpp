#include "qcrystal/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "qcrystal/operators.hpp"
#include "qcrystal/tableau_io.hpp"

namespace qcrystal {

ColoredDigraph::ColoredDigraph(int degree, bool queer) : degree_(degree), queer_(queer) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  grow_colors(degree - 1);
}

void ColoredDigraph::grow_colors(int color) {
  while (static_cast<int>(out_.size()) <= color) {
    out_.emplace_back(vertices_.size());
    in_.emplace_back(vertices_.size());
  }
}

std::size_t ColoredDigraph::add_vertex(Vertex v) {
  if (index_.count(v.id)) throw std::invalid_argument("duplicate vertex id '" + v.id + "'");
  const std::size_t idx = vertices_.size();
  index_.emplace(v.id, idx);
  vertices_.push_back(std::move(v));
  for (auto& per_color : out_) per_color.emplace_back();
  for (auto& per_color : in_) per_color.emplace_back();
  return idx;
}

void ColoredDigraph::add_edge(std::size_t from, std::size_t to, int color) {
  if (from >= vertices_.size() || to >= vertices_.size())
    throw std::out_of_range("edge endpoint out of range");
  if (color < 0) throw std::invalid_argument("edge colors are nonnegative");
  grow_colors(color);
  degree_ = std::max(degree_, color + 1);
  edges_.push_back({from, to, color});
  out_[color][from].push_back(to);
  in_[color][to].push_back(from);
}

std::size_t ColoredDigraph::remove_edge(std::size_t from, std::size_t to, int color) {
  const Edge target{from, to, color};
  const auto before = edges_.size();
  edges_.erase(std::remove(edges_.begin(), edges_.end(), target), edges_.end());
  const std::size_t removed = before - edges_.size();
  if (removed && color < static_cast<int>(out_.size())) {
    auto& o = out_[color][from];
    o.erase(std::remove(o.begin(), o.end(), to), o.end());
    auto& i = in_[color][to];
    i.erase(std::remove(i.begin(), i.end(), from), i.end());
  }
  return removed;
}

std::optional<std::size_t> ColoredDigraph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::size_t> ColoredDigraph::out(std::size_t v, int color) const {
  if (color < 0 || color >= static_cast<int>(out_.size())) return {};
  return out_[color].at(v);
}

std::span<const std::size_t> ColoredDigraph::in(std::size_t v, int color) const {
  if (color < 0 || color >= static_cast<int>(in_.size())) return {};
  return in_[color].at(v);
}

std::optional<std::size_t> ColoredDigraph::lower(std::size_t v, int color) const {
  auto o = out(v, color);
  if (o.size() != 1) return std::nullopt;
  return o.front();
}

std::optional<std::size_t> ColoredDigraph::raise(std::size_t v, int color) const {
  auto i = in(v, color);
  if (i.size() != 1) return std::nullopt;
  return i.front();
}

ColoredDigraph ColoredDigraph::induced(std::span<const std::size_t> vs) const {
  ColoredDigraph sub(degree_, queer_);
  std::vector<std::optional<std::size_t>> remap(vertices_.size());
  for (std::size_t v : vs) remap.at(v) = sub.add_vertex(vertices_.at(v));
  for (const Edge& e : edges_)
    if (remap[e.from] && remap[e.to]) sub.add_edge(*remap[e.from], *remap[e.to], e.color);
  return sub;
}

// ---------------------------------------------------------------------------

ColoredDigraph young_crystal(const Partition& shape, int n) {
  const auto seeds = enumerate_ssyt(shape, n);
  return build_crystal<YoungTableau>(
      seeds, n, false, [](const YoungTableau& t, int c) { return f_young(t, c); });
}

ColoredDigraph shifted_crystal(const StrictPartition& shape, int n, bool queer) {
  if (queer && n < 2) throw std::invalid_argument("the queer operator needs n >= 2");
  const auto seeds = enumerate_ssht(shape, n);
  return build_crystal<ShiftedTableau>(seeds, n, queer, [](const ShiftedTableau& t, int c) {
    return c == 0 ? f_queer(t) : f_shifted(t, c);
  });
}

namespace {

std::optional<ShiftedTableau> reverse_lookup(const ColoredDigraph& ambient,
                                             const ShiftedTableau& t, int color) {
  auto v = ambient.find(t.id());
  if (!v) throw std::invalid_argument("tableau " + t.id() + " is not in the ambient crystal");
  auto pre = ambient.raise(*v, color);
  if (!pre) return std::nullopt;
  const auto* payload = std::get_if<ShiftedTableau>(&ambient.vertex(*pre).tableau);
  if (!payload) throw std::invalid_argument("ambient crystal vertices carry no shifted tableaux");
  return *payload;
}

}  // namespace

std::optional<ShiftedTableau> e_shifted(const ColoredDigraph& ambient, const ShiftedTableau& t,
                                        int color) {
  if (color < 1) throw std::invalid_argument("shifted raising colors start at 1");
  return reverse_lookup(ambient, t, color);
}

std::optional<ShiftedTableau> e_queer(const ColoredDigraph& ambient, const ShiftedTableau& t) {
  return reverse_lookup(ambient, t, 0);
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> components(const ColoredDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    auto a = root(e.from), b = root(e.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::optional<std::size_t>> slot(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto r = root(v);
    if (!slot[r]) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[*slot[r]].push_back(v);
  }
  return out;
}

std::vector<std::size_t> sources(const ColoredDigraph& g, std::span<const int> colors) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    bool has_in = false;
    for (int c : colors) has_in = has_in || !g.in(v, c).empty();
    if (!has_in) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> highest_weights(const ColoredDigraph& g) {
  std::vector<int> colors;
  for (int c = 1; c < g.degree(); ++c) colors.push_back(c);
  return sources(g, colors);
}

StringStats string_stats(const ColoredDigraph& g, std::size_t x, int color) {
  StringStats s;
  const std::size_t limit = g.vertex_count();
  auto step = [&](std::span<const std::size_t> next, std::size_t at) -> std::optional<std::size_t> {
    if (next.size() > 1)
      throw std::invalid_argument("vertex " + g.vertex(at).id + " has several " +
                                  std::to_string(color) + "-edges in one direction");
    if (next.empty()) return std::nullopt;
    return next.front();
  };
  for (std::size_t v = x; auto prev = step(g.in(v, color), v);) {
    v = *prev;
    if (++s.delta > static_cast<int>(limit) || v == x)
      throw MonochromaticCycle("color " + std::to_string(color) + " cycle through " +
                               g.vertex(x).id);
  }
  for (std::size_t v = x; auto next = step(g.out(v, color), v);) {
    v = *next;
    if (++s.epsilon > static_cast<int>(limit) || v == x)
      throw MonochromaticCycle("color " + std::to_string(color) + " cycle through " +
                               g.vertex(x).id);
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

bool comparable(const ColoredDigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (int c = 0; c < g.degree(); ++c)
      if (g.out(v, c).size() > 1 || g.in(v, c).size() > 1) return false;
  std::vector<int> all(g.degree());
  std::iota(all.begin(), all.end(), 0);
  return g.vertex_count() > 0 && sources(g, all).size() == 1 && components(g).size() == 1;
}

}  // namespace

Isomorphism is_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b,
                          std::vector<std::size_t>* mapping) {
  if (!comparable(a) || !comparable(b)) return Isomorphism::NotComparable;
  if (a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size())
    return Isomorphism::NotIsomorphic;
  std::vector<int> all_a(a.degree()), all_b(b.degree());
  std::iota(all_a.begin(), all_a.end(), 0);
  std::iota(all_b.begin(), all_b.end(), 0);
  const std::size_t sa = sources(a, all_a).front();
  const std::size_t sb = sources(b, all_b).front();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> fwd(a.vertex_count(), unset), bwd(b.vertex_count(), unset);
  fwd[sa] = sb;
  bwd[sb] = sa;
  std::deque<std::size_t> queue{sa};
  const int colors = std::max(a.degree(), b.degree());
  auto link = [&](std::optional<std::size_t> va, std::optional<std::size_t> vb) {
    if (va.has_value() != vb.has_value()) return false;
    if (!va) return true;
    if (fwd[*va] == unset && bwd[*vb] == unset) {
      fwd[*va] = *vb;
      bwd[*vb] = *va;
      queue.push_back(*va);
      return true;
    }
    return fwd[*va] == *vb && bwd[*vb] == *va;
  };
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (int c = 0; c < colors; ++c) {
      if (!link(a.lower(v, c), b.lower(fwd[v], c))) return Isomorphism::NotIsomorphic;
      if (!link(a.raise(v, c), b.raise(fwd[v], c))) return Isomorphism::NotIsomorphic;
    }
  }
  if (std::find(fwd.begin(), fwd.end(), unset) != fwd.end()) return Isomorphism::NotIsomorphic;
  if (mapping) *mapping = std::move(fwd);
  return Isomorphism::Isomorphic;
}

// ---------------------------------------------------------------------------

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out += ch;
  }
  return out;
}

std::string vertex_label(const Vertex& v) {
  std::string label = std::visit(
      [&](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return v.id;
        else
          return t.render();
      },
      v.tableau);
  while (!label.empty() && label.back() == '\n') label.pop_back();
  return label;
}

const char* edge_color(int c) {
  static constexpr const char* palette[] = {"green", "red", "blue", "orange", "purple", "brown"};
  return palette[static_cast<std::size_t>(c) % std::size(palette)];
}

}  // namespace

void write_dot(std::ostream& os, const ColoredDigraph& g) {
  os << "digraph crystal {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& vert = g.vertex(v);
    os << "  \"" << dot_escape(vert.id) << "\" [label=\"" << dot_escape(vertex_label(vert))
       << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  \"" << dot_escape(g.vertex(e.from).id) << "\" -> \"" << dot_escape(g.vertex(e.to).id)
       << "\" [color=" << edge_color(e.color) << ", label=\"" << e.color << "\"];\n";
  }
  os << "}\n";
}

void write_json(std::ostream& os, const ColoredDigraph& g) {
  json verts = json::array();
  for (const auto& v : g.vertices()) {
    json jv = {{"id", v.id}};
    if (v.weight) jv["weight"] = v.weight->counts;
    std::visit(
        [&](const auto& t) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(t)>, std::monostate>)
            jv["tableau"] = to_json(t);
        },
        v.tableau);
    verts.push_back(std::move(jv));
  }
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"from", g.vertex(e.from).id}, {"to", g.vertex(e.to).id}, {"color", e.color}});
  json doc = {{"degree", g.degree()},
              {"queer", g.queer()},
              {"vertices", std::move(verts)},
              {"edges", std::move(edges)}};
  os << doc.dump(1) << '\n';
}

ColoredDigraph read_graph_json(std::istream& is) {
  json doc;
  try {
    is >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON parse error: ") + e.what());
  }
  try {
    ColoredDigraph g(doc.value("degree", 0), doc.value("queer", false));
    for (const auto& jv : doc.value("vertices", json::array())) {
      Vertex v;
      v.id = jv.at("id").get<std::string>();
      if (jv.contains("weight")) v.weight = Weight{jv["weight"].get<std::vector<int>>()};
      if (jv.contains("tableau")) {
        std::visit([&](auto&& t) { v.tableau = std::move(t); }, tableau_from_json(jv["tableau"]));
      }
      g.add_vertex(std::move(v));
    }
    for (const auto& je : doc.value("edges", json::array())) {
      const auto from = g.find(je.at("from").get<std::string>());
      const auto to = g.find(je.at("to").get<std::string>());
      if (!from || !to) throw std::invalid_argument("edge references an unknown vertex");
      g.add_edge(*from, *to, je.at("color").get<int>());
    }
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace qcrystal
