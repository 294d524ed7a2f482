#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qcrystal/tableaux.hpp"

namespace qcrystal {

using Payload = std::variant<std::monostate, YoungTableau, ShiftedTableau>;

struct Vertex {
  std::string id;
  std::optional<Weight> weight;
  Payload tableau;
};

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  int color = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph with edges colored 0..degree-1. General graphs may carry
/// several edges of one color at a vertex; crystal graphs never do.
class ColoredDigraph {
 public:
  explicit ColoredDigraph(int degree = 0, bool queer = false);

  std::size_t add_vertex(Vertex v);
  void add_edge(std::size_t from, std::size_t to, int color);
  /// Removes every edge matching (from, to, color); returns how many.
  std::size_t remove_edge(std::size_t from, std::size_t to, int color);

  int degree() const { return degree_; }
  bool queer() const { return queer_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> find(const std::string& id) const;

  /// Targets of color-c edges out of v (possibly several in a malformed graph).
  std::span<const std::size_t> out(std::size_t v, int color) const;
  std::span<const std::size_t> in(std::size_t v, int color) const;

  /// F_c v / E_c v: defined when there is exactly one such edge.
  std::optional<std::size_t> lower(std::size_t v, int color) const;
  std::optional<std::size_t> raise(std::size_t v, int color) const;

  /// Subgraph on the given vertices (in the given order) with every edge
  /// between them.
  ColoredDigraph induced(std::span<const std::size_t> vs) const;

 private:
  void grow_colors(int color);

  int degree_;
  bool queer_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  // adjacency_[color][vertex]
  std::vector<std::vector<std::vector<std::size_t>>> out_;
  std::vector<std::vector<std::vector<std::size_t>>> in_;
};

class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generic crystal materialisation: vertices are the seeds, and for each
/// vertex and each color (1..n-1, plus 0 when `queer`) an edge to
/// lower(vertex, color) when defined. Throws ClosureError if an image is not
/// among the seeds.
template <class T>
ColoredDigraph build_crystal(std::span<const T> seeds, int n, bool queer,
                             const std::function<std::optional<T>(const T&, int)>& lower) {
  ColoredDigraph g(n, queer);
  for (const T& t : seeds) g.add_vertex(Vertex{t.id(), weight(t, n), Payload{t}});
  const int first = queer ? 0 : 1;
  for (std::size_t v = 0; v < seeds.size(); ++v) {
    for (int c = first; c < n; ++c) {
      auto image = lower(seeds[v], c);
      if (!image) continue;
      auto target = g.find(image->id());
      if (!target)
        throw ClosureError("operator " + std::to_string(c) + " maps " + seeds[v].id() +
                           " outside the seed set to " + image->id());
      g.add_edge(v, *target, c);
    }
  }
  return g;
}

ColoredDigraph young_crystal(const Partition& shape, int n);
/// Throws std::invalid_argument when `queer` is set and n < 2.
ColoredDigraph shifted_crystal(const StrictPartition& shape, int n, bool queer);

/// Raising operators by reverse-edge lookup in a materialised ambient crystal.
/// Throws std::invalid_argument if `t` is not a vertex of `ambient`.
std::optional<ShiftedTableau> e_shifted(const ColoredDigraph& ambient, const ShiftedTableau& t,
                                        int color);
std::optional<ShiftedTableau> e_queer(const ColoredDigraph& ambient, const ShiftedTableau& t);

/// Weakly connected components, each sorted by vertex index, ordered by their
/// smallest vertex index.
std::vector<std::vector<std::size_t>> components(const ColoredDigraph& g);

/// Vertices with no incoming edge of any listed color.
std::vector<std::size_t> sources(const ColoredDigraph& g, std::span<const int> colors);
/// Sources with respect to colors 1..degree-1 (highest weight elements).
std::vector<std::size_t> highest_weights(const ColoredDigraph& g);

struct StringStats {
  int delta = 0;    // steps back to the head of the i-string
  int epsilon = 0;  // steps forward to its tail
};

class MonochromaticCycle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws MonochromaticCycle on a cycle, std::invalid_argument if some
/// vertex on the walk has more than one edge of the color in a direction.
StringStats string_stats(const ColoredDigraph& g, std::size_t x, int color);

enum class Isomorphism { Isomorphic, NotIsomorphic, NotComparable };

/// Compares two connected graphs that each have a unique source over all
/// colors and at most one edge per color and direction at every vertex.
/// On success `mapping[v]` (if provided) is the image of v in `b`.
Isomorphism is_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b,
                          std::vector<std::size_t>* mapping = nullptr);

void write_dot(std::ostream& os, const ColoredDigraph& g);
void write_json(std::ostream& os, const ColoredDigraph& g);
ColoredDigraph read_graph_json(std::istream& is);

}  // namespace qcrystal
