#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace diperfect {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

// Sequence of distinct vertices; consecutive vertices are joined by an arc
// of the host digraph.
using Path = std::vector<Vertex>;

// Finite loop-free digraph on vertices 0..n-1.  Arcs form a set (no
// multi-arcs); (u,v) and (v,u) may coexist, forming a digon.  Immutable
// after construction, safe to share between threads.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  // Lexicographically sorted by (u, v); iteration order is deterministic.
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }
  bool has_digon(Vertex u, Vertex v) const { return has_arc(u, v) && has_arc(v, u); }

  const std::vector<Vertex>& out_neighbors(Vertex v) const;
  const std::vector<Vertex>& in_neighbors(Vertex v) const;
  int out_degree(Vertex v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_neighbors(v).size()); }

  // Labeled equality.  Isomorphism lives in canonical.hpp.
  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }
  bool operator!=(const Digraph& other) const { return !(*this == other); }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::uint64_t> out_bits_;  // n_ <= 64: adjacency bitmasks, else empty
  std::vector<std::uint64_t> in_bits_;
};

struct InducedSubdigraph {
  Digraph graph;
  std::vector<Vertex> to_parent;  // new index -> old index, increasing
  std::vector<Vertex> to_sub;     // old index -> new index, -1 outside X
};

// Subdigraph induced by X, re-indexed densely in increasing vertex order.
InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& x);

// All arcs reversed; an involution.
Digraph inverse(const Digraph& d);

// Edges {u,v} (u < v, sorted) of the underlying simple graph.
std::vector<Arc> underlying_edges(const Digraph& d);

struct Neighborhoods {
  VertexSet in;   // N-(X): in-neighbors of X, outside X
  VertexSet out;  // N+(X): out-neighbors of X, outside X
  VertexSet all;  // N(X) = N-(X) u N+(X)
};

Neighborhoods neighborhoods(const Digraph& d, const VertexSet& x);

// ---- VertexSet / Path helpers ----

bool contains(const VertexSet& s, Vertex v);
VertexSet make_vertex_set(std::vector<Vertex> vertices);  // sorts, removes duplicates
VertexSet full_vertex_set(int n);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// Distinct vertices joined by consecutive arcs of d.  Empty sequences are
// not paths.
bool is_path(const Digraph& d, const Path& p);

}  // namespace diperfect
