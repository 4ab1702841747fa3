#include "diperfect/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diperfect {

namespace {

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

}  // namespace

Digraph::Digraph(int n) : Digraph(n, {}) {}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (const Arc& a : arcs) {
    if (a.first < 0 || a.first >= n || a.second < 0 || a.second >= n)
      throw std::invalid_argument("arc endpoint out of range: " + arc_text(a));
    if (a.first == a.second)
      throw std::invalid_argument("loops are not allowed: " + arc_text(a));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);

  out_.resize(n_);
  in_.resize(n_);
  for (const Arc& a : arcs_) {
    out_[a.first].push_back(a.second);
    in_[a.second].push_back(a.first);
  }
  // arcs_ sorted lexicographically, so out_ lists come out sorted; in_ needs a sort
  for (auto& v : in_) std::sort(v.begin(), v.end());

  if (n_ <= 64) {
    out_bits_.assign(n_, 0);
    in_bits_.assign(n_, 0);
    for (const Arc& a : arcs_) {
      out_bits_[a.first] |= std::uint64_t{1} << a.second;
      in_bits_[a.second] |= std::uint64_t{1} << a.first;
    }
  }
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (!out_bits_.empty()) return (out_bits_[u] >> v) & 1;
  const auto& nb = out_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  return in_[v];
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& x) {
  std::vector<bool> member(d.vertex_count(), false);
  for (Vertex v : x) {
    if (v < 0 || v >= d.vertex_count())
      throw std::invalid_argument("induced_subdigraph: vertex " + std::to_string(v) +
                                  " out of range");
    if (member[v])
      throw std::invalid_argument("induced_subdigraph: duplicate vertex " + std::to_string(v));
    member[v] = true;
  }
  InducedSubdigraph result;
  result.to_sub.assign(d.vertex_count(), -1);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (member[v]) {
      result.to_sub[v] = static_cast<Vertex>(result.to_parent.size());
      result.to_parent.push_back(v);
    }
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    Vertex u = result.to_sub[a.first];
    Vertex v = result.to_sub[a.second];
    if (u != -1 && v != -1) arcs.emplace_back(u, v);
  }
  result.graph = Digraph(static_cast<int>(result.to_parent.size()), std::move(arcs));
  return result;
}

Digraph inverse(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arcs().size());
  for (const Arc& a : d.arcs()) arcs.emplace_back(a.second, a.first);
  return Digraph(d.vertex_count(), std::move(arcs));
}

std::vector<Arc> underlying_edges(const Digraph& d) {
  std::vector<Arc> edges;
  for (const Arc& a : d.arcs()) {
    Vertex u = std::min(a.first, a.second);
    Vertex v = std::max(a.first, a.second);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Neighborhoods neighborhoods(const Digraph& d, const VertexSet& x) {
  std::vector<bool> in_x(d.vertex_count(), false);
  for (Vertex v : x) {
    if (v < 0 || v >= d.vertex_count())
      throw std::invalid_argument("neighborhoods: vertex " + std::to_string(v) +
                                  " out of range");
    in_x[v] = true;
  }
  Neighborhoods nbh;
  for (Vertex v : x) {
    for (Vertex w : d.in_neighbors(v))
      if (!in_x[w]) nbh.in.push_back(w);
    for (Vertex w : d.out_neighbors(v))
      if (!in_x[w]) nbh.out.push_back(w);
  }
  nbh.in = make_vertex_set(std::move(nbh.in));
  nbh.out = make_vertex_set(std::move(nbh.out));
  nbh.all = set_union(nbh.in, nbh.out);
  return nbh;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

VertexSet full_vertex_set(int n) {
  VertexSet s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_path(const Digraph& d, const Path& p) {
  if (p.empty()) return false;
  std::vector<bool> seen(d.vertex_count(), false);
  for (Vertex v : p) {
    if (v < 0 || v >= d.vertex_count()) return false;
    if (seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!d.has_arc(p[i], p[i + 1])) return false;
  return true;
}

}  // namespace diperfect
