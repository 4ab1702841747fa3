#include "diperfect/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "diperfect/structures.hpp"

namespace diperfect {

bool is_stable(const Digraph& d, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    Vertex v = s[i];
    if (v < 0 || v >= d.vertex_count())
      throw std::invalid_argument("is_stable: vertex out of range");
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (d.adjacent(v, s[j])) return false;
  }
  return true;
}

bool is_maximum_stable(const Digraph& d, const VertexSet& s) {
  if (!is_stable(d, s)) return false;
  return static_cast<int>(s.size()) == stable_sets(d).alpha;
}

StableSetReport stable_sets(const Digraph& d) {
  int n = d.vertex_count();
  if (n > 64)
    throw std::invalid_argument("stable_sets: vertex count above the supported bound (64)");
  std::vector<std::uint64_t> adj(n, 0);
  for (const Arc& a : d.arcs()) {
    adj[a.first] |= std::uint64_t{1} << a.second;
    adj[a.second] |= std::uint64_t{1} << a.first;
  }

  StableSetReport report;
  report.alpha = -1;  // every leaf beats this; the all-exclude leaf yields {}

  VertexSet current;
  // Include/exclude branching over vertices in increasing order; prune when
  // the current set cannot reach the best size found so far.
  auto recurse = [&](auto&& self, Vertex v, std::uint64_t blocked) -> void {
    int remaining = n - v;
    if (static_cast<int>(current.size()) + remaining < report.alpha) return;
    if (v == n) {
      int size = static_cast<int>(current.size());
      if (size > report.alpha) {
        report.alpha = size;
        report.max_stable_sets.clear();
      }
      if (size == report.alpha) report.max_stable_sets.push_back(current);
      return;
    }
    if (!((blocked >> v) & 1)) {
      current.push_back(v);
      self(self, v + 1, blocked | adj[v]);
      current.pop_back();
    }
    self(self, v + 1, blocked);
  };
  recurse(recurse, 0, 0);
  std::sort(report.max_stable_sets.begin(), report.max_stable_sets.end());
  return report;
}

BPartition b_partition(const Digraph& d, const VertexSet& s) {
  if (!is_stable(d, s)) throw std::invalid_argument("b_partition: S is not stable");
  if (static_cast<int>(s.size()) != stable_sets(d).alpha)
    throw std::invalid_argument("b_partition: S is not a maximum stable set");

  BPartition parts;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (contains(s, v)) continue;
    bool dominates = false, dominated = false;
    for (Vertex y : s) {
      if (d.has_arc(v, y)) dominates = true;
      if (d.has_arc(y, v)) dominated = true;
    }
    if (dominates && dominated)
      parts.b_pm.push_back(v);
    else if (dominates)
      parts.b_plus.push_back(v);
    else if (dominated)
      parts.b_minus.push_back(v);
    else
      // S maximum makes every outside vertex adjacent to S
      throw std::logic_error("b_partition: vertex not adjacent to a maximum stable set");
  }
  return parts;
}

BplusIndegreeCheck check_lemma_bplus_indegree(const Digraph& d, const VertexSet& s) {
  if (!is_3_anti_circulant(d))
    throw std::invalid_argument("check_lemma_bplus_indegree: digraph is not 3-anti-circulant");
  BPartition parts = b_partition(d, s);  // validates S

  for (Vertex v : parts.b_plus) {
    int in_bplus = 0;
    for (Vertex w : d.in_neighbors(v))
      if (contains(parts.b_plus, w)) ++in_bplus;
    if (in_bplus > 1) return {false, v};
  }
  for (Vertex u : parts.b_minus) {
    int out_bminus = 0;
    for (Vertex w : d.out_neighbors(u))
      if (contains(parts.b_minus, w)) ++out_bminus;
    if (out_bminus > 1) return {false, u};
  }
  return {true, std::nullopt};
}

}  // namespace diperfect
