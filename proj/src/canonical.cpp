#include "diperfect/canonical.hpp"

#include <algorithm>
#include <vector>

namespace diperfect {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
  return mix(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

// Relation of u seen from v: 0 none, 1 out only, 2 in only, 3 digon.
int relation(const Digraph& d, Vertex v, Vertex u) {
  bool out = d.has_arc(v, u);
  bool in = d.has_arc(u, v);
  return (out ? 1 : 0) | (in ? 2 : 0);
}

// One refinement round: new color = hash of old color plus the sorted
// multiset of (relation, neighbor color) pairs.
std::vector<std::uint64_t> refine(const Digraph& d, const std::vector<std::uint64_t>& color) {
  int n = d.vertex_count();
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> signature;
  for (Vertex v = 0; v < n; ++v) {
    signature.clear();
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      int rel = relation(d, v, u);
      if (rel != 0) signature.push_back(mix((std::uint64_t(rel) << 60) ^ color[u]));
    }
    std::sort(signature.begin(), signature.end());
    std::uint64_t h = combine(0x5ca1ab1e, color[v]);
    for (std::uint64_t s : signature) h = combine(h, s);
    next[v] = h;
  }
  return next;
}

std::vector<std::uint64_t> refined_colors(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<std::uint64_t> color(n);
  for (Vertex v = 0; v < n; ++v) {
    int digons = 0;
    for (Vertex u : d.out_neighbors(v))
      if (d.has_arc(u, v)) ++digons;
    color[v] = mix((std::uint64_t(d.out_degree(v)) << 40) ^ (std::uint64_t(d.in_degree(v)) << 20) ^
                   std::uint64_t(digons));
  }
  for (int round = 0; round < n; ++round) color = refine(d, color);
  return color;
}

}  // namespace

std::uint64_t canonical_hash(const Digraph& d) {
  std::vector<std::uint64_t> color = refined_colors(d);
  std::sort(color.begin(), color.end());
  std::uint64_t h = combine(0xd1a97a90ULL, std::uint64_t(d.vertex_count()));
  h = combine(h, std::uint64_t(d.arc_count()));
  for (std::uint64_t c : color) h = combine(h, c);
  return h;
}

bool isomorphic(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.arc_count() != b.arc_count()) return false;
  int n = a.vertex_count();
  auto ca = refined_colors(a);
  auto cb = refined_colors(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // map a-vertices in order; candidates restricted to equal colors
  std::vector<Vertex> map_ab(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || ca[v] != cb[w]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) {
        if (a.has_arc(v, u) != b.has_arc(w, map_ab[u])) ok = false;
        if (ok && a.has_arc(u, v) != b.has_arc(map_ab[u], w)) ok = false;
      }
      if (!ok) continue;
      map_ab[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
      map_ab[v] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

PropertyMemo make_property_memo() {
  return PropertyMemo(canonical_hash, isomorphic);
}

}  // namespace diperfect
