#include "diperfect/constructive.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "diperfect/stability.hpp"
#include "diperfect/structures.hpp"

namespace diperfect {

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::fallback_search: return "fallback_search";
    case Rule::sink_append: return "sink_append";
    case Rule::source_prepend: return "source_prepend";
    case Rule::arc_splice: return "arc_splice";
    case Rule::arc_splice_dual: return "arc_splice_dual";
    case Rule::sandwich: return "sandwich";
    case Rule::digon_triangle: return "digon_triangle";
    case Rule::pair_detach: return "pair_detach";
    case Rule::single_detach: return "single_detach";
    case Rule::pendant_prepend: return "pendant_prepend";
    case Rule::pendant_append: return "pendant_append";
    case Rule::s_head_splice: return "s_head_splice";
    case Rule::s_head_splice_dual: return "s_head_splice_dual";
    case Rule::transitive_triangle_case: return "transitive_triangle_case";
    case Rule::delegate_begin_end: return "delegate_begin_end";
  }
  return "?";
}

std::optional<Rule> rule_from_string(const std::string& name) {
  for (Rule r : {Rule::fallback_search, Rule::sink_append, Rule::source_prepend,
                 Rule::arc_splice, Rule::arc_splice_dual, Rule::sandwich, Rule::digon_triangle,
                 Rule::pair_detach, Rule::single_detach, Rule::pendant_prepend,
                 Rule::pendant_append, Rule::s_head_splice, Rule::s_head_splice_dual,
                 Rule::transitive_triangle_case, Rule::delegate_begin_end})
    if (name == to_string(r)) return r;
  return std::nullopt;
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

Mask path_mask(const Path& p) {
  Mask m = 0;
  for (Vertex v : p) m |= bit(v);
  return m;
}

VertexSet sorted_copy(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Per-level view with adjacency bitmasks (instances are desk scale, n <= 64).
struct Instance {
  const Digraph& d;
  const VertexSet& s;
  int n;
  std::vector<bool> in_s;
  Mask s_mask = 0;
  std::vector<Mask> out_m, in_m;

  Instance(const Digraph& d_, const VertexSet& s_)
      : d(d_), s(s_), n(d_.vertex_count()), in_s(n, false), out_m(n, 0), in_m(n, 0) {
    for (Vertex v : s) {
      in_s[v] = true;
      s_mask |= bit(v);
    }
    for (const Arc& a : d.arcs()) {
      out_m[a.first] |= bit(a.second);
      in_m[a.second] |= bit(a.first);
    }
  }

  Mask adj_m(Vertex v) const { return out_m[v] | in_m[v]; }
};

// Simple paths over non-S vertices, grouped by length ascending and
// lexicographic within a length.  The scanners take the first hit, so short
// instantiations (single vertices, short stubs) win, as in the proofs.
std::vector<Path> s_free_paths(const Instance& inst) {
  std::vector<Path> all, frontier;
  for (Vertex v = 0; v < inst.n; ++v)
    if (!inst.in_s[v]) frontier.push_back({v});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      all.push_back(p);
      Mask pm = path_mask(p);
      for (Vertex w : inst.d.out_neighbors(p.back())) {
        if (inst.in_s[w] || ((pm >> w) & 1)) continue;
        Path q = p;
        q.push_back(w);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return all;
}

// Paths of length >= 2 whose tail avoids S (the first vertex is free).
std::vector<Path> s_headed_paths(const Instance& inst) {
  std::vector<Path> all, frontier;
  for (Vertex v = 0; v < inst.n; ++v) frontier.push_back({v});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      if (p.size() >= 2) all.push_back(p);
      Mask pm = path_mask(p);
      for (Vertex w : inst.d.out_neighbors(p.back())) {
        if (inst.in_s[w] || ((pm >> w) & 1)) continue;
        Path q = p;
        q.push_back(w);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return all;
}

// Mirror: all but the last vertex avoid S.  An S-vertex may close a path but
// is never extended past.
std::vector<Path> s_tailed_paths(const Instance& inst) {
  std::vector<Path> all, frontier;
  for (Vertex v = 0; v < inst.n; ++v)
    if (!inst.in_s[v]) frontier.push_back({v});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      Mask pm = path_mask(p);
      for (Vertex w : inst.d.out_neighbors(p.back())) {
        if ((pm >> w) & 1) continue;
        Path q = p;
        q.push_back(w);
        if (q.size() >= 2) all.push_back(q);
        if (!inst.in_s[w]) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  // group by length to match the other enumerators' ordering
  std::stable_sort(all.begin(), all.end(), [](const Path& a, const Path& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return all;
}

Path path_suffix(const Path& p, int from) { return Path(p.begin() + from, p.end()); }
Path path_prefix(const Path& p, int upto) { return Path(p.begin(), p.begin() + upto + 1); }

// ---------------- scanners (begin-end catalog) ----------------

std::optional<Certificate> scan_sink_append(const Instance& inst, const std::vector<Path>& paths) {
  for (const Path& p : paths) {
    Mask pm = path_mask(p);
    for (Vertex u = 0; u < inst.n; ++u) {
      if (inst.in_s[u] || ((pm >> u) & 1)) continue;
      Mask outs = inst.out_m[u];
      if (outs == 0 || (outs & ~pm) != 0) continue;
      int i = 0;
      while (!inst.d.has_arc(u, p[i])) ++i;
      Certificate c;
      c.rule = Rule::sink_append;
      c.verts = {u};
      c.path = p;
      c.index = i;
      c.deleted = sorted_copy(path_suffix(p, i));
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> scan_source_prepend(const Instance& inst,
                                               const std::vector<Path>& paths) {
  for (const Path& p : paths) {
    Mask pm = path_mask(p);
    for (Vertex u = 0; u < inst.n; ++u) {
      if (inst.in_s[u] || ((pm >> u) & 1)) continue;
      Mask ins = inst.in_m[u];
      if (ins == 0 || (ins & ~pm) != 0) continue;
      int i = static_cast<int>(p.size()) - 1;
      while (!inst.d.has_arc(p[i], u)) --i;
      Certificate c;
      c.rule = Rule::source_prepend;
      c.verts = {u};
      c.path = p;
      c.index = i;
      c.deleted = sorted_copy(path_prefix(p, i));
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> scan_arc_splice(const Instance& inst, const std::vector<Path>& paths) {
  for (const Path& p : paths) {
    Mask pm = path_mask(p);
    for (Vertex u1 = 0; u1 < inst.n; ++u1) {
      if (inst.in_s[u1] || ((pm >> u1) & 1)) continue;
      Mask outs = inst.out_m[u1];
      Mask extra = outs & ~pm;
      if (std::popcount(extra) != 1 || (outs & pm) == 0) continue;
      Vertex u2 = std::countr_zero(extra);
      if (u2 == u1 || !inst.d.has_arc(p.back(), u2)) continue;
      int i = 0;
      while (!inst.d.has_arc(u1, p[i])) ++i;
      Certificate c;
      c.rule = Rule::arc_splice;
      c.verts = {u1, u2};
      c.path = p;
      c.index = i;
      c.deleted = sorted_copy(path_suffix(p, i));
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> scan_arc_splice_dual(const Instance& inst,
                                                const std::vector<Path>& paths) {
  for (const Path& p : paths) {
    Mask pm = path_mask(p);
    for (Vertex u2 = 0; u2 < inst.n; ++u2) {
      if (inst.in_s[u2] || ((pm >> u2) & 1)) continue;
      Mask ins = inst.in_m[u2];
      Mask extra = ins & ~pm;
      if (std::popcount(extra) != 1 || (ins & pm) == 0) continue;
      Vertex u1 = std::countr_zero(extra);
      if (u1 == u2 || !inst.d.has_arc(u1, p.front())) continue;
      int i = static_cast<int>(p.size()) - 1;
      while (!inst.d.has_arc(p[i], u2)) --i;
      Certificate c;
      c.rule = Rule::arc_splice_dual;
      c.verts = {u1, u2};
      c.path = p;
      c.index = i;
      c.deleted = sorted_copy(path_prefix(p, i));
      return c;
    }
  }
  return std::nullopt;
}

// Lexicographically first Hamilton cycle of D[members], starting at the
// smallest member; nullopt when D[members] is not hamiltonian.
std::optional<std::vector<Vertex>> hamilton_cycle(const Instance& inst, Mask members) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < inst.n; ++v)
    if ((members >> v) & 1) vs.push_back(v);
  if (vs.size() < 2) return std::nullopt;
  Vertex start = vs.front();
  std::vector<Vertex> cyc = {start};
  Mask used = bit(start);
  auto dfs = [&](auto&& self) -> bool {
    if (cyc.size() == vs.size()) return inst.d.has_arc(cyc.back(), start);
    for (Vertex w : inst.d.out_neighbors(cyc.back())) {
      if (!((members >> w) & 1) || ((used >> w) & 1)) continue;
      cyc.push_back(w);
      used |= bit(w);
      if (self(self)) return true;
      used &= ~bit(w);
      cyc.pop_back();
    }
    return false;
  };
  if (!dfs(dfs)) return std::nullopt;
  return cyc;
}

std::optional<Certificate> scan_sandwich(const Instance& inst) {
  if (inst.n < 2 || inst.n > 20) return std::nullopt;  // subset scan; desk scale only
  for (Mask m2 = 3; m2 < (Mask{1} << inst.n); ++m2) {
    if (std::popcount(m2) < 2) continue;
    if (std::popcount(m2 & inst.s_mask) > 1) continue;
    bool ok = true;
    for (Vertex x = 0; x < inst.n && ok; ++x) {
      if ((m2 >> x) & 1) continue;
      bool v1_side = (inst.out_m[x] & m2) == m2 && (inst.in_m[x] & m2) == 0;
      bool v3_side = (inst.in_m[x] & m2) == m2 && (inst.out_m[x] & m2) == 0;
      if (!v1_side && !v3_side) ok = false;
    }
    if (!ok) continue;
    auto cyc = hamilton_cycle(inst, m2);
    if (!cyc) continue;
    Mask in_s2 = m2 & inst.s_mask;
    Vertex kept = in_s2 != 0 ? std::countr_zero(in_s2) : std::countr_zero(m2);
    // rotate so the kept vertex comes last
    std::size_t idx = std::find(cyc->begin(), cyc->end(), kept) - cyc->begin();
    std::vector<Vertex> rotated(cyc->size());
    for (std::size_t j = 0; j < cyc->size(); ++j)
      rotated[j] = (*cyc)[(idx + 1 + j) % cyc->size()];
    Certificate c;
    c.rule = Rule::sandwich;
    c.verts = {kept};
    c.path = rotated;
    c.deleted = sorted_copy(std::vector<Vertex>(rotated.begin(), rotated.end() - 1));
    return c;
  }
  return std::nullopt;
}

std::optional<Certificate> scan_digon_triangle(const Instance& inst) {
  for (const Arc& a : inst.d.arcs()) {
    if (a.first > a.second || !inst.d.has_arc(a.second, a.first)) continue;
    Vertex x = a.first, y = a.second;
    if (inst.in_s[x] || inst.in_s[y]) continue;
    for (Vertex v3 : inst.s) {
      auto make = [&](Vertex v1, Vertex v2) {
        Certificate c;
        c.rule = Rule::digon_triangle;
        c.verts = {v1, v2, v3};
        c.deleted = sorted_copy({v1, v2});
        return c;
      };
      // directed triangle v1 -> v2 -> v3 -> v1 through the digon
      if (inst.d.has_arc(y, v3) && inst.d.has_arc(v3, x)) return make(x, y);
      if (inst.d.has_arc(x, v3) && inst.d.has_arc(v3, y)) return make(y, x);
    }
  }
  return std::nullopt;
}

std::optional<Certificate> scan_pair_detach(const Instance& inst) {
  for (Vertex v1 = 0; v1 < inst.n; ++v1) {
    if (inst.in_s[v1]) continue;
    Mask ins = inst.in_m[v1];
    if (std::popcount(ins) != 2 || (ins & inst.s_mask) != 0) continue;
    Vertex a = std::countr_zero(ins);
    Vertex b = std::countr_zero(ins & (ins - 1));
    for (Vertex v4 = 0; v4 < inst.n; ++v4) {
      if (inst.in_s[v4] || v4 == v1 || v4 == a || v4 == b) continue;
      Mask outs4 = inst.out_m[v4];
      if (outs4 == 0 || (outs4 & ~(bit(a) | bit(b))) != 0) continue;
      for (auto [v2, v3] : {std::pair{a, b}, std::pair{b, a}}) {
        if (!inst.d.has_arc(v4, v3)) continue;
        Certificate c;
        c.rule = Rule::pair_detach;
        c.verts = {v1, v2, v3, v4};
        c.deleted = sorted_copy({v2, v3});
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Certificate> scan_single_detach(const Instance& inst) {
  for (Vertex v1 = 0; v1 < inst.n; ++v1) {
    if (inst.in_s[v1]) continue;
    for (Vertex a = 0; a < inst.n; ++a) {
      if (inst.in_s[a] || a == v1 || !inst.d.has_arc(a, v1)) continue;
      for (Vertex b = a + 1; b < inst.n; ++b) {
        if (inst.in_s[b] || b == v1 || !inst.d.has_arc(b, v1)) continue;
        Mask nb = (inst.adj_m(a) | inst.adj_m(b)) & ~inst.s_mask;
        if (nb != bit(v1)) continue;
        Certificate c;
        c.rule = Rule::single_detach;
        c.verts = {v1, a, b};
        c.deleted = {v1};
        return c;
      }
    }
  }
  return std::nullopt;
}

// ---------------- scanners (alpha catalog) ----------------

std::optional<Certificate> scan_pendant_prepend(const Instance& inst) {
  for (const Arc& a : inst.d.arcs()) {
    if (inst.in_s[a.first]) continue;
    if (inst.in_m[a.second] != bit(a.first)) continue;
    Certificate c;
    c.rule = Rule::pendant_prepend;
    c.verts = {a.first, a.second};
    c.deleted = {a.first};
    return c;
  }
  return std::nullopt;
}

std::optional<Certificate> scan_pendant_append(const Instance& inst) {
  for (const Arc& a : inst.d.arcs()) {
    if (inst.in_s[a.second]) continue;
    if (inst.out_m[a.first] != bit(a.second)) continue;
    Certificate c;
    c.rule = Rule::pendant_append;
    c.verts = {a.first, a.second};
    c.deleted = {a.second};
    return c;
  }
  return std::nullopt;
}

std::optional<Certificate> scan_s_head_splice(const Instance& inst,
                                              const std::vector<Path>& paths) {
  for (const Path& p : paths) {
    Mask pm = path_mask(p);
    for (Vertex u = 0; u < inst.n; ++u) {
      if ((pm >> u) & 1) continue;
      if (!inst.d.has_arc(p.back(), u)) continue;
      if ((inst.in_m[u] & ~pm) != 0) continue;
      Certificate c;
      c.rule = Rule::s_head_splice;
      c.verts = {u};
      c.path = p;
      c.deleted = sorted_copy(path_suffix(p, 1));
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> scan_s_head_splice_dual(const Instance& inst,
                                                   const std::vector<Path>& paths) {
  for (const Path& p : paths) {
    Mask pm = path_mask(p);
    for (Vertex u = 0; u < inst.n; ++u) {
      if ((pm >> u) & 1) continue;
      if (!inst.d.has_arc(u, p.front())) continue;
      if ((inst.out_m[u] & ~pm) != 0) continue;
      Certificate c;
      c.rule = Rule::s_head_splice_dual;
      c.verts = {u};
      c.path = p;
      c.deleted = sorted_copy(path_prefix(p, static_cast<int>(p.size()) - 2));
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------- rule metadata, hypotheses, splices ----------------

namespace {

bool rule_allowed(Rule rule, PartitionMode mode) {
  switch (rule) {
    case Rule::fallback_search:
    case Rule::sink_append:
    case Rule::source_prepend:
    case Rule::arc_splice:
    case Rule::arc_splice_dual:
    case Rule::sandwich:
      return true;
    case Rule::digon_triangle:
    case Rule::pair_detach:
    case Rule::single_detach:
      return mode == PartitionMode::begin_end;
    case Rule::pendant_prepend:
    case Rule::pendant_append:
    case Rule::s_head_splice:
    case Rule::s_head_splice_dual:
    case Rule::transitive_triangle_case:
    case Rule::delegate_begin_end:
      return mode == PartitionMode::alpha;
  }
  return false;
}

bool fail(std::string* err, const std::string& message) {
  if (err) *err = message;
  return false;
}

bool distinct_in_range(const Digraph& d, const std::vector<Vertex>& vs, std::string* err) {
  std::vector<bool> seen(d.vertex_count(), false);
  for (Vertex v : vs) {
    if (v < 0 || v >= d.vertex_count()) return fail(err, "vertex out of range");
    if (seen[v]) return fail(err, "vertices not distinct");
    seen[v] = true;
  }
  return true;
}

bool disjoint_from(const VertexSet& s, const std::vector<Vertex>& vs) {
  for (Vertex v : vs)
    if (contains(s, v)) return false;
  return true;
}

VertexSet in_set(const Digraph& d, Vertex v) { return make_vertex_set(d.in_neighbors(v)); }
VertexSet out_set(const Digraph& d, Vertex v) { return make_vertex_set(d.out_neighbors(v)); }

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool hypotheses_ok(const Digraph& d, const VertexSet& s, PartitionMode mode,
                   const Certificate& c, std::string* err) {
  if (!rule_allowed(c.rule, mode)) return fail(err, "rule not valid in this mode");
  const Path& p = c.path;
  auto check_deleted = [&](std::vector<Vertex> expect) {
    if (c.deleted != sorted_copy(std::move(expect))) return fail(err, "deleted set mismatch");
    if (!disjoint_from(s, c.deleted)) return fail(err, "deleted set touches S");
    return true;
  };
  auto s_free_path_ok = [&]() {
    if (!is_path(d, p)) return fail(err, "P is not a path");
    if (!disjoint_from(s, p)) return fail(err, "P meets S");
    return true;
  };

  switch (c.rule) {
    case Rule::fallback_search:
      if (c.child) return fail(err, "fallback node must be a leaf");
      return true;

    case Rule::sink_append: {
      if (c.verts.size() != 1 || !s_free_path_ok()) return fail(err, "bad sink_append params");
      Vertex u = c.verts[0];
      std::vector<Vertex> all = p;
      all.push_back(u);
      if (!distinct_in_range(d, all, err)) return false;
      if (contains(s, u)) return fail(err, "u lies in S");
      VertexSet outs = out_set(d, u);
      if (outs.empty()) return fail(err, "u has no out-neighbors");
      if (!subset_of(outs, make_vertex_set(p))) return fail(err, "N+(u) not inside V(P)");
      if (c.index < 0 || c.index >= static_cast<int>(p.size()) || !d.has_arc(u, p[c.index]))
        return fail(err, "index not dominated by u");
      for (int j = 0; j < c.index; ++j)
        if (d.has_arc(u, p[j])) return fail(err, "index is not the minimum choice");
      return check_deleted(path_suffix(p, c.index));
    }

    case Rule::source_prepend: {
      if (c.verts.size() != 1 || !s_free_path_ok()) return fail(err, "bad source_prepend params");
      Vertex u = c.verts[0];
      std::vector<Vertex> all = p;
      all.push_back(u);
      if (!distinct_in_range(d, all, err)) return false;
      if (contains(s, u)) return fail(err, "u lies in S");
      VertexSet ins = in_set(d, u);
      if (ins.empty()) return fail(err, "u has no in-neighbors");
      if (!subset_of(ins, make_vertex_set(p))) return fail(err, "N-(u) not inside V(P)");
      if (c.index < 0 || c.index >= static_cast<int>(p.size()) || !d.has_arc(p[c.index], u))
        return fail(err, "index does not dominate u");
      for (int j = c.index + 1; j < static_cast<int>(p.size()); ++j)
        if (d.has_arc(p[j], u)) return fail(err, "index is not the maximum choice");
      return check_deleted(path_prefix(p, c.index));
    }

    case Rule::arc_splice: {
      if (c.verts.size() != 2 || !s_free_path_ok()) return fail(err, "bad arc_splice params");
      Vertex u1 = c.verts[0], u2 = c.verts[1];
      std::vector<Vertex> all = p;
      all.push_back(u1);
      all.push_back(u2);
      if (!distinct_in_range(d, all, err)) return false;
      if (contains(s, u1)) return fail(err, "u1 lies in S");
      if (!d.has_arc(u1, u2)) return fail(err, "missing arc u1->u2");
      if (!d.has_arc(p.back(), u2)) return fail(err, "missing arc last(P)->u2");
      VertexSet allowed = make_vertex_set(p);
      allowed = set_union(allowed, {u2});
      VertexSet outs = out_set(d, u1);
      if (!subset_of(outs, allowed)) return fail(err, "N+(u1) not inside V(P) u {u2}");
      if (set_intersection(outs, make_vertex_set(p)).empty())
        return fail(err, "u1 dominates no vertex of P");
      if (c.index < 0 || c.index >= static_cast<int>(p.size()) || !d.has_arc(u1, p[c.index]))
        return fail(err, "index not dominated by u1");
      for (int j = 0; j < c.index; ++j)
        if (d.has_arc(u1, p[j])) return fail(err, "index is not the minimum choice");
      return check_deleted(path_suffix(p, c.index));
    }

    case Rule::arc_splice_dual: {
      if (c.verts.size() != 2 || !s_free_path_ok()) return fail(err, "bad arc_splice_dual params");
      Vertex u1 = c.verts[0], u2 = c.verts[1];
      std::vector<Vertex> all = p;
      all.push_back(u1);
      all.push_back(u2);
      if (!distinct_in_range(d, all, err)) return false;
      if (contains(s, u2)) return fail(err, "u2 lies in S");
      if (!d.has_arc(u1, u2)) return fail(err, "missing arc u1->u2");
      if (!d.has_arc(u1, p.front())) return fail(err, "missing arc u1->first(P)");
      VertexSet allowed = make_vertex_set(p);
      allowed = set_union(allowed, {u1});
      VertexSet ins = in_set(d, u2);
      if (!subset_of(ins, allowed)) return fail(err, "N-(u2) not inside V(P) u {u1}");
      if (set_intersection(ins, make_vertex_set(p)).empty())
        return fail(err, "no vertex of P dominates u2");
      if (c.index < 0 || c.index >= static_cast<int>(p.size()) || !d.has_arc(p[c.index], u2))
        return fail(err, "index does not dominate u2");
      for (int j = c.index + 1; j < static_cast<int>(p.size()); ++j)
        if (d.has_arc(p[j], u2)) return fail(err, "index is not the maximum choice");
      return check_deleted(path_prefix(p, c.index));
    }

    case Rule::sandwich: {
      if (c.verts.size() != 1 || p.size() < 2) return fail(err, "bad sandwich params");
      if (!distinct_in_range(d, p, err)) return false;
      for (std::size_t j = 0; j + 1 < p.size(); ++j)
        if (!d.has_arc(p[j], p[j + 1])) return fail(err, "cycle order breaks an arc");
      if (!d.has_arc(p.back(), p.front())) return fail(err, "cycle does not close");
      VertexSet v2 = make_vertex_set(p);
      VertexSet v2_s = set_intersection(v2, s);
      if (v2_s.size() > 1) return fail(err, "V2 holds more than one S-vertex");
      Vertex kept = c.verts[0];
      if (kept != p.back()) return fail(err, "kept vertex must end the recorded cycle");
      Vertex expected_kept = !v2_s.empty() ? v2_s.front() : v2.front();
      if (kept != expected_kept) return fail(err, "kept vertex is not the canonical choice");
      for (Vertex x = 0; x < d.vertex_count(); ++x) {
        if (contains(v2, x)) continue;
        bool v1_side = true, v3_side = true;
        for (Vertex v : v2) {
          if (!d.has_arc(x, v) || d.has_arc(v, x)) v1_side = false;
          if (!d.has_arc(v, x) || d.has_arc(x, v)) v3_side = false;
        }
        if (!v1_side && !v3_side) return fail(err, "outside vertex fits neither side");
      }
      return check_deleted(std::vector<Vertex>(p.begin(), p.end() - 1));
    }

    case Rule::digon_triangle: {
      if (c.verts.size() != 3) return fail(err, "bad digon_triangle params");
      Vertex v1 = c.verts[0], v2 = c.verts[1], v3 = c.verts[2];
      if (!distinct_in_range(d, c.verts, err)) return false;
      if (!d.has_digon(v1, v2)) return fail(err, "v1v2 is not a digon");
      if (contains(s, v1) || contains(s, v2)) return fail(err, "digon touches S");
      if (!contains(s, v3)) return fail(err, "v3 not in S");
      if (!d.has_arc(v2, v3) || !d.has_arc(v3, v1))
        return fail(err, "no directed triangle v1->v2->v3->v1");
      return check_deleted({v1, v2});
    }

    case Rule::pair_detach: {
      if (c.verts.size() != 4) return fail(err, "bad pair_detach params");
      Vertex v1 = c.verts[0], v2 = c.verts[1], v3 = c.verts[2], v4 = c.verts[3];
      if (!distinct_in_range(d, c.verts, err)) return false;
      if (!disjoint_from(s, c.verts)) return fail(err, "configuration touches S");
      if (in_set(d, v1) != make_vertex_set({v2, v3}))
        return fail(err, "N-(v1) differs from {v2,v3}");
      VertexSet outs4 = out_set(d, v4);
      if (outs4.empty() || !subset_of(outs4, make_vertex_set({v2, v3})))
        return fail(err, "N+(v4) not inside {v2,v3}");
      if (!d.has_arc(v4, v3)) return fail(err, "missing arc v4->v3");
      return check_deleted({v2, v3});
    }

    case Rule::single_detach: {
      if (c.verts.size() != 3) return fail(err, "bad single_detach params");
      Vertex v1 = c.verts[0], v2 = c.verts[1], v3 = c.verts[2];
      if (!distinct_in_range(d, c.verts, err)) return false;
      if (!disjoint_from(s, c.verts)) return fail(err, "configuration touches S");
      if (!d.has_arc(v2, v1) || !d.has_arc(v3, v1)) return fail(err, "missing arcs into v1");
      VertexSet pair = make_vertex_set({v2, v3});
      VertexSet nb = set_difference(neighborhoods(d, pair).all, s);
      if (nb != VertexSet{v1}) return fail(err, "pair has non-S neighbors besides v1");
      return check_deleted({v1});
    }

    case Rule::pendant_prepend: {
      if (c.verts.size() != 2) return fail(err, "bad pendant_prepend params");
      Vertex v1 = c.verts[0], v2 = c.verts[1];
      if (!distinct_in_range(d, c.verts, err)) return false;
      if (contains(s, v1)) return fail(err, "v1 lies in S");
      if (!d.has_arc(v1, v2)) return fail(err, "missing arc v1->v2");
      if (in_set(d, v2) != VertexSet{v1}) return fail(err, "N-(v2) differs from {v1}");
      return check_deleted({v1});
    }

    case Rule::pendant_append: {
      if (c.verts.size() != 2) return fail(err, "bad pendant_append params");
      Vertex v1 = c.verts[0], v2 = c.verts[1];
      if (!distinct_in_range(d, c.verts, err)) return false;
      if (contains(s, v2)) return fail(err, "v2 lies in S");
      if (!d.has_arc(v1, v2)) return fail(err, "missing arc v1->v2");
      if (out_set(d, v1) != VertexSet{v2}) return fail(err, "N+(v1) differs from {v2}");
      return check_deleted({v2});
    }

    case Rule::s_head_splice: {
      if (c.verts.size() != 1 || p.size() < 2) return fail(err, "bad s_head_splice params");
      Vertex u = c.verts[0];
      if (!is_path(d, p)) return fail(err, "P is not a path");
      std::vector<Vertex> all = p;
      all.push_back(u);
      if (!distinct_in_range(d, all, err)) return false;
      for (std::size_t j = 1; j < p.size(); ++j)
        if (contains(s, p[j])) return fail(err, "tail of P meets S");
      if (!d.has_arc(p.back(), u)) return fail(err, "missing arc last(P)->u");
      if (!subset_of(in_set(d, u), make_vertex_set(p))) return fail(err, "N-(u) not inside V(P)");
      return check_deleted(path_suffix(p, 1));
    }

    case Rule::s_head_splice_dual: {
      if (c.verts.size() != 1 || p.size() < 2) return fail(err, "bad s_head_splice_dual params");
      Vertex u = c.verts[0];
      if (!is_path(d, p)) return fail(err, "P is not a path");
      std::vector<Vertex> all = p;
      all.push_back(u);
      if (!distinct_in_range(d, all, err)) return false;
      for (std::size_t j = 0; j + 1 < p.size(); ++j)
        if (contains(s, p[j])) return fail(err, "head of P meets S");
      if (!d.has_arc(u, p.front())) return fail(err, "missing arc u->first(P)");
      if (!subset_of(out_set(d, u), make_vertex_set(p)))
        return fail(err, "N+(u) not inside V(P)");
      return check_deleted(path_prefix(p, static_cast<int>(p.size()) - 2));
    }

    case Rule::transitive_triangle_case: {
      if (c.verts.size() != 3 && c.verts.size() != 4)
        return fail(err, "bad transitive_triangle_case params");
      Vertex v1 = c.verts[0], v2 = c.verts[1], v3 = c.verts[2];
      if (!distinct_in_range(d, c.verts, err)) return false;
      bool induced_tt = d.has_arc(v1, v2) && d.has_arc(v2, v3) && d.has_arc(v1, v3) &&
                        !d.has_arc(v2, v1) && !d.has_arc(v3, v2) && !d.has_arc(v3, v1);
      if (!induced_tt) return fail(err, "(v1,v2,v3) is not an induced transitive triangle");
      if (c.variant != 0 && c.variant != 1) return fail(err, "unknown variant");
      if (c.variant == 0) {
        if (contains(s, v1) || contains(s, v2)) return fail(err, "deleted corner meets S");
        VertexSet extra = set_difference(in_set(d, v3), {std::min(v1, v2), std::max(v1, v2)});
        if (c.verts.size() == 4) {
          Vertex v4 = c.verts[3];
          if (extra != VertexSet{v4}) return fail(err, "v4 is not the unique extra in-neighbor");
          if (!d.has_arc(v4, v1)) return fail(err, "missing arc v4->v1");
        } else if (!extra.empty()) {
          return fail(err, "unrecorded extra in-neighbor of v3");
        }
        return check_deleted({v1, v2});
      }
      if (contains(s, v2) || contains(s, v3)) return fail(err, "deleted corner meets S");
      VertexSet extra = set_difference(out_set(d, v1), {std::min(v2, v3), std::max(v2, v3)});
      if (c.verts.size() == 4) {
        Vertex v4 = c.verts[3];
        if (extra != VertexSet{v4}) return fail(err, "v4 is not the unique extra out-neighbor");
        if (!d.has_arc(v3, v4)) return fail(err, "missing arc v3->v4");
      } else if (!extra.empty()) {
        return fail(err, "unrecorded extra out-neighbor of v1");
      }
      return check_deleted({v2, v3});
    }

    case Rule::delegate_begin_end:
      if (!c.verts.empty() || !c.deleted.empty()) return fail(err, "delegate takes no params");
      return true;
  }
  return fail(err, "unknown rule");
}

// Locates the path containing v; partitions are vertex-disjoint.
int path_of(const PathPartition& pp, Vertex v) {
  for (std::size_t i = 0; i < pp.paths.size(); ++i)
    for (Vertex w : pp.paths[i])
      if (w == v) return static_cast<int>(i);
  return -1;
}

int position_in(const Path& p, Vertex v) {
  return static_cast<int>(std::find(p.begin(), p.end(), v) - p.begin());
}

Path concat(std::initializer_list<Path> parts) {
  Path out;
  for (const Path& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Applies the node's splice to the child partition (already in parent ids).
std::optional<PathPartition> rule_splice(const Digraph& d, const Certificate& c,
                                         PathPartition pp, std::string* err) {
  auto fail_splice = [&](const std::string& m) -> std::optional<PathPartition> {
    if (err) *err = m;
    return std::nullopt;
  };
  auto replace = [&](int idx, Path np) {
    pp.paths[idx] = std::move(np);
    return pp;
  };
  const Path& p = c.path;

  switch (c.rule) {
    case Rule::fallback_search:
      return pp;  // leaf partitions pass through untouched

    case Rule::delegate_begin_end:
      return pp;

    case Rule::sink_append: {
      Vertex u = c.verts[0];
      int r = path_of(pp, u);
      if (r < 0 || pp.paths[r].back() != u)
        return fail_splice("child path does not end at u (sink_append)");
      return replace(r, concat({pp.paths[r], path_suffix(p, c.index)}));
    }

    case Rule::source_prepend: {
      Vertex u = c.verts[0];
      int r = path_of(pp, u);
      if (r < 0 || pp.paths[r].front() != u)
        return fail_splice("child path does not start at u (source_prepend)");
      return replace(r, concat({path_prefix(p, c.index), pp.paths[r]}));
    }

    case Rule::arc_splice: {
      Vertex u1 = c.verts[0], u2 = c.verts[1];
      int r = path_of(pp, u1);
      if (r < 0) return fail_splice("u1 missing from child partition");
      const Path& rp = pp.paths[r];
      Path suffix = path_suffix(p, c.index);
      if (rp.back() == u1) return replace(r, concat({rp, suffix}));
      int pos = position_in(rp, u1);
      if (rp[pos + 1] != u2)
        return fail_splice("u1 is followed by a vertex other than u2 (arc_splice)");
      Path r1(rp.begin(), rp.begin() + pos + 1);
      Path r2(rp.begin() + pos + 1, rp.end());
      return replace(r, concat({r1, suffix, r2}));
    }

    case Rule::arc_splice_dual: {
      Vertex u1 = c.verts[0], u2 = c.verts[1];
      int r = path_of(pp, u2);
      if (r < 0) return fail_splice("u2 missing from child partition");
      const Path& rp = pp.paths[r];
      Path prefix = path_prefix(p, c.index);
      if (rp.front() == u2) return replace(r, concat({prefix, rp}));
      int pos = position_in(rp, u2);
      if (rp[pos - 1] != u1)
        return fail_splice("u2 is preceded by a vertex other than u1 (arc_splice_dual)");
      Path r1(rp.begin(), rp.begin() + pos);
      Path r2(rp.begin() + pos, rp.end());
      return replace(r, concat({r1, prefix, r2}));
    }

    case Rule::sandwich: {
      Vertex kept = c.verts[0];
      Path remainder(p.begin(), p.end() - 1);  // cycle minus the kept vertex
      int r = path_of(pp, kept);
      if (r < 0) return fail_splice("kept vertex missing from child partition");
      const Path& rp = pp.paths[r];
      int pos = position_in(rp, kept);
      if (pos == 0) {
        // kept leads its path: kept, remainder, rest;  v_{k-1} -> w must hold
        Path rest(rp.begin() + 1, rp.end());
        if (!rest.empty() && !d.has_arc(remainder.back(), rest.front()))
          return fail_splice("cycle remainder does not reach the path tail (sandwich)");
        return replace(r, concat({{kept}, remainder, rest}));
      }
      Path head(rp.begin(), rp.begin() + pos);
      Path tail(rp.begin() + pos, rp.end());  // starts with kept
      if (!d.has_arc(head.back(), remainder.front()))
        return fail_splice("predecessor does not dominate the cycle remainder (sandwich)");
      return replace(r, concat({head, remainder, tail}));
    }

    case Rule::digon_triangle: {
      Vertex v1 = c.verts[0], v2 = c.verts[1], v3 = c.verts[2];
      int r = path_of(pp, v3);
      if (r < 0) return fail_splice("v3 missing from child partition");
      const Path& rp = pp.paths[r];
      if (rp.size() == 1) return replace(r, {v1, v2, v3});
      if (rp.front() == v3) {
        Vertex last = rp.back();
        if (d.has_arc(last, v1)) return replace(r, concat({rp, {v1, v2}}));
        if (d.has_arc(last, v2)) return replace(r, concat({rp, {v2, v1}}));
        return fail_splice("walk end dominates neither digon vertex (digon_triangle)");
      }
      if (rp.back() == v3) {
        Vertex first = rp.front();
        if (d.has_arc(v1, first)) return replace(r, concat({{v2, v1}, rp}));
        if (d.has_arc(v2, first)) return replace(r, concat({{v1, v2}, rp}));
        return fail_splice("walk start dominated by neither digon vertex (digon_triangle)");
      }
      return fail_splice("v3 interior to its path in a begin-end partition (digon_triangle)");
    }

    case Rule::pair_detach: {
      Vertex v1 = c.verts[0], v2 = c.verts[1], v3 = c.verts[2], v4 = c.verts[3];
      int r1 = path_of(pp, v1);
      int r2 = path_of(pp, v4);
      if (r1 < 0 || r2 < 0) return fail_splice("v1 or v4 missing from child partition");
      if (r1 == r2) return fail_splice("v1 and v4 share a path (pair_detach)");
      if (pp.paths[r1].front() != v1) return fail_splice("v1 is not a path start (pair_detach)");
      if (pp.paths[r2].back() != v4) return fail_splice("v4 is not a path end (pair_detach)");
      pp.paths[r1] = concat({{v2}, pp.paths[r1]});
      pp.paths[r2] = concat({pp.paths[r2], {v3}});
      return pp;
    }

    case Rule::single_detach: {
      Vertex v1 = c.verts[0], v2 = c.verts[1], v3 = c.verts[2];
      int r1 = path_of(pp, v2);
      int r2 = path_of(pp, v3);
      if (r1 < 0 || r2 < 0) return fail_splice("v2 or v3 missing from child partition");
      if (r1 == r2) return fail_splice("v2 and v3 share a path (single_detach)");
      if (pp.paths[r1].back() == v2) return replace(r1, concat({pp.paths[r1], {v1}}));
      if (pp.paths[r2].back() == v3) return replace(r2, concat({pp.paths[r2], {v1}}));
      const Path& p1 = pp.paths[r1];
      const Path& p2 = pp.paths[r2];
      if (p1.size() != 2 || p1.front() != v2 || p2.size() != 2 || p2.front() != v3)
        return fail_splice("expected two length-one paths led by v2 and v3 (single_detach)");
      Vertex w1 = p1[1], w2 = p2[1];
      if (!d.has_arc(w2, v2) || !d.has_arc(w1, v3))
        return fail_splice("forced cross arcs absent (single_detach)");
      pp.paths[r1] = {w2, v2, v1};
      pp.paths[r2] = {w1, v3};
      return pp;
    }

    case Rule::pendant_prepend: {
      Vertex v1 = c.verts[0], v2 = c.verts[1];
      int r = path_of(pp, v2);
      if (r < 0 || pp.paths[r].front() != v2)
        return fail_splice("child path does not start at v2 (pendant_prepend)");
      return replace(r, concat({{v1}, pp.paths[r]}));
    }

    case Rule::pendant_append: {
      Vertex v1 = c.verts[0], v2 = c.verts[1];
      int r = path_of(pp, v1);
      if (r < 0 || pp.paths[r].back() != v1)
        return fail_splice("child path does not end at v1 (pendant_append)");
      return replace(r, concat({pp.paths[r], {v2}}));
    }

    case Rule::s_head_splice: {
      Vertex u = c.verts[0];
      int r = path_of(pp, u);
      if (r < 0) return fail_splice("u missing from child partition");
      const Path& rp = pp.paths[r];
      Path tail = path_suffix(p, 1);
      if (rp.front() == u) return replace(r, concat({tail, rp}));
      int pos = position_in(rp, u);
      if (rp[pos - 1] != p.front())
        return fail_splice("u is preceded by a vertex other than first(P) (s_head_splice)");
      Path r1(rp.begin(), rp.begin() + pos);
      Path r2(rp.begin() + pos, rp.end());
      return replace(r, concat({r1, tail, r2}));
    }

    case Rule::s_head_splice_dual: {
      Vertex u = c.verts[0];
      int r = path_of(pp, u);
      if (r < 0) return fail_splice("u missing from child partition");
      const Path& rp = pp.paths[r];
      Path head(p.begin(), p.end() - 1);
      if (rp.back() == u) return replace(r, concat({rp, head}));
      int pos = position_in(rp, u);
      if (rp[pos + 1] != p.back())
        return fail_splice("u is followed by a vertex other than last(P) (s_head_splice_dual)");
      Path r1(rp.begin(), rp.begin() + pos + 1);
      Path r2(rp.begin() + pos + 1, rp.end());
      return replace(r, concat({r1, head, r2}));
    }

    case Rule::transitive_triangle_case: {
      Vertex v1 = c.verts[0], v2 = c.verts[1], v3 = c.verts[2];
      bool have_v4 = c.verts.size() == 4;
      if (c.variant == 0) {
        int r = path_of(pp, v3);
        if (r < 0) return fail_splice("v3 missing from child partition");
        const Path& rp = pp.paths[r];
        if (rp.front() == v3) return replace(r, concat({{v1, v2}, rp}));
        int pos = position_in(rp, v3);
        if (!have_v4 || rp[pos - 1] != c.verts[3])
          return fail_splice("v3 preceded by an unexpected vertex (transitive_triangle_case)");
        Path r1(rp.begin(), rp.begin() + pos);
        Path r2(rp.begin() + pos, rp.end());
        return replace(r, concat({r1, {v1, v2}, r2}));
      }
      int r = path_of(pp, v1);
      if (r < 0) return fail_splice("v1 missing from child partition");
      const Path& rp = pp.paths[r];
      if (rp.back() == v1) return replace(r, concat({rp, {v2, v3}}));
      int pos = position_in(rp, v1);
      if (!have_v4 || rp[pos + 1] != c.verts[3])
        return fail_splice("v1 followed by an unexpected vertex (transitive_triangle_case)");
      Path r1(rp.begin(), rp.begin() + pos + 1);
      Path r2(rp.begin() + pos + 1, rp.end());
      return replace(r, concat({r1, {v2, v3}, r2}));
    }
  }
  return fail_splice("unknown rule");
}

// ---------------- builder ----------------

BuildResult build_core(const Digraph& d, const VertexSet& s, PartitionMode mode);

BuildResult fallback(const Digraph& d, const VertexSet& s, PartitionMode mode) {
  auto pp = mode == PartitionMode::begin_end ? find_SBE_path_partition(d, s)
                                             : find_S_path_partition(d, s);
  if (!pp)
    throw std::logic_error(
        "constructive fallback: exhaustive search found no partition; this contradicts the "
        "replayed theorems for 3-anti-circulant inputs");
  BuildResult result;
  result.partition = *pp;
  result.certificate.rule = Rule::fallback_search;
  result.certificate.leaf = *pp;
  return result;
}

BuildResult apply_reduction(const Digraph& d, const VertexSet& s, PartitionMode mode,
                            Certificate node) {
  std::string err;
  if (!hypotheses_ok(d, s, mode, node, &err))
    throw std::logic_error("constructive scanner produced an invalid rule instance: " + err);

  VertexSet kept = set_difference(full_vertex_set(d.vertex_count()), node.deleted);
  InducedSubdigraph sub = induced_subdigraph(d, kept);
  VertexSet s_child;
  for (Vertex v : s) s_child.push_back(sub.to_sub[v]);

  PartitionMode child_mode =
      node.rule == Rule::delegate_begin_end ? PartitionMode::begin_end : mode;
  BuildResult child = build_core(sub.graph, s_child, child_mode);

  PathPartition child_pp;
  for (const Path& p : child.partition.paths) {
    Path mapped;
    for (Vertex v : p) mapped.push_back(sub.to_parent[v]);
    child_pp.paths.push_back(std::move(mapped));
  }

  auto pp = rule_splice(d, node, std::move(child_pp), &err);
  if (!pp) throw std::logic_error("constructive splice failed after a valid scan: " + err);
  if (!is_admissible(d, s, *pp, mode))
    throw std::logic_error("constructive splice produced an inadmissible partition");

  node.child = std::make_unique<Certificate>(std::move(child.certificate));
  BuildResult result;
  result.partition = std::move(*pp);
  result.certificate = std::move(node);
  return result;
}

// Resolves the induced-transitive-triangle case of the alpha construction to
// a single checked rule instance; nullopt sends the caller to the fallback.
std::optional<Certificate> plan_transitive_triangle(const Instance& inst) {
  auto tt = find_induced_transitive_triangle(inst.d);
  if (!tt) return std::nullopt;
  Vertex v1 = tt->vertices[0], v2 = tt->vertices[1], v3 = tt->vertices[2];
  const Digraph& d = inst.d;

  auto validated = [&](Certificate c) -> std::optional<Certificate> {
    std::string err;
    if (hypotheses_ok(d, inst.s, PartitionMode::alpha, c, &err)) return c;
    return std::nullopt;
  };

  if (!inst.in_s[v1] && !inst.in_s[v2]) {
    Certificate c;
    c.rule = Rule::transitive_triangle_case;
    c.variant = 0;
    c.verts = {v1, v2, v3};
    VertexSet extra = set_difference(in_set(d, v3), make_vertex_set({v1, v2}));
    if (extra.size() > 1) return std::nullopt;
    if (extra.size() == 1) c.verts.push_back(extra.front());
    c.deleted = sorted_copy({v1, v2});
    return validated(std::move(c));
  }
  if (!inst.in_s[v2] && !inst.in_s[v3]) {
    Certificate c;
    c.rule = Rule::transitive_triangle_case;
    c.variant = 1;
    c.verts = {v1, v2, v3};
    VertexSet extra = set_difference(out_set(d, v1), make_vertex_set({v2, v3}));
    if (extra.size() > 1) return std::nullopt;
    if (extra.size() == 1) c.verts.push_back(extra.front());
    c.deleted = sorted_copy({v2, v3});
    return validated(std::move(c));
  }
  if (!inst.in_s[v2]) return std::nullopt;  // the case split above is exhaustive for stable S

  // v2 in S.  Reattach v3 through a short path ending at v1, or drop v3.
  VertexSet extra = set_difference(in_set(d, v3), make_vertex_set({v1, v2}));
  if (extra.size() == 1) {
    Vertex v4 = extra.front();
    Certificate c;
    c.rule = Rule::s_head_splice;
    c.verts = {v3};
    c.path = {v2, v4, v1};
    c.deleted = sorted_copy({v4, v1});
    return validated(std::move(c));
  }
  if (!extra.empty()) return std::nullopt;
  if (out_set(d, v2) == VertexSet{v3}) {
    Certificate c;
    c.rule = Rule::pendant_append;
    c.verts = {v2, v3};
    c.deleted = {v3};
    return validated(std::move(c));
  }
  VertexSet others = set_difference(out_set(d, v2), VertexSet{v3});
  if (others.empty()) return std::nullopt;
  Certificate c;
  c.rule = Rule::s_head_splice;
  c.verts = {v3};
  c.path = {v2, others.front(), v1};
  c.deleted = sorted_copy({others.front(), v1});
  return validated(std::move(c));
}

BuildResult build_core(const Digraph& d, const VertexSet& s, PartitionMode mode) {
  Instance inst(d, s);
  std::optional<Certificate> plan;

  if (mode == PartitionMode::begin_end) {
    std::vector<Path> paths = s_free_paths(inst);
    plan = scan_sink_append(inst, paths);
    if (!plan) plan = scan_source_prepend(inst, paths);
    if (!plan) plan = scan_arc_splice(inst, paths);
    if (!plan) plan = scan_arc_splice_dual(inst, paths);
    if (!plan) plan = scan_sandwich(inst);
    if (!plan) plan = scan_digon_triangle(inst);
    if (!plan) plan = scan_pair_detach(inst);
    if (!plan) plan = scan_single_detach(inst);
  } else {
    plan = scan_pendant_prepend(inst);
    if (!plan) plan = scan_pendant_append(inst);
    if (!plan) plan = scan_s_head_splice(inst, s_headed_paths(inst));
    if (!plan) plan = scan_s_head_splice_dual(inst, s_tailed_paths(inst));
    if (!plan) {
      if (in_class_d(d)) {
        Certificate c;
        c.rule = Rule::delegate_begin_end;
        plan = std::move(c);
      } else {
        plan = plan_transitive_triangle(inst);
      }
    }
  }

  if (!plan) return fallback(d, s, mode);
  return apply_reduction(d, s, mode, std::move(*plan));
}

void check_build_preconditions(const Digraph& d, const VertexSet& s, bool require_class_d) {
  if (d.vertex_count() > 64)
    throw std::invalid_argument("constructive builder: vertex count above the supported bound");
  if (!is_3_anti_circulant(d))
    throw std::invalid_argument("constructive builder: digraph is not 3-anti-circulant");
  if (require_class_d && !in_class_d(d))
    throw std::invalid_argument(
        "constructive builder: digraph contains an induced blocking odd cycle");
  if (!is_stable(d, s))
    throw std::invalid_argument("constructive builder: S is not stable");
  if (static_cast<int>(s.size()) != stable_sets(d).alpha)
    throw std::invalid_argument("constructive builder: S is not a maximum stable set");
}

}  // namespace

BuildResult build_SBE_partition(const Digraph& d, const VertexSet& s) {
  check_build_preconditions(d, s, /*require_class_d=*/true);
  BuildResult result = build_core(d, s, PartitionMode::begin_end);
  if (!is_admissible(d, s, result.partition, PartitionMode::begin_end))
    throw std::logic_error("build_SBE_partition produced an inadmissible partition");
  return result;
}

BuildResult build_S_partition(const Digraph& d, const VertexSet& s) {
  check_build_preconditions(d, s, /*require_class_d=*/false);
  BuildResult result = build_core(d, s, PartitionMode::alpha);
  if (!is_admissible(d, s, result.partition, PartitionMode::alpha))
    throw std::logic_error("build_S_partition produced an inadmissible partition");
  return result;
}

namespace {

std::optional<PathPartition> replay(const Digraph& d, const VertexSet& s, PartitionMode mode,
                                    const Certificate& c, int depth, std::string* err) {
  auto node_fail = [&](const std::string& m) -> std::optional<PathPartition> {
    if (err)
      *err = "node depth " + std::to_string(depth) + " (" + to_string(c.rule) + "): " + m;
    return std::nullopt;
  };

  std::string local;
  if (!hypotheses_ok(d, s, mode, c, &local)) return node_fail(local);

  if (c.rule == Rule::fallback_search) {
    if (!is_admissible(d, s, c.leaf, mode))
      return node_fail("leaf partition is not admissible");
    return c.leaf;
  }

  if (!c.child) return node_fail("missing child certificate");
  if (c.rule != Rule::delegate_begin_end && c.deleted.empty())
    return node_fail("reduction deletes no vertex");

  VertexSet kept = set_difference(full_vertex_set(d.vertex_count()), c.deleted);
  InducedSubdigraph sub = induced_subdigraph(d, kept);
  VertexSet s_child;
  for (Vertex v : s) {
    if (sub.to_sub[v] < 0) return node_fail("deleted set touches S");
    s_child.push_back(sub.to_sub[v]);
  }

  PartitionMode child_mode =
      c.rule == Rule::delegate_begin_end ? PartitionMode::begin_end : mode;
  auto child_pp = replay(sub.graph, s_child, child_mode, *c.child, depth + 1, err);
  if (!child_pp) return std::nullopt;

  PathPartition mapped;
  for (const Path& p : child_pp->paths) {
    Path q;
    for (Vertex v : p) q.push_back(sub.to_parent[v]);
    mapped.paths.push_back(std::move(q));
  }

  auto pp = rule_splice(d, c, std::move(mapped), &local);
  if (!pp) return node_fail(local);
  if (!is_admissible(d, s, *pp, mode))
    return node_fail("splice produced an inadmissible partition");
  return pp;
}

}  // namespace

VerifyResult verify_certificate(const Digraph& d, const VertexSet& s, const PathPartition& pp,
                                const Certificate& certificate, PartitionMode mode) {
  std::string err;
  auto replayed = replay(d, s, mode, certificate, 0, &err);
  if (!replayed) return {false, err};
  if (!partitions_equal(*replayed, pp))
    return {false, "replayed partition differs from the recorded one"};
  return {true, ""};
}

CertificateStats certificate_stats(const Certificate& certificate) {
  CertificateStats stats;
  const Certificate* node = &certificate;
  while (node) {
    ++stats.nodes;
    if (node->rule == Rule::fallback_search) ++stats.fallback_nodes;
    node = node->child.get();
  }
  return stats;
}

}  // namespace diperfect
