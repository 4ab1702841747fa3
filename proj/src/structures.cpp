#include "diperfect/structures.hpp"

#include <algorithm>
#include <stdexcept>

namespace diperfect {

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::anti_p4: return "anti_p4";
    case WitnessKind::anti_directed_odd_cycle: return "anti_directed_odd_cycle";
    case WitnessKind::blocking_odd_cycle: return "blocking_odd_cycle";
    case WitnessKind::transitive_triangle: return "transitive_triangle";
    case WitnessKind::anti_circulant_violation: return "anti_circulant_violation";
  }
  return "?";
}

std::optional<WitnessKind> witness_kind_from_string(const std::string& name) {
  for (WitnessKind k : {WitnessKind::anti_p4, WitnessKind::anti_directed_odd_cycle,
                        WitnessKind::blocking_odd_cycle, WitnessKind::transitive_triangle,
                        WitnessKind::anti_circulant_violation})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

namespace {

bool all_distinct_in_range(const Digraph& d, const std::vector<Vertex>& vs) {
  std::vector<bool> seen(d.vertex_count(), false);
  for (Vertex v : vs) {
    if (v < 0 || v >= d.vertex_count()) return false;
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Source/sink within the cycle subdigraph D[X]: the only possible neighbors
// of x_j in D[X] are its two cyclic neighbors (the cycle is chordless).
bool position_is_source(const Digraph& d, const std::vector<Vertex>& cyc, std::size_t j) {
  std::size_t m = cyc.size();
  Vertex prev = cyc[(j + m - 1) % m];
  Vertex next = cyc[(j + 1) % m];
  return !d.has_arc(prev, cyc[j]) && !d.has_arc(next, cyc[j]);
}

bool position_is_sink(const Digraph& d, const std::vector<Vertex>& cyc, std::size_t j) {
  std::size_t m = cyc.size();
  Vertex prev = cyc[(j + m - 1) % m];
  Vertex next = cyc[(j + 1) % m];
  return !d.has_arc(cyc[j], prev) && !d.has_arc(cyc[j], next);
}

// Cyclic sequence whose induced subdigraph is a non-oriented cycle:
// consecutive vertices adjacent, non-consecutive vertices non-adjacent.
bool is_induced_cycle_order(const Digraph& d, const std::vector<Vertex>& cyc) {
  std::size_t m = cyc.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
      if (consecutive != d.adjacent(cyc[i], cyc[j])) return false;
    }
  return true;
}

// 1-based constrained positions for an anti-directed odd cycle of length
// 2k+1: 1, 2, 3, 4, 6, 8, ..., 2k.
std::vector<std::size_t> anti_directed_positions(std::size_t m) {
  std::vector<std::size_t> pos = {0, 1, 2, 3};
  for (std::size_t p = 6; p + 1 <= m; p += 2) pos.push_back(p - 1);
  return pos;
}

bool anti_directed_constraints(const Digraph& d, const std::vector<Vertex>& cyc) {
  for (std::size_t j : anti_directed_positions(cyc.size()))
    if (!position_is_source(d, cyc, j) && !position_is_sink(d, cyc, j)) return false;
  return true;
}

bool blocking_constraints(const Digraph& d, const std::vector<Vertex>& cyc) {
  return position_is_source(d, cyc, 0) && position_is_sink(d, cyc, 1);
}

// Scans every rotation and both reflections of each chordless odd cycle,
// keeping the lexicographically least sequence satisfying `constraints`.
template <typename Constraints>
std::optional<Witness> find_cycle_witness(const Digraph& d, int min_len, WitnessKind kind,
                                          Constraints constraints) {
  std::optional<std::vector<Vertex>> best;
  for (const auto& cyc : find_chordless_odd_cycles(d, min_len)) {
    std::size_t m = cyc.size();
    for (int dir : {+1, -1}) {
      for (std::size_t rot = 0; rot < m; ++rot) {
        std::vector<Vertex> seq(m);
        for (std::size_t j = 0; j < m; ++j)
          seq[j] = cyc[(rot + m + dir * j) % m];
        if (!constraints(d, seq)) continue;
        if (!best || seq < *best) best = seq;
      }
    }
  }
  if (!best) return std::nullopt;
  return Witness{kind, *best};
}

}  // namespace

bool witness_holds(const Digraph& d, const Witness& w) {
  const auto& vs = w.vertices;
  if (!all_distinct_in_range(d, vs)) return false;
  switch (w.kind) {
    case WitnessKind::anti_p4:
      return vs.size() == 4 && d.has_arc(vs[0], vs[1]) && d.has_arc(vs[2], vs[1]) &&
             d.has_arc(vs[2], vs[3]);
    case WitnessKind::anti_circulant_violation:
      return vs.size() == 4 && d.has_arc(vs[0], vs[1]) && d.has_arc(vs[2], vs[1]) &&
             d.has_arc(vs[2], vs[3]) && !d.has_arc(vs[3], vs[0]);
    case WitnessKind::transitive_triangle:
      return vs.size() == 3 && d.has_arc(vs[0], vs[1]) && d.has_arc(vs[1], vs[2]) &&
             d.has_arc(vs[0], vs[2]) && !d.has_arc(vs[1], vs[0]) && !d.has_arc(vs[2], vs[1]) &&
             !d.has_arc(vs[2], vs[0]);
    case WitnessKind::anti_directed_odd_cycle:
      return vs.size() >= 5 && vs.size() % 2 == 1 && is_induced_cycle_order(d, vs) &&
             anti_directed_constraints(d, vs);
    case WitnessKind::blocking_odd_cycle:
      return vs.size() >= 3 && vs.size() % 2 == 1 && is_induced_cycle_order(d, vs) &&
             blocking_constraints(d, vs);
  }
  return false;
}

std::optional<Witness> find_anti_p4(const Digraph& d) {
  int n = d.vertex_count();
  for (Vertex v1 = 0; v1 < n; ++v1)
    for (Vertex v2 = 0; v2 < n; ++v2) {
      if (v2 == v1 || !d.has_arc(v1, v2)) continue;
      for (Vertex v3 = 0; v3 < n; ++v3) {
        if (v3 == v1 || v3 == v2 || !d.has_arc(v3, v2)) continue;
        for (Vertex v4 = 0; v4 < n; ++v4) {
          if (v4 == v1 || v4 == v2 || v4 == v3 || !d.has_arc(v3, v4)) continue;
          return Witness{WitnessKind::anti_p4, {v1, v2, v3, v4}};
        }
      }
    }
  return std::nullopt;
}

std::vector<std::array<Vertex, 4>> all_anti_p4(const Digraph& d) {
  std::vector<std::array<Vertex, 4>> out;
  int n = d.vertex_count();
  for (Vertex v1 = 0; v1 < n; ++v1)
    for (Vertex v2 = 0; v2 < n; ++v2) {
      if (v2 == v1 || !d.has_arc(v1, v2)) continue;
      for (Vertex v3 = 0; v3 < n; ++v3) {
        if (v3 == v1 || v3 == v2 || !d.has_arc(v3, v2)) continue;
        for (Vertex v4 = 0; v4 < n; ++v4) {
          if (v4 == v1 || v4 == v2 || v4 == v3 || !d.has_arc(v3, v4)) continue;
          out.push_back({v1, v2, v3, v4});
        }
      }
    }
  return out;
}

std::optional<Witness> find_anti_circulant_violation(const Digraph& d) {
  for (const auto& t : all_anti_p4(d))
    if (!d.has_arc(t[3], t[0]))
      return Witness{WitnessKind::anti_circulant_violation, {t[0], t[1], t[2], t[3]}};
  return std::nullopt;
}

bool is_3_anti_circulant(const Digraph& d) {
  return !find_anti_circulant_violation(d).has_value();
}

std::vector<std::vector<Vertex>> find_chordless_odd_cycles(const Digraph& d, int min_len) {
  if (min_len < 3 || min_len % 2 == 0)
    throw std::invalid_argument("find_chordless_odd_cycles: min_len must be odd and >= 3");
  int n = d.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);  // underlying graph, sorted
  for (const Arc& e : underlying_edges(d)) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);

  // Grows chordless paths with minimum vertex path[0]; a candidate w must be
  // adjacent to the last vertex only, except possibly path[0] (closing).
  // Emitting only when path[1] < path.back() yields each cycle set once.
  auto extend = [&](auto&& self, Vertex s) -> void {
    Vertex last = path.back();
    for (Vertex w : adj[last]) {
      if (w <= s || on_path[w]) continue;
      bool adjacent_to_start = std::binary_search(adj[w].begin(), adj[w].end(), s);
      bool chord = false;
      for (std::size_t i = (adjacent_to_start ? 1 : 0); i + 1 < path.size() && !chord; ++i)
        if (std::binary_search(adj[w].begin(), adj[w].end(), path[i])) chord = true;
      if (chord) continue;
      if (adjacent_to_start) {
        std::size_t m = path.size() + 1;
        if (m >= 3 && m % 2 == 1 && m >= static_cast<std::size_t>(min_len) && path[1] < w) {
          std::vector<Vertex> cyc = path;
          cyc.push_back(w);
          cycles.push_back(std::move(cyc));
        }
        continue;  // extending past w would leave the chord w-s
      }
      path.push_back(w);
      on_path[w] = true;
      self(self, s);
      on_path[w] = false;
      path.pop_back();
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    for (Vertex first : adj[s]) {
      if (first <= s) continue;
      path.push_back(first);
      on_path[first] = true;
      extend(extend, s);
      on_path[first] = false;
      path.pop_back();
    }
    on_path[s] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::optional<Witness> find_induced_anti_directed_odd_cycle(const Digraph& d) {
  return find_cycle_witness(d, 5, WitnessKind::anti_directed_odd_cycle,
                            [](const Digraph& g, const std::vector<Vertex>& seq) {
                              return anti_directed_constraints(g, seq);
                            });
}

std::optional<Witness> find_induced_blocking_odd_cycle(const Digraph& d) {
  return find_cycle_witness(d, 3, WitnessKind::blocking_odd_cycle,
                            [](const Digraph& g, const std::vector<Vertex>& seq) {
                              return blocking_constraints(g, seq);
                            });
}

std::optional<Witness> find_induced_transitive_triangle(const Digraph& d) {
  int n = d.vertex_count();
  std::optional<std::vector<Vertex>> best;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (b == a || !d.has_arc(a, b) || d.has_arc(b, a)) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (d.has_arc(a, c) && d.has_arc(b, c) && !d.has_arc(c, a) && !d.has_arc(c, b)) {
          std::vector<Vertex> seq = {a, b, c};
          if (!best || seq < *best) best = seq;
        }
      }
    }
  if (!best) return std::nullopt;
  return Witness{WitnessKind::transitive_triangle, *best};
}

bool in_class_b(const Digraph& d) {
  return !find_induced_anti_directed_odd_cycle(d).has_value();
}

bool in_class_d(const Digraph& d) {
  return !find_induced_blocking_odd_cycle(d).has_value();
}

}  // namespace diperfect
