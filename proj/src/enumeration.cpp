#include "diperfect/enumeration.hpp"

#include <random>
#include <stdexcept>

#include "diperfect/structures.hpp"

namespace diperfect {

std::uint64_t labeled_digraph_count(int n) {
  if (n < 0) throw std::invalid_argument("labeled_digraph_count: negative n");
  int pairs = n * (n - 1) / 2;
  if (2 * pairs >= 64)
    throw std::invalid_argument("labeled_digraph_count: 4^" + std::to_string(pairs) +
                                " overflows 64 bits");
  return std::uint64_t{1} << (2 * pairs);
}

Digraph digraph_from_index(int n, std::uint64_t index) {
  if (index >= labeled_digraph_count(n))
    throw std::invalid_argument("digraph_from_index: index out of range");
  std::vector<Arc> arcs;
  int p = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++p) {
      switch ((index >> (2 * p)) & 3) {
        case 1: arcs.emplace_back(u, v); break;
        case 2: arcs.emplace_back(v, u); break;
        case 3:
          arcs.emplace_back(u, v);
          arcs.emplace_back(v, u);
          break;
        default: break;
      }
    }
  return Digraph(n, std::move(arcs));
}

std::uint64_t index_of_digraph(const Digraph& d) {
  int n = d.vertex_count();
  labeled_digraph_count(n);  // range check
  std::uint64_t index = 0;
  int p = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++p) {
      std::uint64_t state = (d.has_arc(u, v) ? 1 : 0) | (d.has_arc(v, u) ? 2 : 0);
      index |= state << (2 * p);
    }
  return index;
}

Digraph make_anti_directed_odd_cycle(int k) {
  if (k < 2) throw std::invalid_argument("anti-directed odd cycle needs k >= 2 (length >= 5)");
  int m = 2 * k + 1;
  std::vector<Arc> arcs;
  // cycle edges x_{2j-1} x_{2j} and x_{2j} x_{2j+1} oriented into x_{2j}
  for (int j = 1; j <= k; ++j) {
    arcs.emplace_back(2 * j - 2, 2 * j - 1);  // x_{2j-1} -> x_{2j}
    arcs.emplace_back(2 * j, 2 * j - 1);      // x_{2j+1} -> x_{2j}
  }
  arcs.emplace_back(0, m - 1);  // x_1 -> x_{2k+1}
  return Digraph(m, std::move(arcs));
}

Digraph make_blocking_odd_cycle(int k) {
  if (k < 1) throw std::invalid_argument("blocking odd cycle needs k >= 1 (length >= 3)");
  int m = 2 * k + 1;
  std::vector<Arc> arcs;
  arcs.emplace_back(0, 1);      // x_1 -> x_2
  arcs.emplace_back(2, 1);      // x_3 -> x_2
  arcs.emplace_back(0, m - 1);  // x_1 -> x_{2k+1}
  for (int j = 2; j + 1 < m; ++j) arcs.emplace_back(j, j + 1);
  return Digraph(m, std::move(arcs));
}

Digraph make_transitive_triangle() { return make_blocking_odd_cycle(1); }

Digraph make_figure(const std::string& id) {
  // 0-indexed arc lists; vertex v_i of the figures is index i-1
  if (id == "1a") return Digraph(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {0, 4}});
  if (id == "1b") return Digraph(7, {{0, 1}, {2, 1}, {0, 6}, {5, 6}, {5, 4}, {4, 3}, {2, 3}});
  if (id == "2a") return Digraph(5, {{0, 1}, {2, 1}, {2, 3}, {0, 4}, {3, 4}, {4, 3}});
  if (id == "2b") return Digraph(3, {{0, 1}, {0, 2}, {2, 1}});
  if (id == "3a") return Digraph(4, {{0, 1}, {2, 1}, {2, 3}, {3, 0}});
  if (id == "3b") return Digraph(3, {{0, 1}, {0, 2}, {1, 2}});
  throw std::invalid_argument("unknown figure id: " + id + " (expected 1a,1b,2a,2b,3a,3b)");
}

Digraph random_digraph(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_digraph: negative n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> state(0, 3);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      switch (state(rng)) {
        case 1: arcs.emplace_back(u, v); break;
        case 2: arcs.emplace_back(v, u); break;
        case 3:
          arcs.emplace_back(u, v);
          arcs.emplace_back(v, u);
          break;
        default: break;
      }
    }
  return Digraph(n, std::move(arcs));
}

Digraph random_3ac(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_3ac: n must be positive");
  Digraph d = random_digraph(n, seed);
  // add each forced closing arc until no anti-P4 is left open
  while (auto violation = find_anti_circulant_violation(d)) {
    std::vector<Arc> arcs = d.arcs();
    arcs.emplace_back(violation->vertices[3], violation->vertices[0]);
    d = Digraph(n, std::move(arcs));
  }
  if (!is_3_anti_circulant(d)) throw std::logic_error("random_3ac: repair did not converge");
  return d;
}

}  // namespace diperfect
