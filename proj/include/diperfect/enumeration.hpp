#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "diperfect/digraph.hpp"

namespace diperfect {

// Labeled loop-free digraphs on n vertices: each unordered pair independently
// takes one of 4 states (none, forward, backward, digon), so there are
// 4^(n(n-1)/2) of them.  Throws when the count overflows 64 bits (n > 8).
std::uint64_t labeled_digraph_count(int n);

// Digraph for a configuration index.  Pairs (u,v), u < v, are ordered
// lexicographically; pair p reads state (index >> 2p) & 3 with
// 0 none, 1 u->v, 2 v->u, 3 digon.
Digraph digraph_from_index(int n, std::uint64_t index);
std::uint64_t index_of_digraph(const Digraph& d);

// Deterministic stream over all configuration indices of size n.
class DigraphEnumerator {
 public:
  explicit DigraphEnumerator(int n, std::uint64_t start = 0)
      : n_(n), next_(start), total_(labeled_digraph_count(n)) {}

  bool done() const { return next_ >= total_; }
  std::uint64_t next_index() const { return next_; }
  std::uint64_t total() const { return total_; }

  Digraph next() { return digraph_from_index(n_, next_++); }

 private:
  int n_;
  std::uint64_t next_;
  std::uint64_t total_;
};

// Anti-directed odd cycle of length 2k+1 (k >= 2): even positions are sinks,
// every odd position except the last is a source.
Digraph make_anti_directed_odd_cycle(int k);

// Blocking odd cycle of length 2k+1 (k >= 1): x1 source, x2 sink, remaining
// cycle edges oriented forward.  k = 1 yields a transitive triangle.
Digraph make_blocking_odd_cycle(int k);

Digraph make_transitive_triangle();

// Arc-for-arc reproductions of the worked examples; id is one of
// 1a, 1b, 2a, 2b, 3a, 3b.
Digraph make_figure(const std::string& id);

// Uniform pair states from a seeded generator.
Digraph random_digraph(int n, std::uint64_t seed);

// Rejection/repair sampler for 3-anti-circulant digraphs: starts from a
// random digraph and adds each forced closing arc until a fixed point, then
// verifies.  Deterministic for a fixed seed.
Digraph random_3ac(int n, std::uint64_t seed);

}  // namespace diperfect
