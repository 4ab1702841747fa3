#include "diperfect/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "diperfect/stability.hpp"

namespace diperfect {

bool is_path_partition(const Digraph& d, const PathPartition& pp) {
  std::vector<bool> covered(d.vertex_count(), false);
  std::size_t total = 0;
  for (const Path& p : pp.paths) {
    if (!is_path(d, p)) return false;
    for (Vertex v : p) {
      if (covered[v]) return false;
      covered[v] = true;
    }
    total += p.size();
  }
  return total == static_cast<std::size_t>(d.vertex_count());
}

bool is_orthogonal(const VertexSet& s, const PathPartition& pp) {
  for (const Path& p : pp.paths) {
    int hits = 0;
    for (Vertex v : p)
      if (contains(s, v)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

bool endpoints_cover(const VertexSet& s, const PathPartition& pp) {
  std::vector<bool> at_end(s.size(), false);
  for (const Path& p : pp.paths)
    for (Vertex v : {p.front(), p.back()}) {
      auto it = std::lower_bound(s.begin(), s.end(), v);
      if (it != s.end() && *it == v) at_end[it - s.begin()] = true;
    }
  return std::all_of(at_end.begin(), at_end.end(), [](bool b) { return b; });
}

bool is_admissible(const Digraph& d, const VertexSet& s, const PathPartition& pp,
                   PartitionMode mode) {
  if (!is_path_partition(d, pp)) return false;
  if (!is_orthogonal(s, pp)) return false;
  if (mode == PartitionMode::begin_end && !endpoints_cover(s, pp)) return false;
  return true;
}

PathPartition normalized(PathPartition pp) {
  std::sort(pp.paths.begin(), pp.paths.end());
  return pp;
}

bool partitions_equal(const PathPartition& a, const PathPartition& b) {
  return normalized(a).paths == normalized(b).paths;
}

namespace {

struct Searcher {
  const Digraph& d;
  const VertexSet& s;
  bool be_mode;
  int n;
  std::vector<bool> in_s;
  std::vector<bool> covered;
  std::vector<Path> chosen;
  bool found = false;
  PathPartition result;

  Searcher(const Digraph& d_, const VertexSet& s_, bool be)
      : d(d_), s(s_), be_mode(be), n(d_.vertex_count()), in_s(n, false), covered(n, false) {
    for (Vertex v : s) in_s[v] = true;
  }

  bool usable(Vertex v) const { return !in_s[v] && !covered[v]; }

  void complete() {
    if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
      found = true;
      result.paths = chosen;
    }
  }

  void accept_path(std::size_t seed_idx, Path& path) {
    chosen.push_back(path);
    solve(seed_idx + 1);
    chosen.pop_back();
  }

  // Right extension: append out-neighbors of the path's tail.  Offering the
  // "stop here" option first emits short paths first.
  void extend_right(std::size_t seed_idx, Path& path) {
    if (found) return;
    accept_path(seed_idx, path);
    for (Vertex w : d.out_neighbors(path.back())) {
      if (found) return;
      if (!usable(w)) continue;
      path.push_back(w);
      covered[w] = true;
      extend_right(seed_idx, path);
      covered[w] = false;
      path.pop_back();
    }
  }

  void extend_left_then_right(std::size_t seed_idx, Path& path) {
    if (found) return;
    extend_right(seed_idx, path);
    for (Vertex w : d.in_neighbors(path.front())) {
      if (found) return;
      if (!usable(w)) continue;
      path.insert(path.begin(), w);
      covered[w] = true;
      extend_left_then_right(seed_idx, path);
      covered[w] = false;
      path.erase(path.begin());
    }
  }

  // Begin-end mode keeps the seed at an endpoint: grow right only (seed
  // initial) or left only with a non-empty left part (seed final).
  void extend_left_only(std::size_t seed_idx, Path& path, bool seed_is_front) {
    if (found) return;
    if (!seed_is_front) accept_path(seed_idx, path);
    for (Vertex w : d.in_neighbors(path.front())) {
      if (found) return;
      if (!usable(w)) continue;
      path.insert(path.begin(), w);
      covered[w] = true;
      extend_left_only(seed_idx, path, false);
      covered[w] = false;
      path.erase(path.begin());
    }
  }

  void solve(std::size_t seed_idx) {
    if (found) return;
    if (seed_idx == s.size()) {
      complete();
      return;
    }
    Vertex seed = s[seed_idx];
    Path path = {seed};
    covered[seed] = true;
    if (be_mode) {
      extend_right(seed_idx, path);  // includes the bare seed
      if (!found) extend_left_only(seed_idx, path, /*seed_is_front=*/true);
    } else {
      extend_left_then_right(seed_idx, path);
    }
    covered[seed] = false;
  }
};

std::optional<PathPartition> run_search(const Digraph& d, const VertexSet& s, bool be_mode) {
  if (!is_stable(d, s)) throw std::invalid_argument("path partition search: S is not stable");
  if (d.vertex_count() == 0) return PathPartition{};  // vacuously orthogonal
  if (s.empty()) return std::nullopt;                 // paths would contain no S-vertex
  Searcher searcher(d, s, be_mode);
  searcher.solve(0);
  if (!searcher.found) return std::nullopt;
  return searcher.result;
}

}  // namespace

std::optional<PathPartition> find_S_path_partition(const Digraph& d, const VertexSet& s) {
  return run_search(d, s, /*be_mode=*/false);
}

std::optional<PathPartition> find_SBE_path_partition(const Digraph& d, const VertexSet& s) {
  return run_search(d, s, /*be_mode=*/true);
}

namespace {

PropertyVerdict property_verdict(const Digraph& d, PartitionMode mode) {
  PropertyVerdict verdict;
  for (const VertexSet& s : stable_sets(d).max_stable_sets) {
    auto pp = mode == PartitionMode::begin_end ? find_SBE_path_partition(d, s)
                                               : find_S_path_partition(d, s);
    if (!pp) {
      verdict.holds = false;
      verdict.failing_stable_set = s;
      verdict.witness_partitions.clear();
      return verdict;
    }
    verdict.witness_partitions.emplace_back(s, *pp);
  }
  return verdict;
}

bool property_holds(const Digraph& d, PartitionMode mode, PropertyMemo* memo) {
  if (memo) {
    if (auto cached = memo->lookup(mode, d)) return *cached;
    bool holds = property_verdict(d, mode).holds;
    memo->store(mode, d, holds);
    return holds;
  }
  return property_verdict(d, mode).holds;
}

DiperfectVerdict diperfect_verdict(const Digraph& d, PartitionMode mode, PropertyMemo* memo) {
  int n = d.vertex_count();
  if (n > 16)
    throw std::invalid_argument(
        "diperfection sweep enumerates all induced subdigraphs; refusing n > 16");
  std::vector<VertexSet> subsets;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    VertexSet x;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) x.push_back(v);
    subsets.push_back(std::move(x));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     return a.size() != b.size() ? a.size() < b.size() : a < b;
                   });
  for (const VertexSet& x : subsets) {
    Digraph sub = induced_subdigraph(d, x).graph;
    if (!property_holds(sub, mode, memo)) {
      PropertyVerdict inner = property_verdict(sub, mode);  // recover the failing set
      DiperfectVerdict verdict;
      verdict.holds = false;
      verdict.failing_subset = x;
      if (inner.failing_stable_set) {
        VertexSet bad;
        for (Vertex v : *inner.failing_stable_set) bad.push_back(x[v]);
        verdict.failing_stable_set = bad;
      }
      return verdict;
    }
  }
  return DiperfectVerdict{};
}

}  // namespace

PropertyVerdict satisfies_alpha_property(const Digraph& d) {
  return property_verdict(d, PartitionMode::alpha);
}

PropertyVerdict satisfies_be_property(const Digraph& d) {
  return property_verdict(d, PartitionMode::begin_end);
}

std::optional<bool> PropertyMemo::lookup(PartitionMode mode, const Digraph& d) {
  std::uint64_t key = hash_(d);
  std::lock_guard<std::mutex> lock(mutex_);
  auto& table = mode == PartitionMode::alpha ? alpha_ : be_;
  auto [lo, hi] = table.equal_range(key);
  for (auto it = lo; it != hi; ++it)
    if (it->second.representative == d || isomorphic_(it->second.representative, d))
      return it->second.holds;
  return std::nullopt;
}

void PropertyMemo::store(PartitionMode mode, const Digraph& d, bool holds) {
  std::uint64_t key = hash_(d);
  std::lock_guard<std::mutex> lock(mutex_);
  auto& table = mode == PartitionMode::alpha ? alpha_ : be_;
  auto [lo, hi] = table.equal_range(key);
  for (auto it = lo; it != hi; ++it)
    if (it->second.representative == d || isomorphic_(it->second.representative, d))
      return;  // write-once
  table.emplace(key, Entry{d, holds});
}

DiperfectVerdict is_alpha_diperfect(const Digraph& d, PropertyMemo* memo) {
  return diperfect_verdict(d, PartitionMode::alpha, memo);
}

DiperfectVerdict is_be_diperfect(const Digraph& d, PropertyMemo* memo) {
  return diperfect_verdict(d, PartitionMode::begin_end, memo);
}

}  // namespace diperfect
